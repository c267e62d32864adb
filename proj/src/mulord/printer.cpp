#include "mulord/printer.hpp"

#include <sstream>
#include <stdexcept>

namespace mulord::formula {

std::string print(const Rational& r) {
  std::ostringstream out;
  out << numerator(r);
  if (denominator(r) != 1) out << "/" << denominator(r);
  return out.str();
}

std::string print(const Monomial& m) {
  if (m.is_constant()) return print(m.coeff());
  std::ostringstream out;
  bool first = true;
  if (m.coeff() != 1) {
    out << print(m.coeff());
    first = false;
  }
  for (const auto& [v, e] : m.powers()) {
    if (!first) out << " * ";
    first = false;
    out << v;
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

std::string print(const Atom& a) {
  return std::visit(
      [](const auto& at) -> std::string {
        using T = std::decay_t<decltype(at)>;
        if constexpr (std::is_same_v<T, EqAtom>) {
          return print(at.lhs) + " = " + print(at.rhs);
        } else if constexpr (std::is_same_v<T, LtAtom>) {
          return print(at.lhs) + " < " + print(at.rhs);
        } else {
          if (at.index == 1) return "true";  // R_1 holds everywhere
          return "R[" + std::to_string(at.index) + "](" + print(at.arg) + ")";
        }
      },
      a);
}

namespace {

// Precedence: -> and quantifiers bind weakest, then |, &, !; leaves tightest.
int precedence(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Implies:
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: return 1;
    case Formula::Kind::Or: return 2;
    case Formula::Kind::And: return 3;
    case Formula::Kind::Not: return 4;
    default: return 5;
  }
}

void emit(const Formula& f, int min_prec, std::string& out) {
  if (precedence(f) < min_prec) {
    out += "(";
    emit(f, 1, out);
    out += ")";
    return;
  }
  switch (f.kind()) {
    case Formula::Kind::Top: out += "true"; return;
    case Formula::Kind::Bottom: out += "false"; return;
    case Formula::Kind::Leaf: out += print(f.leaf()); return;
    case Formula::Kind::Not:
      out += "!";
      emit(f.child(), 5, out);
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      const char* sep = f.kind() == Formula::Kind::And ? " & " : " | ";
      int child_prec = f.kind() == Formula::Kind::And ? 4 : 3;
      bool first = true;
      for (const auto& c : f.children()) {
        if (!first) out += sep;
        first = false;
        emit(c, child_prec, out);
      }
      return;
    }
    case Formula::Kind::Implies:
      emit(f.child(0), 2, out);
      out += " -> ";
      emit(f.child(1), 1, out);
      return;
    case Formula::Kind::Exists:
    case Formula::Kind::Forall:
      out += f.kind() == Formula::Kind::Exists ? "exists " : "forall ";
      out += f.var();
      out += ". ";
      emit(f.body(), 1, out);
      return;
  }
  throw std::logic_error("print: unreachable");
}

}  // namespace

std::string print(const Formula& f) {
  std::string out;
  emit(f, 1, out);
  return out;
}

}  // namespace mulord::formula
