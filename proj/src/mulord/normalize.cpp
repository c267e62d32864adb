#include "mulord/normalize.hpp"

#include <stdexcept>

namespace mulord::formula {

namespace {

Formula nnf(const Formula& f, bool positive) {
  switch (f.kind()) {
    case Formula::Kind::Top: return Formula::boolean(positive);
    case Formula::Kind::Bottom: return Formula::boolean(!positive);
    case Formula::Kind::Leaf: {
      if (positive) return f;
      return std::visit(
          [&](const auto& at) -> Formula {
            using T = std::decay_t<decltype(at)>;
            if constexpr (std::is_same_v<T, EqAtom>) {
              return Formula::disj({Formula::lt(at.lhs, at.rhs), Formula::lt(at.rhs, at.lhs)});
            } else if constexpr (std::is_same_v<T, LtAtom>) {
              return Formula::disj({Formula::eq(at.lhs, at.rhs), Formula::lt(at.rhs, at.lhs)});
            } else {
              return Formula::negation(f);
            }
          },
          f.leaf());
    }
    case Formula::Kind::Not: return nnf(f.child(), !positive);
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      bool keep = (f.kind() == Formula::Kind::And) == positive;
      std::vector<Formula> cs;
      cs.reserve(f.children().size());
      for (const auto& c : f.children()) cs.push_back(nnf(c, positive));
      return keep ? Formula::conj(std::move(cs)) : Formula::disj(std::move(cs));
    }
    case Formula::Kind::Implies:
      if (positive) return Formula::disj({nnf(f.child(0), false), nnf(f.child(1), true)});
      return Formula::conj({nnf(f.child(0), true), nnf(f.child(1), false)});
    case Formula::Kind::Exists: {
      Formula ex = Formula::exists(f.var(), nnf(f.body(), true));
      return positive ? ex : Formula::negation(std::move(ex));
    }
    case Formula::Kind::Forall: {
      // forall x phi == not exists x not phi
      Formula ex = Formula::exists(f.var(), nnf(f.body(), false));
      return positive ? Formula::negation(std::move(ex)) : ex;
    }
  }
  throw std::logic_error("to_nnf: unreachable");
}

}  // namespace

Formula to_nnf(const Formula& f) { return nnf(f, true); }

std::vector<std::vector<Formula>> to_dnf(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Top: return {{}};
    case Formula::Kind::Bottom: return {};
    case Formula::Kind::Or: {
      std::vector<std::vector<Formula>> out;
      for (const auto& c : f.children()) {
        auto sub = to_dnf(c);
        out.insert(out.end(), sub.begin(), sub.end());
      }
      return out;
    }
    case Formula::Kind::And: {
      std::vector<std::vector<Formula>> out{{}};
      for (const auto& c : f.children()) {
        auto sub = to_dnf(c);
        std::vector<std::vector<Formula>> next;
        next.reserve(out.size() * sub.size());
        for (const auto& left : out)
          for (const auto& right : sub) {
            auto row = left;
            row.insert(row.end(), right.begin(), right.end());
            next.push_back(std::move(row));
          }
        out = std::move(next);
      }
      return out;
    }
    default:
      // Literals, plus already-processed quantified subformulas kept opaque.
      return {{f}};
  }
}

namespace {

Formula distribute_one(const std::string& var, const Formula& body) {
  std::vector<Formula> disjuncts;
  for (auto& conj : to_dnf(body)) {
    bool uses_var = false;
    for (const auto& lit : conj)
      if (lit.mentions(var)) {
        uses_var = true;
        break;
      }
    Formula matrix = Formula::conj(std::move(conj));
    disjuncts.push_back(uses_var ? Formula::exists(var, std::move(matrix)) : std::move(matrix));
  }
  return Formula::disj(std::move(disjuncts));
}

}  // namespace

Formula distribute_exists(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Top:
    case Formula::Kind::Bottom:
    case Formula::Kind::Leaf: return f;
    case Formula::Kind::Not: return Formula::negation(distribute_exists(f.child()));
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      std::vector<Formula> cs;
      cs.reserve(f.children().size());
      for (const auto& c : f.children()) cs.push_back(distribute_exists(c));
      return f.kind() == Formula::Kind::And ? Formula::conj(std::move(cs)) : Formula::disj(std::move(cs));
    }
    case Formula::Kind::Implies: throw std::invalid_argument("distribute_exists: input must be in NNF");
    case Formula::Kind::Forall: throw std::invalid_argument("distribute_exists: input must be in NNF");
    case Formula::Kind::Exists: return distribute_one(f.var(), distribute_exists(f.body()));
  }
  throw std::logic_error("distribute_exists: unreachable");
}

IsolatedAtom isolate(const Atom& atom, bool negated, const std::string& x) {
  if (const auto* p = std::get_if<PowAtom>(&atom)) {
    long long d = p->arg.exponent_of(x);
    if (d == 0) return FreeC{negated, atom};
    Monomial rest = p->arg.without(x);
    if (d < 0) {
      rest = rest.inverse();  // R_n(w) iff R_n(1/w)
      d = -d;
    }
    if (negated) return NegPowC{p->index, std::move(rest), d};
    return PosPowC{p->index, std::move(rest), d};
  }
  if (negated) throw std::invalid_argument("isolate: negation is only carried on power atoms in NNF");

  const Monomial& lhs = std::holds_alternative<EqAtom>(atom) ? std::get<EqAtom>(atom).lhs : std::get<LtAtom>(atom).lhs;
  const Monomial& rhs = std::holds_alternative<EqAtom>(atom) ? std::get<EqAtom>(atom).rhs : std::get<LtAtom>(atom).rhs;
  long long a = lhs.exponent_of(x), b = rhs.exponent_of(x);
  long long d = a - b;
  Monomial left = lhs.without(x), right = rhs.without(x);

  if (std::holds_alternative<EqAtom>(atom)) {
    if (d == 0) return FreeC{false, EqAtom{std::move(left), std::move(right)}};
    if (d > 0) return XEqC{d, right.times(left.inverse())};
    return XEqC{-d, left.times(right.inverse())};
  }
  // lhs < rhs  iff  x^(a-b) < right/left  (dividing by x^b*left, positive)
  if (d == 0) return FreeC{false, LtAtom{std::move(left), std::move(right)}};
  if (d > 0) return UpperC{d, right.times(left.inverse())};
  return LowerC{left.times(right.inverse()), -d};
}

Formula isolated_to_formula(const IsolatedAtom& ia, const std::string& x) {
  return std::visit(
      [&](const auto& c) -> Formula {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, XEqC>) {
          return Formula::eq(Monomial::variable(x, c.exp), c.rhs);
        } else if constexpr (std::is_same_v<T, LowerC>) {
          return Formula::lt(c.bound, Monomial::variable(x, c.exp));
        } else if constexpr (std::is_same_v<T, UpperC>) {
          return Formula::lt(Monomial::variable(x, c.exp), c.bound);
        } else if constexpr (std::is_same_v<T, PosPowC>) {
          return Formula::pow(c.n, c.t.times(Monomial::variable(x, c.exp)));
        } else if constexpr (std::is_same_v<T, NegPowC>) {
          return Formula::negation(Formula::pow(c.m, c.u.times(Monomial::variable(x, c.exp))));
        } else {
          Formula base = Formula::atom(c.atom);
          return c.negated ? Formula::negation(std::move(base)) : std::move(base);
        }
      },
      ia);
}

}  // namespace mulord::formula
