#include "mulord/semantics.hpp"

#include <vector>

#include "mulord/printer.hpp"

namespace mulord::semantics {

using formula::Atom;
using formula::EqAtom;
using formula::LtAtom;
using formula::PowAtom;
using numtheory::is_nth_power;

SignedValue SignedValue::of(const Rational& r) {
  if (r == 0) return {Sign::Zero, Rational(1)};
  return {r < 0 ? Sign::Neg : Sign::Pos, r < 0 ? Rational(-r) : r};
}

Rational SignedValue::value() const {
  switch (sign) {
    case Sign::Zero: return Rational(0);
    case Sign::Neg: return -magnitude;
    case Sign::Pos: return magnitude;
  }
  return Rational(0);
}

namespace {

bool rn_holds(const Rational& v, long long n, Domain domain) {
  if (domain == Domain::QPos) {
    if (v <= 0) throw std::domain_error("eval_ground: R_n over Q+ needs a positive value");
    return is_nth_power(v, n);
  }
  if (v == 0) return true;  // 0 = 0^n
  if (v > 0) return is_nth_power(v, n);
  return n % 2 == 1 && is_nth_power(-v, n);
}

bool eval_atom(const Atom& a, Domain domain, const Valuation& valuation) {
  return std::visit(
      [&](const auto& at) -> bool {
        using T = std::decay_t<decltype(at)>;
        if constexpr (std::is_same_v<T, EqAtom>) {
          return at.lhs.eval(valuation) == at.rhs.eval(valuation);
        } else if constexpr (std::is_same_v<T, LtAtom>) {
          return at.lhs.eval(valuation) < at.rhs.eval(valuation);
        } else {
          return rn_holds(at.arg.eval(valuation), at.index, domain);
        }
      },
      a);
}

}  // namespace

bool eval_ground(const Formula& f, Domain domain, const Valuation& valuation) {
  if (domain == Domain::QPos) {
    for (const auto& [name, value] : valuation) {
      if (value <= 0) throw std::domain_error("eval_ground: value of " + name + " must be positive over Q+");
    }
  }
  struct Evaluator {
    Domain domain;
    const Valuation& valuation;
    bool run(const Formula& f) const {
      switch (f.kind()) {
        case Formula::Kind::Top: return true;
        case Formula::Kind::Bottom: return false;
        case Formula::Kind::Leaf: return eval_atom(f.leaf(), domain, valuation);
        case Formula::Kind::Not: return !run(f.child());
        case Formula::Kind::And:
          for (const auto& c : f.children())
            if (!run(c)) return false;
          return true;
        case Formula::Kind::Or:
          for (const auto& c : f.children())
            if (run(c)) return true;
          return false;
        case Formula::Kind::Implies: return !run(f.child(0)) || run(f.child(1));
        case Formula::Kind::Exists:
        case Formula::Kind::Forall:
          throw std::invalid_argument("eval_ground: formula must be quantifier-free");
      }
      throw std::logic_error("eval_ground: unreachable");
    }
  };
  return Evaluator{domain, valuation}.run(f);
}

void check_domain(const Formula& f, Domain domain) {
  auto scan_monomial = [&](const Monomial& m) {
    if (domain == Domain::QPos) {
      if (m.coeff() <= 0) throw UnsupportedConstruct("constant " + formula::print(m.coeff()) + " is not in Q+");
    } else {
      for (const auto& [v, e] : m.powers())
        if (e < 0) throw UnsupportedConstruct("inverse of " + v + " is not supported over full Q");
    }
  };
  switch (f.kind()) {
    case Formula::Kind::Top:
    case Formula::Kind::Bottom: return;
    case Formula::Kind::Leaf:
      std::visit(
          [&](const auto& at) {
            using T = std::decay_t<decltype(at)>;
            if constexpr (std::is_same_v<T, PowAtom>) {
              if (domain == Domain::Q) throw UnsupportedConstruct("R[n] is not supported over full Q");
              scan_monomial(at.arg);
            } else {
              scan_monomial(at.lhs);
              scan_monomial(at.rhs);
            }
          },
          f.leaf());
      return;
    default:
      for (const auto& c : f.children()) check_domain(c, domain);
  }
}

namespace {

struct SignEnv {
  std::map<std::string, Sign> signs;
};

Sign monomial_sign(const Monomial& m, const SignEnv& env) {
  if (m.coeff() == 0) return Sign::Zero;
  bool negative = m.coeff() < 0;
  for (const auto& [v, e] : m.powers()) {
    Sign s = env.signs.at(v);
    if (s == Sign::Zero) return Sign::Zero;
    if (s == Sign::Neg && e % 2 != 0) negative = !negative;
  }
  return negative ? Sign::Neg : Sign::Pos;
}

Monomial monomial_magnitude(const Monomial& m) {
  Monomial out = Monomial::constant(m.coeff() < 0 ? Rational(-m.coeff()) : m.coeff());
  for (const auto& [v, e] : m.powers()) out = out.times(Monomial::variable(v, e));
  return out;
}

int rank(Sign s) { return s == Sign::Neg ? 0 : s == Sign::Zero ? 1 : 2; }

Formula split_atom(const Atom& a, const SignEnv& env) {
  const auto* eq = std::get_if<EqAtom>(&a);
  const auto* lt = std::get_if<LtAtom>(&a);
  if (!eq && !lt) throw UnsupportedConstruct("R[n] is not supported over full Q");
  const Monomial& lhs = eq ? eq->lhs : lt->lhs;
  const Monomial& rhs = eq ? eq->rhs : lt->rhs;
  Sign sl = monomial_sign(lhs, env), sr = monomial_sign(rhs, env);
  if (eq) {
    if (sl != sr) return Formula::bottom();
    if (sl == Sign::Zero) return Formula::top();
    return Formula::eq(monomial_magnitude(lhs), monomial_magnitude(rhs));
  }
  if (rank(sl) != rank(sr)) return Formula::boolean(rank(sl) < rank(sr));
  switch (sl) {
    case Sign::Zero: return Formula::bottom();
    case Sign::Pos: return Formula::lt(monomial_magnitude(lhs), monomial_magnitude(rhs));
    case Sign::Neg: return Formula::lt(monomial_magnitude(rhs), monomial_magnitude(lhs));
  }
  throw std::logic_error("split_atom: unreachable");
}

Formula split(const Formula& f, SignEnv& env) {
  switch (f.kind()) {
    case Formula::Kind::Top:
    case Formula::Kind::Bottom: return f;
    case Formula::Kind::Leaf: return split_atom(f.leaf(), env);
    case Formula::Kind::Not: return Formula::negation(split(f.child(), env));
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      std::vector<Formula> cs;
      cs.reserve(f.children().size());
      for (const auto& c : f.children()) cs.push_back(split(c, env));
      return f.kind() == Formula::Kind::And ? Formula::conj(std::move(cs)) : Formula::disj(std::move(cs));
    }
    case Formula::Kind::Implies: return Formula::implies(split(f.child(0), env), split(f.child(1), env));
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      bool universal = f.kind() == Formula::Kind::Forall;
      std::vector<Formula> cases;
      for (Sign s : {Sign::Neg, Sign::Zero, Sign::Pos}) {
        env.signs[f.var()] = s;
        Formula body = split(f.body(), env);
        env.signs.erase(f.var());
        // The zero case needs no bound variable; the magnitude ranges over Q+.
        cases.push_back(s == Sign::Zero ? body : Formula::quantifier(universal, f.var(), std::move(body)));
      }
      return universal ? Formula::conj(std::move(cases)) : Formula::disj(std::move(cases));
    }
  }
  throw std::logic_error("signsplit: unreachable");
}

}  // namespace

Formula signsplit(const Formula& f) {
  check_domain(f, Domain::Q);
  if (!f.free_variables().empty()) throw UnsupportedConstruct("sign splitting requires a sentence");
  SignEnv env;
  return split(f, env);
}

bool decide(const Formula& sentence, Domain domain) {
  if (!sentence.free_variables().empty()) throw UnsupportedConstruct("decide requires a sentence");
  check_domain(sentence, domain);
  Formula over_qpos = domain == Domain::Q ? signsplit(sentence) : sentence;
  Formula qf = qe::eliminate_all(over_qpos).formula;
  return eval_ground(qf, Domain::QPos, {});
}

}  // namespace mulord::semantics
