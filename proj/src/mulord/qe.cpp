#include "mulord/qe.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

namespace mulord::qe {

using formula::Atom;
using formula::EqAtom;
using formula::FreeC;
using formula::IsolatedAtom;
using formula::isolate;
using formula::isolated_to_formula;
using formula::LowerC;
using formula::LtAtom;
using formula::PowAtom;
using formula::to_dnf;
using formula::to_nnf;
using formula::UpperC;
using formula::XEqC;
using numtheory::Int;

ClassifiedConstraints classify(const std::vector<Formula>& literals, const std::string& x) {
  ClassifiedConstraints out;
  for (const Formula& lit : literals) {
    bool negated = lit.kind() == Formula::Kind::Not;
    const Formula& leaf = negated ? lit.child() : lit;
    if (leaf.kind() != Formula::Kind::Leaf)
      throw std::invalid_argument("classify: conjuncts must be literals");
    IsolatedAtom ia = isolate(leaf.leaf(), negated, x);
    std::visit(
        [&](auto&& c) {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, XEqC>)
            out.equalities.push_back(std::move(c));
          else if constexpr (std::is_same_v<T, LowerC>)
            out.lowers.push_back(std::move(c));
          else if constexpr (std::is_same_v<T, UpperC>)
            out.uppers.push_back(std::move(c));
          else if constexpr (std::is_same_v<T, PosPowC>)
            out.pos_pows.push_back(std::move(c));
          else if constexpr (std::is_same_v<T, NegPowC>)
            out.neg_pows.push_back(std::move(c));
          else
            out.residue.push_back(isolated_to_formula(IsolatedAtom(std::move(c)), x));
        },
        std::move(ia));
  }
  return out;
}

UnifiedConstraints unify_powers(const ClassifiedConstraints& c) {
  long long p = 1;
  auto fold = [&p](long long e) {
    if (e < 1) throw std::invalid_argument("unify_powers: exponents must be >= 1");
    p = std::lcm(p, e);
  };
  for (const auto& eq : c.equalities) fold(eq.exp);
  for (const auto& lo : c.lowers) fold(lo.exp);
  for (const auto& up : c.uppers) fold(up.exp);
  for (const auto& pp : c.pos_pows) fold(pp.exp);
  for (const auto& np : c.neg_pows) fold(np.exp);

  UnifiedConstraints out;
  out.p = p;
  out.constraints.residue = c.residue;
  for (const auto& eq : c.equalities) out.constraints.equalities.push_back({1, eq.rhs.pow(p / eq.exp)});
  for (const auto& lo : c.lowers) out.constraints.lowers.push_back({lo.bound.pow(p / lo.exp), 1});
  for (const auto& up : c.uppers) out.constraints.uppers.push_back({1, up.bound.pow(p / up.exp)});
  for (const auto& pp : c.pos_pows) {
    long long q = p / pp.exp;
    out.constraints.pos_pows.push_back({pp.n * q, pp.t.pow(q), 1});
  }
  for (const auto& np : c.neg_pows) {
    long long q = p / np.exp;
    out.constraints.neg_pows.push_back({np.m * q, np.u.pow(q), 1});
  }
  // y = x^p ranges over exactly the p-th powers.
  if (p > 1) out.constraints.pos_pows.push_back({p, Monomial(), 1});
  return out;
}

namespace {

void require_unified(const ClassifiedConstraints& c) {
  auto check = [](long long e) {
    if (e != 1) throw std::invalid_argument("eliminate_one: constraints must be unified to the first power");
  };
  for (const auto& eq : c.equalities) check(eq.exp);
  for (const auto& lo : c.lowers) check(lo.exp);
  for (const auto& up : c.uppers) check(up.exp);
  for (const auto& pp : c.pos_pows) check(pp.exp);
  for (const auto& np : c.neg_pows) check(np.exp);
}

}  // namespace

/// N = lcm(n_k) and t = prod t_k^-nu_k for the positive-power constraints;
/// every solution of their conjunction is gamma^N * t.
std::pair<long long, Monomial> canonical_power_solution(const std::vector<PosPowC>& pos_pows) {
  if (pos_pows.empty()) return {1, Monomial()};
  std::vector<Int> moduli;
  moduli.reserve(pos_pows.size());
  for (const auto& pp : pos_pows) moduli.push_back(pp.n);
  auto uc = numtheory::unit_combination(moduli);
  Monomial t;
  for (std::size_t k = 0; k < pos_pows.size(); ++k)
    t = t.times(pos_pows[k].t.pow(-uc->exponents[k].convert_to<long long>()));
  return {uc->modulus_lcm.convert_to<long long>(), t};
}

Formula eliminate_one(const ClassifiedConstraints& c) {
  require_unified(c);
  std::vector<Formula> parts;

  if (!c.equalities.empty()) {
    const Monomial& v0 = c.equalities.front().rhs;
    for (std::size_t h = 1; h < c.equalities.size(); ++h) parts.push_back(Formula::eq(v0, c.equalities[h].rhs));
    for (const auto& lo : c.lowers) parts.push_back(Formula::lt(lo.bound, v0));
    for (const auto& up : c.uppers) parts.push_back(Formula::lt(v0, up.bound));
    for (const auto& pp : c.pos_pows) parts.push_back(Formula::pow(pp.n, pp.t.times(v0)));
    for (const auto& np : c.neg_pows) parts.push_back(Formula::negation(Formula::pow(np.m, np.u.times(v0))));
    parts.insert(parts.end(), c.residue.begin(), c.residue.end());
    return Formula::conj(std::move(parts));
  }

  // Dense order: the interval (max r_i, min s_j) is nonempty iff r_i < s_j
  // for every pair.
  for (const auto& lo : c.lowers)
    for (const auto& up : c.uppers) parts.push_back(Formula::lt(lo.bound, up.bound));

  // Pairwise solvability of the power congruences (generalized CRT).
  for (std::size_t k = 0; k + 1 < c.pos_pows.size(); ++k)
    for (std::size_t l = k + 1; l < c.pos_pows.size(); ++l) {
      long long g = std::gcd(c.pos_pows[k].n, c.pos_pows[l].n);
      parts.push_back(Formula::pow(g, c.pos_pows[k].t.times(c.pos_pows[l].t.inverse())));
    }

  auto [n_lcm, t] = canonical_power_solution(c.pos_pows);
  for (const auto& np : c.neg_pows)
    if (n_lcm % np.m == 0) parts.push_back(Formula::negation(Formula::pow(np.m, np.u.times(t))));

  parts.insert(parts.end(), c.residue.begin(), c.residue.end());
  return Formula::conj(std::move(parts));
}

const char* rule_name(RuleId id) {
  switch (id) {
    case RuleId::nnf: return "nnf";
    case RuleId::distribute: return "distribute";
    case RuleId::isolate: return "isolate";
    case RuleId::unify_powers: return "unify_powers";
    case RuleId::subst_equality: return "subst_equality";
    case RuleId::emit_qf: return "emit_qf";
  }
  return "?";
}

Formula constraints_to_formula(const ClassifiedConstraints& c, const std::string& x) {
  std::vector<Formula> parts;
  for (const auto& eq : c.equalities) parts.push_back(isolated_to_formula(eq, x));
  for (const auto& lo : c.lowers) parts.push_back(isolated_to_formula(lo, x));
  for (const auto& up : c.uppers) parts.push_back(isolated_to_formula(up, x));
  for (const auto& pp : c.pos_pows) parts.push_back(isolated_to_formula(pp, x));
  for (const auto& np : c.neg_pows) parts.push_back(isolated_to_formula(np, x));
  parts.insert(parts.end(), c.residue.begin(), c.residue.end());
  return Formula::conj(std::move(parts));
}

namespace {

class Eliminator {
 public:
  explicit Eliminator(const Formula& f) : used_(f.all_variables()) {}

  std::vector<TraceStep> take_trace() { return std::move(trace_); }

  Formula run(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::Top:
      case Formula::Kind::Bottom:
      case Formula::Kind::Leaf: return f;
      case Formula::Kind::Not: {
        if (!f.child().has_quantifier()) return f;
        Formula inner = Formula::negation(run(f.child()));
        Formula pushed = to_nnf(inner);
        if (!(pushed == inner)) trace_.push_back({RuleId::nnf, inner, pushed});
        return pushed;
      }
      case Formula::Kind::And:
      case Formula::Kind::Or: {
        std::vector<Formula> cs;
        cs.reserve(f.children().size());
        for (const auto& c : f.children()) cs.push_back(run(c));
        return f.kind() == Formula::Kind::And ? Formula::conj(std::move(cs)) : Formula::disj(std::move(cs));
      }
      case Formula::Kind::Exists: return eliminate_exists(f.var(), run(f.body()));
      case Formula::Kind::Implies:
      case Formula::Kind::Forall:
        throw std::logic_error("eliminate_all: implication or universal survived NNF");
    }
    throw std::logic_error("eliminate_all: unreachable");
  }

 private:
  std::vector<TraceStep> trace_;
  std::set<std::string> used_;

  Formula eliminate_exists(const std::string& x, const Formula& body) {
    Formula original = Formula::exists(x, body);
    if (original.kind() != Formula::Kind::Exists) return original;  // body folded to a constant

    auto dnf = to_dnf(body);
    std::vector<Formula> shown;
    std::vector<bool> uses_var;
    for (const auto& conj : dnf) {
      bool uses = false;
      for (const auto& lit : conj)
        if (lit.mentions(x)) {
          uses = true;
          break;
        }
      uses_var.push_back(uses);
      shown.push_back(uses ? Formula::exists(x, Formula::conj(conj)) : Formula::conj(conj));
    }
    Formula distributed = Formula::disj(shown);
    if (!(distributed == original)) trace_.push_back({RuleId::distribute, original, distributed});

    std::vector<Formula> results;
    for (std::size_t i = 0; i < dnf.size(); ++i)
      results.push_back(uses_var[i] ? eliminate_conjunction(x, dnf[i], shown[i]) : shown[i]);
    return Formula::disj(std::move(results));
  }

  Formula eliminate_conjunction(const std::string& x, const std::vector<Formula>& literals, const Formula& shown) {
    ClassifiedConstraints cc = classify(literals, x);
    Formula isolated = Formula::exists(x, constraints_to_formula(cc, x));
    if (!(isolated == shown)) trace_.push_back({RuleId::isolate, shown, isolated});

    UnifiedConstraints unified = unify_powers(cc);
    Formula unified_f = isolated;
    if (unified.p > 1) {
      std::string y = formula::fresh_name("y", used_);
      unified_f = Formula::exists(y, constraints_to_formula(unified.constraints, y));
      trace_.push_back({RuleId::unify_powers, isolated, unified_f});
    }

    Formula qf = eliminate_one(unified.constraints);
    trace_.push_back(
        {unified.constraints.equalities.empty() ? RuleId::emit_qf : RuleId::subst_equality, unified_f, qf});
    return qf;
  }
};

}  // namespace

QeResult eliminate_all(const Formula& f) {
  if (!f.has_quantifier()) return {f, {}};
  QeResult result;
  Eliminator el(f);
  Formula g = to_nnf(f);
  if (!(g == f)) result.trace.push_back({RuleId::nnf, f, g});
  Formula out = el.run(g);
  auto steps = el.take_trace();
  result.trace.insert(result.trace.end(), steps.begin(), steps.end());
  result.formula = out;
  return result;
}

}  // namespace mulord::qe
