#pragma once

#include <string>
#include <vector>

#include "mulord/normalize.hpp"

namespace mulord::qe {

using formula::Formula;
using formula::Monomial;
using formula::NegPowC;
using formula::PosPowC;

/// One existential's conjuncts, sorted by shape with respect to the
/// variable being eliminated. Entries keep their exponent on x until
/// unify_powers brings every constraint to the first power.
struct ClassifiedConstraints {
  std::vector<formula::XEqC> equalities;
  std::vector<formula::LowerC> lowers;
  std::vector<formula::UpperC> uppers;
  std::vector<PosPowC> pos_pows;
  std::vector<NegPowC> neg_pows;
  std::vector<Formula> residue;  // x-free literals, passed through
};

/// Sorts isolated literals into buckets. Literals must be atoms or negated
/// power atoms (NNF); x-free literals land in residue.
ClassifiedConstraints classify(const std::vector<Formula>& literals, const std::string& x);

/// Result of power unification: every constraint now mentions the
/// substituted variable y = x^p to the first power, and R_p(y) has been
/// appended to pos_pows (unless p = 1, where it is trivial).
struct UnifiedConstraints {
  ClassifiedConstraints constraints;
  long long p = 1;  // lcm of the original exponents
};

/// Raises each constraint to the power q = p/e, using the equivalences
/// a = b iff a^q = b^q, a < b iff a^q < b^q and R_n(a) iff R_nq(a^q)
/// over the positive rationals.
UnifiedConstraints unify_powers(const ClassifiedConstraints& c);

/// The quantifier-free equivalent of "exists y" over unified constraints:
///   - with equalities present, the first right-hand side is substituted
///     into everything else;
///   - otherwise the bounds condition (r_i < s_j for all pairs), the
///     pairwise power-compatibility condition R_gcd(nk,nl)(t_k/t_l), and
///     !R_m(u * t) for each negated power whose index divides N = lcm(n_k),
///     where t is the canonical product prod t_k^-nu_k. Negated powers with
///     m not dividing N are dropped: a witness avoiding them always exists.
Formula eliminate_one(const ClassifiedConstraints& unified);

/// N = lcm(n_k) and t = prod t_k^-nu_k over the positive-power constraints
/// (1 and the empty monomial when there are none). Whenever the conjunction
/// of the R_n_k(t_k * x) holds, x = gamma^N * t for some positive rational
/// gamma, and conversely every such x satisfies it when the pairwise
/// compatibility condition holds.
std::pair<long long, Monomial> canonical_power_solution(const std::vector<PosPowC>& pos_pows);

enum class RuleId { nnf, distribute, isolate, unify_powers, subst_equality, emit_qf };
const char* rule_name(RuleId id);

/// A named rewrite; before and after are equivalent over the positive
/// rationals (spot-checked by tests, not enforced here).
struct TraceStep {
  RuleId rule;
  Formula before, after;
};

struct QeResult {
  Formula formula;
  std::vector<TraceStep> trace;
};

/// Eliminates every quantifier, innermost first. Quantifier-free input is
/// returned unchanged with an empty trace.
QeResult eliminate_all(const Formula& f);

/// Renders constraint buckets back into a conjunction over the variable.
Formula constraints_to_formula(const ClassifiedConstraints& c, const std::string& x);

}  // namespace mulord::qe
