#pragma once

#include <variant>
#include <vector>

#include "mulord/formula.hpp"

namespace mulord::formula {

/// Negation normal form. Implications and universal quantifiers are
/// rewritten away; negation survives only on power atoms, plus the single
/// negation wrapped around an existential when a universal is rewritten as
/// "not exists not". Negated order atoms split by trichotomy:
///   !(u = v)  ~>  u < v | v < u
///   !(u < v)  ~>  u = v | v < u
Formula to_nnf(const Formula& f);

/// "exists x (phi | psi)" ~> "exists x phi | exists x psi", applied
/// innermost-first until every existential body is a conjunction of
/// literals. A body with no occurrence of the bound variable drops its
/// quantifier. Input must be in NNF.
Formula distribute_exists(const Formula& f);

/// Disjunctive normal form of a quantifier-free NNF formula, as a list of
/// conjunctions of literals. Nested quantified subformulas are treated as
/// opaque literals.
std::vector<std::vector<Formula>> to_dnf(const Formula& f);

// Shapes of a single constraint once the distinguished variable x is pulled
// to one side with a positive exponent. Bounds and power arguments are
// x-free monomials.
struct XEqC {          // x^exp = rhs
  long long exp;
  Monomial rhs;
};
struct LowerC {        // bound < x^exp
  Monomial bound;
  long long exp;
};
struct UpperC {        // x^exp < bound
  long long exp;
  Monomial bound;
};
struct PosPowC {       // R_n(t * x^exp)
  long long n;
  Monomial t;
  long long exp;
};
struct NegPowC {       // !R_m(u * x^exp)
  long long m;
  Monomial u;
  long long exp;
};
struct FreeC {         // no occurrence of x
  bool negated;
  Atom atom;
};

using IsolatedAtom = std::variant<XEqC, LowerC, UpperC, PosPowC, NegPowC, FreeC>;

/// Gathers every occurrence of x onto one side with a positive exponent,
/// preserving equivalence over the positive rationals (both sides of an
/// atom may be multiplied by any term, and R_n(w) iff R_n(1/w)).
IsolatedAtom isolate(const Atom& atom, bool negated, const std::string& x);

/// The isolated constraint rendered back as a literal over x.
Formula isolated_to_formula(const IsolatedAtom& ia, const std::string& x);

}  // namespace mulord::formula
