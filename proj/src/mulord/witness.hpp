#pragma once

#include <optional>

#include "mulord/semantics.hpp"

namespace mulord::semantics {

using numtheory::Int;

/// A rational gamma with A < gamma^n < B, found by exact bisection; the
/// real interval (A^(1/n), B^(1/n)) is never materialized. Requires
/// 0 < A < B.
Rational rational_power_between(const Rational& A, const Rational& B, long long n);

/// Exact n-th root of a positive rational that is a perfect n-th power.
std::optional<Rational> exact_rational_root(const Rational& r, long long n);

/// Everything needed to write down a witness for one existential:
/// any y = gamma^N * t with gamma in Q+ satisfies the power constraints,
/// and any such y inside power_interval satisfies the order constraints
/// too. P and M drive the construction that defeats the negated powers:
/// y = P^N * delta^(N*M) * t.
struct WitnessRecipe {
  long long N = 1;
  Monomial t;                                 // ground under the valuation
  long long M = 1;                            // product of the negated indices
  Int P = 2;                                  // prime absent from all t_k, u_l
  std::pair<Rational, Rational> power_interval;  // bounds on y itself
};

/// Checks the quantifier-free solvability condition for unified constraints
/// under a valuation of the parameters and, when it holds, assembles the
/// recipe. Empty when the condition fails.
std::optional<WitnessRecipe> plan_witness(const qe::ClassifiedConstraints& c, const Valuation& valuation);

/// The paper's existence proof, run forward: a positive rational satisfying
/// every constraint in c (which must be unified to the first power), or
/// empty exactly when the quantifier-free condition of eliminate_one fails
/// under the valuation. Returned witnesses are re-verified against the
/// constraints; a verification failure throws std::logic_error.
std::optional<Rational> construct_witness(const qe::ClassifiedConstraints& c, const Valuation& valuation);

/// Witness for "exists var. body" with the remaining free variables ground
/// under the valuation: isolates, classifies and unifies the matrix, builds
/// the witness for y = var^p, and takes the exact p-th root. The returned
/// value is verified against body by direct evaluation.
std::optional<Rational> find_witness(const Formula& body, const std::string& var, const Valuation& valuation);

}  // namespace mulord::semantics
