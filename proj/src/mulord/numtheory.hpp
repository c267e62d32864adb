#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace mulord::numtheory {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// gcd(a, b) together with Bezout coefficients: g = u*a + v*b, g >= 0.
struct ExtGcd {
  Int g, u, v;
};
ExtGcd gcd_ext(const Int& a, const Int& b);

/// lcm of two positive integers.
Int lcm_positive(const Int& a, const Int& b);

/// r^e for signed e. e < 0 requires r != 0.
Rational pow_rational(const Rational& r, long long e);

/// floor(a^(1/n)) for a >= 0, n >= 1.
Int nth_root_floor(const Int& a, long long n);

/// The exact n-th root of a, when a is a perfect n-th power.
std::optional<Int> exact_nth_root(const Int& a, long long n);

bool is_prime(const Int& n);

// Factorization is trial division over a 2-3-5 wheel. It covers desk-scale
// inputs (the elimination itself never factors; only ground evaluation and
// witness construction do). Inputs whose second-smallest prime factor
// exceeds this limit are rejected with std::domain_error.
inline constexpr long long kTrialDivisionLimit = 1'000'000;

/// Finite p-adic valuation map of a positive rational.
/// Keys are primes, exponents are nonzero; denominator primes are negative.
struct Valuation {
  std::map<Int, long long> entries;
  bool operator==(const Valuation&) const = default;
};

/// Valuation of r > 0; product of p^e over the entries recovers r exactly.
Valuation factor_rational(const Rational& r);

Rational valuation_value(const Valuation& v);

/// True iff r = y^n for some y in Q+. Requires r > 0 and n >= 1.
bool is_nth_power(const Rational& r, long long n);

/// Smallest prime appearing in none of the given valuations.
Int next_prime_avoiding(std::span<const Valuation> vals);

/// The simultaneous congruences residues[k] + x == 0 (mod moduli[k]).
struct CongruenceSystem {
  std::vector<Int> residues;
  std::vector<Int> moduli;  // each >= 1
};

/// Solves the system. Returns (x0, period) with 0 <= x0 < period and
/// period = lcm(moduli); empty when some pair of congruences is
/// incompatible, i.e. residues differ modulo the gcd of their moduli.
std::optional<std::pair<Int, Int>> solve_congruences(const CongruenceSystem& sys);

/// Coefficients c_k with sum c_k * N/n_k = 1, where N = lcm(n_k).
/// exponents[k] = c_k * N/n_k.
struct UnitCombination {
  Int modulus_lcm;
  std::vector<Int> coefficients;
  std::vector<Int> exponents;
};

/// Always succeeds on a nonempty list of positive moduli: the gcd of the
/// N/n_k is 1 by construction. The identity is re-verified after
/// construction and a failure throws std::logic_error.
std::optional<UnitCombination> unit_combination(std::span<const Int> moduli);

}  // namespace mulord::numtheory
