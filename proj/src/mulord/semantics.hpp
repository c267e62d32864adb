#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "mulord/qe.hpp"

namespace mulord::semantics {

using formula::Formula;
using formula::Monomial;
using numtheory::Rational;

/// Raised when an input uses a construct the selected domain does not
/// support (inverse or R_n over full Q, non-positive constants over Q+,
/// free variables where a sentence is required).
class UnsupportedConstruct : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Domain { QPos, Q };

enum class Sign { Neg, Zero, Pos };

/// A rational split into sign and magnitude; the magnitude is present
/// (and positive) exactly when the sign is nonzero.
struct SignedValue {
  Sign sign = Sign::Zero;
  Rational magnitude;  // > 0 unless sign == Zero

  static SignedValue of(const Rational& r);
  Rational value() const;
};

using Valuation = std::map<std::string, Rational>;

/// Tarskian truth of a quantifier-free formula. Over Q+ every value must be
/// positive and R_n is the n-th power test. Over full Q, R_n(v) holds iff
/// v = y^n for some rational y: always for v = 0, magnitude test for odd n,
/// and for even n additionally v > 0.
bool eval_ground(const Formula& f, Domain domain, const Valuation& valuation);

/// Rewrites a sentence of the multiplication-and-order language over Q into
/// an equivalent sentence over Q+, expanding each quantifier into its
/// negative, zero and positive cases. Input must not use inverse
/// (negative exponents) or R_n.
Formula signsplit(const Formula& f);

/// Decides a sentence: quantifier elimination over Q+, prefixed by sign
/// splitting over full Q.
bool decide(const Formula& sentence, Domain domain);

/// Validates that a formula fits the selected domain; throws
/// UnsupportedConstruct otherwise. Over Q+ all constants must be positive;
/// over Q there must be no R_n atoms and no negative exponents.
void check_domain(const Formula& f, Domain domain);

}  // namespace mulord::semantics
