#pragma once

#include <map>
#include <string>

#include "mulord/numtheory.hpp"

namespace mulord::formula {

using numtheory::Int;
using numtheory::Rational;

/// A term in normal form: a rational coefficient times a finite product of
/// variables raised to nonzero integer exponents. Every term of the language
/// is one of these, so normalization happens at construction and stays.
///
/// The positive-rationals pipeline keeps coefficients > 0; the full-Q front
/// end (before sign splitting) admits signed and zero coefficients. A zero
/// coefficient collapses the variable part.
class Monomial {
 public:
  Monomial() : coeff_(1) {}
  explicit Monomial(Rational constant) : coeff_(std::move(constant)) {}

  static Monomial constant(Rational c) { return Monomial(std::move(c)); }
  static Monomial variable(const std::string& name, long long exp = 1);

  const Rational& coeff() const { return coeff_; }
  const std::map<std::string, long long>& powers() const { return powers_; }

  bool is_constant() const { return powers_.empty(); }
  bool is_one() const { return powers_.empty() && coeff_ == 1; }
  bool mentions(const std::string& var) const { return powers_.contains(var); }
  long long exponent_of(const std::string& var) const;

  Monomial times(const Monomial& other) const;
  Monomial inverse() const;             // requires coeff != 0
  Monomial pow(long long e) const;      // e < 0 requires coeff != 0
  Monomial without(const std::string& var) const;

  /// Replaces var by the given term, renormalizing. var^e becomes t^e.
  Monomial substituted(const std::string& var, const Monomial& t) const;

  Monomial renamed(const std::string& from, const std::string& to) const;

  /// Exact value under a total assignment. A negative exponent on a variable
  /// assigned 0 is a domain error.
  Rational eval(const std::map<std::string, Rational>& valuation) const;

  bool operator==(const Monomial&) const = default;
  auto operator<=>(const Monomial&) const = default;

 private:
  Rational coeff_;
  std::map<std::string, long long> powers_;

  void normalize();
};

}  // namespace mulord::formula
