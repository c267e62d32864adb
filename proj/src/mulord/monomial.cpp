#include "mulord/monomial.hpp"

#include <stdexcept>

namespace mulord::formula {

using numtheory::pow_rational;

Monomial Monomial::variable(const std::string& name, long long exp) {
  Monomial m;
  if (exp != 0) m.powers_[name] = exp;
  return m;
}

long long Monomial::exponent_of(const std::string& var) const {
  auto it = powers_.find(var);
  return it == powers_.end() ? 0 : it->second;
}

void Monomial::normalize() {
  std::erase_if(powers_, [](const auto& kv) { return kv.second == 0; });
  if (coeff_ == 0) powers_.clear();
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial out = *this;
  out.coeff_ *= other.coeff_;
  for (const auto& [v, e] : other.powers_) out.powers_[v] += e;
  out.normalize();
  return out;
}

Monomial Monomial::inverse() const {
  if (coeff_ == 0) throw std::domain_error("Monomial::inverse: zero coefficient");
  Monomial out;
  out.coeff_ = Rational(denominator(coeff_), numerator(coeff_));
  for (const auto& [v, e] : powers_) out.powers_[v] = -e;
  return out;
}

Monomial Monomial::pow(long long e) const {
  if (e == 0) return Monomial();
  if (coeff_ == 0 && e < 0) throw std::domain_error("Monomial::pow: zero coefficient");
  Monomial out;
  out.coeff_ = pow_rational(coeff_, e);
  for (const auto& [v, exp] : powers_) out.powers_[v] = exp * e;
  return out;
}

Monomial Monomial::without(const std::string& var) const {
  Monomial out = *this;
  out.powers_.erase(var);
  return out;
}

Monomial Monomial::substituted(const std::string& var, const Monomial& t) const {
  long long e = exponent_of(var);
  if (e == 0) return *this;
  return without(var).times(t.pow(e));
}

Monomial Monomial::renamed(const std::string& from, const std::string& to) const {
  long long e = exponent_of(from);
  if (e == 0) return *this;
  Monomial out = without(from);
  out.powers_[to] += e;
  out.normalize();
  return out;
}

Rational Monomial::eval(const std::map<std::string, Rational>& valuation) const {
  Rational out = coeff_;
  for (const auto& [v, e] : powers_) {
    auto it = valuation.find(v);
    if (it == valuation.end()) throw std::invalid_argument("Monomial::eval: unassigned variable " + v);
    out *= pow_rational(it->second, e);
  }
  return out;
}

}  // namespace mulord::formula
