#include "mulord/numtheory.hpp"

#include <algorithm>
#include <stdexcept>

namespace mulord::numtheory {

ExtGcd gcd_ext(const Int& a, const Int& b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

Int lcm_positive(const Int& a, const Int& b) {
  if (a <= 0 || b <= 0) throw std::invalid_argument("lcm_positive: arguments must be positive");
  return a / gcd_ext(a, b).g * b;
}

Rational pow_rational(const Rational& r, long long e) {
  if (e == 0) return Rational(1);
  if (r == 0 && e < 0) throw std::domain_error("pow_rational: 0 has no negative powers");
  unsigned long long mag = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Int num = boost::multiprecision::pow(numerator(r), static_cast<unsigned>(mag));
  Int den = boost::multiprecision::pow(denominator(r), static_cast<unsigned>(mag));
  if (e < 0) std::swap(num, den);
  return Rational(num, den);  // cpp_rational normalizes sign and gcd
}

Int nth_root_floor(const Int& a, long long n) {
  if (a < 0) throw std::domain_error("nth_root_floor: negative radicand");
  if (n < 1) throw std::invalid_argument("nth_root_floor: n must be >= 1");
  if (n == 1 || a == 0 || a == 1) return a;
  auto raised = [n](const Int& x) { return boost::multiprecision::pow(x, static_cast<unsigned>(n)); };
  Int hi = 1;
  while (raised(hi) <= a) hi <<= 1;
  Int lo = hi >> 1;  // lo^n <= a < hi^n
  while (hi - lo > 1) {
    Int mid = (lo + hi) >> 1;
    if (raised(mid) <= a)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

std::optional<Int> exact_nth_root(const Int& a, long long n) {
  Int root = nth_root_floor(a, n);
  if (boost::multiprecision::pow(root, static_cast<unsigned>(n)) == a) return root;
  return std::nullopt;
}

namespace {

// 2, 3, 5 then the mod-30 wheel starting at 7.
constexpr int kWheel[] = {4, 2, 4, 2, 4, 6, 2, 6};

template <typename Fn>
void for_each_candidate(Fn&& fn) {
  if (!fn(Int(2)) || !fn(Int(3)) || !fn(Int(5))) return;
  Int p = 7;
  for (std::size_t i = 0;; i = (i + 1) % 8) {
    if (!fn(p)) return;
    p += kWheel[i];
  }
}

std::map<Int, long long> factor_positive(Int n) {
  std::map<Int, long long> out;
  if (n <= 0) throw std::domain_error("factor_positive: argument must be positive");
  for_each_candidate([&](const Int& p) {
    if (p * p > n) return false;
    if (p > kTrialDivisionLimit)
      throw std::domain_error("factor_rational: input exceeds the supported factorization scale");
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
    return true;
  });
  if (n > 1) ++out[n];  // remaining cofactor is prime: no factor <= sqrt survived
  return out;
}

}  // namespace

bool is_prime(const Int& n) {
  if (n < 2) return false;
  bool prime = true;
  for_each_candidate([&](const Int& p) {
    if (p * p > n) return false;
    if (p > kTrialDivisionLimit)
      throw std::domain_error("is_prime: input exceeds the supported trial-division scale");
    if (n % p == 0) {
      prime = false;
      return false;
    }
    return true;
  });
  return prime;
}

Valuation factor_rational(const Rational& r) {
  if (r <= 0) throw std::domain_error("factor_rational: argument must be positive");
  Valuation v;
  for (auto& [p, e] : factor_positive(numerator(r))) v.entries[p] = e;
  for (auto& [p, e] : factor_positive(denominator(r))) v.entries[p] -= e;  // reduced, so keys are disjoint
  std::erase_if(v.entries, [](const auto& kv) { return kv.second == 0; });
  return v;
}

Rational valuation_value(const Valuation& v) {
  Rational out = 1;
  for (const auto& [p, e] : v.entries) out *= pow_rational(Rational(p), e);
  return out;
}

bool is_nth_power(const Rational& r, long long n) {
  if (n < 1) throw std::invalid_argument("is_nth_power: n must be >= 1");
  if (r <= 0) throw std::domain_error("is_nth_power: argument must be positive");
  if (n == 1) return true;
  return exact_nth_root(numerator(r), n).has_value() && exact_nth_root(denominator(r), n).has_value();
}

Int next_prime_avoiding(std::span<const Valuation> vals) {
  Int found = 0;
  for_each_candidate([&](const Int& p) {
    if (!is_prime(p)) return true;
    for (const auto& v : vals)
      if (v.entries.contains(p)) return true;
    found = p;
    return false;
  });
  return found;
}

std::optional<std::pair<Int, Int>> solve_congruences(const CongruenceSystem& sys) {
  if (sys.residues.size() != sys.moduli.size() || sys.residues.empty())
    throw std::invalid_argument("solve_congruences: residues and moduli must have equal nonzero length");
  for (const Int& n : sys.moduli)
    if (n < 1) throw std::invalid_argument("solve_congruences: moduli must be >= 1");

  auto mod = [](const Int& a, const Int& m) { return ((a % m) + m) % m; };

  // Fold x == b_k (mod n_k) where b_k = -t_k, merging pairwise.
  Int x = 0, m = 1;
  for (std::size_t k = 0; k < sys.moduli.size(); ++k) {
    const Int& n = sys.moduli[k];
    Int b = mod(-sys.residues[k], n);
    ExtGcd e = gcd_ext(m, n);
    if ((b - x) % e.g != 0) return std::nullopt;
    Int step = n / e.g;
    Int t = mod((b - x) / e.g * e.u, step);
    x += m * t;
    m = m / e.g * n;
    x = mod(x, m);
  }
  for (std::size_t k = 0; k < sys.moduli.size(); ++k)
    if (mod(sys.residues[k] + x, sys.moduli[k]) != 0)
      throw std::logic_error("solve_congruences: solution failed verification");
  return std::make_pair(x, m);
}

std::optional<UnitCombination> unit_combination(std::span<const Int> moduli) {
  if (moduli.empty()) return std::nullopt;
  for (const Int& n : moduli)
    if (n < 1) throw std::invalid_argument("unit_combination: moduli must be >= 1");

  Int n_lcm = 1;
  for (const Int& n : moduli) n_lcm = lcm_positive(n_lcm, n);

  std::vector<Int> quot;
  quot.reserve(moduli.size());
  for (const Int& n : moduli) quot.push_back(n_lcm / n);

  // Fold gcd over the N/n_k, tracking coefficients; the running gcd ends at 1.
  std::vector<Int> coeff{1};
  Int g = quot[0];
  for (std::size_t k = 1; k < quot.size(); ++k) {
    ExtGcd e = gcd_ext(g, quot[k]);
    for (Int& c : coeff) c *= e.u;
    coeff.push_back(e.v);
    g = e.g;
  }

  UnitCombination uc;
  uc.modulus_lcm = n_lcm;
  uc.coefficients = std::move(coeff);
  Int sum = 0;
  for (std::size_t k = 0; k < quot.size(); ++k) {
    uc.exponents.push_back(uc.coefficients[k] * quot[k]);
    sum += uc.exponents[k];
  }
  if (sum != 1) throw std::logic_error("unit_combination: sum c_k*N/n_k != 1");
  return uc;
}

}  // namespace mulord::numtheory
