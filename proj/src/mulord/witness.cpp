#include "mulord/witness.hpp"

#include <algorithm>
#include <vector>

namespace mulord::semantics {

using numtheory::factor_rational;
using numtheory::is_nth_power;
using numtheory::pow_rational;
using PrimeValuation = numtheory::Valuation;

Rational rational_power_between(const Rational& A, const Rational& B, long long n) {
  if (A <= 0) throw std::invalid_argument("rational_power_between: lower endpoint must be positive");
  if (!(A < B)) throw std::invalid_argument("rational_power_between: empty interval");
  if (n < 1) throw std::invalid_argument("rational_power_between: n must be >= 1");
  auto raised = [n](const Rational& x) { return pow_rational(x, n); };
  Rational lo = 1;
  while (raised(lo) > A) lo /= 2;
  Rational hi = 1;
  while (raised(hi) < B) hi *= 2;
  // Invariant: lo^n <= A < B <= hi^n. The preimage of (A, B) is an open
  // subinterval of (lo, hi) of fixed width, so bisection must land in it.
  for (;;) {
    Rational mid = (lo + hi) / 2;
    Rational val = raised(mid);
    if (val <= A)
      lo = mid;
    else if (val >= B)
      hi = mid;
    else
      return mid;
  }
}

std::optional<Rational> exact_rational_root(const Rational& r, long long n) {
  if (r <= 0) throw std::domain_error("exact_rational_root: argument must be positive");
  auto num = numtheory::exact_nth_root(numerator(r), n);
  if (!num) return std::nullopt;
  auto den = numtheory::exact_nth_root(denominator(r), n);
  if (!den) return std::nullopt;
  return Rational(*num, *den);
}

namespace {

struct GroundConstraints {
  std::vector<Rational> equalities;
  std::vector<Rational> lowers, uppers;
  std::vector<std::pair<long long, Rational>> pos_pows;  // (n, value of t)
  std::vector<std::pair<long long, Rational>> neg_pows;  // (m, value of u)
};

GroundConstraints ground(const qe::ClassifiedConstraints& c, const Valuation& valuation) {
  GroundConstraints g;
  for (const auto& eq : c.equalities) g.equalities.push_back(eq.rhs.eval(valuation));
  for (const auto& lo : c.lowers) g.lowers.push_back(lo.bound.eval(valuation));
  for (const auto& up : c.uppers) g.uppers.push_back(up.bound.eval(valuation));
  for (const auto& pp : c.pos_pows) g.pos_pows.emplace_back(pp.n, pp.t.eval(valuation));
  for (const auto& np : c.neg_pows) g.neg_pows.emplace_back(np.m, np.u.eval(valuation));
  return g;
}

bool satisfies(const GroundConstraints& g, const Rational& y) {
  for (const auto& v : g.equalities)
    if (y != v) return false;
  for (const auto& r : g.lowers)
    if (!(r < y)) return false;
  for (const auto& s : g.uppers)
    if (!(y < s)) return false;
  for (const auto& [n, t] : g.pos_pows)
    if (!is_nth_power(t * y, n)) return false;
  for (const auto& [m, u] : g.neg_pows)
    if (is_nth_power(u * y, m)) return false;
  return true;
}

}  // namespace

std::optional<WitnessRecipe> plan_witness(const qe::ClassifiedConstraints& c, const Valuation& valuation) {
  GroundConstraints g = ground(c, valuation);

  // The quantifier-free condition of eliminate_one, evaluated directly.
  for (const Formula& lit : c.residue)
    if (!eval_ground(lit, Domain::QPos, valuation)) return std::nullopt;
  for (const auto& r : g.lowers)
    for (const auto& s : g.uppers)
      if (!(r < s)) return std::nullopt;
  for (std::size_t k = 0; k + 1 < g.pos_pows.size(); ++k)
    for (std::size_t l = k + 1; l < g.pos_pows.size(); ++l)
      if (!is_nth_power(g.pos_pows[k].second / g.pos_pows[l].second,
                        std::gcd(g.pos_pows[k].first, g.pos_pows[l].first)))
        return std::nullopt;

  WitnessRecipe recipe;
  if (!g.pos_pows.empty()) {
    std::vector<Int> moduli;
    for (const auto& [n, t] : g.pos_pows) moduli.push_back(n);
    auto uc = numtheory::unit_combination(moduli);
    recipe.N = uc->modulus_lcm.convert_to<long long>();
    Rational t = 1;
    for (std::size_t k = 0; k < g.pos_pows.size(); ++k)
      t *= pow_rational(g.pos_pows[k].second, -uc->exponents[k].convert_to<long long>());
    recipe.t = Monomial::constant(t);
  }

  Rational t_value = recipe.t.coeff();
  for (const auto& [m, u] : g.neg_pows) {
    recipe.M *= m;
    if (recipe.N % m == 0 && is_nth_power(u * t_value, m)) return std::nullopt;
  }

  std::vector<PrimeValuation> avoid;
  for (const auto& [n, t] : g.pos_pows) avoid.push_back(factor_rational(t));
  for (const auto& [m, u] : g.neg_pows) avoid.push_back(factor_rational(u));
  recipe.P = numtheory::next_prime_avoiding(avoid);

  // Order bounds on y itself; one-sided or absent bounds get a synthetic
  // companion so a single interval drives the bisection.
  std::optional<Rational> lo, hi;
  for (const auto& r : g.lowers) lo = lo ? std::max(*lo, r) : r;
  for (const auto& s : g.uppers) hi = hi ? std::min(*hi, s) : s;
  if (lo && hi) recipe.power_interval = {*lo, *hi};
  else if (lo) recipe.power_interval = {*lo, *lo * 2};
  else if (hi) recipe.power_interval = {*hi / 2, *hi};
  else recipe.power_interval = {t_value / 2, t_value * 2};
  return recipe;
}

std::optional<Rational> construct_witness(const qe::ClassifiedConstraints& c, const Valuation& valuation) {
  GroundConstraints g = ground(c, valuation);

  std::optional<Rational> y;
  if (!c.equalities.empty()) {
    for (const Formula& lit : c.residue)
      if (!eval_ground(lit, Domain::QPos, valuation)) return std::nullopt;
    Rational candidate = g.equalities.front();
    if (candidate <= 0 || !satisfies(g, candidate)) return std::nullopt;
    y = candidate;
  } else {
    auto recipe = plan_witness(c, valuation);
    if (!recipe) return std::nullopt;
    const auto& [A, B] = recipe->power_interval;
    Rational t = recipe->t.coeff();
    bool bounded = !g.lowers.empty() || !g.uppers.empty();
    if (g.neg_pows.empty()) {
      // y = gamma^N * t with gamma free; gamma = 1 when no order constraints.
      Rational gamma = bounded ? rational_power_between(A / t, B / t, recipe->N) : Rational(1);
      y = pow_rational(gamma, recipe->N) * t;
    } else {
      // y = P^N * delta^(N*M) * t; any delta in range works, whatever its
      // factorization: indices dividing N reduce to the checked !R_m(u*t),
      // and the rest fail at P where the valuation is N modulo m.
      Rational p_pow = pow_rational(Rational(recipe->P), recipe->N);
      Rational delta = bounded
                           ? rational_power_between(A / (p_pow * t), B / (p_pow * t), recipe->N * recipe->M)
                           : Rational(1);
      y = p_pow * pow_rational(delta, recipe->N * recipe->M) * t;
    }
  }

  if (!satisfies(g, *y)) throw std::logic_error("construct_witness: candidate failed verification");
  for (const Formula& lit : c.residue)
    if (!eval_ground(lit, Domain::QPos, valuation)) throw std::logic_error("construct_witness: residue check");
  return y;
}

std::optional<Rational> find_witness(const Formula& body, const std::string& var, const Valuation& valuation) {
  Formula nnf_body = formula::to_nnf(body);
  for (const auto& literals : formula::to_dnf(nnf_body)) {
    bool mentions = false;
    for (const auto& lit : literals)
      if (lit.mentions(var)) {
        mentions = true;
        break;
      }
    std::optional<Rational> witness;
    if (!mentions) {
      bool holds = true;
      for (const auto& lit : literals)
        if (!eval_ground(lit, Domain::QPos, valuation)) {
          holds = false;
          break;
        }
      if (holds) witness = Rational(1);  // the variable is unconstrained
    } else {
      auto unified = qe::unify_powers(qe::classify(literals, var));
      auto y = construct_witness(unified.constraints, valuation);
      if (y) {
        auto root = exact_rational_root(*y, unified.p);
        if (!root) throw std::logic_error("find_witness: unified witness is not a p-th power");
        witness = *root;
      }
    }
    if (witness) {
      Valuation extended = valuation;
      extended[var] = *witness;
      if (!eval_ground(body, Domain::QPos, extended))
        throw std::logic_error("find_witness: witness failed direct evaluation");
      return witness;
    }
  }
  return std::nullopt;
}

}  // namespace mulord::semantics
