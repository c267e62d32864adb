#pragma once

#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "mulord/monomial.hpp"

namespace mulord::formula {

struct EqAtom {
  Monomial lhs, rhs;
  bool operator==(const EqAtom&) const = default;
};
struct LtAtom {
  Monomial lhs, rhs;
  bool operator==(const LtAtom&) const = default;
};
/// R_n: "is the n-th power of a rational". index >= 1; index 1 is admitted
/// internally (it is trivially true and folds away), the concrete syntax
/// starts at 2.
struct PowAtom {
  long long index;
  Monomial arg;
  bool operator==(const PowAtom&) const = default;
};

using Atom = std::variant<EqAtom, LtAtom, PowAtom>;

bool atom_mentions(const Atom& a, const std::string& var);

/// Immutable formula tree. And/Or hold flat child lists (empty And = true,
/// empty Or = false, both folded at construction); construction also folds
/// trivially decidable atoms, so true/false leaves propagate.
class Formula {
 public:
  enum class Kind { Top, Bottom, Leaf, Not, And, Or, Implies, Exists, Forall };

  Formula() : Formula(top()) {}

  static Formula top();
  static Formula bottom();
  static Formula boolean(bool b) { return b ? top() : bottom(); }

  /// Atom constructors fold what is already decided: R_1 is true, an atom
  /// whose sides are identical terms is decided by irreflexivity, and an
  /// atom over constants is evaluated outright.
  static Formula atom(Atom a);
  static Formula eq(Monomial lhs, Monomial rhs) { return atom(EqAtom{std::move(lhs), std::move(rhs)}); }
  static Formula lt(Monomial lhs, Monomial rhs) { return atom(LtAtom{std::move(lhs), std::move(rhs)}); }
  static Formula pow(long long index, Monomial arg) { return atom(PowAtom{index, std::move(arg)}); }

  static Formula negation(Formula f);
  static Formula conj(std::vector<Formula> fs);  // flattens, drops true, false dominates
  static Formula disj(std::vector<Formula> fs);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula exists(std::string var, Formula body);
  static Formula forall(std::string var, Formula body);
  static Formula quantifier(bool universal, std::string var, Formula body);

  Kind kind() const { return node_->kind; }
  bool is_top() const { return kind() == Kind::Top; }
  bool is_bottom() const { return kind() == Kind::Bottom; }
  const Atom& leaf() const { return node_->atom; }
  const std::vector<Formula>& children() const { return node_->children; }
  const Formula& child(std::size_t i = 0) const { return node_->children[i]; }
  const std::string& var() const { return node_->var; }
  const Formula& body() const { return node_->children[0]; }

  bool operator==(const Formula& other) const;

  /// A literal is an atom or a negated power atom.
  bool is_literal() const;

  bool has_quantifier() const;
  bool mentions(const std::string& var) const;
  std::set<std::string> free_variables() const;
  std::set<std::string> all_variables() const;  // free + bound + every name in terms

  /// Capture-avoiding substitution of a term for a free variable.
  Formula substituted(const std::string& var, const Monomial& t) const;

  Formula renamed_free(const std::string& from, const std::string& to) const;

 private:
  struct Node {
    Kind kind = Kind::Top;
    Atom atom;
    std::vector<Formula> children;
    std::string var;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Node n) { return Formula(std::make_shared<const Node>(std::move(n))); }

  std::shared_ptr<const Node> node_;
};

/// substitute(f, x, t): every occurrence of x replaced by t, monomials
/// renormalized. t must not mention x.
Formula substitute(const Formula& f, const std::string& var, const Monomial& t);

/// Picks a name not present in `used`, starting from `stem`, and records it.
std::string fresh_name(const std::string& stem, std::set<std::string>& used);

}  // namespace mulord::formula
