#include "mulord/formula.hpp"

#include <stdexcept>

namespace mulord::formula {

using numtheory::is_nth_power;

bool atom_mentions(const Atom& a, const std::string& var) {
  return std::visit(
      [&](const auto& at) {
        using T = std::decay_t<decltype(at)>;
        if constexpr (std::is_same_v<T, PowAtom>)
          return at.arg.mentions(var);
        else
          return at.lhs.mentions(var) || at.rhs.mentions(var);
      },
      a);
}

Formula Formula::top() {
  static const Formula t = make(Node{Kind::Top, {}, {}, {}});
  return t;
}

Formula Formula::bottom() {
  static const Formula b = make(Node{Kind::Bottom, {}, {}, {}});
  return b;
}

Formula Formula::atom(Atom a) {
  if (const auto* p = std::get_if<PowAtom>(&a)) {
    if (p->index < 1) throw std::invalid_argument("Formula::atom: power index must be >= 1");
    if (p->index == 1) return top();
    if (p->arg.is_constant() && p->arg.coeff() > 0) return boolean(is_nth_power(p->arg.coeff(), p->index));
  } else if (const auto* e = std::get_if<EqAtom>(&a)) {
    if (e->lhs == e->rhs) return top();
    if (e->lhs.is_constant() && e->rhs.is_constant()) return boolean(e->lhs.coeff() == e->rhs.coeff());
  } else if (const auto* l = std::get_if<LtAtom>(&a)) {
    if (l->lhs == l->rhs) return bottom();
    if (l->lhs.is_constant() && l->rhs.is_constant()) return boolean(l->lhs.coeff() < l->rhs.coeff());
  }
  Node n;
  n.kind = Kind::Leaf;
  n.atom = std::move(a);
  return make(std::move(n));
}

Formula Formula::negation(Formula f) {
  switch (f.kind()) {
    case Kind::Top: return bottom();
    case Kind::Bottom: return top();
    case Kind::Not: return f.child();
    default: break;
  }
  Node n;
  n.kind = Kind::Not;
  n.children.push_back(std::move(f));
  return make(std::move(n));
}

namespace {

std::vector<Formula> flatten(std::vector<Formula> fs, Formula::Kind kind, const Formula& unit, const Formula& zero,
                             bool& hit_zero) {
  std::vector<Formula> out;
  for (auto& f : fs) {
    if (f == unit) continue;
    if (f == zero) {
      hit_zero = true;
      return {};
    }
    if (f.kind() == kind) {
      for (const auto& c : f.children()) out.push_back(c);
    } else {
      out.push_back(std::move(f));
    }
  }
  return out;
}

}  // namespace

Formula Formula::conj(std::vector<Formula> fs) {
  bool hit_zero = false;
  auto out = flatten(std::move(fs), Kind::And, top(), bottom(), hit_zero);
  if (hit_zero) return bottom();
  if (out.empty()) return top();
  if (out.size() == 1) return out.front();
  Node n;
  n.kind = Kind::And;
  n.children = std::move(out);
  return make(std::move(n));
}

Formula Formula::disj(std::vector<Formula> fs) {
  bool hit_zero = false;
  auto out = flatten(std::move(fs), Kind::Or, bottom(), top(), hit_zero);
  if (hit_zero) return top();
  if (out.empty()) return bottom();
  if (out.size() == 1) return out.front();
  Node n;
  n.kind = Kind::Or;
  n.children = std::move(out);
  return make(std::move(n));
}

Formula Formula::implies(Formula lhs, Formula rhs) {
  if (lhs.is_top()) return rhs;
  if (lhs.is_bottom()) return top();
  if (rhs.is_top()) return top();
  if (rhs.is_bottom()) return negation(std::move(lhs));
  Node n;
  n.kind = Kind::Implies;
  n.children.push_back(std::move(lhs));
  n.children.push_back(std::move(rhs));
  return make(std::move(n));
}

Formula Formula::quantifier(bool universal, std::string var, Formula body) {
  if (body.is_top() || body.is_bottom()) return body;  // the domain is nonempty
  Node n;
  n.kind = universal ? Kind::Forall : Kind::Exists;
  n.var = std::move(var);
  n.children.push_back(std::move(body));
  return make(std::move(n));
}

Formula Formula::exists(std::string var, Formula body) { return quantifier(false, std::move(var), std::move(body)); }
Formula Formula::forall(std::string var, Formula body) { return quantifier(true, std::move(var), std::move(body)); }

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::Top:
    case Kind::Bottom: return true;
    case Kind::Leaf: return leaf() == other.leaf();
    case Kind::Exists:
    case Kind::Forall:
      if (var() != other.var()) return false;
      [[fallthrough]];
    default: {
      const auto& a = children();
      const auto& b = other.children();
      if (a.size() != b.size()) return false;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
      return true;
    }
  }
}

bool Formula::is_literal() const {
  if (kind() == Kind::Leaf) return true;
  return kind() == Kind::Not && child().kind() == Kind::Leaf &&
         std::holds_alternative<PowAtom>(child().leaf());
}

bool Formula::has_quantifier() const {
  switch (kind()) {
    case Kind::Exists:
    case Kind::Forall: return true;
    default:
      for (const auto& c : children())
        if (c.has_quantifier()) return true;
      return false;
  }
}

bool Formula::mentions(const std::string& var) const {
  if (kind() == Kind::Leaf) return atom_mentions(leaf(), var);
  if ((kind() == Kind::Exists || kind() == Kind::Forall) && this->var() == var) return true;
  for (const auto& c : children())
    if (c.mentions(var)) return true;
  return false;
}

namespace {

void collect_vars(const Formula& f, std::set<std::string>& bound, std::set<std::string>& free,
                  std::set<std::string>& all) {
  switch (f.kind()) {
    case Formula::Kind::Leaf: {
      auto scan = [&](const Monomial& m) {
        for (const auto& [v, e] : m.powers()) {
          (void)e;
          all.insert(v);
          if (!bound.contains(v)) free.insert(v);
        }
      };
      std::visit(
          [&](const auto& at) {
            using T = std::decay_t<decltype(at)>;
            if constexpr (std::is_same_v<T, PowAtom>) {
              scan(at.arg);
            } else {
              scan(at.lhs);
              scan(at.rhs);
            }
          },
          f.leaf());
      return;
    }
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      all.insert(f.var());
      bool inserted = bound.insert(f.var()).second;
      collect_vars(f.body(), bound, free, all);
      if (inserted) bound.erase(f.var());
      return;
    }
    default:
      for (const auto& c : f.children()) collect_vars(c, bound, free, all);
  }
}

}  // namespace

std::set<std::string> Formula::free_variables() const {
  std::set<std::string> bound, free, all;
  collect_vars(*this, bound, free, all);
  return free;
}

std::set<std::string> Formula::all_variables() const {
  std::set<std::string> bound, free, all;
  collect_vars(*this, bound, free, all);
  return all;
}

std::string fresh_name(const std::string& stem, std::set<std::string>& used) {
  if (!used.contains(stem)) {
    used.insert(stem);
    return stem;
  }
  for (unsigned long long i = 1;; ++i) {
    std::string candidate = stem + "_" + std::to_string(i);
    if (used.insert(candidate).second) return candidate;
  }
}

Formula substitute(const Formula& f, const std::string& var, const Monomial& t) {
  if (t.mentions(var)) throw std::invalid_argument("substitute: replacement term mentions the variable");
  switch (f.kind()) {
    case Formula::Kind::Top:
    case Formula::Kind::Bottom: return f;
    case Formula::Kind::Leaf:
      return std::visit(
          [&](const auto& at) {
            using T = std::decay_t<decltype(at)>;
            if constexpr (std::is_same_v<T, PowAtom>)
              return Formula::pow(at.index, at.arg.substituted(var, t));
            else if constexpr (std::is_same_v<T, EqAtom>)
              return Formula::eq(at.lhs.substituted(var, t), at.rhs.substituted(var, t));
            else
              return Formula::lt(at.lhs.substituted(var, t), at.rhs.substituted(var, t));
          },
          f.leaf());
    case Formula::Kind::Not: return Formula::negation(substitute(f.child(), var, t));
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      std::vector<Formula> cs;
      cs.reserve(f.children().size());
      for (const auto& c : f.children()) cs.push_back(substitute(c, var, t));
      return f.kind() == Formula::Kind::And ? Formula::conj(std::move(cs)) : Formula::disj(std::move(cs));
    }
    case Formula::Kind::Implies:
      return Formula::implies(substitute(f.child(0), var, t), substitute(f.child(1), var, t));
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      if (f.var() == var) return f;  // shadowed; nothing free to replace
      Formula body = f.body();
      std::string binder = f.var();
      if (t.mentions(binder)) {
        // Rename the binder out of the way before substituting under it.
        auto used = f.all_variables();
        for (const auto& [v, e] : t.powers()) {
          (void)e;
          used.insert(v);
        }
        used.insert(var);
        std::string renamed = fresh_name(binder, used);
        body = substitute(body, binder, Monomial::variable(renamed));
        binder = renamed;
      }
      return Formula::quantifier(f.kind() == Formula::Kind::Forall, binder, substitute(body, var, t));
    }
  }
  throw std::logic_error("substitute: unreachable");
}

Formula Formula::substituted(const std::string& var, const Monomial& t) const { return substitute(*this, var, t); }

Formula Formula::renamed_free(const std::string& from, const std::string& to) const {
  return substituted(from, Monomial::variable(to));
}

}  // namespace mulord::formula
