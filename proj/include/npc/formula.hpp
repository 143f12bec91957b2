#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "npc/permutation.hpp"

namespace npc {

/// An nPC formula: a decorated variable X^pi, a constant e_k, or a compound
/// q(test, G_1, ..., G_n). Immutable; copies share structure.
class Formula {
 public:
  enum class Kind { Const, Var, Q };

  static Formula constant(int k) {
    if (k < 1) throw std::invalid_argument("constant index must be >= 1");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Const;
    node->const_index = k;
    return Formula(std::move(node));
  }

  static Formula var(std::string name, Perm decoration) {
    if (name.empty()) throw std::invalid_argument("variable name must be nonempty");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Var;
    node->name = std::move(name);
    node->decoration = std::make_shared<Perm>(std::move(decoration));
    return Formula(std::move(node));
  }

  /// Variable decorated with the identity.
  static Formula var(std::string name, int n) { return var(std::move(name), Perm::identity(n)); }

  static Formula q(Formula test, std::vector<Formula> branches) {
    if (branches.empty()) throw std::invalid_argument("q needs at least one branch");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Q;
    node->test = std::make_shared<Formula>(std::move(test));
    node->branches = std::move(branches);
    return Formula(std::move(node));
  }

  Kind kind() const { return node_->kind; }
  bool is_const() const { return kind() == Kind::Const; }
  bool is_var() const { return kind() == Kind::Var; }
  bool is_q() const { return kind() == Kind::Q; }
  bool is_atomic() const { return !is_q(); }

  int const_index() const { return node_->const_index; }
  const std::string& var_name() const { return node_->name; }
  const Perm& var_decoration() const { return *node_->decoration; }
  const Formula& test() const { return *node_->test; }
  const std::vector<Formula>& branches() const { return node_->branches; }

  /// Maximal q-nesting; atoms have depth 0.
  int depth() const {
    if (!is_q()) return 0;
    int d = test().depth();
    for (const Formula& b : branches()) d = std::max(d, b.depth());
    return d + 1;
  }

  /// Number of q nodes in the formula.
  int q_count() const {
    if (!is_q()) return 0;
    int c = 1 + test().q_count();
    for (const Formula& b : branches()) c += b.q_count();
    return c;
  }

  void collect_vars(std::set<std::string>& out) const {
    switch (kind()) {
      case Kind::Const: return;
      case Kind::Var: out.insert(var_name()); return;
      case Kind::Q:
        test().collect_vars(out);
        for (const Formula& b : branches()) b.collect_vars(out);
        return;
    }
  }

  std::set<std::string> vars() const {
    std::set<std::string> out;
    collect_vars(out);
    return out;
  }

  /// True iff the formula is well-formed at dimension n: constant indices
  /// <= n, decorations of size n, q arity n+1.
  bool dim_ok(int n) const {
    switch (kind()) {
      case Kind::Const: return const_index() <= n;
      case Kind::Var: return var_decoration().n() == n;
      case Kind::Q:
        if (static_cast<int>(branches().size()) != n) return false;
        if (!test().dim_ok(n)) return false;
        for (const Formula& b : branches())
          if (!b.dim_ok(n)) return false;
        return true;
    }
    return false;
  }

  friend bool operator==(const Formula& a, const Formula& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Formula& a, const Formula& b) { return compare(a, b) != 0; }
  friend bool operator<(const Formula& a, const Formula& b) { return compare(a, b) < 0; }

  /// Total syntactic order: constants < variables (by name, then decoration)
  /// < q-compounds (structurally). Drives the canonical multiset form.
  static int compare(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return 0;
    auto rank = [](Kind k) { return k == Kind::Const ? 0 : k == Kind::Var ? 1 : 2; };
    if (int r = rank(a.kind()) - rank(b.kind()); r != 0) return r < 0 ? -1 : 1;
    switch (a.kind()) {
      case Kind::Const:
        return a.const_index() == b.const_index() ? 0 : (a.const_index() < b.const_index() ? -1 : 1);
      case Kind::Var: {
        if (int c = a.var_name().compare(b.var_name()); c != 0) return c < 0 ? -1 : 1;
        const auto& ia = a.var_decoration().image();
        const auto& ib = b.var_decoration().image();
        if (ia == ib) return 0;
        return ia < ib ? -1 : 1;
      }
      case Kind::Q: {
        if (a.branches().size() != b.branches().size())
          return a.branches().size() < b.branches().size() ? -1 : 1;
        if (int c = compare(a.test(), b.test()); c != 0) return c;
        for (size_t t = 0; t < a.branches().size(); ++t)
          if (int c = compare(a.branches()[t], b.branches()[t]); c != 0) return c;
        return 0;
      }
    }
    return 0;
  }

 private:
  struct Node {
    Kind kind;
    int const_index = 0;                  // Const
    std::string name;                     // Var
    std::shared_ptr<Perm> decoration;     // Var
    std::shared_ptr<Formula> test;        // Q
    std::vector<Formula> branches;        // Q
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// The permutation action F^rho. Variables compose decorations, constants
/// move to e_{rho(k)}, and q maps over the branches leaving the test alone
/// (the test's value selects the same branch before and after the action,
/// which is what makes the exchange/negation laws go through).
inline Formula act(const Formula& f, const Perm& rho) {
  switch (f.kind()) {
    case Formula::Kind::Const:
      if (f.const_index() > rho.n())
        throw dimension_mismatch("act: constant index exceeds permutation dimension");
      return Formula::constant(rho(f.const_index()));
    case Formula::Kind::Var:
      return Formula::var(f.var_name(), compose(rho, f.var_decoration()));
    case Formula::Kind::Q: {
      if (static_cast<int>(f.branches().size()) != rho.n())
        throw dimension_mismatch("act: q arity does not match permutation dimension");
      std::vector<Formula> bs;
      bs.reserve(f.branches().size());
      for (const Formula& b : f.branches()) bs.push_back(act(b, rho));
      return Formula::q(f.test(), std::move(bs));
    }
  }
  throw std::logic_error("act: unreachable");
}

/// F^(ij), the negation of F relative to dimensions i and j.
inline Formula act_exchange(const Formula& f, int i, int j, int n) {
  return act(f, Perm::exchange(i, j, n));
}

}  // namespace npc
