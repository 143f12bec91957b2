#pragma once

#include <algorithm>
#include <initializer_list>
#include <set>
#include <vector>

#include "npc/formula.hpp"

namespace npc {

/// A finite multiset of formulas in canonical form: a list kept sorted under
/// the fixed total syntactic order. Equality is multiset equality.
class Context {
 public:
  Context() = default;
  Context(std::initializer_list<Formula> fs) {
    for (const Formula& f : fs) insert(f);
  }
  explicit Context(std::vector<Formula> fs) {
    items_ = std::move(fs);
    std::sort(items_.begin(), items_.end());
  }

  void insert(const Formula& f) {
    items_.insert(std::upper_bound(items_.begin(), items_.end(), f), f);
  }

  /// Removes one occurrence; returns false if absent.
  bool erase_one(const Formula& f) {
    auto it = std::lower_bound(items_.begin(), items_.end(), f);
    if (it == items_.end() || *it != f) return false;
    items_.erase(it);
    return true;
  }

  bool contains(const Formula& f) const {
    return std::binary_search(items_.begin(), items_.end(), f);
  }

  int count(const Formula& f) const {
    auto [lo, hi] = std::equal_range(items_.begin(), items_.end(), f);
    return static_cast<int>(hi - lo);
  }

  bool empty() const { return items_.empty(); }
  size_t size() const { return items_.size(); }
  const std::vector<Formula>& items() const { return items_; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  Context with(const Formula& f) const {
    Context c = *this;
    c.insert(f);
    return c;
  }

  Context without(const Formula& f) const {
    Context c = *this;
    if (!c.erase_one(f)) throw std::invalid_argument("Context::without: formula not present");
    return c;
  }

  void collect_vars(std::set<std::string>& out) const {
    for (const Formula& f : items_) f.collect_vars(out);
  }

  friend bool operator==(const Context&, const Context&) = default;

 private:
  std::vector<Formula> items_;
};

/// Element-wise permutation action; multiplicities preserved.
inline Context act_ctx(const Context& g, const Perm& rho) {
  std::vector<Formula> out;
  out.reserve(g.size());
  for (const Formula& f : g) out.push_back(act(f, rho));
  return Context(std::move(out));
}

inline Context act_ctx_exchange(const Context& g, int i, int j, int n) {
  return act_ctx(g, Perm::exchange(i, j, n));
}

/// A sequent Gamma |-_i Delta at dimension n.
struct Sequent {
  Context left;
  int n = 2;
  int turnstile = 1;
  Context right;

  Sequent() = default;
  Sequent(Context l, int dim_n, int i, Context r)
      : left(std::move(l)), n(dim_n), turnstile(i), right(std::move(r)) {
    if (n < 2) throw std::invalid_argument("sequent dimension must be >= 2");
    if (turnstile < 1 || turnstile > n)
      throw std::invalid_argument("turnstile dimension out of range");
  }

  std::set<std::string> vars() const {
    std::set<std::string> out;
    left.collect_vars(out);
    right.collect_vars(out);
    return out;
  }

  bool dim_ok() const {
    for (const Formula& f : left)
      if (!f.dim_ok(n)) return false;
    for (const Formula& f : right)
      if (!f.dim_ok(n)) return false;
    return true;
  }

  /// True iff every formula is a variable or a constant.
  bool is_atomic() const {
    for (const Formula& f : left)
      if (f.is_q()) return false;
    for (const Formula& f : right)
      if (f.is_q()) return false;
    return true;
  }

  friend bool operator==(const Sequent&, const Sequent&) = default;
};

}  // namespace npc
