#pragma once

#include <map>
#include <optional>
#include <string>

#include "npc/sequent.hpp"

namespace npc {

/// Assignment of dimensions {1..n} to propositional variables.
using Environment = std::map<std::string, int>;

class unbound_variable : public std::runtime_error {
 public:
  explicit unbound_variable(const std::string& name)
      : std::runtime_error("unbound variable: " + name) {}
};

/// Raised when an enumeration would exceed its size guard.
class explosion_guard_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Interprets a formula into {1..n}: X^pi evaluates to pi(v(X)), e_k to k,
/// and q(F, G_1..G_n) to the branch selected by the value of F.
int eval(const Formula& f, const Environment& v);

/// Lexicographic stream of all n^|vars| environments over a variable set,
/// ordered by sorted variable name, last variable varying fastest.
class EnvEnumerator {
 public:
  static constexpr long long kGuard = 10'000'000;

  EnvEnumerator(const std::set<std::string>& vars, int n);

  long long size() const { return total_; }
  Environment at(long long index) const;

  class iterator {
   public:
    iterator(const EnvEnumerator* e, long long i) : enum_(e), i_(i) {}
    Environment operator*() const { return enum_->at(i_); }
    iterator& operator++() { ++i_; return *this; }
    bool operator!=(const iterator& o) const { return i_ != o.i_; }

   private:
    const EnvEnumerator* enum_;
    long long i_;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, total_); }

 private:
  std::vector<std::string> vars_;
  int n_;
  long long total_;
};

/// Validity verdict for an i-logical-consequence query. An Invalid verdict
/// carries the lexicographically first environment that falsifies it.
struct Verdict {
  bool valid = false;
  std::optional<Environment> witness;

  static Verdict Valid() { return {true, std::nullopt}; }
  static Verdict Invalid(Environment w) { return {false, std::move(w)}; }
  explicit operator bool() const { return valid; }
};

/// Decides Gamma |=_i Delta by enumerating environments over the variables
/// occurring in the sequent.
Verdict holds(const Context& gamma, int i, const Context& delta, int n);
Verdict holds(const Sequent& s);

/// True iff F and G take the same value under every environment over the
/// union of their variables.
bool equivalent(const Formula& f, const Formula& g, int n);

/// CLI text format "X=2,Y=1".
std::string render_env(const Environment& v);
Environment parse_env(const std::string& text, int n);

}  // namespace npc
