#pragma once

#include <memory>

#include "npc/semantics.hpp"

namespace npc {

/// Classical propositional formula: 0, 1, variables, ~, &, |.
class PCFormula {
 public:
  enum class Kind { Zero, One, Var, Not, And, Or };

  static PCFormula zero() { return PCFormula(Kind::Zero); }
  static PCFormula one() { return PCFormula(Kind::One); }
  static PCFormula var(std::string name);
  static PCFormula negation(PCFormula p);
  static PCFormula conj(PCFormula p, PCFormula q);
  static PCFormula disj(PCFormula p, PCFormula q);

  Kind kind() const { return node_->kind; }
  const std::string& var_name() const { return node_->name; }
  const PCFormula& sub() const { return node_->sub[0]; }    // Not
  const PCFormula& lhs() const { return node_->sub[0]; }    // And/Or
  const PCFormula& rhs() const { return node_->sub[1]; }

  int depth() const;
  void collect_vars(std::set<std::string>& out) const;

  static int compare(const PCFormula& a, const PCFormula& b);
  friend bool operator==(const PCFormula& a, const PCFormula& b) { return compare(a, b) == 0; }
  friend bool operator<(const PCFormula& a, const PCFormula& b) { return compare(a, b) < 0; }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<PCFormula> sub;
  };
  explicit PCFormula(Kind k) : node_(std::make_shared<Node>(Node{k, {}, {}})) {}
  explicit PCFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// PC environments reuse the 2PC ones: value 1 reads as true, value 2 as
/// false. This is the single place the identification lives.
inline bool pc_truth(int two_pc_value) { return two_pc_value == 1; }

/// Standard classical semantics over a {1,2}-valued environment.
bool pc_eval(const PCFormula& p, const Environment& v);

/// PC -> 2PC translation: 0 -> e2, 1 -> e1, X -> X, ~P -> P^(12),
/// P & Q -> q(P, Q, e2), P | Q -> q(P, e1, Q).
Formula to_2pc(const PCFormula& p);

/// 2PC -> PC translation (n = 2 only): e2 -> 0, e1 -> 1, X -> X,
/// X^(12) -> ~X, q(F,G,H) -> (F & G) | (~F & H).
PCFormula to_pc(const Formula& f);

/// Concrete syntax: `0 | 1 | IDENT | ~P | P & Q | P \| Q`, precedence
/// ~ > & > |, parentheses allowed.
PCFormula parse_pc(std::string_view text);
std::string render_pc(const PCFormula& p);

/// Canonically sorted PC formula multiset, and two-sided sequents.
class PCContext {
 public:
  PCContext() = default;
  PCContext(std::initializer_list<PCFormula> fs) {
    for (const PCFormula& f : fs) insert(f);
  }
  void insert(const PCFormula& f);
  bool erase_one(const PCFormula& f);
  bool contains(const PCFormula& f) const;
  PCContext with(const PCFormula& f) const;
  PCContext without(const PCFormula& f) const;
  bool empty() const { return items_.empty(); }
  size_t size() const { return items_.size(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  void collect_vars(std::set<std::string>& out) const;
  friend bool operator==(const PCContext&, const PCContext&) = default;

 private:
  std::vector<PCFormula> items_;
};

struct PCSequent {
  PCContext left;
  PCContext right;
  std::set<std::string> vars() const;
  friend bool operator==(const PCSequent&, const PCSequent&) = default;
};

std::string render_pc(const PCSequent& s);

/// Gamma |= Delta classically: every environment making all of Gamma true
/// makes some member of Delta true.
Verdict pc_holds(const PCSequent& s);

enum class PCRule {
  Const1, Const0, Id, AndL, AndR, OrL, OrR, NotL, NotR, Cut, WeakL, WeakR, ConL, ConR
};

const char* pc_rule_name(PCRule r);

struct PCRuleParams {
  std::optional<PCFormula> principal;  // the formula the rule acts on
  std::optional<PCFormula> cut;
};

struct PCProofTree {
  PCRule rule = PCRule::Const1;
  PCRuleParams params;
  PCSequent conclusion;
  std::vector<PCProofTree> premises;
};

struct PCCheckResult {
  bool ok = true;
  std::vector<int> path;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Same recompute-the-premises architecture as the nPC kernel, for the
/// classical rules.
std::vector<PCSequent> pc_instantiate(PCRule rule, const PCRuleParams& params,
                                      const PCSequent& conclusion);
PCCheckResult pc_check(const PCProofTree& t);

/// Round-trip / preservation report over formula corpora.
struct RoundtripReport {
  long long pc_to_2pc_checked = 0;     // pc_eval(P,v) <-> eval(P deg, v) = 1
  long long two_pc_to_pc_checked = 0;  // eval(F,v) = 1 <-> pc_eval(F bullet, v)
  long long roundtrip_pc_checked = 0;  // P ~ to_pc(to_2pc(P)) semantically
  long long roundtrip_2pc_checked = 0; // F ~ to_2pc(to_pc(F)) semantically
  long long failures = 0;
  std::string first_failure;
  bool pass() const { return failures == 0; }
};

RoundtripReport roundtrip_reports(const std::vector<PCFormula>& pc_corpus,
                                  const std::vector<Formula>& two_pc_corpus);

}  // namespace npc
