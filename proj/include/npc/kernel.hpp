#pragma once

#include <optional>
#include <string>
#include <vector>

#include "npc/sequent.hpp"

namespace npc {

/// The thirteen deduction rules of the n-dimensional propositional calculus.
enum class Rule { Const, Id, Sym, Neg1, Neg2, Neg3, QL, QR, Cut, WeakL, WeakR, ConL, ConR };

const char* rule_name(Rule r);
std::optional<Rule> rule_from_name(const std::string& name);

/// Per-rule parameters. Only the fields a rule uses may be set:
///   Const            -- none
///   Id               -- pi, rho (the two decorations, verified against the conclusion)
///   Sym              -- i (premise dimension), j (must equal the conclusion turnstile)
///   Neg1, Neg2       -- i (premise dimension), k (exchange index), principal (in the left context)
///   Neg3             -- principal (in the right context)
///   qL / qR          -- principal (the q-compound, in the left / right context)
///   Cut              -- cut (the cut formula)
///   WeakL/ConL       -- principal (in the left context)
///   WeakR/ConR       -- principal (in the right context)
struct RuleParams {
  std::optional<int> i;
  std::optional<int> j;
  std::optional<int> k;
  std::optional<Perm> pi;
  std::optional<Perm> rho;
  std::optional<Formula> principal;
  std::optional<Formula> cut;
};

/// A rule-instance violation detected while recomputing premises.
class kernel_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Returns the exact premise sequents the rule scheme demands for this
/// conclusion, reading the schemes literally: Const and Id are context-free
/// axioms, Sym/Neg1/Neg2/Neg3 transport contexts through exchanges, qL/qR
/// produce one premise per dimension j = 1..n (Neg3 skips the conclusion
/// dimension). Throws kernel_error on any side-condition or shape violation.
std::vector<Sequent> instantiate(Rule rule, const RuleParams& params, const Sequent& conclusion);

/// Number of premises the rule takes at dimension n.
int rule_arity(Rule r, int n);

struct ProofTree {
  Rule rule = Rule::Const;
  RuleParams params;
  Sequent conclusion;
  std::vector<ProofTree> premises;

  /// Nodes in the tree (this node included).
  long node_count() const {
    long c = 1;
    for (const ProofTree& p : premises) c += p.node_count();
    return c;
  }

  bool uses_rule(Rule r) const {
    if (rule == r) return true;
    for (const ProofTree& p : premises)
      if (p.uses_rule(r)) return true;
    return false;
  }
};

/// Outcome of checking a proof tree. When not ok, `path` lists the child
/// indices from the root to the first offending node in pre-order.
struct CheckResult {
  bool ok = true;
  std::vector<int> path;
  std::string reason;

  explicit operator bool() const { return ok; }
  std::string path_string() const;
};

/// Accepts exactly the trees whose every node is a literal instance of its
/// rule scheme: each node's premises' conclusions must equal, as multiset
/// sequents, the ones instantiate computes for it.
CheckResult check(const ProofTree& t);

}  // namespace npc
