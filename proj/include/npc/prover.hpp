#pragma once

#include "npc/derive.hpp"
#include "npc/semantics.hpp"

namespace npc {

/// Raised if proof synthesis would return a tree that fails the kernel or a
/// witness that does not falsify the goal. Indicates a prover bug; the
/// prover never returns an unsound answer.
class internal_synthesis_failure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Closure cases for valid atomic sequents:
///   C1  a left constant e_k with k != i (antecedent unsatisfiable)
///   C2  e_i on the right
///   C3  two left occurrences X^pi, X^sigma with pi^-1(i) != sigma^-1(i)
///   C4  left X^pi and right X^rho with pi^-1(i) = rho^-1(i)
///   C5  a left-unconstrained variable whose right occurrences cover all n values
enum class AtomicCase { C1, C2, C3, C4, C5 };

const char* atomic_case_name(AtomicCase c);

struct AtomicVerdict {
  bool valid = false;
  AtomicCase closure_case = AtomicCase::C1;
  Environment witness;  // meaningful when invalid
};

/// Classifies an atomic sequent by constraint analysis. Invalid verdicts
/// carry the first environment meeting all left constraints and dodging
/// every right atom. Throws std::invalid_argument on non-atomic input.
AtomicVerdict atomic_verdict(const Sequent& s);

/// Builds a kernel-checked proof of a valid atomic sequent, by the case it
/// was classified under. The returned tree is re-checked before return;
/// internal_synthesis_failure is raised rather than ever returning an
/// unchecked tree.
ProofTree close_atomic(const Sequent& s, AtomicCase c);

struct Decomposition {
  Rule rule = Rule::QL;
  RuleParams params;
  std::vector<Sequent> premises;
};

/// Selects the leftmost q-compound (left context before right) as principal
/// and returns the qL or qR instance with its n premises, exactly as
/// instantiate computes them.
Decomposition decompose(const Sequent& s);

struct ProveResult {
  enum class Status { Proved, Refuted, OutOfBudget };
  Status status = Status::OutOfBudget;
  std::optional<ProofTree> tree;       // Proved
  std::optional<Environment> witness;  // Refuted
  long steps = 0;

  bool proved() const { return status == Status::Proved; }
  bool refuted() const { return status == Status::Refuted; }
};

inline constexpr long kDefaultBudget = 100000;

/// Decision procedure: root-first qL/qR saturation (both are invertible)
/// followed by atomic closure. Proved trees are cut-free, conclude s, and
/// are re-checked by the kernel before return; Refuted witnesses are
/// re-validated against s under eval before return.
ProveResult prove(const Sequent& s, long budget = kDefaultBudget);

}  // namespace npc
