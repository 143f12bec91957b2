#pragma once

// Closed instances of the classical-simulation derivations: the conjunction
// rules replayed inside the two-dimensional calculus, and the q rules
// replayed inside PC. The open hypothesis leaves are instantiated with
// provable sequents (X,Y := e1/e2 on the 2PC side, Y := X and Z := ~X on the
// PC side) so the displayed rule skeletons close end to end.

#include "npc/classical.hpp"
#include "npc/derive.hpp"

namespace npc::fixtures {

/// |-1 q(e1, e1, e2): the AndR simulation, via qR over Const/Neg1/weakening.
inline ProofTree and_r_simulation() {
  const Formula e1 = Formula::constant(1);
  const Formula e2 = Formula::constant(2);
  const Formula goal = Formula::q(e1, {e1, e2});

  ProofTree j1 = weak_plus(axiom_const(2, 1), Context{e1}, {});  // e1 |-1 e1

  RuleParams neg;  // e1 |-2 from |-1 e1
  neg.i = 1;
  neg.k = 2;
  neg.principal = e1;
  ProofTree drop{Rule::Neg1, neg, Sequent({e1}, 2, 2, {}), {axiom_const(2, 1)}};
  ProofTree j2 = weak_plus(std::move(drop), {}, Context{e1});  // e1 |-2 e1

  RuleParams qr;
  qr.principal = goal;
  return ProofTree{Rule::QR, qr, Sequent({}, 2, 1, {goal}), {std::move(j1), std::move(j2)}};
}

/// q(e1, e2, e2) |-1: the AndL simulation, via qL over Const/Neg1/weakening.
inline ProofTree and_l_simulation() {
  const Formula e1 = Formula::constant(1);
  const Formula e2 = Formula::constant(2);
  const Formula goal = Formula::q(e1, {e2, e2});

  ProofTree j1 = weak_plus(derive_const_left(2, 1, 2), Context{e1}, {});  // e1, e2 |-1
  ProofTree j2 = weak_plus(derive_const_left(1, 2, 2), Context{e1}, {});  // e1, e1 |-2

  RuleParams ql;
  ql.principal = goal;
  return ProofTree{Rule::QL, ql, Sequent({goal}, 2, 1, {}), {std::move(j1), std::move(j2)}};
}

inline PCProofTree pc_id(const PCFormula& p) {
  return PCProofTree{PCRule::Id, {}, PCSequent{{p}, {p}}, {}};
}

/// |- X | ~X, the excluded-middle subproof.
inline PCProofTree excluded_middle() {
  const PCFormula x = PCFormula::var("X");
  const PCFormula not_x = PCFormula::negation(x);
  const PCFormula em = PCFormula::disj(x, not_x);

  PCRuleParams not_r;
  not_r.principal = not_x;
  PCProofTree step1{PCRule::NotR, not_r, PCSequent{{}, {x, not_x}}, {pc_id(x)}};

  PCRuleParams or_r;
  or_r.principal = em;
  return PCProofTree{PCRule::OrR, or_r, PCSequent{{}, {em}}, {std::move(step1)}};
}

/// |- (X & X) | (~X & ~X): the qR simulation, closed with Y := X, Z := ~X.
/// Keeps the displayed skeleton: Cut on X | ~X, OrL on the left premise,
/// AndR + weakening + OrR in the branches.
inline PCProofTree q_r_simulation() {
  const PCFormula x = PCFormula::var("X");
  const PCFormula not_x = PCFormula::negation(x);
  const PCFormula em = PCFormula::disj(x, not_x);
  const PCFormula a1 = PCFormula::conj(x, x);
  const PCFormula a2 = PCFormula::conj(not_x, not_x);
  const PCFormula goal = PCFormula::disj(a1, a2);

  auto branch = [&](const PCFormula& hyp, const PCFormula& conj, const PCFormula& other) {
    PCRuleParams and_r;
    and_r.principal = conj;
    PCProofTree both{PCRule::AndR, and_r, PCSequent{{hyp}, {conj}}, {pc_id(hyp), pc_id(hyp)}};
    PCRuleParams weak;
    weak.principal = other;
    PCProofTree widened{PCRule::WeakR, weak, PCSequent{{hyp}, {conj, other}}, {std::move(both)}};
    PCRuleParams or_r;
    or_r.principal = goal;
    return PCProofTree{PCRule::OrR, or_r, PCSequent{{hyp}, {goal}}, {std::move(widened)}};
  };

  PCRuleParams or_l;
  or_l.principal = em;
  PCProofTree left_prem{PCRule::OrL, or_l, PCSequent{{em}, {goal}},
                        {branch(x, a1, a2), branch(not_x, a2, a1)}};

  PCRuleParams weak;
  weak.principal = goal;
  PCProofTree right_prem{PCRule::WeakR, weak, PCSequent{{}, {em, goal}}, {excluded_middle()}};

  PCRuleParams cut;
  cut.cut = em;
  return PCProofTree{PCRule::Cut, cut, PCSequent{{}, {goal}},
                     {std::move(left_prem), std::move(right_prem)}};
}

/// (X & ~X) | (~X & X) |- : the qL simulation, closed with Y := ~X, Z := X.
inline PCProofTree q_l_simulation() {
  const PCFormula x = PCFormula::var("X");
  const PCFormula not_x = PCFormula::negation(x);
  const PCFormula c1 = PCFormula::conj(x, not_x);
  const PCFormula c2 = PCFormula::conj(not_x, x);
  const PCFormula goal = PCFormula::disj(c1, c2);

  auto clash = [&](const PCFormula& conj) {
    PCRuleParams not_l;
    not_l.principal = not_x;
    PCProofTree contradiction{PCRule::NotL, not_l, PCSequent{{x, not_x}, {}}, {pc_id(x)}};
    PCRuleParams and_l;
    and_l.principal = conj;
    return PCProofTree{PCRule::AndL, and_l, PCSequent{{conj}, {}}, {std::move(contradiction)}};
  };

  PCRuleParams or_l;
  or_l.principal = goal;
  return PCProofTree{PCRule::OrL, or_l, PCSequent{{goal}, {}}, {clash(c1), clash(c2)}};
}

}  // namespace npc::fixtures
