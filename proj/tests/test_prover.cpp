#include <doctest.h>

#include "npc/generate.hpp"
#include "npc/parse.hpp"
#include "npc/prover.hpp"

using namespace npc;

namespace {
Sequent seq(const std::string& text, int n = 2) { return parse_sequent(text, n); }
}

TEST_CASE("prove fixtures") {
  ProveResult r1 = prove(seq("|-1 e1"));
  REQUIRE(r1.proved());
  CHECK(r1.tree->rule == Rule::Const);
  CHECK(r1.tree->premises.empty());

  ProveResult r2 = prove(seq("|-1 X, X^[2,1]"));
  REQUIRE(r2.proved());
  CHECK(r2.tree->rule == Rule::Neg3);
  CHECK(check(*r2.tree).ok);
  CHECK_FALSE(r2.tree->uses_rule(Rule::Cut));

  ProveResult r3 = prove(seq("|-1 X"));
  REQUIRE(r3.refuted());
  CHECK(*r3.witness == Environment{{"X", 2}});
}

TEST_CASE("decompose picks the leftmost compound, left before right") {
  Decomposition d = decompose(seq("q(X, e1, e2) |-1"));
  CHECK(d.rule == Rule::QL);
  REQUIRE(d.premises.size() == 2);
  CHECK(d.premises[0] == seq("X, e1 |-1"));
  CHECK(d.premises[1] == seq("X, e1 |-2"));  // branch 2 premise carries G_2^(21) = e1

  Decomposition dr = decompose(seq("|-1 q(X, e1, e2)"));
  CHECK(dr.rule == Rule::QR);
  CHECK(dr.premises.size() == 2);

  // Left context compounds take precedence over right ones.
  Decomposition dl = decompose(seq("q(X, e1, e1) |-1 q(Y, e2, e2)"));
  CHECK(dl.rule == Rule::QL);

  CHECK_THROWS_AS(decompose(seq("X |-1 Y")), std::invalid_argument);
}

TEST_CASE("atomic verdict classification") {
  CHECK(atomic_verdict(seq("e2 |-1")).closure_case == AtomicCase::C1);
  CHECK(atomic_verdict(seq("|-1 e1, X")).closure_case == AtomicCase::C2);
  CHECK(atomic_verdict(seq("X, X^[2,1] |-1")).closure_case == AtomicCase::C3);
  CHECK(atomic_verdict(seq("X^[2,1] |-2 X^[2,1]")).closure_case == AtomicCase::C4);
  CHECK(atomic_verdict(seq("|-1 X, X^[2,1]")).closure_case == AtomicCase::C5);
  // Coverage needs all n trigger values, not just two.
  CHECK(atomic_verdict(seq("|-2 X, X^[2,3,1], X^[3,1,2]", 3)).closure_case == AtomicCase::C5);
  CHECK_FALSE(atomic_verdict(seq("|-2 X, X^[2,3,1]", 3)).valid);

  AtomicVerdict v = atomic_verdict(seq("X |-1 Y"));
  CHECK_FALSE(v.valid);
  CHECK(v.witness == Environment{{"X", 1}, {"Y", 2}});

  CHECK_FALSE(atomic_verdict(seq("e1 |-1")).valid);  // left e_i constrains nothing
  CHECK_FALSE(atomic_verdict(seq("|-1")).valid);

  CHECK_THROWS_AS(atomic_verdict(seq("q(X, e1, e2) |-1")), std::invalid_argument);
}

TEST_CASE("close_atomic per case") {
  ProofTree c2 = close_atomic(seq("|-1 e1, X"), AtomicCase::C2);
  CHECK(c2.conclusion == seq("|-1 e1, X"));
  CHECK(check(c2).ok);

  ProofTree c5 = close_atomic(seq("|-1 X, X^[2,1]"), AtomicCase::C5);
  CHECK(c5.rule == Rule::Neg3);
  REQUIRE(c5.premises.size() == 1);
  CHECK(c5.premises[0].rule == Rule::Id);
  CHECK(check(c5).ok);

  ProofTree c4 = close_atomic(seq("X^[2,1] |-2 X^[2,1]"), AtomicCase::C4);
  CHECK(c4.rule == Rule::Id);
  CHECK(c4.premises.empty());

  ProofTree c3 = close_atomic(seq("X, X^[2,1] |-1"), AtomicCase::C3);
  CHECK(check(c3).ok);
  CHECK(c3.rule == Rule::Neg1);

  ProofTree c1 = close_atomic(seq("e2, Y |-1 e2"), AtomicCase::C1);
  CHECK(check(c1).ok);

  // A case that does not apply raises instead of guessing.
  CHECK_THROWS_AS(close_atomic(seq("|-1 X"), AtomicCase::C2), internal_synthesis_failure);
}

TEST_CASE("qL and qR are semantically invertible") {
  Rng rng(321);
  const std::vector<std::string> vars = {"X", "Y"};
  for (int t = 0; t < 400; ++t) {
    const int n = 2 + rng.below(2);
    // Atomic base plus exactly one compound on a random side.
    Sequent base = random_sequent(rng, n, vars, 0, 2);
    Formula compound = random_formula(rng, n, vars, 1);
    while (!compound.is_q()) compound = random_formula(rng, n, vars, 1);
    Context left = base.left, right = base.right;
    if (rng.coin())
      left.insert(compound);
    else
      right.insert(compound);
    Sequent s(std::move(left), n, base.turnstile, std::move(right));

    Decomposition d = decompose(s);
    bool all_premises = true;
    for (const Sequent& p : d.premises) all_premises = all_premises && holds(p).valid;
    CHECK(holds(s).valid == all_premises);
  }
}

TEST_CASE("Neg3 is semantically invertible, which grounds the C5 closure") {
  Rng rng(654);
  const std::vector<std::string> vars = {"X", "Y"};
  for (int t = 0; t < 400; ++t) {
    const int n = 2 + rng.below(2);
    Sequent s = random_sequent(rng, n, vars, 0, 3);
    if (s.right.empty()) continue;
    RuleParams params;
    params.principal = *s.right.begin();
    std::vector<Sequent> prems = instantiate(Rule::Neg3, params, s);
    bool all = true;
    for (const Sequent& p : prems) all = all && holds(p).valid;
    CHECK(holds(s).valid == all);
  }
}

TEST_CASE("prover agrees with the oracle on a small slice") {
  FamilyConfig config;
  config.vars = {"X"};
  config.depth1_cap = 6;
  config.depth2_cap = 4;
  config.max_total = 2;
  AgreementStats stats = exhaustive_family_run(config);
  CHECK(stats.total > 500);
  CHECK(stats.clean());
  CHECK(stats.proved_valid + stats.refuted_invalid == stats.total);
}

TEST_CASE("budget exhaustion is reported, never an unsound answer") {
  ProveResult r = prove(seq("q(X, q(Y, e1, e2), q(Y, e2, e1)) |-1 q(Y, X, X^[2,1])"), 3);
  CHECK(r.status == ProveResult::Status::OutOfBudget);
  CHECK(r.steps >= 3);
  CHECK_THROWS_AS(prove(seq("|-1 e1"), 0), std::invalid_argument);
}

TEST_CASE("refutation witnesses cover variables dropped during saturation") {
  // Y occurs only in an unused branch of the compound; the witness must
  // still be total on the root's variables.
  Sequent s = seq("|-2 q(X, Y, e1)");
  ProveResult r = prove(s);
  REQUIRE(r.refuted());
  CHECK(r.witness->count("X"));
  CHECK(r.witness->count("Y"));
  bool left_ok = true;
  for (const Formula& f : s.left) left_ok = left_ok && eval(f, *r.witness) == s.turnstile;
  bool right_dodged = true;
  for (const Formula& f : s.right) right_dodged = right_dodged && eval(f, *r.witness) != s.turnstile;
  CHECK(left_ok);
  CHECK(right_dodged);
}
