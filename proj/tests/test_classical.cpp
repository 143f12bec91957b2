#include <doctest.h>

#include <functional>

#include "corpus.hpp"
#include "npc/classical.hpp"
#include "npc/generate.hpp"
#include "npc/parse.hpp"
#include "npc/prover.hpp"
#include "section5_fixtures.hpp"

using namespace npc;

TEST_CASE("classical evaluation over the value identification") {
  const PCFormula x = PCFormula::var("X");
  CHECK(pc_eval(PCFormula::one(), {}));
  CHECK_FALSE(pc_eval(PCFormula::conj(x, PCFormula::negation(x)), {{"X", 1}}));
  for (int v = 1; v <= 2; ++v)
    CHECK(pc_eval(PCFormula::disj(x, PCFormula::negation(x)), {{"X", v}}));
  CHECK_THROWS_AS(pc_eval(x, {}), unbound_variable);
}

TEST_CASE("translation into the two-dimensional calculus") {
  CHECK(to_2pc(PCFormula::negation(PCFormula::var("X"))) == Formula::var("X", Perm({2, 1})));
  CHECK(to_2pc(PCFormula::conj(PCFormula::var("X"), PCFormula::var("Y"))) ==
        parse_formula("q(X, Y, e2)", 2));
  CHECK(to_2pc(PCFormula::disj(PCFormula::var("X"), PCFormula::var("Y"))) ==
        parse_formula("q(X, e1, Y)", 2));
  CHECK(to_2pc(PCFormula::zero()) == Formula::constant(2));
  CHECK(to_2pc(PCFormula::one()) == Formula::constant(1));
}

TEST_CASE("translation back into PC") {
  CHECK(render_pc(to_pc(parse_formula("q(X, Y, Z)", 2))) == "X & Y | ~X & Z");
  CHECK(to_pc(Formula::var("X", Perm({2, 1}))) == PCFormula::negation(PCFormula::var("X")));
  CHECK(to_pc(Formula::constant(1)) == PCFormula::one());
  CHECK(to_pc(Formula::constant(2)) == PCFormula::zero());
  CHECK_THROWS_AS(to_pc(Formula::constant(3)), dimension_mismatch);
}

TEST_CASE("PC parser and printer") {
  CHECK(parse_pc("~X & Y | 0") ==
        PCFormula::disj(PCFormula::conj(PCFormula::negation(PCFormula::var("X")),
                                        PCFormula::var("Y")),
                        PCFormula::zero()));
  CHECK(parse_pc("~(X | Y)") ==
        PCFormula::negation(PCFormula::disj(PCFormula::var("X"), PCFormula::var("Y"))));
  CHECK_THROWS_AS(parse_pc("X &"), parse_error);
  CHECK_THROWS_AS(parse_pc("(X"), parse_error);

  Rng rng(4096);
  for (int t = 0; t < 3000; ++t) {
    // Round-trip through the printer, including parenthesization.
    std::function<PCFormula(int)> gen = [&](int depth) -> PCFormula {
      if (depth == 0 || rng.below(3) == 0) {
        switch (rng.below(4)) {
          case 0: return PCFormula::zero();
          case 1: return PCFormula::one();
          case 2: return PCFormula::var("X");
          default: return PCFormula::var("Y");
        }
      }
      switch (rng.below(3)) {
        case 0: return PCFormula::negation(gen(depth - 1));
        case 1: return PCFormula::conj(gen(depth - 1), gen(depth - 1));
        default: return PCFormula::disj(gen(depth - 1), gen(depth - 1));
      }
    };
    PCFormula p = gen(3);
    CHECK(parse_pc(render_pc(p)) == p);
  }
}

TEST_CASE("pc_check fixtures") {
  PCProofTree const1{PCRule::Const1, {}, PCSequent{{}, {PCFormula::one()}}, {}};
  CHECK(pc_check(const1).ok);

  CHECK(pc_check(fixtures::excluded_middle()).ok);

  PCProofTree bad_id{PCRule::Id, {}, PCSequent{{PCFormula::var("X")}, {PCFormula::var("Y")}}, {}};
  CHECK_FALSE(pc_check(bad_id).ok);

  PCProofTree const0{PCRule::Const0, {}, PCSequent{{PCFormula::zero()}, {}}, {}};
  CHECK(pc_check(const0).ok);
}

TEST_CASE("section-5 simulation derivations check on both sides") {
  ProofTree and_r = fixtures::and_r_simulation();
  CHECK(render(and_r.conclusion) == "|-1 q(e1, e1, e2)");
  CHECK(check(and_r).ok);
  CHECK(holds(and_r.conclusion).valid);

  ProofTree and_l = fixtures::and_l_simulation();
  CHECK(render(and_l.conclusion) == "q(e1, e2, e2) |-1");
  CHECK(check(and_l).ok);
  CHECK(holds(and_l.conclusion).valid);

  PCProofTree q_r = fixtures::q_r_simulation();
  CHECK(pc_check(q_r).ok);
  CHECK(pc_holds(q_r.conclusion).valid);

  PCProofTree q_l = fixtures::q_l_simulation();
  CHECK(pc_check(q_l).ok);
  CHECK(pc_holds(q_l.conclusion).valid);
}

TEST_CASE("preservation and round-trips on the shallow exhaustive corpus") {
  // All PC formulas over {0,1,X,Y} of depth <= 1, and all 2PC formulas of
  // depth <= 1 over {X,Y}; the deep corpus runs in the acceptance suite.
  std::vector<PCFormula> pc_corpus = corpus::pc_depth_le(1);
  CHECK(pc_corpus.size() == 40);

  std::vector<Formula> two_pc_corpus = corpus::two_pc_depth_le_1();
  CHECK(two_pc_corpus.size() == 222);

  RoundtripReport report = roundtrip_reports(pc_corpus, two_pc_corpus);
  INFO(report.first_failure);
  CHECK(report.pass());
  CHECK(report.pc_to_2pc_checked == 40);
  CHECK(report.two_pc_to_pc_checked == 222);
}

TEST_CASE("provability transfers through the bullet translation") {
  // Gamma |-1 Delta is provable exactly when Gamma*, Delta* is classically
  // valid, over a small exhaustive family of 2PC sequents.
  std::vector<Formula> pool = {Formula::constant(1),
                               Formula::constant(2),
                               Formula::var("X", 2),
                               Formula::var("X", Perm({2, 1})),
                               Formula::var("Y", 2),
                               parse_formula("q(X, Y, e2)", 2),
                               parse_formula("q(X, e1, Y)", 2),
                               parse_formula("q(X, Y, Y^[2,1])", 2)};
  long long checked = 0;
  for (size_t a = 0; a <= pool.size(); ++a)
    for (size_t b = 0; b <= pool.size(); ++b) {
      Context left, right;
      if (a < pool.size()) left.insert(pool[a]);
      if (b < pool.size()) right.insert(pool[b]);
      Sequent s(left, 2, 1, right);
      ProveResult r = prove(s);
      REQUIRE(r.status != ProveResult::Status::OutOfBudget);
      if (r.proved()) REQUIRE(check(*r.tree).ok);

      PCSequent translated;
      for (const Formula& f : s.left) translated.left.insert(to_pc(f));
      for (const Formula& f : s.right) translated.right.insert(to_pc(f));
      CHECK(r.proved() == pc_holds(translated).valid);
      ++checked;
    }
  CHECK(checked == 81);
}
