#include <doctest.h>

#include "npc/generate.hpp"
#include "npc/parse.hpp"

using namespace npc;

TEST_CASE("permutation composition follows (pi o rho)(x) = pi(rho(x))") {
  CHECK(compose(Perm({2, 1}), Perm({2, 1})) == Perm::identity(2));
  Perm cycle({2, 3, 1});
  CHECK(compose(cycle, cycle.inverse()) == Perm::identity(3));
  // Hand-composed: rho = [1,3,2], pi = [2,1,3]; 1->2, 2->3, 3->1.
  CHECK(compose(Perm({2, 1, 3}), Perm({1, 3, 2})) == Perm({2, 3, 1}));
  CHECK_THROWS_AS(compose(Perm({2, 1}), Perm({1, 2, 3})), dimension_mismatch);
}

TEST_CASE("permutation inversion") {
  CHECK(Perm({1, 2}).inverse() == Perm({1, 2}));
  CHECK(Perm({2, 1}).inverse() == Perm({2, 1}));
  CHECK(Perm({2, 3, 1}).inverse() == Perm({3, 1, 2}));
  CHECK(compose(Perm({2, 3, 1}), Perm({2, 3, 1}).inverse()) == Perm::identity(3));
}

TEST_CASE("exchanges") {
  CHECK(Perm::exchange(1, 2, 3) == Perm({2, 1, 3}));
  CHECK(Perm::exchange(2, 2, 2) == Perm::identity(2));
  CHECK(Perm::exchange(1, 3, 3) == Perm({3, 2, 1}));
  CHECK_THROWS_AS(Perm::exchange(0, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(Perm::exchange(1, 4, 3), std::invalid_argument);
}

TEST_CASE("permutation rejects non-bijections") {
  CHECK_THROWS_AS(Perm({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Perm({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Perm({3, 1}), std::invalid_argument);
}

TEST_CASE("action on formulas") {
  const Formula x_id = Formula::var("X", 2);
  CHECK(act(x_id, Perm({2, 1})) == Formula::var("X", Perm({2, 1})));
  CHECK(act(Formula::constant(2), Perm::exchange(2, 3, 3)) == Formula::constant(3));
  // The test position is left alone; the branches move.
  const Formula q = Formula::q(x_id, {Formula::constant(1), Formula::constant(2)});
  CHECK(act(q, Perm({2, 1})) ==
        Formula::q(x_id, {Formula::constant(2), Formula::constant(1)}));
  CHECK_THROWS_AS(act(Formula::constant(3), Perm({2, 1})), dimension_mismatch);
}

TEST_CASE("context action preserves multiplicity") {
  Context empty;
  CHECK(act_ctx(empty, Perm({2, 1})) == empty);
  Context two{Formula::constant(1), Formula::constant(1)};
  Context expect{Formula::constant(2), Formula::constant(2)};
  CHECK(act_ctx(two, Perm({2, 1})) == expect);
  Context mixed{Formula::var("X", 2), Formula::constant(2)};
  Context mixed_out{Formula::var("X", Perm({2, 1})), Formula::constant(1)};
  CHECK(act_ctx(mixed, Perm({2, 1})) == mixed_out);
}

TEST_CASE("parser fixtures") {
  CHECK(parse_formula("e1", 2) == Formula::constant(1));
  CHECK(parse_formula("q(X, e2, e1)", 2) ==
        Formula::q(Formula::var("X", 2), {Formula::constant(2), Formula::constant(1)}));
  Sequent s = parse_sequent("X^[2,1] |-2 X^[2,1]", 2);
  CHECK(s.turnstile == 2);
  CHECK(s.left == Context{Formula::var("X", Perm({2, 1}))});
  CHECK(s.right == Context{Formula::var("X", Perm({2, 1}))});
  CHECK(parse_sequent("|-1", 2) == Sequent({}, 2, 1, {}));
  CHECK(parse_sequent("  e1 ,e2|-2   X ", 2) ==
        Sequent({Formula::constant(1), Formula::constant(2)}, 2, 2, {Formula::var("X", 2)}));
}

TEST_CASE("parser error positions and guards") {
  CHECK_THROWS_AS(parse_formula("q(X, e1)", 2), parse_error);        // arity != n+1
  CHECK_THROWS_AS(parse_formula("e3", 2), parse_error);              // constant index > n
  CHECK_THROWS_AS(parse_formula("X^[1,1]", 2), parse_error);         // not a bijection
  CHECK_THROWS_AS(parse_formula("X^[1,2,3]", 2), parse_error);       // wrong decoration size
  CHECK_THROWS_AS(parse_formula("q(X, e1, e2", 2), parse_error);     // unclosed
  CHECK_THROWS_AS(parse_formula("", 2), parse_error);
  CHECK_THROWS_AS(parse_formula("X Y", 2), parse_error);             // trailing input
  CHECK_THROWS_AS(parse_sequent("X |- Y", 2), parse_error);          // missing dimension
  CHECK_THROWS_AS(parse_sequent("X |-3 Y", 2), parse_error);         // dimension out of range
  try {
    parse_formula("q(X, e1, e9)", 2);
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(e.position() == 9);
  }
}

TEST_CASE("renderer elides identity decorations") {
  CHECK(render(Formula::constant(1)) == "e1");
  CHECK(render(Formula::var("X", Perm({2, 1}))) == "X^[2,1]");
  CHECK(render(Formula::var("X", 2)) == "X");
  CHECK(render(parse_sequent("X,e1 |-2 q(Y,e1,e2)", 2)) == "e1, X |-2 q(Y, e1, e2)");
}

TEST_CASE("parse/render round-trip on a generated corpus") {
  Rng rng(20240811);
  const std::vector<std::string> vars = {"X", "Y", "Zed", "u'"};
  for (int t = 0; t < 10000; ++t) {
    const int n = 2 + rng.below(3);
    Formula f = random_formula(rng, n, vars, 3);
    CHECK(parse_formula(render(f), n) == f);
  }
  for (int t = 0; t < 2000; ++t) {
    const int n = 2 + rng.below(3);
    Sequent s = random_sequent(rng, n, vars, 2, 3);
    CHECK(parse_sequent(render(s), n) == s);
  }
}

TEST_CASE("action laws: functoriality, identity, involution, size preservation") {
  Rng rng(7);
  const std::vector<std::string> vars = {"X", "Y"};
  for (int t = 0; t < 10000; ++t) {
    const int n = 2 + rng.below(3);
    Formula f = random_formula(rng, n, vars, 3);
    Perm pi = random_perm(rng, n);
    Perm rho = random_perm(rng, n);
    CHECK(act(act(f, pi), rho) == act(f, compose(rho, pi)));
    CHECK(act(f, Perm::identity(n)) == f);
    const int i = rng.range(1, n), j = rng.range(1, n);
    CHECK(act_exchange(act_exchange(f, i, j, n), i, j, n) == f);
    CHECK(act(f, pi).depth() == f.depth());
  }
}

TEST_CASE("canonical multiset ordering is stable and total") {
  Context c;
  c.insert(Formula::var("Y", 2));
  c.insert(Formula::constant(2));
  c.insert(Formula::var("X", Perm({2, 1})));
  c.insert(Formula::constant(1));
  c.insert(Formula::var("X", 2));
  c.insert(Formula::q(Formula::var("X", 2), {Formula::constant(1), Formula::constant(2)}));
  CHECK(render(c) == "e1, e2, X, X^[2,1], Y, q(X, e1, e2)");
  CHECK(c.count(Formula::constant(1)) == 1);
  Context c2 = c.with(Formula::constant(1));
  CHECK(c2.count(Formula::constant(1)) == 2);
  CHECK(c2.without(Formula::constant(1)) == c);
}
