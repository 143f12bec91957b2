#include <doctest.h>

#include "npc/generate.hpp"
#include "npc/parse.hpp"
#include "npc/semantics.hpp"

using namespace npc;

TEST_CASE("evaluation clauses") {
  CHECK(eval(Formula::var("X", Perm({2, 1})), {{"X", 1}}) == 2);
  CHECK(eval(parse_formula("q(e2, e3, e1, e2)", 3), {}) == 1);
  CHECK(eval(parse_formula("q(X, e2, e1)", 2), {{"X", 2}}) == 1);
  CHECK_THROWS_AS(eval(Formula::var("X", 2), {}), unbound_variable);
}

TEST_CASE("environment enumeration is lexicographic") {
  EnvEnumerator none({}, 2);
  CHECK(none.size() == 1);
  CHECK(none.at(0).empty());

  EnvEnumerator one({"X"}, 3);
  CHECK(one.size() == 3);
  CHECK(one.at(0) == Environment{{"X", 1}});
  CHECK(one.at(2) == Environment{{"X", 3}});

  EnvEnumerator two({"X", "Y"}, 2);
  CHECK(two.size() == 4);
  CHECK(two.at(0) == Environment{{"X", 1}, {"Y", 1}});
  CHECK(two.at(1) == Environment{{"X", 1}, {"Y", 2}});
  CHECK(two.at(3) == Environment{{"X", 2}, {"Y", 2}});

  std::set<std::string> many;
  for (int t = 0; t < 30; ++t) many.insert("v" + std::to_string(t));
  CHECK_THROWS_AS(EnvEnumerator(many, 3), explosion_guard_error);
}

TEST_CASE("i-logical consequence by enumeration") {
  const Formula x = Formula::var("X", 2);
  CHECK(holds(Context{x}, 1, Context{x}, 2).valid);
  // Excluded middle across the exchange.
  CHECK(holds({}, 1, Context{x, Formula::var("X", Perm({2, 1}))}, 2).valid);
  Verdict v = holds({}, 1, Context{x, Formula::var("Y", Perm({2, 1}))}, 2);
  CHECK_FALSE(v.valid);
  CHECK(*v.witness == Environment{{"X", 2}, {"Y", 1}});
}

TEST_CASE("semantic equivalence fixtures") {
  const Formula x = Formula::var("X", 2);
  CHECK(equivalent(x, x, 2));
  CHECK(equivalent(parse_formula("q(X, e1, e2)", 2), x, 2));
  CHECK(equivalent(Formula::var("X", Perm({2, 1})), parse_formula("q(X, e2, e1)", 2), 2));
  CHECK_FALSE(equivalent(x, Formula::var("Y", 2), 2));
}

TEST_CASE("exchange symmetry of evaluation") {
  Rng rng(42);
  const std::vector<std::string> vars = {"X", "Y"};
  for (int t = 0; t < 10000; ++t) {
    const int n = 2 + rng.below(3);
    Formula f = random_formula(rng, n, vars, 3);
    Environment v;
    for (const std::string& name : vars) v[name] = rng.range(1, n);
    const int i = rng.range(1, n), j = rng.range(1, n);
    const int value = eval(f, v);
    const int exchanged = eval(act_exchange(f, i, j, n), v);
    CHECK((value == i) == (exchanged == j));
    // And the full biconditional through the exchange itself.
    CHECK(exchanged == Perm::exchange(i, j, n)(value));
  }
}

TEST_CASE("evaluation depends only on occurring variables") {
  Rng rng(43);
  for (int t = 0; t < 2000; ++t) {
    const int n = 2 + rng.below(2);
    Formula f = random_formula(rng, n, {"X", "Y"}, 2);
    Environment v;
    v["X"] = rng.range(1, n);
    v["Y"] = rng.range(1, n);
    Environment perturbed = v;
    perturbed["Unrelated"] = rng.range(1, n);
    perturbed["Z'"] = rng.range(1, n);
    CHECK(eval(f, v) == eval(f, perturbed));
  }
}

TEST_CASE("consequence is monotone under weakening") {
  Rng rng(44);
  const std::vector<std::string> vars = {"X", "Y"};
  int valid_seen = 0;
  for (int t = 0; t < 4000; ++t) {
    const int n = 2;
    Sequent s = random_sequent(rng, n, vars, 1, 2);
    if (!holds(s).valid) continue;
    ++valid_seen;
    Formula extra = random_formula(rng, n, vars, 1);
    CHECK(holds(s.left, s.turnstile, s.right.with(extra), n).valid);
    CHECK(holds(s.left.with(extra), s.turnstile, s.right, n).valid);
  }
  CHECK(valid_seen > 100);
}

TEST_CASE("equivalence is a congruence for q") {
  // Swap equivalent subformulas into a random argument position.
  Rng rng(45);
  const std::vector<std::string> vars = {"X", "Y"};
  std::vector<std::pair<Formula, Formula>> pairs;
  pairs.emplace_back(parse_formula("q(X, e1, e2)", 2), parse_formula("X", 2));
  pairs.emplace_back(parse_formula("X^[2,1]", 2), parse_formula("q(X, e2, e1)", 2));
  pairs.emplace_back(parse_formula("q(Y, Y, Y)", 2), parse_formula("Y", 2));
  for (int t = 0; t < 2000; ++t) {
    const auto& [f, g] = pairs[static_cast<size_t>(rng.below(static_cast<int>(pairs.size())))];
    REQUIRE(equivalent(f, g, 2));
    Formula test = random_formula(rng, 2, vars, 1);
    Formula other = random_formula(rng, 2, vars, 1);
    const int slot = rng.below(3);
    auto build = [&](const Formula& h) {
      if (slot == 0) return Formula::q(h, {test, other});
      if (slot == 1) return Formula::q(test, {h, other});
      return Formula::q(test, {other, h});
    };
    CHECK(equivalent(build(f), build(g), 2));
  }
}

TEST_CASE("environment text format") {
  Environment v{{"X", 2}, {"Y", 1}};
  CHECK(render_env(v) == "X=2,Y=1");
  CHECK(parse_env("X=2, Y=1", 2) == v);
  CHECK(parse_env("", 2).empty());
  CHECK_THROWS_AS(parse_env("X=5", 2), std::invalid_argument);
  CHECK_THROWS_AS(parse_env("X", 2), std::invalid_argument);
}
