#include "doctest.h"

#include <random>

#include "homatch/errors.hpp"
#include "homatch/reduction.hpp"
#include "homatch/syntax.hpp"
#include "homatch/verifier.hpp"
#include "homatch/witness.hpp"
#include "support/rows.hpp"

using namespace homatch;

namespace {

const Ssts kExample3{3, {Rule{0, 0, 2, 2}, Rule{0, 2, 1, 1}, Rule{2, 0, 1, 1}}};
const Ssts kTiny{2, {Rule{0, 0, 1, 1}}};
const Derivation kExampleSteps = {{1, 2}, {2, 1}, {3, 3}};

}  // namespace

TEST_CASE("q_term reproduces the worked example") {
  TermRef q = q_term(kExample3, kExampleSteps, 3);
  // r1 p2 (r2 p1 (r3 p3 z1)) under the Gamma_3 binder convention
  GammaEnv env = gamma_env(3, 3, 3);
  TermRef expected =
      app(app(var(env.r_distance(1)), var(env.p_distance(2))),
          app(app(var(env.r_distance(2)), var(env.p_distance(1))),
              app(app(var(env.r_distance(3)), var(env.p_distance(3))),
                  var(env.z1_distance()))));
  CHECK(term_eq(q, expected));
  CHECK(classify_shape(q, 3, 3) == ShapeClass::in_q(3));
}

TEST_CASE("empty derivation yields z1") {
  TermRef q = q_term(kExample3, {}, 2);
  CHECK(term_eq(q, var(gamma_env(2, 3, 3).z1_distance())));
  CHECK(classify_shape(q, 2, 3) == ShapeClass::in_q(2));
}

TEST_CASE("q_term rejects out-of-range steps") {
  CHECK_THROWS_AS(q_term(kExample3, {{4, 1}}, 3), StepOutOfRangeError);
  CHECK_THROWS_AS(q_term(kExample3, {{1, 4}}, 3), StepOutOfRangeError);
  CHECK_THROWS_AS(q_term(kExample3, {{0, 1}}, 3), StepOutOfRangeError);
}

TEST_CASE("r_term builds the expansion layers of the example") {
  TermRef q = q_term(kExample3, kExampleSteps, 3);
  TermRef r = r_term(3, q);
  // z* p1 (\p2. z* p2 (\p3. z0 p3 N))
  GammaEnv e1 = gamma_env(1, 3, 3);
  REQUIRE(r->tag() == Term::Tag::app);
  CHECK(r->fun()->fun()->index() == e1.zstar_distance());
  CHECK(r->fun()->arg()->index() == e1.p_distance(1));
  CHECK(classify_shape(r, 1, 3) == ShapeClass::in_r(1));

  // n = 1 degenerates to z0 p1 q
  TermRef q1 = q_term(kTiny, {{1, 1}}, 1);
  TermRef r1 = r_term(1, q1);
  GammaEnv t1 = gamma_env(1, 1, 2);
  CHECK(term_eq(r1, app(app(var(t1.z0_distance()), var(t1.p_distance(1))), q1)));
  CHECK(classify_shape(r1, 1, 1) == ShapeClass::in_r(1));
}

TEST_CASE("solution_term matches the minimal witness") {
  TermRef sol = solution_term(kTiny, 1, {{1, 1}});
  // \r1. \z0. \z1. \z*. \p1. z0 p1 (r1 p1 z1)
  CHECK(term_eq(sol, parse_term(
                         "\\r1. \\z0. \\z1. \\zs. \\p1. z0 p1 (r1 p1 z1)")));
  CHECK(type_check({}, sol, sigma_type(kTiny)));
  CHECK(sol->closed());
}

TEST_CASE("solution_term types at sigma for the worked example") {
  TermRef sol = solution_term(kExample3, 3, kExampleSteps);
  CHECK(type_check({}, sol, sigma_type(kExample3)));
  CHECK(verify_solution(compile(kExample3), sol).ok());
}

TEST_CASE("solution_term rejects non-witness derivations") {
  CHECK_THROWS_AS(solution_term(kTiny, 2, {{1, 1}}), InvalidWitnessError);
  CHECK_THROWS_AS(solution_term(kExample3, 3, {}), InvalidWitnessError);
}

TEST_CASE("classify_shape accepts the eta-expanded position production") {
  GammaEnv env = gamma_env(2, 1, 2);
  // r1 (\w. p2 w) z1
  TermRef eta = app(app(var(env.r_distance(1)),
                        lam(app(var(env.p_distance(2) + 1), var(0)))),
                    var(env.z1_distance()));
  CHECK(classify_shape(eta, 2, 1) == ShapeClass::in_q(2));
}

TEST_CASE("classify_shape rejects foreign terms") {
  CHECK(classify_shape(lam(var(0)), 1, 1) == ShapeClass::neither());
  CHECK(classify_shape(var(0), 1, 1) == ShapeClass::neither());
  GammaEnv env = gamma_env(1, 1, 2);
  // z0 applied once is not a full production
  CHECK(classify_shape(app(var(env.z0_distance()), var(0)), 1, 1) ==
        ShapeClass::neither());
  // head must be a rule variable, not p
  TermRef wrong = app(app(var(env.p_distance(1)), var(0)),
                      var(env.z1_distance()));
  CHECK(classify_shape(wrong, 1, 1) == ShapeClass::neither());
}

TEST_CASE("round trip over random systems") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> alpha(2, 4);
  std::uniform_int_distribution<std::size_t> count(1, 3);
  int verified = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Ssts system;
    system.alphabet_size = alpha(rng);
    std::uniform_int_distribution<Symbol> sym(
        0, static_cast<Symbol>(system.alphabet_size - 1));
    std::size_t rules = count(rng);
    for (std::size_t i = 0; i < rules; ++i)
      system.rules.push_back(Rule{sym(rng), sym(rng), sym(rng), sym(rng)});

    for (std::size_t len = 2; len <= 5; ++len) {
      auto d = decide_for_n(system, len);
      if (!d) continue;
      std::size_t n = len - 1;
      TermRef sol = solution_term(system, n, *d);
      CHECK(verify_solution(compile(system), sol).ok());
      TermRef q = q_term(system, *d, n);
      CHECK(classify_shape(q, n, system.rule_count()) == ShapeClass::in_q(n));
      CHECK(classify_shape(r_term(n, q), 1, system.rule_count()) ==
            ShapeClass::in_r(1));
      ++verified;
    }
  }
  CHECK(verified >= 10);
}

TEST_CASE("Q-term semantics read back the starting word") {
  // every suffix of the worked derivation starts at the corresponding
  // intermediate word; its rows must evaluate to that word's projections
  Word w = Word(4, 0);
  Derivation steps = kExampleSteps;
  for (std::size_t drop = 0; drop <= steps.size(); ++drop) {
    Derivation suffix(steps.begin() + static_cast<long>(drop), steps.end());
    TermRef q = q_term(kExample3, suffix, 3);
    // row 0: all-bullet evaluation must give pi_1
    CHECK(term_eq(testrows::g_row_eval(kExample3, q, 3, 0),
                  pi_term(ExtSymbol::base(1), 3)));
    for (std::size_t i = 1; i <= 4; ++i) {
      TermRef expected = pi_term(ExtSymbol::base(w[i - 1]), 3);
      CHECK(term_eq(testrows::g_row_eval(kExample3, q, 3, i), expected));
    }
    if (drop < steps.size()) {
      const Step& s = steps[drop];
      w = apply_step(w, kExample3.rules[s.rule - 1], s.position).word;
    }
  }
}
