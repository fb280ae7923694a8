#include "doctest.h"

#include <set>
#include <string>

#include "homatch/solver.hpp"
#include "homatch/syntax.hpp"
#include "homatch/verifier.hpp"
#include "homatch/witness.hpp"

using namespace homatch;

namespace {

const Ssts kTiny{2, {Rule{0, 0, 1, 1}}};

}  // namespace

TEST_CASE("identity is the only small inhabitant of o -> o") {
  EnumBudget budget;
  budget.max_size = 2;
  EnumResult r = enumerate_normal_inhabitants({}, parse_type("o -> o"), budget);
  CHECK(r.complete);
  REQUIRE(r.terms.size() == 1);
  CHECK(term_eq(r.terms[0], lam(var(0))));
}

TEST_CASE("kappa at alphabet six has exactly the six projections") {
  TypeRef k = kappa(2);  // |A| = 6
  EnumBudget budget;
  budget.max_size = 7;
  EnumResult r = enumerate_normal_inhabitants({}, k, budget);
  CHECK(r.complete);
  REQUIRE(r.terms.size() == 6);
  std::set<std::string> seen;
  for (const TermRef& t : r.terms) {
    CHECK(t->closed());
    CHECK(is_normal(t));
    CHECK(type_check({}, t, k));
    seen.insert(print_term(t, TermStyle::indexed));
  }
  CHECK(seen.size() == 6);
  for (std::size_t i = 0; i < 6; ++i)
    CHECK(seen.contains(print_term(pi_term(ExtSymbol::from_index(i, 2), 2),
                                   TermStyle::indexed)));
}

TEST_CASE("the ground atom has no closed inhabitant") {
  EnumBudget budget;
  budget.max_size = 30;
  EnumResult r = enumerate_normal_inhabitants({}, atom(), budget);
  CHECK(r.complete);
  CHECK(r.terms.empty());
}

TEST_CASE("exact small-type counts for o -> o -> o") {
  EnumBudget budget;
  budget.max_size = 3;
  EnumResult r =
      enumerate_normal_inhabitants({}, parse_type("o -> o -> o"), budget);
  CHECK(r.complete);
  REQUIRE(r.terms.size() == 2);
  // the two projections, in enumeration order
  CHECK(term_eq(r.terms[0], lam(lam(var(0)))));
  CHECK(term_eq(r.terms[1], lam(lam(var(1)))));
}

TEST_CASE("enumerated terms are sound and pairwise distinct") {
  // distance 0 : o -> o, distance 1 : o
  TypeEnv env = {arrow(atom(), atom()), atom()};
  EnumBudget budget;
  budget.max_size = 8;
  EnumResult r = enumerate_normal_inhabitants(env, atom(), budget);
  CHECK(r.complete);
  CHECK(!r.terms.empty());
  std::set<std::string> seen;
  std::uint32_t last_size = 0;
  for (const TermRef& t : r.terms) {
    CHECK(is_normal(t));
    CHECK(type_check(env, t, atom()));
    CHECK(t->size() >= last_size);  // size-ordered stream
    last_size = t->size();
    CHECK(seen.insert(print_term(t, TermStyle::indexed)).second);
  }
  // f^k applied to the atom variable: sizes 1, 3, 5, 7
  CHECK(r.terms.size() == 4);
}

TEST_CASE("max_count truncation is reported") {
  EnumBudget budget;
  budget.max_size = 12;
  budget.max_count = 3;
  TypeEnv env = {arrow(atom(), atom()), atom()};
  EnumResult r = enumerate_normal_inhabitants(env, atom(), budget);
  CHECK_FALSE(r.complete);
  CHECK(r.terms.size() == 3);
}

TEST_CASE("solve_bounded finds the identity instance") {
  MatchingInstance inst;
  inst.F = parse_term("\\x. x");
  inst.N = parse_term("\\x. x");
  inst.sigma = parse_type("o -> o");
  inst.tau = parse_type("o -> o");
  EnumBudget budget;
  budget.max_size = 6;
  SolveResult r = solve_bounded(inst, budget);
  REQUIRE(r.solution.has_value());
  CHECK(term_eq(*r.solution, lam(var(0))));
  CHECK(r.search_complete);
}

TEST_CASE("solve_bounded recovers the minimal witness") {
  MatchingInstance inst = compile(kTiny);
  EnumBudget budget;
  budget.max_size = 16;
  SolveResult r = solve_bounded(inst, budget);
  REQUIRE(r.solution.has_value());
  CHECK(verify_solution(inst, *r.solution).ok());
  CHECK(term_eq(*r.solution, solution_term(kTiny, 1, {{1, 1}})));
}

TEST_CASE("solve_bounded reports exhaustive negative coverage") {
  // no solution of size <= 12 exists for the tiny instance
  MatchingInstance inst = compile(kTiny);
  EnumBudget budget;
  budget.max_size = 12;
  SolveResult r = solve_bounded(inst, budget);
  CHECK_FALSE(r.solution.has_value());
  CHECK(r.search_complete);
  CHECK(r.candidates > 0);

  budget.max_count = 2;  // starve the candidate budget instead
  SolveResult starved = solve_bounded(inst, budget);
  CHECK_FALSE(starved.solution.has_value());
  CHECK_FALSE(starved.search_complete);
}

TEST_CASE("solver solution satisfies the same rows as the built witness") {
  MatchingInstance inst = compile(kTiny);
  EnumBudget budget;
  budget.max_size = 16;
  SolveResult r = solve_bounded(inst, budget);
  REQUIRE(r.solution.has_value());
  for (const auto& row : diagnose(kTiny, *r.solution)) CHECK(row.pass());
}
