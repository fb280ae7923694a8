#pragma once
// Randomized kernel property suites, shared between the unit tests and
// the acceptance runner. Each suite returns the number of cases checked
// and the number of failures; seeds are fixed for reproducibility.

#include <algorithm>
#include <cstdint>

#include "homatch/solver.hpp"
#include "homatch/term.hpp"
#include "support/gen.hpp"

namespace homatch::testprops {

struct SuiteResult {
  int cases = 0;
  int failures = 0;
  bool ok() const { return failures == 0 && cases > 0; }
};

// One leftmost step preserves the constructed type.
inline SuiteResult subject_reduction(int wanted_cases, std::uint64_t seed) {
  testgen::Rng rng(seed);
  SuiteResult out;
  while (out.cases < wanted_cases) {
    TypeRef ty = testgen::random_simple_type(rng, 3);
    auto t = testgen::random_typed_term(rng, {}, ty, 24);
    if (!t) continue;
    auto next = leftmost_step(*t);
    if (!next) continue;  // already normal, nothing to check
    ++out.cases;
    if (!type_check({}, *t, ty) || !type_check({}, *next, ty)) ++out.failures;
  }
  return out;
}

// Contracting redexes in random orders reaches the leftmost-outermost
// normal form.
inline SuiteResult confluence_sampling(int wanted_cases, std::uint64_t seed) {
  testgen::Rng rng(seed);
  SuiteResult out;
  while (out.cases < wanted_cases) {
    TypeRef ty = testgen::random_simple_type(rng, 3);
    auto t = testgen::random_typed_term(rng, {}, ty, 30);
    if (!t || (*t)->size() > 30 || is_normal(*t)) continue;
    ++out.cases;
    NormalizeResult reference = normalize(*t, 1'000'000);
    if (!reference.normal) {
      ++out.failures;
      continue;
    }
    for (int order = 0; order < 5; ++order) {
      TermRef cur = *t;
      for (int steps = 0; steps < 100'000; ++steps) {
        auto redexes = testgen::redex_paths(cur);
        if (redexes.empty()) break;
        cur = testgen::contract_at(cur,
                                   redexes[testgen::pick(rng, redexes.size())]);
      }
      if (!is_normal(cur) || !term_eq(cur, reference.term)) {
        ++out.failures;
        break;
      }
    }
  }
  return out;
}

// normalize(normalize(M)) takes zero further steps.
inline SuiteResult normalize_idempotent(int wanted_cases, std::uint64_t seed) {
  testgen::Rng rng(seed);
  SuiteResult out;
  while (out.cases < wanted_cases) {
    TypeRef ty = testgen::random_simple_type(rng, 3);
    auto t = testgen::random_typed_term(rng, {}, ty, 24);
    if (!t) continue;
    ++out.cases;
    NormalizeResult first = normalize(*t, 1'000'000);
    NormalizeResult again = normalize(first.term, 1'000'000);
    if (!first.normal || !again.normal || again.steps != 0 ||
        !term_eq(again.term, first.term))
      ++out.failures;
  }
  return out;
}

// Substitution commutes with typing: from sigma-extended |- M : tau and
// |- N : sigma, conclude |- M[0 := N] : tau.
inline SuiteResult substitution_typing(int wanted_cases, std::uint64_t seed) {
  testgen::Rng rng(seed);
  SuiteResult out;
  while (out.cases < wanted_cases) {
    TypeRef sigma = testgen::random_simple_type(rng, 2);
    TypeRef tau = testgen::random_simple_type(rng, 2);
    auto m = testgen::random_typed_term(rng, {sigma}, tau, 18);
    auto n = testgen::random_typed_term(rng, {}, sigma, 12);
    if (!m || !n) continue;
    ++out.cases;
    if (!type_check({}, substitute(*m, 0, *n), tau)) ++out.failures;
  }
  return out;
}

// beta_equiv is an equivalence relation on sampled typed terms.
inline SuiteResult equivalence_relation(int wanted_cases, std::uint64_t seed) {
  testgen::Rng rng(seed);
  SuiteResult out;
  constexpr std::uint64_t kFuel = 1'000'000;
  while (out.cases < wanted_cases) {
    TypeRef ty = testgen::random_simple_type(rng, 2);
    auto a = testgen::random_typed_term(rng, {}, ty, 18);
    if (!a) continue;
    // b and c are random reducts of a, hence equivalent to it
    auto reduce_some = [&](TermRef t) {
      for (int i = 0; i < 3; ++i) {
        auto redexes = testgen::redex_paths(t);
        if (redexes.empty()) break;
        t = testgen::contract_at(t, redexes[testgen::pick(rng, redexes.size())]);
      }
      return t;
    };
    TermRef b = reduce_some(*a);
    TermRef c = reduce_some(b);
    ++out.cases;
    bool refl = beta_equiv(*a, *a, kFuel) == Equiv::yes;
    bool sym = beta_equiv(*a, b, kFuel) == Equiv::yes &&
               beta_equiv(b, *a, kFuel) == Equiv::yes;
    bool trans = beta_equiv(*a, c, kFuel) == Equiv::yes;
    if (!refl || !sym || !trans) ++out.failures;
  }
  return out;
}

// Every enumerated inhabitant is normal, typed, and distinct; the two
// closed inhabitants of o -> o -> o at size 3 are exactly the projections.
inline SuiteResult enumerator_soundness(int wanted_cases, std::uint64_t seed) {
  testgen::Rng rng(seed);
  SuiteResult out;
  while (out.cases < wanted_cases) {
    TypeRef ty = testgen::random_simple_type(rng, 3);
    EnumBudget budget;
    budget.max_size = 10;
    budget.max_count = 200;
    EnumResult r = enumerate_normal_inhabitants({}, ty, budget);
    ++out.cases;
    bool good = true;
    for (std::size_t i = 0; i < r.terms.size(); ++i) {
      const TermRef& t = r.terms[i];
      good = good && is_normal(t) && t->closed() && type_check({}, t, ty) &&
             t->size() <= budget.max_size;
      for (std::size_t j = i + 1; j < r.terms.size() && good; ++j)
        good = good && !term_eq(t, r.terms[j]);
    }
    if (!good) ++out.failures;
  }

  EnumBudget pair_budget;
  pair_budget.max_size = 3;
  EnumResult pair = enumerate_normal_inhabitants(
      {}, arrow(atom(), arrow(atom(), atom())), pair_budget);
  ++out.cases;
  bool exact = pair.complete && pair.terms.size() == 2 &&
               term_eq(pair.terms[0], lam(lam(var(0)))) &&
               term_eq(pair.terms[1], lam(lam(var(1))));
  if (!exact) ++out.failures;
  return out;
}

}  // namespace homatch::testprops
