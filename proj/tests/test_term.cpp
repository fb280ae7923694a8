#include "doctest.h"

#include "homatch/syntax.hpp"
#include "homatch/term.hpp"

using namespace homatch;

namespace {

TermRef mk(const char* text) { return parse_term(text); }

}  // namespace

TEST_CASE("substitution hits the target index") {
  // 0[0 := \x.x] = \x.x
  TermRef id = lam(var(0));
  CHECK(term_eq(substitute(var(0), 0, id), id));
}

TEST_CASE("substitution lifts the replacement under binders") {
  // (\. 0 1)[0 := 5]  =  \. 0 6
  TermRef target = lam(app(var(0), var(1)));
  TermRef expected = lam(app(var(0), var(6)));
  CHECK(term_eq(substitute(target, 0, var(5)), expected));
}

TEST_CASE("substitution decrements indices above the target") {
  TermRef target = app(var(2), var(0));
  TermRef result = substitute(target, 0, var(7));
  CHECK(term_eq(result, app(var(1), var(7))));
}

TEST_CASE("contracting the introductory redex") {
  // (\u. \f. f u) y  ~> \f. f y   with y free at distance 0
  TermRef redex = app(mk("\\u. \\f. f u"), var(0));
  auto stepped = leftmost_step(redex);
  REQUIRE(stepped.has_value());
  // \f. f y with y now at distance 1 under the f binder
  CHECK(term_eq(*stepped, lam(app(var(0), var(1)))));
}

TEST_CASE("normalize leaves normal forms alone") {
  NormalizeResult r = normalize(mk("\\x. x"), 100);
  CHECK(r.normal);
  CHECK(r.steps == 0);
  CHECK(term_eq(r.term, lam(var(0))));
}

TEST_CASE("normalize the introductory matching example") {
  // F = \x. \y. x y I applied to M = \u. \f. f u reduces to the identity
  TermRef fm = app(mk("\\x. \\y. x y (\\i. i)"), mk("\\u. \\f. f u"));
  NormalizeResult r = normalize(fm, 1000);
  CHECK(r.normal);
  CHECK(term_eq(r.term, lam(var(0))));
}

TEST_CASE("normalize runs out of fuel on omega") {
  TermRef omega = app(mk("\\x. x x"), mk("\\x. x x"));
  NormalizeResult r = normalize(omega, 100);
  CHECK_FALSE(r.normal);
  CHECK(r.steps == 100);
  // omega steps to itself
  CHECK(term_eq(r.term, omega));
}

TEST_CASE("beta_equiv on identical and distinct normal forms") {
  CHECK(beta_equiv(mk("\\x. x"), mk("\\y. y"), 10) == Equiv::yes);
  CHECK(beta_equiv(mk("\\x. \\y. x"), mk("\\x. \\y. y"), 10) == Equiv::no);
  TermRef omega = app(mk("\\x. x x"), mk("\\x. x x"));
  CHECK(beta_equiv(omega, mk("\\x. x"), 50) == Equiv::undetermined);
}

TEST_CASE("is_normal") {
  CHECK(is_normal(mk("\\x. x")));
  CHECK_FALSE(is_normal(app(mk("\\x. x"), var(3))));
  CHECK(is_normal(mk("\\a. \\b. \\c. b")));
}

TEST_CASE("type_infer canonical types") {
  auto t = type_infer({}, mk("\\u. \\f. f u"));
  REQUIRE(t.has_value());
  // iota -> (iota -> iota) -> iota
  TypeRef expected =
      arrow(atom(), arrow(arrow(atom(), atom()), atom()));
  CHECK(type_eq(*t, expected));
  CHECK(print_type(*t) == "o -> (o -> o) -> o");
}

TEST_CASE("self-application is untypable") {
  CHECK_FALSE(type_infer({}, mk("\\x. x x")).has_value());
  CHECK_FALSE(type_infer({}, mk("\\f. \\s. (f f) s")).has_value());
}

TEST_CASE("type_check accepts every derivable instance type") {
  TermRef id = mk("\\x. x");
  CHECK(type_check({}, id, parse_type("o -> o")));
  CHECK(type_check({}, id, parse_type("(o -> o) -> o -> o")));
  CHECK_FALSE(type_check({}, id, parse_type("o -> o -> o")));
  // unused binder stays polymorphic
  TermRef konst = mk("\\x. \\y. y");
  CHECK(type_check({}, konst, parse_type("(o -> o) -> o -> o")));
  CHECK(type_check({}, konst, parse_type("o -> (o -> o) -> o -> o")));
}

TEST_CASE("type_check with an environment") {
  // distance 0 : iota, distance 1 : iota -> iota
  TypeEnv env = {atom(), arrow(atom(), atom())};
  CHECK(type_check(env, app(var(1), var(0)), atom()));
  CHECK_FALSE(type_check(env, app(var(0), var(1)), atom()));
  CHECK_FALSE(type_infer(env, var(5)).has_value());
}

TEST_CASE("type_order") {
  CHECK(type_order(atom()) == 1);
  CHECK(type_order(parse_type("o -> o")) == 2);
  TypeRef kappa6 = parse_type("o -> o -> o -> o -> o -> o -> o");
  CHECK(type_order(kappa6) == 2);
  CHECK(type_order(parse_type("(o -> o) -> o")) == 3);
  CHECK(type_order(parse_type("((o -> o) -> o) -> o")) == 4);
}

TEST_CASE("normalize agrees with iterated leftmost steps") {
  TermRef t = app(app(mk("\\x. \\y. x y y"), mk("\\a. \\b. a (a b)")),
                  app(mk("\\i. i"), mk("\\c. c")));
  TermRef by_steps = t;
  std::uint64_t count = 0;
  while (auto next = leftmost_step(by_steps)) {
    by_steps = *next;
    ++count;
  }
  NormalizeResult r = normalize(t, 1000);
  CHECK(r.normal);
  CHECK(r.steps == count);
  CHECK(term_eq(r.term, by_steps));

  // partial results agree step for step
  TermRef partial = t;
  for (std::uint64_t k = 0; k <= count; ++k) {
    NormalizeResult rk = normalize(t, k);
    CHECK(term_eq(rk.term, partial));
    CHECK(rk.steps == std::min(k, count));
    if (auto next = leftmost_step(partial)) partial = *next;
  }
}
