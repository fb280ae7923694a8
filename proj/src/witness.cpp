#include "homatch/witness.hpp"

#include <string>

#include "homatch/errors.hpp"
#include "homatch/gadgets.hpp"

namespace homatch {

TermRef q_term(const Ssts& system, const Derivation& derivation,
               std::size_t m) {
  system.validate();
  GammaEnv env = gamma_env(m, system.rule_count(), system.alphabet_size);
  for (const Step& s : derivation) {
    if (s.rule < 1 || s.rule > system.rule_count())
      throw StepOutOfRangeError("rule index " + std::to_string(s.rule) +
                                " outside 1.." +
                                std::to_string(system.rule_count()));
    if (s.position < 1 || s.position > m)
      throw StepOutOfRangeError("position " + std::to_string(s.position) +
                                " outside 1.." + std::to_string(m));
  }
  // First step outermost: wrap z_1 back to front.
  TermRef t = var(env.z1_distance());
  for (auto it = derivation.rbegin(); it != derivation.rend(); ++it)
    t = app(app(var(env.r_distance(it->rule)), var(env.p_distance(it->position))),
            t);
  return t;
}

TermRef r_term(std::size_t n, const TermRef& q) {
  if (n < 1) throw std::invalid_argument("expansion level must be positive");
  // Innermost layer at level n: z_0 p_n q; above it, level m contributes
  // z_star p_m (\p_{m+1}. ...). Distances: p_m = 0, z_star = m, z_0 = m + 2.
  TermRef t = app(app(var(n + 2), var(0)), q);
  for (std::size_t m = n; m-- > 1;) t = app(app(var(m), var(0)), lam(t));
  return t;
}

TermRef solution_term(const Ssts& system, std::size_t n,
                      const Derivation& derivation) {
  system.validate();
  if (n < 1) throw std::invalid_argument("witness level must be positive");
  if (!check_derivation(system, uniform_word(0, n + 1), derivation,
                        uniform_word(1, n + 1)))
    throw InvalidWitnessError("derivation does not rewrite 0^" +
                              std::to_string(n + 1) + " to 1^" +
                              std::to_string(n + 1));
  TermRef body = r_term(n, q_term(system, derivation, n));
  return lam_n(system.rule_count() + 4, body);
}

namespace {

// p_j for some j at level m, either plain or eta-expanded (\w. p_j w).
bool is_position(const TermRef& t, std::size_t m) {
  if (t->tag() == Term::Tag::var) return t->index() < m;
  if (t->tag() == Term::Tag::lam) {
    const TermRef& b = t->body();
    return b->tag() == Term::Tag::app && b->fun()->tag() == Term::Tag::var &&
           b->fun()->index() >= 1 && b->fun()->index() <= m &&
           b->arg()->tag() == Term::Tag::var && b->arg()->index() == 0;
  }
  return false;
}

struct Spine2 {
  const Term* head = nullptr;
  TermRef first;
  TermRef second;
};

// Matches head first second for a variable head.
bool split_binary(const TermRef& t, Spine2& out) {
  if (t->tag() != Term::Tag::app) return false;
  const TermRef& f = t->fun();
  if (f->tag() != Term::Tag::app) return false;
  if (f->fun()->tag() != Term::Tag::var) return false;
  out.head = f->fun().get();
  out.first = f->arg();
  out.second = t->arg();
  return true;
}

bool in_q(const TermRef& t, std::size_t m, std::size_t L) {
  if (t->tag() == Term::Tag::var) return t->index() == m + 1;  // z_1
  Spine2 s;
  if (!split_binary(t, s)) return false;
  std::size_t head = s.head->index();
  bool is_rule = head >= m + 3 && head <= m + 2 + L;
  return is_rule && is_position(s.first, m) && in_q(s.second, m, L);
}

bool in_r(const TermRef& t, std::size_t m, std::size_t L) {
  Spine2 s;
  if (!split_binary(t, s)) return false;
  std::size_t head = s.head->index();
  if (head == m + 2)  // z_0 N M with M in Q_m, N unconstrained
    return in_q(s.second, m, L);
  if (head == m)  // z_star N (\p. M') with M' in R_{m+1}
    return s.second->tag() == Term::Tag::lam &&
           in_r(s.second->body(), m + 1, L);
  return false;
}

}  // namespace

ShapeClass classify_shape(const TermRef& term, std::size_t m, std::size_t L) {
  if (m < 1 || L < 1) return ShapeClass::neither();
  if (in_q(term, m, L)) return ShapeClass::in_q(m);
  if (in_r(term, m, L)) return ShapeClass::in_r(m);
  return ShapeClass::neither();
}

}  // namespace homatch
