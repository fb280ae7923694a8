#pragma once
// Solution terms from rewriting derivations: the Q-level terms encoding
// rule applications, the R-level terms encoding word expansion and
// initialization, their lambda-closure, and membership checking for the
// two term families.

#include <cstddef>

#include "homatch/ssts.hpp"
#include "homatch/term.hpp"

namespace homatch {

struct ShapeClass {
  enum class Kind { in_q, in_r, neither };
  Kind kind = Kind::neither;
  std::size_t m = 0;  // level, meaningful for in_q / in_r

  static ShapeClass in_q(std::size_t m) { return {Kind::in_q, m}; }
  static ShapeClass in_r(std::size_t m) { return {Kind::in_r, m}; }
  static ShapeClass neither() { return {Kind::neither, 0}; }
  bool operator==(const ShapeClass&) const = default;
};

// Fold of a derivation into r_i p_j applications, outermost-first, ending
// in z_1. Valid for word length m+1: every step needs rule <= L and
// position <= m. Throws StepOutOfRangeError otherwise.
TermRef q_term(const Ssts& system, const Derivation& derivation,
               std::size_t m);

// Expansion layers z_star p_1 (\p_2. ... z_0 p_n q) around a Q-term built
// for level n; for n = 1 just z_0 p_1 q. The result lives at level 1.
TermRef r_term(std::size_t n, const TermRef& q);

// Lambda-closure of r_term(n, q_term(derivation, n)) under the canonical
// binder order; typed at the compiled sigma. Throws InvalidWitnessError
// unless the derivation rewrites 0^{n+1} to 1^{n+1}.
TermRef solution_term(const Ssts& system, std::size_t n,
                      const Derivation& derivation);

// Structural membership in Q_m / R_m under the Gamma_m binder convention
// with L rules. Accepts both the plain and the eta-expanded position
// production.
ShapeClass classify_shape(const TermRef& term, std::size_t m, std::size_t L);

}  // namespace homatch
