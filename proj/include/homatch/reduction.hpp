#pragma once
// Compiles a simple semi-Thue system into a higher-order beta-matching
// instance and exposes the five-constraint decomposition of the
// compiled equation for diagnostics.

#include <optional>
#include <string>
#include <vector>

#include "homatch/gadgets.hpp"
#include "homatch/ssts.hpp"
#include "homatch/term.hpp"

namespace homatch {

// F X = N with closed typings F : sigma -> tau and N : tau; both terms
// are beta-normal.
struct MatchingInstance {
  TermRef F;
  TermRef N;
  TypeRef sigma;
  TypeRef tau;
  // Present for compiled instances; serialized for provenance.
  std::optional<Ssts> source;
};

enum class ConstraintLabel { f_line, h_line, g_bullet_line, g_one_line, g_zero_line };

std::string to_string(ConstraintLabel label);

struct ConstraintPair {
  ConstraintLabel label;
  TermRef left;
  TermRef right;
};

// sigma of the compiled instance: Gamma_1(r_1) -> ... -> Gamma_1(p_1) -> kappa.
TypeRef sigma_type(const Ssts& system);
// tau of the compiled instance: ((kappa->kappa)->kappa^4->iota) -> iota.
TypeRef tau_type(const Ssts& system);

MatchingInstance compile(const Ssts& system);

// The five closed equations whose joint solvability is equivalent to
// F candidate = N for the compiled instance. Throws TypeFailError when
// the candidate is not typed at sigma.
std::vector<ConstraintPair> constraint_pairs(const Ssts& system,
                                             const TermRef& candidate);

}  // namespace homatch
