#pragma once
// Checks candidate solutions against a matching instance and produces
// per-constraint diagnostics for compiled instances.

#include <cstdint>
#include <string>
#include <vector>

#include "homatch/reduction.hpp"
#include "homatch/term.hpp"

namespace homatch {

struct Verdict {
  enum class Kind { ok, type_fail, equiv_fail, undetermined };
  Kind kind = Kind::ok;
  std::string detail;

  bool ok() const { return kind == Kind::ok; }
};

std::string to_string(const Verdict& v);

// Safety-net fuel: scales with the product of the term sizes.
std::uint64_t default_fuel(const MatchingInstance& instance,
                           const TermRef& candidate);

// Ok iff the candidate is closed, typed at sigma, and F candidate is
// beta-equivalent to N. fuel = 0 selects the default budget.
Verdict verify_solution(const MatchingInstance& instance,
                        const TermRef& candidate, std::uint64_t fuel = 0);

struct DiagnosticRow {
  ConstraintLabel label;
  Equiv status = Equiv::undetermined;
  TermRef left_normal;
  TermRef right_normal;
  bool pass() const { return status == Equiv::yes; }
};

// Evaluates the five compiled constraints for the candidate. All rows
// pass iff verify_solution accepts the candidate on the compiled
// instance. Throws TypeFailError when the candidate is not typed at
// sigma. fuel = 0 selects the default budget.
std::vector<DiagnosticRow> diagnose(const Ssts& system,
                                    const TermRef& candidate,
                                    std::uint64_t fuel = 0);

}  // namespace homatch
