#include "homatch/verifier.hpp"

#include <algorithm>

#include "homatch/errors.hpp"

namespace homatch {

std::string to_string(const Verdict& v) {
  switch (v.kind) {
    case Verdict::Kind::ok:
      return "ok";
    case Verdict::Kind::type_fail:
      return v.detail.empty() ? "type mismatch" : "type mismatch: " + v.detail;
    case Verdict::Kind::equiv_fail:
      return v.detail.empty() ? "not beta-equivalent"
                              : "not beta-equivalent: " + v.detail;
    case Verdict::Kind::undetermined:
      return "undetermined (fuel exhausted)";
  }
  return "?";
}

std::uint64_t default_fuel(const MatchingInstance& instance,
                           const TermRef& candidate) {
  const std::uint64_t cap = 1'000'000'000ull;
  std::uint64_t product = instance.F->size();
  std::uint64_t factor = candidate ? candidate->size() : 1;
  if (product > cap / std::max<std::uint64_t>(factor, 1)) return cap;
  product *= std::max<std::uint64_t>(factor, 1);
  if (product > cap / 1000) return cap;
  return product * 1000;
}

Verdict verify_solution(const MatchingInstance& instance,
                        const TermRef& candidate, std::uint64_t fuel) {
  if (!candidate || !candidate->closed())
    return {Verdict::Kind::type_fail, "candidate is not closed"};
  if (!type_check({}, candidate, instance.sigma))
    return {Verdict::Kind::type_fail, "candidate is not typed at sigma"};
  if (fuel == 0) fuel = default_fuel(instance, candidate);
  switch (beta_equiv(app(instance.F, candidate), instance.N, fuel)) {
    case Equiv::yes:
      return {Verdict::Kind::ok, ""};
    case Equiv::no:
      return {Verdict::Kind::equiv_fail, "F applied to candidate differs from N"};
    case Equiv::undetermined:
      return {Verdict::Kind::undetermined, ""};
  }
  return {Verdict::Kind::undetermined, ""};
}

std::vector<DiagnosticRow> diagnose(const Ssts& system,
                                    const TermRef& candidate,
                                    std::uint64_t fuel) {
  std::vector<ConstraintPair> pairs = constraint_pairs(system, candidate);
  if (fuel == 0) {
    MatchingInstance instance = compile(system);
    fuel = default_fuel(instance, candidate);
  }
  std::vector<DiagnosticRow> rows;
  rows.reserve(pairs.size());
  for (const ConstraintPair& p : pairs) {
    NormalizeResult left = normalize(p.left, fuel);
    NormalizeResult right = normalize(p.right, fuel);
    DiagnosticRow row;
    row.label = p.label;
    row.left_normal = left.term;
    row.right_normal = right.term;
    if (!left.normal || !right.normal)
      row.status = Equiv::undetermined;
    else
      row.status = term_eq(left.term, right.term) ? Equiv::yes : Equiv::no;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace homatch
