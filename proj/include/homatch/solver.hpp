#pragma once
// Type-directed enumeration of beta-normal inhabitants and brute-force
// bounded solving of matching instances. The enumerator is the
// independent oracle used to cross-check the constructive pipeline.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "homatch/reduction.hpp"
#include "homatch/term.hpp"

namespace homatch {

struct EnumBudget {
  std::uint32_t max_size = 24;          // term constructor count
  std::uint64_t max_count = 1'000'000;  // emitted terms
  std::uint64_t fuel = 1'000'000;       // per-normalization budget
};

struct EnumResult {
  std::vector<TermRef> terms;
  bool complete = true;  // false when max_count truncated the stream
};

// Streams every beta-normal term M with env |- M : target and
// size <= max_size, each exactly once, ordered by size and then by a
// fixed structural order (neutral spines before abstractions, head
// variables ascending, argument sizes lexicographic). Returns false when
// the consumer stopped the stream or max_count was hit.
bool for_each_normal_inhabitant(
    const TypeEnv& env, const TypeRef& target, const EnumBudget& budget,
    const std::function<bool(const TermRef&)>& consume);

EnumResult enumerate_normal_inhabitants(const TypeEnv& env,
                                        const TypeRef& target,
                                        const EnumBudget& budget);

struct SolveResult {
  std::optional<TermRef> solution;
  // True when every sigma-inhabitant within the size bound was examined
  // and decided; a negative answer is then exhaustive at the bound.
  bool search_complete = true;
  std::uint64_t candidates = 0;
};

// First enumerated inhabitant of sigma accepted by verify_solution.
SolveResult solve_bounded(const MatchingInstance& instance,
                          const EnumBudget& budget);

}  // namespace homatch
