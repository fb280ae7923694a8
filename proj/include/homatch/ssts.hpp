#pragma once
// Simple semi-Thue systems: length-preserving rules ab => cd over a
// finite alphabet, rule application, derivation replay, and exact
// per-length reachability for the question whether 0^n rewrites to 1^n.

#include <cstddef>
#include <optional>
#include <vector>

namespace homatch {

using Symbol = unsigned;

struct Rule {
  Symbol a = 0, b = 0, c = 0, d = 0;
  bool operator==(const Rule&) const = default;
};

struct Ssts {
  std::size_t alphabet_size = 2;  // symbols are 0 .. alphabet_size-1
  std::vector<Rule> rules;

  std::size_t rule_count() const { return rules.size(); }
  // Throws EmptyRuleSetError / SymbolOutOfRangeError on malformed systems.
  void validate() const;
};

// Nonempty sequence of symbols.
using Word = std::vector<Symbol>;

Word uniform_word(Symbol s, std::size_t n);

// One derivation step: 1-based rule index, 1-based position.
struct Step {
  std::size_t rule = 1;
  std::size_t position = 1;
  bool operator==(const Step&) const = default;
};
using Derivation = std::vector<Step>;

enum class StepError { none, position_out_of_range, rule_mismatch };

struct StepResult {
  Word word;
  StepError error = StepError::none;
  bool ok() const { return error == StepError::none; }
};

// Replace word[position], word[position+1] (1-based) = a,b by c,d.
StepResult apply_step(const Word& word, const Rule& rule,
                      std::size_t position);

// Fold the steps over start; true iff every step applies and the result
// equals end.
bool check_derivation(const Ssts& system, const Word& start,
                      const Derivation& steps, const Word& end);

struct SearchLimits {
  std::size_t max_states = 1'000'000;
};

// Exact decision of 0^n =>* 1^n by breadth-first closure of the (finite,
// length-preserving) reachable set. Returns a shortest derivation, with
// first-in tie-breaking, or nullopt. Throws ResourceLimitError when the
// state cap is exceeded.
std::optional<Derivation> decide_for_n(const Ssts& system, std::size_t n,
                                       const SearchLimits& limits = {});

struct SearchHit {
  std::size_t n = 0;
  Derivation steps;
};

// Smallest n <= max_n with decide_for_n(system, n) positive.
std::optional<SearchHit> search_zero_one(const Ssts& system, std::size_t max_n,
                                         const SearchLimits& limits = {});

// Full reachable set from start, in breadth-first discovery order.
std::vector<Word> reachable_words(const Ssts& system, const Word& start,
                                  const SearchLimits& limits = {});

}  // namespace homatch
