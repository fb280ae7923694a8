#include "homatch/ssts.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "homatch/errors.hpp"

namespace homatch {

void Ssts::validate() const {
  if (rules.empty()) throw EmptyRuleSetError();
  if (alphabet_size < 2)
    throw SymbolOutOfRangeError("alphabet must contain symbols 0 and 1");
  for (const Rule& r : rules) {
    for (Symbol s : {r.a, r.b, r.c, r.d}) {
      if (s >= alphabet_size)
        throw SymbolOutOfRangeError("rule symbol " + std::to_string(s) +
                                    " outside alphabet of size " +
                                    std::to_string(alphabet_size));
    }
  }
}

Word uniform_word(Symbol s, std::size_t n) { return Word(n, s); }

StepResult apply_step(const Word& word, const Rule& rule,
                      std::size_t position) {
  if (position < 1 || position + 1 > word.size())
    return {{}, StepError::position_out_of_range};
  if (word[position - 1] != rule.a || word[position] != rule.b)
    return {{}, StepError::rule_mismatch};
  Word out = word;
  out[position - 1] = rule.c;
  out[position] = rule.d;
  return {std::move(out), StepError::none};
}

bool check_derivation(const Ssts& system, const Word& start,
                      const Derivation& steps, const Word& end) {
  Word cur = start;
  for (const Step& s : steps) {
    if (s.rule < 1 || s.rule > system.rules.size()) return false;
    StepResult next = apply_step(cur, system.rules[s.rule - 1], s.position);
    if (!next.ok()) return false;
    cur = std::move(next.word);
  }
  return cur == end;
}

namespace {

struct WordKey {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (Symbol s : w) {
      h ^= s;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Breadth-first closure from start. Expansion order is rule-major,
// position-minor, which fixes the first-in tie-breaking for equal-length
// derivations. on_word may stop the search by returning false.
template <typename Visit>
void bfs(const Ssts& system, const Word& start, const SearchLimits& limits,
         Visit&& on_word) {
  std::unordered_map<Word, std::pair<std::size_t, Step>, WordKey> parent;
  std::vector<Word> order;
  parent.emplace(start, std::make_pair(std::size_t(-1), Step{}));
  order.push_back(start);

  auto trace = [&](const Word& w) {
    Derivation d;
    Word cur = w;
    while (true) {
      auto [prev_index, step] = parent.at(cur);
      if (prev_index == std::size_t(-1)) break;
      d.push_back(step);
      cur = order[prev_index];
    }
    std::reverse(d.begin(), d.end());
    return d;
  };

  for (std::size_t head = 0; head < order.size(); ++head) {
    Word w = order[head];
    if (!on_word(w, trace)) return;
    for (std::size_t ri = 0; ri < system.rules.size(); ++ri) {
      const Rule& rule = system.rules[ri];
      for (std::size_t pos = 1; pos + 1 <= w.size(); ++pos) {
        StepResult next = apply_step(w, rule, pos);
        if (!next.ok()) continue;
        if (parent.contains(next.word)) continue;
        if (order.size() >= limits.max_states)
          throw ResourceLimitError("state cap " +
                                   std::to_string(limits.max_states) +
                                   " exceeded");
        parent.emplace(next.word, std::make_pair(head, Step{ri + 1, pos}));
        order.push_back(std::move(next.word));
      }
    }
  }
}

}  // namespace

std::optional<Derivation> decide_for_n(const Ssts& system, std::size_t n,
                                       const SearchLimits& limits) {
  system.validate();
  if (n < 1) throw std::invalid_argument("word length must be positive");
  const Word start = uniform_word(0, n);
  const Word goal = uniform_word(1, n);
  std::optional<Derivation> found;
  bfs(system, start, limits, [&](const Word& w, auto& trace) {
    if (w == goal) {
      found = trace(w);
      return false;
    }
    return true;
  });
  return found;
}

std::optional<SearchHit> search_zero_one(const Ssts& system, std::size_t max_n,
                                         const SearchLimits& limits) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    if (auto d = decide_for_n(system, n, limits))
      return SearchHit{n, std::move(*d)};
  }
  return std::nullopt;
}

std::vector<Word> reachable_words(const Ssts& system, const Word& start,
                                  const SearchLimits& limits) {
  system.validate();
  std::vector<Word> out;
  bfs(system, start, limits, [&](const Word& w, auto&) {
    out.push_back(w);
    return true;
  });
  return out;
}

}  // namespace homatch
