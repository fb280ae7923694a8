#include "homatch/solver.hpp"

#include <cstdint>
#include <limits>
#include <map>
#include <unordered_map>

#include "homatch/verifier.hpp"

namespace homatch {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

// Enumeration works over interned type and environment ids so that the
// count memo stays cheap. Environments use stack convention: innermost
// binder at the back.
struct Enumerator {
  // type interning: id 0 is the atom, arrows keyed by (dom, cod)
  std::map<std::pair<int, int>, int> arrow_ids;
  std::vector<std::pair<int, int>> arrows;  // id -> (dom, cod); atom = (-1,-1)

  Enumerator() { arrows.emplace_back(-1, -1); }

  int intern(const TypeRef& t) {
    if (t->is_atom()) return 0;
    int d = intern(t->dom());
    int c = intern(t->cod());
    auto [it, fresh] = arrow_ids.try_emplace({d, c}, 0);
    if (fresh) {
      arrows.emplace_back(d, c);
      it->second = static_cast<int>(arrows.size()) - 1;
    }
    return it->second;
  }

  bool is_arrow(int t) const { return t != 0; }
  int dom(int t) const { return arrows[t].first; }
  int cod(int t) const { return arrows[t].second; }

  // environment interning
  std::map<std::vector<int>, int> env_ids;
  std::vector<std::vector<int>> envs;

  int intern_env(const std::vector<int>& env) {
    auto [it, fresh] = env_ids.try_emplace(env, 0);
    if (fresh) {
      envs.push_back(env);
      it->second = static_cast<int>(envs.size()) - 1;
    }
    return it->second;
  }

  struct CountKey {
    int env;
    int type;
    std::uint32_t size;
    bool operator<(const CountKey& o) const {
      if (env != o.env) return env < o.env;
      if (type != o.type) return type < o.type;
      return size < o.size;
    }
  };
  std::map<CountKey, std::uint64_t> counts;

  // Number of beta-normal inhabitants of `type` at exactly `size`
  // constructors, saturating.
  std::uint64_t count(int env_id, int type, std::uint32_t size) {
    if (size == 0) return 0;
    CountKey key{env_id, type, size};
    auto it = counts.find(key);
    if (it != counts.end()) return it->second;
    counts.emplace(key, 0);

    // Copy: recursive calls may intern new environments and reallocate.
    const std::vector<int> env = envs[env_id];
    std::uint64_t total = 0;

    // neutral spines: head variable stripped k times to reach `type`
    for (std::size_t v = 0; v < env.size(); ++v) {
      int head = env[env.size() - 1 - v];
      std::vector<int> doms;
      for (int t = head;; t = cod(t)) {
        std::uint32_t k = static_cast<std::uint32_t>(doms.size());
        if (t == type && size >= 1 + k) {
          if (k == 0) {
            if (size == 1) total = sat_add(total, 1);
          } else if (size >= 1 + 2 * k) {
            total = sat_add(total, count_args(env_id, doms, size - 1 - k));
          }
        }
        if (!is_arrow(t)) break;
        doms.push_back(dom(t));
      }
    }

    // abstraction
    if (is_arrow(type)) {
      std::vector<int> inner = env;
      inner.push_back(dom(type));
      total = sat_add(total, count(intern_env(inner), cod(type), size - 1));
    }

    counts[key] = total;
    return total;
  }

  // Ways to fill the argument list with total size `rem`, each >= 1.
  std::uint64_t count_args(int env_id, const std::vector<int>& doms,
                           std::uint32_t rem) {
    return count_args_from(env_id, doms, 0, rem);
  }

  std::uint64_t count_args_from(int env_id, const std::vector<int>& doms,
                                std::size_t i, std::uint32_t rem) {
    if (i == doms.size()) return rem == 0 ? 1 : 0;
    std::uint32_t tail = static_cast<std::uint32_t>(doms.size() - i - 1);
    if (rem < 1 + tail) return 0;
    std::uint64_t total = 0;
    for (std::uint32_t s = 1; s + tail <= rem; ++s) {
      std::uint64_t here = count(env_id, doms[i], s);
      if (here == 0) continue;
      total = sat_add(total,
                      sat_mul(here, count_args_from(env_id, doms, i + 1,
                                                    rem - s)));
    }
    return total;
  }

  // Streaming in the canonical order. Returns false when the consumer
  // stopped.
  bool stream(int env_id, int type, std::uint32_t size,
              const std::function<bool(TermRef)>& emit) {
    if (size == 0 || count(env_id, type, size) == 0) return true;
    const std::vector<int> env = envs[env_id];

    for (std::size_t v = 0; v < env.size(); ++v) {
      int head = env[env.size() - 1 - v];
      std::vector<int> doms;
      for (int t = head;; t = cod(t)) {
        std::uint32_t k = static_cast<std::uint32_t>(doms.size());
        if (t == type && size >= 1 + k) {
          if (k == 0) {
            if (size == 1 && !emit(var(v))) return false;
          } else if (size >= 1 + 2 * k) {
            std::vector<TermRef> args;
            if (!stream_args(env_id, doms, 0, size - 1 - k, args, v, emit))
              return false;
          }
        }
        if (!is_arrow(t)) break;
        doms.push_back(dom(t));
      }
    }

    if (is_arrow(type)) {
      std::vector<int> inner = env;
      inner.push_back(dom(type));
      int inner_id = intern_env(inner);
      if (!stream(inner_id, cod(type), size - 1,
                  [&](TermRef body) { return emit(lam(std::move(body))); }))
        return false;
    }
    return true;
  }

  bool stream_args(int env_id, const std::vector<int>& doms, std::size_t i,
                   std::uint32_t rem, std::vector<TermRef>& args,
                   std::size_t head, const std::function<bool(TermRef)>& emit) {
    if (i == doms.size()) {
      return rem == 0 ? emit(app_spine(var(head), args)) : true;
    }
    std::uint32_t tail = static_cast<std::uint32_t>(doms.size() - i - 1);
    if (rem < 1 + tail) return true;
    for (std::uint32_t s = 1; s + tail <= rem; ++s) {
      if (count(env_id, doms[i], s) == 0) continue;
      bool keep = stream(env_id, doms[i], s, [&](TermRef a) {
        args.push_back(std::move(a));
        bool cont = stream_args(env_id, doms, i + 1, rem - s, args, head, emit);
        args.pop_back();
        return cont;
      });
      if (!keep) return false;
    }
    return true;
  }
};

}  // namespace

bool for_each_normal_inhabitant(
    const TypeEnv& env, const TypeRef& target, const EnumBudget& budget,
    const std::function<bool(const TermRef&)>& consume) {
  Enumerator en;
  std::vector<int> stack;
  stack.reserve(env.size());
  for (auto it = env.rbegin(); it != env.rend(); ++it)
    stack.push_back(en.intern(*it));
  int env_id = en.intern_env(stack);
  int type = en.intern(target);

  std::uint64_t emitted = 0;
  for (std::uint32_t size = 1; size <= budget.max_size; ++size) {
    bool keep = en.stream(env_id, type, size, [&](TermRef t) {
      if (emitted == budget.max_count) return false;
      ++emitted;
      return consume(t);
    });
    if (!keep) return false;
  }
  return true;
}

EnumResult enumerate_normal_inhabitants(const TypeEnv& env,
                                        const TypeRef& target,
                                        const EnumBudget& budget) {
  EnumResult out;
  out.complete = for_each_normal_inhabitant(
      env, target, budget, [&](const TermRef& t) {
        out.terms.push_back(t);
        return true;
      });
  return out;
}

SolveResult solve_bounded(const MatchingInstance& instance,
                          const EnumBudget& budget) {
  SolveResult result;
  bool undetermined_seen = false;

  // Compiled instances are checked through the five-constraint rows with
  // early exit; the final hit is re-verified against the instance itself.
  std::optional<ArgumentBundles> bundles;
  std::vector<TermRef> row_targets;
  if (instance.source) {
    bundles = argument_bundles(*instance.source);
    const std::size_t k = instance.source->alphabet_size;
    row_targets = {lam(var(0)), pi_term(ExtSymbol::dollar(), k),
                   pi_term(ExtSymbol::dollar(), k),
                   pi_term(ExtSymbol::base(0), k),
                   pi_term(ExtSymbol::base(1), k)};
  }

  auto candidate_matches = [&](const TermRef& m) {
    if (!bundles) {
      Verdict v = verify_solution(instance, m, budget.fuel);
      if (v.kind == Verdict::Kind::undetermined) undetermined_seen = true;
      return v.ok();
    }
    const std::vector<TermRef>* rows[5] = {
        &bundles->f_row, &bundles->h_row, &bundles->g_row_bullet,
        &bundles->g_row_one, &bundles->g_row_zero};
    for (int i = 0; i < 5; ++i) {
      TermRef left = app_spine(m, *rows[i]);
      if (i == 0) left = lam(std::move(left));  // close over u
      Equiv e = beta_equiv(left, row_targets[i], budget.fuel);
      if (e == Equiv::undetermined) {
        undetermined_seen = true;
        return false;
      }
      if (e == Equiv::no) return false;
    }
    return true;
  };

  bool complete = for_each_normal_inhabitant(
      {}, instance.sigma, budget, [&](const TermRef& m) {
        ++result.candidates;
        if (!candidate_matches(m)) return true;
        if (verify_solution(instance, m).ok()) {
          result.solution = m;
          return false;
        }
        return true;
      });

  result.search_complete =
      result.solution.has_value() || (complete && !undetermined_seen);
  return result;
}

}  // namespace homatch
