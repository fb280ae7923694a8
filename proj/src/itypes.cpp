#include "homatch/itypes.hpp"

#include <algorithm>
#include <unordered_map>

#include "homatch/errors.hpp"
#include "homatch/witness.hpp"

namespace homatch {

// -------- construction and ordering --------

ITypeRef iatom(ExtSymbol name) {
  auto t = std::shared_ptr<IType>(new IType());
  t->is_atom_ = true;
  t->name_ = name;
  return t;
}

ITypeRef iarrow(std::vector<ITypeRef> dom, ITypeRef cod) {
  auto t = std::shared_ptr<IType>(new IType());
  t->is_atom_ = false;
  t->dom_ = canonical_set(std::move(dom));
  t->cod_ = std::move(cod);
  return t;
}

ITypeRef iarrow_chain(const std::vector<ITypeRef>& singleton_doms,
                      ITypeRef cod) {
  ITypeRef t = std::move(cod);
  for (auto it = singleton_doms.rbegin(); it != singleton_doms.rend(); ++it)
    t = iarrow({*it}, t);
  return t;
}

namespace {

// total order: atoms before arrows, atoms by symbol rank, arrows by
// domain set then codomain
int itype_cmp(const ITypeRef& a, const ITypeRef& b) {
  if (a.get() == b.get()) return 0;
  if (a->is_atom() != b->is_atom()) return a->is_atom() ? -1 : 1;
  if (a->is_atom()) {
    if (a->name() == b->name()) return 0;
    return ext_symbol_less(a->name(), b->name()) ? -1 : 1;
  }
  const auto& da = a->dom();
  const auto& db = b->dom();
  for (std::size_t i = 0; i < std::min(da.size(), db.size()); ++i) {
    if (int c = itype_cmp(da[i], db[i])) return c;
  }
  if (da.size() != db.size()) return da.size() < db.size() ? -1 : 1;
  return itype_cmp(a->cod(), b->cod());
}

}  // namespace

bool itype_eq(const ITypeRef& a, const ITypeRef& b) {
  return itype_cmp(a, b) == 0;
}

bool itype_less(const ITypeRef& a, const ITypeRef& b) {
  return itype_cmp(a, b) < 0;
}

std::vector<ITypeRef> canonical_set(std::vector<ITypeRef> types) {
  std::sort(types.begin(), types.end(), itype_less);
  types.erase(std::unique(types.begin(), types.end(),
                          [](const ITypeRef& a, const ITypeRef& b) {
                            return itype_eq(a, b);
                          }),
              types.end());
  return types;
}

// -------- derivability --------

namespace {

struct Checker {
  const ITypeEnv& base;               // distance-indexed judgment env
  std::vector<std::vector<ITypeRef>> stack;  // binder extensions
  std::vector<std::size_t> frame_ids;
  std::size_t next_frame = 1;

  // derivable types of neutral spines per (node, innermost frame)
  std::unordered_map<const Term*,
                     std::unordered_map<std::size_t, std::vector<ITypeRef>>>
      memo;

  explicit Checker(const ITypeEnv& env) : base(env) {}

  std::size_t frame() const {
    return frame_ids.empty() ? 0 : frame_ids.back();
  }

  const std::vector<ITypeRef>* lookup(std::size_t distance) const {
    if (distance < stack.size()) return &stack[stack.size() - 1 - distance];
    std::size_t outer = distance - stack.size();
    if (outer < base.size()) return &base[outer];
    return nullptr;
  }

  bool check(const TermRef& t, const ITypeRef& want) {
    if (t->tag() == Term::Tag::lam) {
      if (want->is_atom()) return false;
      stack.push_back(want->dom());
      frame_ids.push_back(next_frame++);
      bool ok = check(t->body(), want->cod());
      stack.pop_back();
      frame_ids.pop_back();
      return ok;
    }
    for (const ITypeRef& have : neutral_types(t))
      if (itype_eq(have, want)) return true;
    return false;
  }

  const std::vector<ITypeRef>& neutral_types(const TermRef& t) {
    auto& per_frame = memo[t.get()];
    auto it = per_frame.find(frame());
    if (it != per_frame.end()) return it->second;

    std::vector<ITypeRef> out;
    if (t->tag() == Term::Tag::var) {
      if (const auto* entry = lookup(t->index())) out = *entry;
    } else if (t->tag() == Term::Tag::app) {
      // copy: recursion below may grow the memo map
      std::vector<ITypeRef> fun_types = neutral_types(t->fun());
      for (const ITypeRef& ft : fun_types) {
        if (ft->is_atom()) continue;
        bool args_ok = true;
        for (const ITypeRef& d : ft->dom()) {
          if (!check(t->arg(), d)) {
            args_ok = false;
            break;
          }
        }
        if (args_ok) out.push_back(ft->cod());
      }
      out = canonical_set(std::move(out));
    }
    return memo[t.get()].emplace(frame(), std::move(out)).first->second;
  }
};

}  // namespace

bool itype_derivable(const Judgment& j) {
  if (!is_normal(j.term)) throw NotNormalError();
  Checker checker(j.env);
  return checker.check(j.term, j.type);
}

// -------- environments from a system --------

namespace {

ITypeRef arrow3(ExtSymbol a, ExtSymbol b, ExtSymbol c) {
  return iarrow({iatom(a)}, iarrow({iatom(b)}, iatom(c)));
}

}  // namespace

ITypeEnvParts build_itype_envs(const Ssts& system) {
  system.validate();
  const ExtSymbol bullet = ExtSymbol::bullet();
  const ExtSymbol dollar = ExtSymbol::dollar();
  const ExtSymbol s0 = ExtSymbol::base(0);
  const ExtSymbol s1 = ExtSymbol::base(1);

  ITypeEnvParts parts;
  for (const Rule& r : system.rules) {
    std::vector<ITypeRef> entry = {
        arrow3(s1, ExtSymbol::base(r.c), ExtSymbol::base(r.a)),
        arrow3(s0, ExtSymbol::base(r.d), ExtSymbol::base(r.b))};
    for (Symbol e = 0; e < system.alphabet_size; ++e)
      entry.push_back(
          arrow3(bullet, ExtSymbol::base(e), ExtSymbol::base(e)));
    parts.rule_entries.push_back(canonical_set(std::move(entry)));
  }

  parts.z1_entry = {iatom(s1)};

  parts.z0_entry = canonical_set({arrow3(bullet, s0, s0),
                                  arrow3(bullet, s1, dollar),
                                  arrow3(s0, s0, s1),
                                  arrow3(s1, s0, s0)});

  parts.zstar_entry = canonical_set(
      {iarrow({iatom(bullet)},
              iarrow({iarrow({iatom(bullet)}, iatom(s0))}, iatom(s0))),
       iarrow({iatom(bullet)},
              iarrow({iarrow({iatom(bullet)}, iatom(dollar)),
                      iarrow({iatom(s0)}, iatom(s1))},
                     iatom(dollar))),
       iarrow({iatom(s0)},
              iarrow({iarrow({iatom(s1)}, iatom(s0))}, iatom(s1))),
       iarrow({iatom(s1)},
              iarrow({iarrow({iatom(bullet)}, iatom(s0))}, iatom(s0)))});
  return parts;
}

ITypeEnv assemble_itype_env(
    const ITypeEnvParts& parts,
    const std::vector<std::vector<ITypeRef>>& p_entries) {
  const std::size_t m = p_entries.size();
  const std::size_t rule_count = parts.rule_entries.size();
  ITypeEnv env(m + 3 + rule_count);
  for (std::size_t j = 1; j <= m; ++j) env[m - j] = p_entries[j - 1];
  env[m] = parts.zstar_entry;
  env[m + 1] = parts.z1_entry;
  env[m + 2] = parts.z0_entry;
  for (std::size_t i = 1; i <= rule_count; ++i)
    env[m + 2 + rule_count - i + 1] = parts.rule_entries[i - 1];
  return env;
}

// -------- witness judgments --------

namespace {

// Atom observed at position j when the row focuses position i: the
// pattern of the position gadgets.
ExtSymbol row_atom(std::size_t i, std::size_t j) {
  if (i == j) return ExtSymbol::base(1);
  if (i == j + 1) return ExtSymbol::base(0);
  return ExtSymbol::bullet();
}

}  // namespace

std::vector<Judgment> witness_judgments(const Ssts& system, std::size_t n,
                                        const Derivation& derivation) {
  system.validate();
  if (n < 1) throw std::invalid_argument("witness level must be positive");
  if (!check_derivation(system, uniform_word(0, n + 1), derivation,
                        uniform_word(1, n + 1)))
    throw InvalidWitnessError("derivation does not rewrite 0^" +
                              std::to_string(n + 1) + " to 1^" +
                              std::to_string(n + 1));

  ITypeEnvParts parts = build_itype_envs(system);
  ITypeEnvParts no_control = parts;
  no_control.z0_entry.clear();
  no_control.zstar_entry.clear();

  auto p_atoms = [&](std::size_t level, std::size_t i) {
    std::vector<std::vector<ITypeRef>> entries;
    entries.reserve(level);
    for (std::size_t j = 1; j <= level; ++j)
      entries.push_back({iatom(row_atom(i, j))});
    return entries;
  };

  std::vector<Judgment> out;

  // Q block: the derivation term, rows 0 .. n+1.
  TermRef q = q_term(system, derivation, n);
  for (std::size_t i = 0; i <= n + 1; ++i) {
    Judgment j;
    j.env = assemble_itype_env(no_control, p_atoms(n, i));
    j.term = q;
    j.type = iatom(i == 0 ? ExtSymbol::base(1) : ExtSymbol::base(0));
    j.label = "Q row " + std::to_string(i);
    j.level = n;
    out.push_back(std::move(j));
  }

  // R blocks bottom up: T_n = z_0 p_n q, T_k = z_star p_k (\p. T_{k+1}).
  std::vector<TermRef> levels(n + 1);
  levels[n] = app(app(var(n + 2), var(0)), q);
  for (std::size_t k = n; k-- > 1;)
    levels[k] = app(app(var(k), var(0)), lam(levels[k + 1]));

  for (std::size_t k = n; k >= 1; --k) {
    for (std::size_t i = 0; i <= k + 1; ++i) {
      Judgment j;
      j.env = assemble_itype_env(parts, p_atoms(k, i));
      j.term = levels[k];
      ExtSymbol target = i == 0 ? ExtSymbol::dollar()
                                : (i == k + 1 ? ExtSymbol::base(1)
                                              : ExtSymbol::base(0));
      j.type = iatom(target);
      j.label = "R[" + std::to_string(k) + "] row " + std::to_string(i);
      j.level = k;
      out.push_back(std::move(j));
    }
  }
  return out;
}

}  // namespace homatch
