#pragma once
// Test-only helper: evaluate the G-semantics of an open level-m term by
// lambda-closing it over the Gamma_m binder order and applying the
// gadget substitution with position gadgets for row i.

#include <vector>

#include "homatch/gadgets.hpp"
#include "homatch/ssts.hpp"
#include "homatch/term.hpp"

namespace homatch::testrows {

// S_G(term)[p_j := G_j^i], normalized. Row 0 uses only delta_bullet.
inline TermRef g_row_eval(const Ssts& system, const TermRef& term,
                          std::size_t m, std::size_t i,
                          std::uint64_t fuel = 1'000'000) {
  const std::size_t k = system.alphabet_size;
  GammaEnv env = gamma_env(m, system.rule_count(), k);
  std::vector<TermRef> args;
  args.reserve(env.binder_count());
  for (const Rule& r : system.rules)
    args.push_back(build_gadget(GadgetKind::g_rule(r), k));
  args.push_back(build_gadget(GadgetKind::g_zero(), k));
  args.push_back(pi_term(ExtSymbol::base(1), k));
  args.push_back(build_gadget(GadgetKind::g_star(), k));
  for (std::size_t j = 1; j <= m; ++j)
    args.push_back(build_gadget(position_gadget(j, i), k));
  TermRef closed = lam_n(env.binder_count(), term);
  return normalize(app_spine(closed, args), fuel).term;
}

// Same, but the p variables get a caller-chosen delta each.
inline TermRef g_row_eval_with(const Ssts& system, const TermRef& term,
                               const std::vector<ExtSymbol>& p_symbols,
                               std::uint64_t fuel = 1'000'000) {
  const std::size_t k = system.alphabet_size;
  const std::size_t m = p_symbols.size();
  GammaEnv env = gamma_env(m, system.rule_count(), k);
  std::vector<TermRef> args;
  args.reserve(env.binder_count());
  for (const Rule& r : system.rules)
    args.push_back(build_gadget(GadgetKind::g_rule(r), k));
  args.push_back(build_gadget(GadgetKind::g_zero(), k));
  args.push_back(pi_term(ExtSymbol::base(1), k));
  args.push_back(build_gadget(GadgetKind::g_star(), k));
  for (const ExtSymbol& s : p_symbols) args.push_back(delta_term(s, k));
  TermRef closed = lam_n(env.binder_count(), term);
  return normalize(app_spine(closed, args), fuel).term;
}

}  // namespace homatch::testrows
