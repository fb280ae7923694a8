#include "homatch/reduction.hpp"

#include "homatch/errors.hpp"

namespace homatch {

std::string to_string(ConstraintLabel label) {
  switch (label) {
    case ConstraintLabel::f_line:
      return "F-line";
    case ConstraintLabel::h_line:
      return "H-line";
    case ConstraintLabel::g_bullet_line:
      return "G\xE2\x80\xA2-line";
    case ConstraintLabel::g_one_line:
      return "G1-line";
    case ConstraintLabel::g_zero_line:
      return "G0-line";
  }
  return "?";
}

TypeRef sigma_type(const Ssts& system) {
  GammaEnv env = gamma_env(1, system.rule_count(), system.alphabet_size);
  return arrow_chain(env.binder_types(), kappa(system.alphabet_size));
}

TypeRef tau_type(const Ssts& system) {
  TypeRef k = kappa(system.alphabet_size);
  TypeRef kk = arrow(k, k);
  return arrow(arrow_chain({kk, k, k, k, k}, atom()), atom());
}

MatchingInstance compile(const Ssts& system) {
  system.validate();
  const std::size_t k = system.alphabet_size;
  ArgumentBundles bundles = argument_bundles(system);

  // F = \x. \y. y (\u. x <F row>) (x <H row>) (x <G rows>)
  // with x at distance 1 under \y, distance 2 under the extra \u.
  TermRef f_component = lam(app_spine(var(2), bundles.f_row));
  TermRef h_component = app_spine(var(1), bundles.h_row);
  TermRef g_bullet = app_spine(var(1), bundles.g_row_bullet);
  TermRef g_one = app_spine(var(1), bundles.g_row_one);
  TermRef g_zero = app_spine(var(1), bundles.g_row_zero);
  TermRef f = lam(lam(app_spine(
      var(0), {f_component, h_component, g_bullet, g_one, g_zero})));

  // N = \y. y (\u. u) pi_$ pi_$ pi_0 pi_1
  TermRef n = lam(app_spine(var(0), {lam(var(0)),
                                     pi_term(ExtSymbol::dollar(), k),
                                     pi_term(ExtSymbol::dollar(), k),
                                     pi_term(ExtSymbol::base(0), k),
                                     pi_term(ExtSymbol::base(1), k)}));

  return MatchingInstance{std::move(f), std::move(n), sigma_type(system),
                          tau_type(system), system};
}

std::vector<ConstraintPair> constraint_pairs(const Ssts& system,
                                             const TermRef& candidate) {
  system.validate();
  if (!candidate || !candidate->closed() ||
      !type_check({}, candidate, sigma_type(system)))
    throw TypeFailError("candidate is not a closed term of type sigma");

  const std::size_t k = system.alphabet_size;
  ArgumentBundles bundles = argument_bundles(system);

  // The F line carries the free variable u; both sides are closed over it.
  TermRef f_left = lam(app_spine(candidate, bundles.f_row));
  TermRef f_right = lam(var(0));

  return {
      {ConstraintLabel::f_line, std::move(f_left), std::move(f_right)},
      {ConstraintLabel::h_line, app_spine(candidate, bundles.h_row),
       pi_term(ExtSymbol::dollar(), k)},
      {ConstraintLabel::g_bullet_line, app_spine(candidate, bundles.g_row_bullet),
       pi_term(ExtSymbol::dollar(), k)},
      {ConstraintLabel::g_one_line, app_spine(candidate, bundles.g_row_one),
       pi_term(ExtSymbol::base(0), k)},
      {ConstraintLabel::g_zero_line, app_spine(candidate, bundles.g_row_zero),
       pi_term(ExtSymbol::base(1), k)},
  };
}

}  // namespace homatch
