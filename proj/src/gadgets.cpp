#include "homatch/gadgets.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

#include "homatch/errors.hpp"

namespace homatch {

// -------- extended alphabet --------

std::size_t ExtSymbol::index(std::size_t alphabet_size) const {
  switch (kind) {
    case Kind::base:
      if (value >= alphabet_size)
        throw SymbolOutOfRangeError("symbol " + std::to_string(value) +
                                    " outside alphabet of size " +
                                    std::to_string(alphabet_size));
      return value;
    case Kind::dollar:
      return alphabet_size;
    case Kind::bullet:
      return alphabet_size + 1;
    case Kind::top:
      return alphabet_size + 2;
    case Kind::bot:
      return alphabet_size + 3;
  }
  return 0;
}

ExtSymbol ExtSymbol::from_index(std::size_t i, std::size_t alphabet_size) {
  if (i < alphabet_size) return base(static_cast<Symbol>(i));
  switch (i - alphabet_size) {
    case 0:
      return dollar();
    case 1:
      return bullet();
    case 2:
      return top();
    case 3:
      return bot();
  }
  throw SymbolOutOfRangeError("extended index " + std::to_string(i) +
                              " outside alphabet of size " +
                              std::to_string(alphabet_size));
}

bool ext_symbol_less(const ExtSymbol& a, const ExtSymbol& b) {
  auto rank = [](const ExtSymbol& s) {
    // base symbols first, then $, bullet, top, bot
    switch (s.kind) {
      case ExtSymbol::Kind::base:
        return static_cast<std::size_t>(s.value);
      case ExtSymbol::Kind::dollar:
        return std::size_t(-5);
      case ExtSymbol::Kind::bullet:
        return std::size_t(-4);
      case ExtSymbol::Kind::top:
        return std::size_t(-3);
      case ExtSymbol::Kind::bot:
        return std::size_t(-2);
    }
    return std::size_t(-1);
  };
  return rank(a) < rank(b);
}

std::size_t ext_alphabet_size(std::size_t alphabet_size) {
  return alphabet_size + 4;
}

TypeRef kappa(std::size_t alphabet_size) {
  TypeRef t = atom();
  for (std::size_t i = 0; i < ext_alphabet_size(alphabet_size); ++i)
    t = arrow(atom(), t);
  return t;
}

// -------- case application --------

TermRef build_case(const TermRef& scrutinee,
                   const std::vector<std::pair<ExtSymbol, TermRef>>& branches,
                   const TermRef& fallback, std::size_t alphabet_size) {
  const std::size_t width = ext_alphabet_size(alphabet_size);
  std::vector<TermRef> args(width, fallback);
  for (const auto& [sym, body] : branches) {
    std::size_t i = sym.index(alphabet_size);
    if (args[i].get() != fallback.get())
      throw std::invalid_argument("duplicate case branch");
    args[i] = body;
  }
  return app_spine(scrutinee, args);
}

// -------- gadget terms --------

namespace {

// Variable for s_i under the |A| case binders (innermost is s_bot).
TermRef s_var(const ExtSymbol& s, std::size_t alphabet_size) {
  const std::size_t width = ext_alphabet_size(alphabet_size);
  return var(width - 1 - s.index(alphabet_size));
}

TermRef id_term() { return lam(var(0)); }

}  // namespace

TermRef pi_term(const ExtSymbol& s, std::size_t alphabet_size) {
  const std::size_t width = ext_alphabet_size(alphabet_size);
  return lam_n(width, var(width - 1 - s.index(alphabet_size)));
}

TermRef delta_term(const ExtSymbol& s, std::size_t alphabet_size) {
  const std::size_t width = ext_alphabet_size(alphabet_size);
  TermRef body = build_case(var(width), {{ExtSymbol::top(), s_var(s, alphabet_size)}},
                            s_var(ExtSymbol::bot(), alphabet_size), alphabet_size);
  return lam(lam_n(width, body));
}

TermRef build_gadget(const GadgetKind& kind, std::size_t alphabet_size) {
  const std::size_t width = ext_alphabet_size(alphabet_size);
  const TermRef bot = s_var(ExtSymbol::bot(), alphabet_size);
  const ExtSymbol sym0 = ExtSymbol::base(0);
  const ExtSymbol sym1 = ExtSymbol::base(1);
  if (alphabet_size < 2)
    throw SymbolOutOfRangeError("alphabet must contain symbols 0 and 1");

  switch (kind.tag) {
    case GadgetKind::Tag::pi:
      return pi_term(kind.symbol, alphabet_size);
    case GadgetKind::Tag::delta:
      return delta_term(kind.symbol, alphabet_size);

    case GadgetKind::Tag::h_star: {
      // \h. \g. \s... case (g delta_bullet) { $ -> s_$ } else s_bot
      TermRef scrut =
          app(var(width), delta_term(ExtSymbol::bullet(), alphabet_size));
      TermRef body = build_case(
          scrut, {{ExtSymbol::dollar(), s_var(ExtSymbol::dollar(), alphabet_size)}},
          bot, alphabet_size);
      return lam(lam(lam_n(width, body)));
    }
    case GadgetKind::Tag::h_zero: {
      // \h. \x. \s... case x { 1 -> s_$ } else s_bot
      TermRef body = build_case(
          var(width), {{sym1, s_var(ExtSymbol::dollar(), alphabet_size)}}, bot,
          alphabet_size);
      return lam(lam(lam_n(width, body)));
    }
    case GadgetKind::Tag::h_rule: {
      // \h. \x. \s... case (h pi_top) { bullet -> case x { 1 -> s_1 } } else s_bot
      TermRef inner = build_case(var(width), {{sym1, s_var(sym1, alphabet_size)}},
                                 bot, alphabet_size);
      TermRef scrut =
          app(var(width + 1), pi_term(ExtSymbol::top(), alphabet_size));
      TermRef body =
          build_case(scrut, {{ExtSymbol::bullet(), inner}}, bot, alphabet_size);
      return lam(lam(lam_n(width, body)));
    }

    case GadgetKind::Tag::g_star: {
      const TermRef g = var(width);
      const TermRef h = var(width + 1);
      TermRef g_bullet = app(g, delta_term(ExtSymbol::bullet(), alphabet_size));
      TermRef g_zero = app(g, delta_term(sym0, alphabet_size));
      TermRef g_one = app(g, delta_term(sym1, alphabet_size));
      TermRef expand = build_case(
          g_zero, {{sym1, s_var(ExtSymbol::dollar(), alphabet_size)}}, bot,
          alphabet_size);
      TermRef branch_bullet = build_case(
          g_bullet,
          {{sym0, s_var(sym0, alphabet_size)}, {ExtSymbol::dollar(), expand}},
          bot, alphabet_size);
      TermRef branch_zero = build_case(
          g_one, {{sym0, s_var(sym1, alphabet_size)}}, bot, alphabet_size);
      TermRef branch_one = build_case(
          g_bullet, {{sym0, s_var(sym0, alphabet_size)}}, bot, alphabet_size);
      TermRef body =
          build_case(app(h, pi_term(ExtSymbol::top(), alphabet_size)),
                     {{ExtSymbol::bullet(), branch_bullet},
                      {sym0, branch_zero},
                      {sym1, branch_one}},
                     bot, alphabet_size);
      return lam(lam(lam_n(width, body)));
    }
    case GadgetKind::Tag::g_zero: {
      const TermRef x = var(width);
      const TermRef h = var(width + 1);
      TermRef branch_bullet =
          build_case(x,
                     {{sym0, s_var(sym0, alphabet_size)},
                      {sym1, s_var(ExtSymbol::dollar(), alphabet_size)}},
                     bot, alphabet_size);
      TermRef branch_zero =
          build_case(x, {{sym0, s_var(sym1, alphabet_size)}}, bot, alphabet_size);
      TermRef branch_one =
          build_case(x, {{sym0, s_var(sym0, alphabet_size)}}, bot, alphabet_size);
      TermRef body =
          build_case(app(h, pi_term(ExtSymbol::top(), alphabet_size)),
                     {{ExtSymbol::bullet(), branch_bullet},
                      {sym0, branch_zero},
                      {sym1, branch_one}},
                     bot, alphabet_size);
      return lam(lam(lam_n(width, body)));
    }
    case GadgetKind::Tag::g_rule: {
      const Rule& r = kind.rule;
      for (Symbol s : {r.a, r.b, r.c, r.d}) {
        if (s >= alphabet_size)
          throw SymbolOutOfRangeError("rule symbol " + std::to_string(s) +
                                      " outside alphabet of size " +
                                      std::to_string(alphabet_size));
      }
      const TermRef x = var(width);
      const TermRef h = var(width + 1);
      // bullet branch: x applied to the case binders in canonical order
      std::vector<TermRef> spine;
      spine.reserve(width);
      for (std::size_t i = 0; i < width; ++i) spine.push_back(var(width - 1 - i));
      TermRef branch_bullet = app_spine(x, spine);
      TermRef branch_zero = build_case(
          x, {{ExtSymbol::base(r.d), s_var(ExtSymbol::base(r.b), alphabet_size)}},
          bot, alphabet_size);
      TermRef branch_one = build_case(
          x, {{ExtSymbol::base(r.c), s_var(ExtSymbol::base(r.a), alphabet_size)}},
          bot, alphabet_size);
      TermRef body =
          build_case(app(h, pi_term(ExtSymbol::top(), alphabet_size)),
                     {{ExtSymbol::bullet(), branch_bullet},
                      {sym0, branch_zero},
                      {sym1, branch_one}},
                     bot, alphabet_size);
      return lam(lam(lam_n(width, body)));
    }

    case GadgetKind::Tag::id_kappa:
      return id_term();
    case GadgetKind::Tag::f_zero_arg:
      return lam(id_term());
    case GadgetKind::Tag::f_star_arg:
      return lam(lam(app(var(0), id_term())));
  }
  throw std::logic_error("unreachable gadget kind");
}

GadgetKind position_gadget(std::size_t j, std::size_t i) {
  if (i == j) return GadgetKind::delta(ExtSymbol::base(1));
  if (i == j + 1) return GadgetKind::delta(ExtSymbol::base(0));
  return GadgetKind::delta(ExtSymbol::bullet());
}

// -------- Gamma_m --------

GammaEnv gamma_env(std::size_t m, std::size_t rule_count,
                   std::size_t alphabet_size) {
  if (rule_count == 0) throw DegenerateSystemError();
  if (m == 0) throw std::invalid_argument("level m must be positive");
  GammaEnv env;
  env.m = m;
  env.rule_count = rule_count;
  env.alphabet_size = alphabet_size;
  TypeRef k = kappa(alphabet_size);
  TypeRef kk = arrow(k, k);
  env.p_type = kk;
  env.z1_type = k;
  env.z0_type = arrow(kk, arrow(k, k));
  env.zstar_type = arrow(kk, arrow(arrow(kk, k), k));
  env.r_type = env.z0_type;
  return env;
}

TypeEnv GammaEnv::context() const {
  TypeEnv ctx(binder_count());
  for (std::size_t j = 1; j <= m; ++j) ctx[p_distance(j)] = p_type;
  ctx[zstar_distance()] = zstar_type;
  ctx[z1_distance()] = z1_type;
  ctx[z0_distance()] = z0_type;
  for (std::size_t i = 1; i <= rule_count; ++i) ctx[r_distance(i)] = r_type;
  return ctx;
}

std::vector<TypeRef> GammaEnv::binder_types() const {
  std::vector<TypeRef> order;
  order.reserve(binder_count());
  for (std::size_t i = 1; i <= rule_count; ++i) order.push_back(r_type);
  order.push_back(z0_type);
  order.push_back(z1_type);
  order.push_back(zstar_type);
  for (std::size_t j = 1; j <= m; ++j) order.push_back(p_type);
  return order;
}

// -------- argument bundles --------

ArgumentBundles argument_bundles(const Ssts& system) {
  system.validate();
  const std::size_t k = system.alphabet_size;
  const std::size_t rule_count = system.rule_count();
  ArgumentBundles out;

  auto g_row = [&](const ExtSymbol& s) {
    std::vector<TermRef> row;
    row.reserve(rule_count + 4);
    for (const Rule& r : system.rules)
      row.push_back(build_gadget(GadgetKind::g_rule(r), k));
    row.push_back(build_gadget(GadgetKind::g_zero(), k));
    row.push_back(pi_term(ExtSymbol::base(1), k));
    row.push_back(build_gadget(GadgetKind::g_star(), k));
    row.push_back(delta_term(s, k));
    return row;
  };

  out.f_row.reserve(rule_count + 4);
  for (std::size_t i = 0; i < rule_count; ++i)
    out.f_row.push_back(build_gadget(GadgetKind::id_kappa(), k));
  out.f_row.push_back(build_gadget(GadgetKind::f_zero_arg(), k));
  out.f_row.push_back(var(0));  // the free variable u, bound by the caller
  out.f_row.push_back(build_gadget(GadgetKind::f_star_arg(), k));
  out.f_row.push_back(build_gadget(GadgetKind::id_kappa(), k));

  out.h_row.reserve(rule_count + 4);
  for (std::size_t i = 0; i < rule_count; ++i)
    out.h_row.push_back(build_gadget(GadgetKind::h_rule(), k));
  out.h_row.push_back(build_gadget(GadgetKind::h_zero(), k));
  out.h_row.push_back(pi_term(ExtSymbol::base(1), k));
  out.h_row.push_back(build_gadget(GadgetKind::h_star(), k));
  out.h_row.push_back(delta_term(ExtSymbol::bullet(), k));

  out.g_row_bullet = g_row(ExtSymbol::bullet());
  out.g_row_one = g_row(ExtSymbol::base(1));
  out.g_row_zero = g_row(ExtSymbol::base(0));
  return out;
}

// -------- finite-function tables --------

ArgDesc ArgDesc::sym(ExtSymbol s) {
  ArgDesc d;
  d.is_map = false;
  d.symbol = s;
  return d;
}

ArgDesc ArgDesc::map(std::vector<MapRow> rows) {
  ArgDesc d;
  d.is_map = true;
  d.rows = std::move(rows);
  return d;
}

namespace {

ArgDesc top_to(ExtSymbol out) {
  return ArgDesc::map({MapRow{ArgDesc::sym(ExtSymbol::top()), out}});
}

}  // namespace

std::vector<FunctionTable> semantics_table(const Ssts& system) {
  system.validate();
  const std::size_t k = system.alphabet_size;
  const ExtSymbol sym0 = ExtSymbol::base(0);
  const ExtSymbol sym1 = ExtSymbol::base(1);
  std::vector<FunctionTable> tables;

  for (std::size_t i = 0; i < ext_alphabet_size(k); ++i) {
    ExtSymbol s = ExtSymbol::from_index(i, k);
    tables.push_back(FunctionTable{
        GadgetKind::delta(s),
        {TableRow{{ArgDesc::sym(ExtSymbol::top())}, s}}});
  }

  tables.push_back(FunctionTable{
      GadgetKind::g_zero(),
      {TableRow{{top_to(ExtSymbol::bullet()), ArgDesc::sym(sym0)}, sym0},
       TableRow{{top_to(ExtSymbol::bullet()), ArgDesc::sym(sym1)},
                ExtSymbol::dollar()},
       TableRow{{top_to(sym0), ArgDesc::sym(sym0)}, sym1},
       TableRow{{top_to(sym1), ArgDesc::sym(sym0)}, sym0}}});

  for (const Rule& r : system.rules) {
    tables.push_back(FunctionTable{
        GadgetKind::g_rule(r),
        {TableRow{{top_to(sym1), ArgDesc::sym(ExtSymbol::base(r.c))},
                  ExtSymbol::base(r.a)},
         TableRow{{top_to(sym0), ArgDesc::sym(ExtSymbol::base(r.d))},
                  ExtSymbol::base(r.b)}}});
  }

  tables.push_back(FunctionTable{
      GadgetKind::g_star(),
      {TableRow{{top_to(ExtSymbol::bullet()),
                 ArgDesc::map({MapRow{top_to(ExtSymbol::bullet()), sym0}})},
                sym0},
       TableRow{{top_to(ExtSymbol::bullet()),
                 ArgDesc::map({MapRow{top_to(ExtSymbol::bullet()),
                                      ExtSymbol::dollar()},
                               MapRow{top_to(sym0), sym1}})},
                ExtSymbol::dollar()},
       TableRow{{top_to(sym0), ArgDesc::map({MapRow{top_to(sym1), sym0}})},
                sym1},
       TableRow{{top_to(sym1), ArgDesc::map({MapRow{top_to(ExtSymbol::bullet()),
                                                    sym0}})},
                sym0}}});

  return tables;
}

TermRef realize_arg(const ArgDesc& desc, std::size_t alphabet_size) {
  if (!desc.is_map) return pi_term(desc.symbol, alphabet_size);

  const std::size_t width = ext_alphabet_size(alphabet_size);
  std::vector<std::pair<ExtSymbol, TermRef>> branches;
  bool behavioral = false;
  for (const MapRow& row : desc.rows) {
    ExtSymbol key;
    if (row.input.is_map) {
      // Behavioral input: observe the argument's response to pi_top.
      assert(row.input.rows.size() == 1 && !row.input.rows[0].input.is_map);
      key = row.input.rows[0].output;
      behavioral = true;
    } else {
      key = row.input.symbol;
    }
    branches.emplace_back(key, s_var(row.output, alphabet_size));
  }
  TermRef scrut = behavioral
                      ? app(var(width), pi_term(ExtSymbol::top(), alphabet_size))
                      : var(width);
  TermRef body = build_case(scrut, branches,
                            s_var(ExtSymbol::bot(), alphabet_size),
                            alphabet_size);
  return lam(lam_n(width, body));
}

}  // namespace homatch
