#pragma once
// Closed term and type gadgets for the rewriting-to-matching compiler:
// the extended alphabet, projections and delta terms, case application,
// the H/G control terms, position gadgets, the Gamma_m environment, and
// the three argument bundles used in the compiled constraints.

#include <cstddef>
#include <utility>
#include <vector>

#include "homatch/ssts.hpp"
#include "homatch/term.hpp"

namespace homatch {

// Extended alphabet: base symbols 0..K followed by $, bullet, top, bot.
// The canonical argument order of every case application and projection
// is s_0 ... s_K, s_$, s_bullet, s_top, s_bot.
struct ExtSymbol {
  enum class Kind { base, dollar, bullet, top, bot };

  Kind kind = Kind::base;
  Symbol value = 0;  // meaningful only for base symbols

  static ExtSymbol base(Symbol s) { return {Kind::base, s}; }
  static ExtSymbol dollar() { return {Kind::dollar, 0}; }
  static ExtSymbol bullet() { return {Kind::bullet, 0}; }
  static ExtSymbol top() { return {Kind::top, 0}; }
  static ExtSymbol bot() { return {Kind::bot, 0}; }

  bool operator==(const ExtSymbol&) const = default;

  // Position in the canonical argument order.
  std::size_t index(std::size_t alphabet_size) const;
  static ExtSymbol from_index(std::size_t i, std::size_t alphabet_size);
};

bool ext_symbol_less(const ExtSymbol& a, const ExtSymbol& b);

// |A| = alphabet_size + 4.
std::size_t ext_alphabet_size(std::size_t alphabet_size);

// kappa = iota -> ... -> iota -> iota with |A| arguments.
TypeRef kappa(std::size_t alphabet_size);

struct GadgetKind {
  enum class Tag {
    pi,         // projection for an extended symbol
    delta,      // top-detector returning the carried symbol
    h_star,     // shape control for z_star
    h_zero,     // shape control for z_0
    h_rule,     // shape control shared by all rules
    g_star,     // word expansion
    g_zero,     // initialization with 0s
    g_rule,     // one rewriting rule ab => cd
    id_kappa,   // identity at kappa -> kappa
    f_zero_arg, // \h. I
    f_star_arg, // \h. \g. g I
  };

  Tag tag = Tag::pi;
  ExtSymbol symbol{};  // pi / delta
  Rule rule{};         // g_rule

  static GadgetKind pi(ExtSymbol s) { return {Tag::pi, s, {}}; }
  static GadgetKind delta(ExtSymbol s) { return {Tag::delta, s, {}}; }
  static GadgetKind h_star() { return {Tag::h_star, {}, {}}; }
  static GadgetKind h_zero() { return {Tag::h_zero, {}, {}}; }
  static GadgetKind h_rule() { return {Tag::h_rule, {}, {}}; }
  static GadgetKind g_star() { return {Tag::g_star, {}, {}}; }
  static GadgetKind g_zero() { return {Tag::g_zero, {}, {}}; }
  static GadgetKind g_rule(Rule r) { return {Tag::g_rule, {}, r}; }
  static GadgetKind id_kappa() { return {Tag::id_kappa, {}, {}}; }
  static GadgetKind f_zero_arg() { return {Tag::f_zero_arg, {}, {}}; }
  static GadgetKind f_star_arg() { return {Tag::f_star_arg, {}, {}}; }
};

// scrutinee applied to |A| arguments: the branch term where a branch is
// given, the fallback everywhere else. Branch keys must be distinct.
TermRef build_case(const TermRef& scrutinee,
                   const std::vector<std::pair<ExtSymbol, TermRef>>& branches,
                   const TermRef& fallback, std::size_t alphabet_size);

// Closed term for the kind, matching its defining equation verbatim.
// Throws SymbolOutOfRangeError when a carried symbol does not fit the
// alphabet.
TermRef build_gadget(const GadgetKind& kind, std::size_t alphabet_size);

TermRef pi_term(const ExtSymbol& s, std::size_t alphabet_size);
TermRef delta_term(const ExtSymbol& s, std::size_t alphabet_size);

// Effect controller for rule application at position j observed at
// position i: delta_1 when i = j, delta_0 when i = j + 1, delta_bullet
// otherwise. i = 0 is meaningful and selects delta_bullet.
GadgetKind position_gadget(std::size_t j, std::size_t i);

// Gamma_m: role types plus the canonical binder order
// r_1 ... r_L, z_0, z_1, z_star, p_1 ... p_m.
struct GammaEnv {
  std::size_t m = 1;
  std::size_t rule_count = 1;
  std::size_t alphabet_size = 2;

  TypeRef p_type;      // kappa -> kappa
  TypeRef z1_type;     // kappa
  TypeRef z0_type;     // (kappa -> kappa) -> kappa -> kappa
  TypeRef zstar_type;  // (kappa -> kappa) -> ((kappa -> kappa) -> kappa) -> kappa
  TypeRef r_type;      // (kappa -> kappa) -> kappa -> kappa

  std::size_t binder_count() const { return rule_count + 3 + m; }

  // Binder distances under the canonical order.
  std::size_t p_distance(std::size_t j) const { return m - j; }
  std::size_t zstar_distance() const { return m; }
  std::size_t z1_distance() const { return m + 1; }
  std::size_t z0_distance() const { return m + 2; }
  std::size_t r_distance(std::size_t i) const {
    return m + 2 + rule_count - i + 1;
  }

  // Distance-indexed context for typing open terms at level m.
  TypeEnv context() const;
  // Types in binder order, outermost first (the sigma components).
  std::vector<TypeRef> binder_types() const;
};

// Throws DegenerateSystemError when rule_count = 0; m must be positive.
GammaEnv gamma_env(std::size_t m, std::size_t rule_count,
                   std::size_t alphabet_size);

// The three applied-argument rows of the compiled constraints, in binder
// order for Gamma_1. The z_1 slot of the F row is Var 0, standing for the
// free variable u under one enclosing abstraction; all other entries are
// closed.
struct ArgumentBundles {
  std::vector<TermRef> f_row;
  std::vector<TermRef> h_row;
  std::vector<TermRef> g_row_bullet;
  std::vector<TermRef> g_row_one;
  std::vector<TermRef> g_row_zero;
};

ArgumentBundles argument_bundles(const Ssts& system);

// Finite-function tables realized by the delta and G gadgets. An argument
// description is either a plain symbol (realized as the projection) or a
// partial map over observed behaviors.
struct ArgDesc;

struct MapRow;

struct ArgDesc {
  bool is_map = false;
  ExtSymbol symbol{};        // when !is_map
  std::vector<MapRow> rows;  // when is_map

  static ArgDesc sym(ExtSymbol s);
  static ArgDesc map(std::vector<MapRow> rows);
};

struct MapRow {
  ArgDesc input;
  ExtSymbol output;
};

struct TableRow {
  std::vector<ArgDesc> inputs;
  ExtSymbol output;
};

struct FunctionTable {
  GadgetKind kind;
  std::vector<TableRow> rows;
};

// Tables for every delta_i, G_0, every rule gadget, and G_star.
std::vector<FunctionTable> semantics_table(const Ssts& system);

// First-order realization of an argument description: projections for
// symbols, case dispatchers on the observed top response for maps.
TermRef realize_arg(const ArgDesc& desc, std::size_t alphabet_size);

}  // namespace homatch
