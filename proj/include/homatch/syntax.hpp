#pragma once
// Text surface: lambda term parser and printers, type syntax, SSTS rule
// files, derivation traces, the JSON instance document, and judgment
// pretty-printing.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "homatch/itypes.hpp"
#include "homatch/reduction.hpp"
#include "homatch/ssts.hpp"
#include "homatch/term.hpp"

namespace homatch {

// Surface tree with explicit variable names; converts to and from the
// nameless representation given a free-variable context.
struct NamedTerm;
using NamedRef = std::shared_ptr<const NamedTerm>;

struct NamedTerm {
  enum class Tag { var, app, lam };
  Tag tag = Tag::var;
  std::string name;  // var / lam binder
  NamedRef fun, arg; // app
  NamedRef body;     // lam

  static NamedRef make_var(std::string name);
  static NamedRef make_app(NamedRef fun, NamedRef arg);
  static NamedRef make_lam(std::string binder, NamedRef body);
};

// Grammar: variables are identifiers, abstraction is `\x. body` (lambda
// sign accepted, multiple binders allowed), application is left-
// associative juxtaposition, parentheses group. Throws ParseError.
NamedRef parse_named_term(std::string_view text);

// Throws ParseError when a name is not bound by an abstraction or the
// supplied context (outermost first assigns the largest distances).
TermRef to_nameless(const NamedRef& term,
                    const std::vector<std::string>& free_context = {});

// parse + convert.
TermRef parse_term(std::string_view text,
                   const std::vector<std::string>& free_context = {});

enum class TermStyle { named, indexed };

// Named style invents binder names x0, x1, ...; parsing the output
// converts back to the same nameless term.
std::string print_term(const TermRef& term, TermStyle style = TermStyle::named);

// `o` is the ground atom, `->` associates to the right.
TypeRef parse_type(std::string_view text);
std::string print_type(const TypeRef& type);

// One rule per line, `a b => c d` with decimal symbols; `#` comments and
// blank lines ignored. alphabet_size = max symbol + 1, floored at 2.
Ssts parse_ssts(std::string_view text);
std::string print_ssts(const Ssts& system);

// One step per line, `rule position`, both 1-based.
Derivation parse_derivation(std::string_view text);
std::string print_derivation(const Derivation& steps);

// JSON document with fields sigma, tau, F, N, alphabet_size, rules.
std::string instance_to_json(const MatchingInstance& instance);
MatchingInstance instance_from_json(std::string_view text);

std::string print_ext_symbol(const ExtSymbol& s);
std::string print_itype(const ITypeRef& t);
// Role-named rendering: assumption list, subject, target.
std::string print_judgment(const Judgment& j);

}  // namespace homatch
