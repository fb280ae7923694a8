#include "homatch/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

#include "homatch/errors.hpp"

namespace homatch {

// -------- named terms --------

NamedRef NamedTerm::make_var(std::string name) {
  auto t = std::make_shared<NamedTerm>();
  t->tag = Tag::var;
  t->name = std::move(name);
  return t;
}

NamedRef NamedTerm::make_app(NamedRef fun, NamedRef arg) {
  auto t = std::make_shared<NamedTerm>();
  t->tag = Tag::app;
  t->fun = std::move(fun);
  t->arg = std::move(arg);
  return t;
}

NamedRef NamedTerm::make_lam(std::string binder, NamedRef body) {
  auto t = std::make_shared<NamedTerm>();
  t->tag = Tag::lam;
  t->name = std::move(binder);
  t->body = std::move(body);
  return t;
}

// -------- term parser --------

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  bool at_lambda() {
    skip_ws();
    if (pos < text.size() && text[pos] == '\\') return true;
    // UTF-8 lambda sign
    return pos + 1 < text.size() &&
           static_cast<unsigned char>(text[pos]) == 0xCE &&
           static_cast<unsigned char>(text[pos + 1]) == 0xBB;
  }

  void eat_lambda() {
    if (text[pos] == '\\')
      ++pos;
    else
      pos += 2;
  }

  bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  }

  std::string ident() {
    skip_ws();
    if (pos >= text.size() || !ident_start(text[pos]))
      throw ParseError("expected identifier", pos);
    std::size_t start = pos;
    while (pos < text.size() && ident_char(text[pos])) ++pos;
    return std::string(text.substr(start, pos - start));
  }

  bool try_consume(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }
};

NamedRef parse_term_at(Cursor& cur);

NamedRef parse_atom(Cursor& cur, bool& found) {
  cur.skip_ws();
  found = false;
  if (cur.pos >= cur.text.size()) return nullptr;
  char c = cur.text[cur.pos];
  if (c == '(') {
    ++cur.pos;
    NamedRef inner = parse_term_at(cur);
    cur.expect(')');
    found = true;
    return inner;
  }
  if (cur.ident_start(c)) {
    found = true;
    return NamedTerm::make_var(cur.ident());
  }
  return nullptr;
}

NamedRef parse_term_at(Cursor& cur) {
  if (cur.at_lambda()) {
    cur.eat_lambda();
    std::vector<std::string> binders;
    binders.push_back(cur.ident());
    cur.skip_ws();
    while (cur.pos < cur.text.size() && cur.ident_start(cur.text[cur.pos])) {
      binders.push_back(cur.ident());
      cur.skip_ws();
    }
    cur.expect('.');
    NamedRef body = parse_term_at(cur);
    for (auto it = binders.rbegin(); it != binders.rend(); ++it)
      body = NamedTerm::make_lam(*it, std::move(body));
    return body;
  }

  bool found = false;
  NamedRef t = parse_atom(cur, found);
  if (!found) throw ParseError("expected term", cur.pos);
  while (true) {
    if (cur.at_lambda()) {
      // application argument written without parentheses: \x. ... binds
      // as far right as possible, so a lambda here extends the spine
      NamedRef arg = parse_term_at(cur);
      t = NamedTerm::make_app(std::move(t), std::move(arg));
      return t;
    }
    bool more = false;
    NamedRef arg = parse_atom(cur, more);
    if (!more) break;
    t = NamedTerm::make_app(std::move(t), std::move(arg));
  }
  return t;
}

}  // namespace

NamedRef parse_named_term(std::string_view text) {
  Cursor cur{text};
  NamedRef t = parse_term_at(cur);
  if (!cur.eof()) throw ParseError("unexpected trailing input", cur.pos);
  return t;
}

TermRef to_nameless(const NamedRef& term,
                    const std::vector<std::string>& free_context) {
  std::vector<std::string> scope(free_context);  // innermost at the back

  auto convert = [&](auto&& self, const NamedRef& t) -> TermRef {
    switch (t->tag) {
      case NamedTerm::Tag::var: {
        for (std::size_t i = scope.size(); i-- > 0;) {
          if (scope[i] == t->name)
            return var(scope.size() - 1 - i);
        }
        throw ParseError("unbound variable '" + t->name + "'", 0);
      }
      case NamedTerm::Tag::app:
        return app(self(self, t->fun), self(self, t->arg));
      case NamedTerm::Tag::lam: {
        scope.push_back(t->name);
        TermRef body = self(self, t->body);
        scope.pop_back();
        return lam(std::move(body));
      }
    }
    throw ParseError("malformed term", 0);
  };
  return convert(convert, term);
}

TermRef parse_term(std::string_view text,
                   const std::vector<std::string>& free_context) {
  return to_nameless(parse_named_term(text), free_context);
}

// -------- term printer --------

namespace {

// prec 0: bare, 1: function position, 2: argument position
void print_rec(const TermRef& t, TermStyle style,
               std::vector<std::string>& names, int prec, std::string& out) {
  switch (t->tag()) {
    case Term::Tag::var: {
      std::size_t n = t->index();
      if (style == TermStyle::indexed) {
        out += std::to_string(n);
      } else if (n < names.size()) {
        out += names[names.size() - 1 - n];
      } else {
        out += "_free" + std::to_string(n - names.size());
      }
      return;
    }
    case Term::Tag::app: {
      bool parens = prec >= 2;
      if (parens) out += '(';
      print_rec(t->fun(), style, names, 1, out);
      out += ' ';
      print_rec(t->arg(), style, names, 2, out);
      if (parens) out += ')';
      return;
    }
    case Term::Tag::lam: {
      bool parens = prec >= 1;
      if (parens) out += '(';
      if (style == TermStyle::indexed) {
        out += "\\. ";
      } else {
        names.push_back("x" + std::to_string(names.size()));
        out += '\\' + names.back() + ". ";
      }
      print_rec(t->body(), style, names, 0, out);
      if (style == TermStyle::named) names.pop_back();
      if (parens) out += ')';
      return;
    }
  }
}

std::string print_in_context(const TermRef& t,
                             std::vector<std::string> names) {
  std::string out;
  print_rec(t, TermStyle::named, names, 0, out);
  return out;
}

}  // namespace

std::string print_term(const TermRef& term, TermStyle style) {
  std::string out;
  std::vector<std::string> names;
  print_rec(term, style, names, 0, out);
  return out;
}

// -------- type syntax --------

namespace {

TypeRef parse_type_at(Cursor& cur) {
  cur.skip_ws();
  TypeRef left;
  if (cur.try_consume('(')) {
    left = parse_type_at(cur);
    cur.expect(')');
  } else if (cur.try_consume('o')) {
    left = atom();
  } else {
    throw ParseError("expected 'o' or '('", cur.pos);
  }
  cur.skip_ws();
  if (cur.pos + 1 < cur.text.size() && cur.text[cur.pos] == '-' &&
      cur.text[cur.pos + 1] == '>') {
    cur.pos += 2;
    return arrow(std::move(left), parse_type_at(cur));
  }
  return left;
}

}  // namespace

TypeRef parse_type(std::string_view text) {
  Cursor cur{text};
  TypeRef t = parse_type_at(cur);
  if (!cur.eof()) throw ParseError("unexpected trailing input", cur.pos);
  return t;
}

std::string print_type(const TypeRef& type) {
  if (type->is_atom()) return "o";
  std::string dom = print_type(type->dom());
  if (!type->dom()->is_atom()) dom = "(" + dom + ")";
  return dom + " -> " + print_type(type->cod());
}

// -------- SSTS files --------

namespace {

struct LineScanner {
  std::string_view text;
  std::size_t pos = 0;

  // next non-empty, comment-stripped line; second = offset of line start
  std::optional<std::pair<std::string, std::size_t>> next() {
    while (pos < text.size()) {
      std::size_t start = pos;
      std::size_t end = text.find('\n', pos);
      std::string_view line = end == std::string_view::npos
                                  ? text.substr(pos)
                                  : text.substr(pos, end - pos);
      pos = end == std::string_view::npos ? text.size() : end + 1;
      if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
      std::size_t a = line.find_first_not_of(" \t\r");
      if (a == std::string_view::npos) continue;
      std::size_t b = line.find_last_not_of(" \t\r");
      return std::make_pair(std::string(line.substr(a, b - a + 1)), start);
    }
    return std::nullopt;
  }
};

}  // namespace

Ssts parse_ssts(std::string_view text) {
  Ssts system;
  system.rules.clear();
  Symbol max_symbol = 0;
  LineScanner lines{text};
  while (auto line = lines.next()) {
    std::istringstream in(line->first);
    unsigned long a, b, c, d;
    std::string sep;
    if (!(in >> a >> b >> sep >> c >> d) || sep != "=>")
      throw ParseError("expected 'a b => c d'", line->second);
    std::string rest;
    if (in >> rest) throw ParseError("trailing tokens in rule", line->second);
    Rule rule{static_cast<Symbol>(a), static_cast<Symbol>(b),
              static_cast<Symbol>(c), static_cast<Symbol>(d)};
    for (Symbol s : {rule.a, rule.b, rule.c, rule.d})
      max_symbol = std::max(max_symbol, s);
    system.rules.push_back(rule);
  }
  if (system.rules.empty()) throw EmptyRuleSetError();
  system.alphabet_size = std::max<std::size_t>(max_symbol + 1, 2);
  system.validate();
  return system;
}

std::string print_ssts(const Ssts& system) {
  std::string out;
  for (const Rule& r : system.rules) {
    out += std::to_string(r.a) + " " + std::to_string(r.b) + " => " +
           std::to_string(r.c) + " " + std::to_string(r.d) + "\n";
  }
  return out;
}

Derivation parse_derivation(std::string_view text) {
  Derivation steps;
  LineScanner lines{text};
  while (auto line = lines.next()) {
    std::istringstream in(line->first);
    unsigned long rule, position;
    if (!(in >> rule >> position))
      throw ParseError("expected 'rule position'", line->second);
    std::string rest;
    if (in >> rest) throw ParseError("trailing tokens in step", line->second);
    if (rule < 1 || position < 1)
      throw ParseError("rule and position are 1-based", line->second);
    steps.push_back(Step{rule, position});
  }
  return steps;
}

std::string print_derivation(const Derivation& steps) {
  std::string out;
  for (const Step& s : steps)
    out += std::to_string(s.rule) + " " + std::to_string(s.position) + "\n";
  return out;
}

// -------- instance document --------

std::string instance_to_json(const MatchingInstance& instance) {
  nlohmann::json doc;
  doc["sigma"] = print_type(instance.sigma);
  doc["tau"] = print_type(instance.tau);
  doc["F"] = print_term(instance.F);
  doc["N"] = print_term(instance.N);
  if (instance.source) {
    doc["alphabet_size"] = instance.source->alphabet_size;
    nlohmann::json rules = nlohmann::json::array();
    for (const Rule& r : instance.source->rules)
      rules.push_back(std::to_string(r.a) + " " + std::to_string(r.b) +
                      " => " + std::to_string(r.c) + " " + std::to_string(r.d));
    doc["rules"] = rules;
  } else {
    doc["rules"] = nlohmann::json::array();
  }
  return doc.dump(2) + "\n";
}

MatchingInstance instance_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), 0);
  }
  MatchingInstance instance;
  try {
    instance.sigma = parse_type(doc.at("sigma").get<std::string>());
    instance.tau = parse_type(doc.at("tau").get<std::string>());
    instance.F = parse_term(doc.at("F").get<std::string>());
    instance.N = parse_term(doc.at("N").get<std::string>());
    if (doc.contains("rules") && !doc.at("rules").empty()) {
      std::string rules_text;
      for (const auto& r : doc.at("rules"))
        rules_text += r.get<std::string>() + "\n";
      Ssts system = parse_ssts(rules_text);
      if (doc.contains("alphabet_size"))
        system.alphabet_size =
            std::max<std::size_t>(doc.at("alphabet_size").get<std::size_t>(),
                                  system.alphabet_size);
      system.validate();
      instance.source = std::move(system);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed instance document: ") + e.what(),
                     0);
  }
  if (!is_normal(instance.F) || !is_normal(instance.N))
    throw Error("instance terms must be beta-normal");
  if (!type_check({}, instance.F, arrow(instance.sigma, instance.tau)))
    throw Error("F is not typed at sigma -> tau");
  if (!type_check({}, instance.N, instance.tau))
    throw Error("N is not typed at tau");
  return instance;
}

// -------- extended symbols, intersection types, judgments --------

std::string print_ext_symbol(const ExtSymbol& s) {
  switch (s.kind) {
    case ExtSymbol::Kind::base:
      return std::to_string(s.value);
    case ExtSymbol::Kind::dollar:
      return "$";
    case ExtSymbol::Kind::bullet:
      return "*";
    case ExtSymbol::Kind::top:
      return "T";
    case ExtSymbol::Kind::bot:
      return "B";
  }
  return "?";
}

namespace {

std::string print_itype_prec(const ITypeRef& t, bool arg_position) {
  if (t->is_atom()) return print_ext_symbol(t->name());
  std::string dom;
  if (t->dom().empty()) {
    dom = "{}";
  } else if (t->dom().size() == 1) {
    dom = print_itype_prec(t->dom()[0], true);
  } else {
    dom = "(";
    for (std::size_t i = 0; i < t->dom().size(); ++i) {
      if (i) dom += " /\\ ";
      dom += print_itype_prec(t->dom()[i], true);
    }
    dom += ")";
  }
  std::string out = dom + " -> " + print_itype_prec(t->cod(), false);
  if (arg_position) out = "(" + out + ")";
  return out;
}

}  // namespace

std::string print_itype(const ITypeRef& t) {
  return print_itype_prec(t, false);
}

std::string print_judgment(const Judgment& j) {
  const std::size_t m = j.level;
  const std::size_t total = j.env.size();
  const std::size_t rule_count = total >= m + 3 ? total - m - 3 : 0;

  // Binder names, outermost first, matching the Gamma_m convention.
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= rule_count; ++i)
    names.push_back("r" + std::to_string(i));
  names.push_back("z0");
  names.push_back("z1");
  names.push_back("zs");
  for (std::size_t p = 1; p <= m; ++p) names.push_back("p" + std::to_string(p));

  std::string out = "{";
  bool first = true;
  for (std::size_t p = 1; p <= m; ++p) {
    const auto& entry = j.env[m - p];
    for (const ITypeRef& t : entry) {
      if (!first) out += ", ";
      first = false;
      out += "p" + std::to_string(p) + " : " + print_itype(t);
    }
  }
  out += "} |- ";
  out += print_in_context(j.term, names);
  out += " : " + print_itype(j.type);
  return out;
}

}  // namespace homatch
