#include "homatch/term.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <unordered_map>

namespace homatch {

// -------- construction --------

TermRef var(std::size_t index) {
  auto t = std::shared_ptr<Term>(new Term(Term::Tag::var));
  t->index_ = index;
  t->size_ = 1;
  t->free_bound_ = static_cast<std::uint32_t>(index + 1);
  return t;
}

TermRef app(TermRef fun, TermRef arg) {
  assert(fun && arg);
  auto t = std::shared_ptr<Term>(new Term(Term::Tag::app));
  t->size_ = 1 + fun->size_ + arg->size_;
  t->free_bound_ = std::max(fun->free_bound_, arg->free_bound_);
  t->left_ = std::move(fun);
  t->right_ = std::move(arg);
  return t;
}

TermRef lam(TermRef body) {
  assert(body);
  auto t = std::shared_ptr<Term>(new Term(Term::Tag::lam));
  t->size_ = 1 + body->size_;
  t->free_bound_ = body->free_bound_ > 0 ? body->free_bound_ - 1 : 0;
  t->left_ = std::move(body);
  return t;
}

TermRef app_spine(TermRef fun, const std::vector<TermRef>& args) {
  TermRef t = std::move(fun);
  for (const auto& a : args) t = app(std::move(t), a);
  return t;
}

TermRef lam_n(std::size_t binders, TermRef body) {
  TermRef t = std::move(body);
  for (std::size_t i = 0; i < binders; ++i) t = lam(std::move(t));
  return t;
}

bool term_eq(const TermRef& a, const TermRef& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->tag() != b->tag() || a->size() != b->size() ||
      a->free_bound() != b->free_bound())
    return false;
  switch (a->tag()) {
    case Term::Tag::var:
      return a->index() == b->index();
    case Term::Tag::app:
      return term_eq(a->fun(), b->fun()) && term_eq(a->arg(), b->arg());
    case Term::Tag::lam:
      return term_eq(a->body(), b->body());
  }
  return false;
}

// -------- types --------

TypeRef atom() {
  static const TypeRef iota = std::shared_ptr<SimpleType>(new SimpleType());
  return iota;
}

TypeRef arrow(TypeRef dom, TypeRef cod) {
  assert(dom && cod);
  auto t = std::shared_ptr<SimpleType>(new SimpleType());
  t->order_ = std::max(dom->order() + 1, cod->order());
  t->dom_ = std::move(dom);
  t->cod_ = std::move(cod);
  return t;
}

TypeRef arrow_chain(const std::vector<TypeRef>& doms, TypeRef cod) {
  TypeRef t = std::move(cod);
  for (auto it = doms.rbegin(); it != doms.rend(); ++it) t = arrow(*it, t);
  return t;
}

bool type_eq(const TypeRef& a, const TypeRef& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->is_atom() != b->is_atom() || a->order() != b->order()) return false;
  if (a->is_atom()) return true;
  return type_eq(a->dom(), b->dom()) && type_eq(a->cod(), b->cod());
}

std::size_t type_order(const TypeRef& t) {
  assert(t);
  return t->order();
}

TypeEnv env_extend(const TypeEnv& env, TypeRef innermost) {
  TypeEnv out;
  out.reserve(env.size() + 1);
  out.push_back(std::move(innermost));
  out.insert(out.end(), env.begin(), env.end());
  return out;
}

// -------- shift / substitute --------

TermRef shift(const TermRef& t, std::size_t amount, std::size_t cutoff) {
  if (amount == 0 || t->free_bound() <= cutoff) return t;
  switch (t->tag()) {
    case Term::Tag::var:
      return t->index() >= cutoff ? var(t->index() + amount) : t;
    case Term::Tag::app: {
      TermRef f = shift(t->fun(), amount, cutoff);
      TermRef a = shift(t->arg(), amount, cutoff);
      if (f.get() == t->fun().get() && a.get() == t->arg().get()) return t;
      return app(std::move(f), std::move(a));
    }
    case Term::Tag::lam: {
      TermRef b = shift(t->body(), amount, cutoff + 1);
      if (b.get() == t->body().get()) return t;
      return lam(std::move(b));
    }
  }
  return t;
}

namespace {

// depth = number of binders passed; replaces index (orig + depth).
TermRef subst_at(const TermRef& t, std::size_t index, const TermRef& repl,
                 std::size_t depth) {
  if (t->free_bound() <= index + depth) return t;  // target index not free here
  switch (t->tag()) {
    case Term::Tag::var: {
      std::size_t n = t->index();
      if (n == index + depth) return shift(repl, depth);
      if (n > index + depth) return var(n - 1);
      return t;
    }
    case Term::Tag::app: {
      TermRef f = subst_at(t->fun(), index, repl, depth);
      TermRef a = subst_at(t->arg(), index, repl, depth);
      if (f.get() == t->fun().get() && a.get() == t->arg().get()) return t;
      return app(std::move(f), std::move(a));
    }
    case Term::Tag::lam: {
      TermRef b = subst_at(t->body(), index, repl, depth + 1);
      if (b.get() == t->body().get()) return t;
      return lam(std::move(b));
    }
  }
  return t;
}

}  // namespace

TermRef substitute(const TermRef& target, std::size_t index,
                   const TermRef& replacement) {
  return subst_at(target, index, replacement, 0);
}

// -------- normalization --------

bool is_normal(const TermRef& t) {
  switch (t->tag()) {
    case Term::Tag::var:
      return true;
    case Term::Tag::lam:
      return is_normal(t->body());
    case Term::Tag::app:
      if (t->fun()->tag() == Term::Tag::lam) return false;
      return is_normal(t->fun()) && is_normal(t->arg());
  }
  return true;
}

std::optional<TermRef> leftmost_step(const TermRef& t) {
  switch (t->tag()) {
    case Term::Tag::var:
      return std::nullopt;
    case Term::Tag::lam: {
      auto b = leftmost_step(t->body());
      if (!b) return std::nullopt;
      return lam(std::move(*b));
    }
    case Term::Tag::app: {
      if (t->fun()->tag() == Term::Tag::lam)
        return substitute(t->fun()->body(), 0, t->arg());
      if (auto f = leftmost_step(t->fun())) return app(std::move(*f), t->arg());
      if (auto a = leftmost_step(t->arg())) return app(t->fun(), std::move(*a));
      return std::nullopt;
    }
  }
  return std::nullopt;
}

namespace {

struct Budget {
  std::uint64_t fuel;
  std::uint64_t steps = 0;
  bool complete = true;

  bool spend() {
    if (fuel == 0) {
      complete = false;
      return false;
    }
    --fuel;
    ++steps;
    return true;
  }
};

TermRef nf(const TermRef& t, Budget& budget);

// Head-spine reduction: contracts head redexes until the head is a
// variable or the whole term is an abstraction. These contractions are
// exactly the leftmost-outermost ones for the enclosing term.
TermRef whnf(TermRef t, Budget& budget) {
  while (budget.complete && t->tag() == Term::Tag::app) {
    TermRef f = whnf(t->fun(), budget);
    if (!budget.complete || f->tag() != Term::Tag::lam) {
      if (f.get() == t->fun().get()) return t;
      return app(std::move(f), t->arg());
    }
    if (!budget.spend()) return app(std::move(f), t->arg());
    t = substitute(f->body(), 0, t->arg());
  }
  return t;
}

TermRef nf(const TermRef& t, Budget& budget) {
  switch (t->tag()) {
    case Term::Tag::var:
      return t;
    case Term::Tag::lam: {
      TermRef b = nf(t->body(), budget);
      if (b.get() == t->body().get()) return t;
      return lam(std::move(b));
    }
    case Term::Tag::app: {
      TermRef h = whnf(t, budget);
      if (!budget.complete) return h;
      if (h->tag() != Term::Tag::app) return nf(h, budget);
      // Variable-headed spine: normalize the function part (its remaining
      // redexes sit in its arguments, left of ours), then the argument.
      TermRef f = nf(h->fun(), budget);
      if (!budget.complete)
        return f.get() == h->fun().get() ? h : app(std::move(f), h->arg());
      TermRef a = nf(h->arg(), budget);
      if (f.get() == h->fun().get() && a.get() == h->arg().get()) return h;
      return app(std::move(f), std::move(a));
    }
  }
  return t;
}

}  // namespace

NormalizeResult normalize(const TermRef& t, std::uint64_t fuel) {
  Budget budget{fuel};
  TermRef out = nf(t, budget);
  return NormalizeResult{std::move(out), budget.steps, budget.complete};
}

Equiv beta_equiv(const TermRef& a, const TermRef& b, std::uint64_t fuel) {
  NormalizeResult na = normalize(a, fuel);
  NormalizeResult nb = normalize(b, fuel);
  if (!na.normal || !nb.normal) return Equiv::undetermined;
  return term_eq(na.term, nb.term) ? Equiv::yes : Equiv::no;
}

// -------- type inference --------

namespace {

// Unification over an arena of type nodes. Node 0 is the ground atom.
struct Infer {
  struct Node {
    enum class K { atom, arrow, tvar };
    K kind;
    int dom = -1;
    int cod = -1;
    int link = -1;  // tvar binding, -1 when unbound
  };

  std::vector<Node> nodes;

  Infer() { nodes.push_back({Node::K::atom}); }

  int fresh() {
    nodes.push_back({Node::K::tvar});
    return static_cast<int>(nodes.size()) - 1;
  }

  int mk_arrow(int d, int c) {
    nodes.push_back({Node::K::arrow, d, c});
    return static_cast<int>(nodes.size()) - 1;
  }

  int find(int t) {
    while (nodes[t].kind == Node::K::tvar && nodes[t].link >= 0)
      t = nodes[t].link;
    return t;
  }

  bool occurs(int v, int t) {
    t = find(t);
    if (t == v) return true;
    if (nodes[t].kind == Node::K::arrow)
      return occurs(v, nodes[t].dom) || occurs(v, nodes[t].cod);
    return false;
  }

  bool unify(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return true;
    if (nodes[a].kind == Node::K::tvar) {
      if (occurs(a, b)) return false;
      nodes[a].link = b;
      return true;
    }
    if (nodes[b].kind == Node::K::tvar) return unify(b, a);
    if (nodes[a].kind != nodes[b].kind) return false;
    if (nodes[a].kind == Node::K::atom) return true;
    return unify(nodes[a].dom, nodes[b].dom) &&
           unify(nodes[a].cod, nodes[b].cod);
  }

  int from_type(const TypeRef& t) {
    if (t->is_atom()) return 0;
    int d = from_type(t->dom());
    int c = from_type(t->cod());
    return mk_arrow(d, c);
  }

  // env uses stack convention: innermost binder at the back.
  bool infer(std::vector<int>& env, const TermRef& t, int& out) {
    switch (t->tag()) {
      case Term::Tag::var: {
        std::size_t n = t->index();
        if (n >= env.size()) return false;  // unbound variable
        out = env[env.size() - 1 - n];
        return true;
      }
      case Term::Tag::app: {
        int tf = 0, ta = 0;
        if (!infer(env, t->fun(), tf)) return false;
        if (!infer(env, t->arg(), ta)) return false;
        int r = fresh();
        if (!unify(tf, mk_arrow(ta, r))) return false;
        out = r;
        return true;
      }
      case Term::Tag::lam: {
        int a = fresh();
        env.push_back(a);
        int tb = 0;
        bool ok = infer(env, t->body(), tb);
        env.pop_back();
        if (!ok) return false;
        out = mk_arrow(a, tb);
        return true;
      }
    }
    return false;
  }

  // Residual type variables become the ground atom.
  TypeRef resolve(int t) {
    t = find(t);
    switch (nodes[t].kind) {
      case Node::K::atom:
      case Node::K::tvar:
        return atom();
      case Node::K::arrow:
        return arrow(resolve(nodes[t].dom), resolve(nodes[t].cod));
    }
    return atom();
  }

  // One-way matching of the (pruned) principal type against a ground type;
  // each residual variable must map to a single ground type.
  bool matches(int t, const TypeRef& want,
               std::unordered_map<int, TypeRef>& binding) {
    t = find(t);
    switch (nodes[t].kind) {
      case Node::K::tvar: {
        auto it = binding.find(t);
        if (it == binding.end()) {
          binding.emplace(t, want);
          return true;
        }
        return type_eq(it->second, want);
      }
      case Node::K::atom:
        return want->is_atom();
      case Node::K::arrow:
        return !want->is_atom() && matches(nodes[t].dom, want->dom(), binding) &&
               matches(nodes[t].cod, want->cod(), binding);
    }
    return false;
  }
};

// Shared front end: principal type of t in env, as an arena node.
std::optional<std::pair<Infer, int>> principal(const TypeEnv& env,
                                               const TermRef& t) {
  Infer inf;
  std::vector<int> stack;
  stack.reserve(env.size());
  // TypeEnv is distance-indexed; the stack wants outermost first.
  for (auto it = env.rbegin(); it != env.rend(); ++it)
    stack.push_back(inf.from_type(*it));
  int out = 0;
  if (!inf.infer(stack, t, out)) return std::nullopt;
  return std::make_pair(std::move(inf), out);
}

}  // namespace

std::optional<TypeRef> type_infer(const TypeEnv& env, const TermRef& t) {
  auto p = principal(env, t);
  if (!p) return std::nullopt;
  return p->first.resolve(p->second);
}

bool type_check(const TypeEnv& env, const TermRef& t, const TypeRef& want) {
  auto p = principal(env, t);
  if (!p) return false;
  std::unordered_map<int, TypeRef> binding;
  return p->first.matches(p->second, want, binding);
}

}  // namespace homatch
