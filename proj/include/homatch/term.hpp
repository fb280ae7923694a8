#pragma once
// Simply typed lambda calculus kernel: nameless terms, capture-avoiding
// substitution, normal-order normalization, beta-equivalence, and type
// inference over the single ground atom.

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace homatch {

class Term;
using TermRef = std::shared_ptr<const Term>;

// Variable / application / abstraction tree. Variables carry binder
// distances, so structural equality coincides with alpha-equivalence.
// Nodes are immutable and freely shared across terms and threads.
class Term {
public:
  enum class Tag { var, app, lam };

  Tag tag() const { return tag_; }
  std::size_t index() const { return index_; }
  const TermRef& fun() const { return left_; }
  const TermRef& arg() const { return right_; }
  const TermRef& body() const { return left_; }

  // Number of constructors in the tree.
  std::uint32_t size() const { return size_; }
  // Least n such that every free index is < n; 0 means closed.
  std::uint32_t free_bound() const { return free_bound_; }
  bool closed() const { return free_bound_ == 0; }

  friend TermRef var(std::size_t index);
  friend TermRef app(TermRef fun, TermRef arg);
  friend TermRef lam(TermRef body);

private:
  explicit Term(Tag tag) : tag_(tag) {}

  Tag tag_;
  std::size_t index_ = 0;
  TermRef left_;
  TermRef right_;
  std::uint32_t size_ = 1;
  std::uint32_t free_bound_ = 0;
};

TermRef var(std::size_t index);
TermRef app(TermRef fun, TermRef arg);
TermRef lam(TermRef body);

// f a1 a2 ... an, associating to the left.
TermRef app_spine(TermRef fun, const std::vector<TermRef>& args);
// n nested abstractions around body.
TermRef lam_n(std::size_t binders, TermRef body);

bool term_eq(const TermRef& a, const TermRef& b);

// Simple types over one ground atom. Arrows associate to the right.
class SimpleType;
using TypeRef = std::shared_ptr<const SimpleType>;

class SimpleType {
public:
  bool is_atom() const { return dom_ == nullptr; }
  const TypeRef& dom() const { return dom_; }
  const TypeRef& cod() const { return cod_; }
  std::uint32_t order() const { return order_; }

  friend TypeRef atom();
  friend TypeRef arrow(TypeRef dom, TypeRef cod);

private:
  SimpleType() = default;
  TypeRef dom_;
  TypeRef cod_;
  std::uint32_t order_ = 1;
};

TypeRef atom();
TypeRef arrow(TypeRef dom, TypeRef cod);
// d1 -> d2 -> ... -> dn -> cod
TypeRef arrow_chain(const std::vector<TypeRef>& doms, TypeRef cod);

bool type_eq(const TypeRef& a, const TypeRef& b);

// Maximal arrow nesting to the left, order(iota) = 1.
std::size_t type_order(const TypeRef& t);

// Position k holds the type of the variable with binder distance k.
using TypeEnv = std::vector<TypeRef>;
TypeEnv env_extend(const TypeEnv& env, TypeRef innermost);

// Increment free indices >= cutoff by amount.
TermRef shift(const TermRef& t, std::size_t amount, std::size_t cutoff = 0);

// target[index := replacement]: capture-avoiding, replacement lifted when
// passing under binders, free indices above index decremented.
TermRef substitute(const TermRef& target, std::size_t index,
                   const TermRef& replacement);

bool is_normal(const TermRef& t);

// One leftmost-outermost contraction, or nullopt if already normal.
std::optional<TermRef> leftmost_step(const TermRef& t);

struct NormalizeResult {
  TermRef term;          // normal form, or the term after `steps` contractions
  std::uint64_t steps = 0;
  bool normal = false;
};

// Repeated leftmost-outermost contraction, at most fuel steps.
NormalizeResult normalize(const TermRef& t, std::uint64_t fuel);

enum class Equiv { no, yes, undetermined };

// Normalize both sides (each with its own fuel budget) and compare.
// Undetermined only ever signals insufficient fuel, never a wrong verdict.
Equiv beta_equiv(const TermRef& a, const TermRef& b, std::uint64_t fuel);

// Canonical derivable type: the principal type with every residual type
// variable instantiated to the ground atom. nullopt when untypable.
std::optional<TypeRef> type_infer(const TypeEnv& env, const TermRef& t);

// Derivability of env |- t : want (subsumption against the principal type).
bool type_check(const TypeEnv& env, const TermRef& t, const TypeRef& want);

}  // namespace homatch
