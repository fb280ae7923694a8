#pragma once
// Intersection types over the extended alphabet: derivability checking
// for beta-normal subjects, the inhabitation environments read off an
// SSTS, and the witness judgments mirroring the compiled beta-equivalence
// constraints.

#include <cstddef>
#include <string>
#include <vector>

#include "homatch/gadgets.hpp"
#include "homatch/ssts.hpp"
#include "homatch/term.hpp"

namespace homatch {

// a  |  phi_1 /\ ... /\ phi_n -> phi  (n >= 0). Domains are canonical
// duplicate-free sorted sets, so equality is set equality.
class IType;
using ITypeRef = std::shared_ptr<const IType>;

class IType {
public:
  bool is_atom() const { return is_atom_; }
  const ExtSymbol& name() const { return name_; }
  const std::vector<ITypeRef>& dom() const { return dom_; }
  const ITypeRef& cod() const { return cod_; }

  friend ITypeRef iatom(ExtSymbol name);
  friend ITypeRef iarrow(std::vector<ITypeRef> dom, ITypeRef cod);

private:
  IType() = default;
  bool is_atom_ = true;
  ExtSymbol name_{};
  std::vector<ITypeRef> dom_;
  ITypeRef cod_;
};

ITypeRef iatom(ExtSymbol name);
// Canonicalizes the domain set (sorted, duplicates removed).
ITypeRef iarrow(std::vector<ITypeRef> dom, ITypeRef cod);
// d1 -> d2 -> ... -> cod with singleton domains.
ITypeRef iarrow_chain(const std::vector<ITypeRef>& singleton_doms,
                      ITypeRef cod);

bool itype_eq(const ITypeRef& a, const ITypeRef& b);
bool itype_less(const ITypeRef& a, const ITypeRef& b);
std::vector<ITypeRef> canonical_set(std::vector<ITypeRef> types);

// Position k holds the assumption set of the variable with binder
// distance k; empty sets are allowed.
using ITypeEnv = std::vector<std::vector<ITypeRef>>;

struct Judgment {
  ITypeEnv env;
  TermRef term;
  ITypeRef type;
  std::string label;      // e.g. "Q row 0" or "R[2] row 1"
  std::size_t level = 1;  // number of p variables in scope
};

// Syntax-directed derivability for beta-normal subjects. Throws
// NotNormalError when the subject contains a redex.
bool itype_derivable(const Judgment& j);

// Assumption sets read off the system: r_i for rule ab=>cd receives
// (1->c->a) /\ (0->d->b) /\ /\_e (bullet->e->e); z_1 receives {1}; z_0
// and z_star receive the fixed control intersections.
struct ITypeEnvParts {
  std::vector<std::vector<ITypeRef>> rule_entries;  // r_1 .. r_L
  std::vector<ITypeRef> z1_entry;
  std::vector<ITypeRef> z0_entry;
  std::vector<ITypeRef> zstar_entry;
};

ITypeEnvParts build_itype_envs(const Ssts& system);

// Distance-indexed environment at the level given by p_entries.size(),
// following the Gamma_m binder convention.
ITypeEnv assemble_itype_env(const ITypeEnvParts& parts,
                            const std::vector<std::vector<ITypeRef>>& p_entries);

// Judgments mirroring the beta-equivalence rows of a valid witness: the
// Q block for the derivation term, then the R blocks bottom-up. Throws
// InvalidWitnessError unless the derivation rewrites 0^{n+1} to 1^{n+1}.
std::vector<Judgment> witness_judgments(const Ssts& system, std::size_t n,
                                        const Derivation& derivation);

}  // namespace homatch
