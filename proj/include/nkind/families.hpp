#pragma once

#include <string>
#include <vector>

#include "nkind/group.hpp"
#include "nkind/parallel.hpp"

namespace nkind {

// p-subgroups, p-elementary and p-hyperelementary subgroup classes of G.
struct FamilyReport {
  long long prime = 2;
  std::vector<SubgroupClass> pSubgroupClasses;
  std::vector<SubgroupClass> pElementaryClasses;
  std::vector<SubgroupClass> pHyperelementaryClasses;
};

struct PerpElement {
  int element = 0;
  int order = 1;
};

// C_G^perp(P): elements commuting with all of P whose order is prime to p.
struct PerpSet {
  Subgroup base;
  std::vector<PerpElement> elements;
};

bool is_p_group(const FiniteGroup& g, long long p);
bool is_p_elementary(const FiniteGroup& g, long long p);
bool is_p_hyperelementary(const FiniteGroup& g, long long p);

// Same detectors evaluated on a subgroup through the parent's table.
bool is_p_group_sub(const FiniteGroup& g, const Subgroup& s, long long p);
bool is_p_elementary_sub(const FiniteGroup& g, const Subgroup& s, long long p);
bool is_p_hyperelementary_sub(const FiniteGroup& g, const Subgroup& s, long long p);

FamilyReport family_report(const FiniteGroup& g, long long p, Exec exec = Exec::Parallel);

PerpSet c_perp(const FiniteGroup& g, const Subgroup& p_sub, long long p);

// k is admissible for g when every prime of k divides ord(g).
bool in_I(long long k, long long ord_g);
std::vector<long long> i_set(long long ord_g, long long bound);

struct ElementarityCheck {
  bool hypothesisHolds = false;
  bool conclusionHolds = false;
};

// For a p-hyperelementary G: hypothesis = every prime q != p dividing |G|
// divides the abelianization order; conclusion = G is p-elementary. The
// hypothesis implies the conclusion; a violation throws InternalError.
ElementarityCheck elementarity_criterion(const FiniteGroup& g, long long p);

// True when the Sylow p-subgroup is normal and C_G(P) <= P for every
// nontrivial subgroup P of it. Then twisted induction degenerates and the
// induction map from the Sylow subgroup's Nil group fixed points is an
// isomorphism after localizing at p.
bool induction_isomorphism_condition(const FiniteGroup& g, long long p);

// All semidirect products C x| P with C cyclic prime to p and P from the
// built-in p-group list (cyclic, elementary abelian of rank <= 2, and for
// p = 2 the dihedral and quaternion groups of order 8), every action map,
// |C||P| <= order_bound. Duplicates by construction are kept.
std::vector<FiniteGroup> hyperelementary_corpus(long long p, int order_bound);

// The built-in p-group list used by the corpus.
std::vector<FiniteGroup> corpus_p_groups(long long p, int order_bound);

// All homomorphisms from the canonical generators of P into the units mod m,
// as generator-image tuples (lexicographic order over units_mod(m)).
std::vector<std::vector<long long>> action_maps(const FiniteGroup& p_group, long long m);

}  // namespace nkind
