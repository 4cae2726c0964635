#pragma once

#include <vector>

#include "nkind/group.hpp"
#include "nkind/parallel.hpp"

namespace nkind {

// One subgroup H of G x Z/N, never materialized. With C1 the order-d1
// subgroup of Z/N and C2 <= C1 of order d2 (d2 | d1 | N),
//   H = { (a, c) : a in A, c in C1, value(a) = class of c in C1/C2 }
// where value : A -> Z/ell (ell = d1/d2) has kernel B and descends to the
// Goursat isomorphism A/B -> C1/C2. The class of c = (N/d1) t is t mod ell.
struct GoursatRecord {
  Subgroup A;  // first-factor projection G'
  Subgroup B;  // kernel of value = G'' (normal in A, A/B cyclic)
  long long d1 = 1;
  long long d2 = 1;
  long long N = 1;
  std::vector<int> value;  // size |G|, -1 outside A

  long long ell() const { return d1 / d2; }
  long long order() const { return static_cast<long long>(B.order()) * d1; }
  bool member(int a, long long c) const;
  // Elements of H as (group index, residue mod N) pairs, ordered.
  std::vector<std::pair<int, long long>> elements(const FiniteGroup& g) const;
};

// The projection/intersection data of the pullback square attached to H.
struct ProjectData {
  Subgroup Gprime;
  Subgroup Gdoubleprime;
  long long Nprime = 1;
  long long Ndoubleprime = 1;
  long long ell = 1;
};

// Every subgroup of G x Z/N exactly once, via (A, B, d1, d2, iso) tuples.
// Ordered by (A, B, d1, d2, generator image); deterministic.
std::vector<GoursatRecord> goursat_enumerate(const FiniteGroup& g, long long N,
                                             Exec exec = Exec::Parallel);

ProjectData project_data(const FiniteGroup& g, const GoursatRecord& rec);

// Detectors evaluated through the membership oracle (pair arithmetic); no
// product group is ever built.
bool is_p_hyperelementary_product(const FiniteGroup& g, const GoursatRecord& rec, long long p);
bool is_p_elementary_product(const FiniteGroup& g, const GoursatRecord& rec, long long p);

// Test-only fallback: the actual product group of order |B| * d1.
FiniteGroup materialize_product(const FiniteGroup& g, const GoursatRecord& rec,
                                int cap = kDefaultMaterializeCap);

// Consistency of one record: B normal in A, A/B cyclic of order ell, value
// multiplicative with kernel B, |H| matches the membership-oracle count.
bool verify_record(const FiniteGroup& g, const GoursatRecord& rec);

}  // namespace nkind
