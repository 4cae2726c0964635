#pragma once

#include <string>
#include <vector>

#include "nkind/goursat.hpp"
#include "nkind/group.hpp"
#include "nkind/parallel.hpp"

namespace nkind {

enum class GammaCase { Deep, Elementary };

// Outcome of classifying one p-hyperelementary H <= G x Z/N. The inverse
// image Gamma_H <= G x Z meets the second factor in k.Z with k = N/N'; the
// Deep case is k = m >= M, otherwise Gamma_H ~ P x Z via
// alpha(x, n) = (x g0^n, nk) with P = G'' and g0 a splitting preimage of the
// generator u of Z/ell.
struct ClassificationRecord {
  GammaCase kind = GammaCase::Deep;
  long long m = 1;  // N / N', recorded for both cases
  GoursatRecord H;
  bool hIsElementary = false;  // detector result on H, recorded for both cases

  // Elementary payload:
  Subgroup P;
  long long ell = 1;
  long long k = 1;  // = m
  long long u = 0;  // class of k in C1/C2 (1 mod ell; 0 when ell = 1)
  int g0 = 0;

  // j : P x Z/ell -> G, (x, t) -> x * g0^t
  int j_image(const FiniteGroup& g, int x, long long t) const;
  // j materialized as a GroupHom from the product group P x Z/ell.
  GroupHom j_hom(const FiniteGroup& g, std::shared_ptr<const FiniteGroup>& storage) const;
};

// Smallest N with p not dividing N, q | N exactly for the primes q != p
// dividing n, and q^k >= M*n for every full prime power q^k of N.
long long choose_N(long long M, long long n, long long p);

ClassificationRecord classify(const FiniteGroup& g, const GoursatRecord& H, long long M,
                              long long p);

// Window checks of alpha on n in [-window, window]: lands in Gamma_H,
// injective, and hits every slice element. On failure *fail (if given)
// receives the first counterexample.
bool verify_alpha(const FiniteGroup& g, const ClassificationRecord& rec, long long window,
                  std::string* fail = nullptr);

// Commutativity of (j x k id) . (id_P x beta) = i . alpha on the generating
// set {(x, 0) : x generating P} and (e, 1), computed exactly in G x Z.
bool verify_diagram(const FiniteGroup& g, const ClassificationRecord& rec);

// pr_Z(Gamma_H) = k.Z with k = N/N', verified on |z| <= window.
bool gamma_ladder_check(const FiniteGroup& g, const GoursatRecord& H, long long window);

struct ClassifySweep {
  long long N = 1;
  long long M = 1;
  long long p = 2;
  std::vector<ClassificationRecord> records;  // one per p-hyperelementary H

  // Indices of the records with m < M; these are the ones the dichotomy
  // forces into the elementary case.
  std::vector<std::size_t> shallow() const;
};

// choose_N + goursat_enumerate + filter + classify.
ClassifySweep classify_all(const FiniteGroup& g, long long p, long long M,
                           Exec exec = Exec::Parallel);

}  // namespace nkind
