#pragma once

#include <string>
#include <vector>

#include "nkind/families.hpp"
#include "nkind/group.hpp"
#include "nkind/parallel.hpp"
#include "nkind/snf.hpp"

namespace nkind {

// One generator datum: a p-subgroup class P, an element g of C_G^perp(P),
// and the p-elementary target E = <g> x P of the factorized twisted
// induction map.
struct GenerationDatum {
  SubgroupClass Pclass;
  int g = 0;
  int gOrder = 1;
  std::vector<long long> allowedKPrimes;  // primes of |g|; I(g) = their multiples
  Subgroup E;
  bool plainInduction = false;  // g = e: ordinary induction from P
};

std::vector<GenerationDatum> generation_data(const FiniteGroup& g, long long p,
                                             Exec exec = Exec::Parallel);

// De-duplicated by (P-class, E-class, |g|); keeps the first datum and counts.
struct DedupedDatum {
  GenerationDatum datum;
  long long multiplicity = 1;
};
std::vector<DedupedDatum> dedupe_generation_data(const FiniteGroup& g,
                                                 const std::vector<GenerationDatum>& data);

// Distinct conjugacy classes of the elementary targets E.
std::vector<SubgroupClass> elementary_cover(const FiniteGroup& g, long long p,
                                            Exec exec = Exec::Parallel);

// k = k0 k1 with k1 the largest divisor of k supported on the primes of m,
// gcd(k0, m) = 1 and l0 k0 = 1 mod m.
struct VerschiebungSplit {
  long long k0 = 1, k1 = 1, l0 = 1;
};
VerschiebungSplit split_verschiebung(long long k, long long m);

// Arithmetic shadow of F_k . V_k = k id.
long long frobenius_verschiebung_identity(long long k, long long x);

// Exponent bounds for NK_0(ZG), |G| = n: c_q(n) = least q^l >= k n for
// n_q = q^k, c(n) their product, d(n) the product of the c(n_q), and the
// refined bound dropping primes with p^2 not dividing n.
struct ExponentReport {
  long long n = 1;
  std::vector<std::pair<long long, long long>> perPrime;  // q -> c_q(n)
  BigInt c = 1;
  BigInt d = 1;
  BigInt refinedNK0 = 1;
  std::vector<long long> vanishingPrimes;  // q | n with q^2 not dividing n
};
ExponentReport exponent_report(long long n);

struct VanishingReport {
  long long order = 1;
  bool squarefree = true;
  std::vector<long long> zeroLocalizations;
  std::string statement;
};
VanishingReport vanishing_report(const FiniteGroup& g);

}  // namespace nkind
