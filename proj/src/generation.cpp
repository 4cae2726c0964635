#include "nkind/generation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "nkind/arith.hpp"

namespace nkind {

std::vector<GenerationDatum> generation_data(const FiniteGroup& g, long long p, Exec exec) {
  FamilyReport fam = family_report(g, p, exec);
  const auto& pclasses = fam.pSubgroupClasses;
  std::vector<std::vector<GenerationDatum>> per_class(pclasses.size());
  for_each_index(pclasses.size(), exec, [&](std::size_t i) {
    const Subgroup& rep = pclasses[i].representative;
    PerpSet perp = c_perp(g, rep, p);
    for (const PerpElement& pe : perp.elements) {
      GenerationDatum d;
      d.Pclass = pclasses[i];
      d.g = pe.element;
      d.gOrder = pe.order;
      d.allowedKPrimes = prime_divisors(pe.order);
      std::vector<int> seed = rep.members;
      seed.push_back(pe.element);
      d.E = make_subgroup(g, close_subset(g, std::move(seed)));
      d.plainInduction = (pe.element == g.identity);
      // E must be the internal direct product <g> x P
      if (static_cast<long long>(d.E.order()) !=
          static_cast<long long>(pe.order) * rep.order())
        throw InternalError("generation datum: |E| != |g| |P|");
      if (!is_p_elementary_sub(g, d.E, p))
        throw InternalError("generation datum: target E is not p-elementary");
      per_class[i].push_back(std::move(d));
    }
  });
  std::vector<GenerationDatum> out;
  for (auto& v : per_class)
    for (auto& d : v) out.push_back(std::move(d));
  return out;
}

std::vector<DedupedDatum> dedupe_generation_data(const FiniteGroup& g,
                                                 const std::vector<GenerationDatum>& data) {
  std::map<std::tuple<std::vector<int>, std::vector<int>, int>, std::size_t> index;
  std::vector<DedupedDatum> out;
  for (const GenerationDatum& d : data) {
    auto key = std::make_tuple(d.Pclass.representative.members, canonical_conjugate(g, d.E),
                               d.gOrder);
    auto it = index.find(key);
    if (it == index.end()) {
      index.emplace(std::move(key), out.size());
      out.push_back(DedupedDatum{d, 1});
    } else {
      ++out[it->second].multiplicity;
    }
  }
  return out;
}

std::vector<SubgroupClass> elementary_cover(const FiniteGroup& g, long long p, Exec exec) {
  std::vector<GenerationDatum> data = generation_data(g, p, exec);
  std::map<std::vector<int>, long long> seen;  // canonical rep -> class size
  for (const GenerationDatum& d : data) {
    std::vector<int> canon = canonical_conjugate(g, d.E);
    if (!seen.count(canon)) {
      Subgroup rep{&g, canon};
      seen[canon] = g.n / normalizer(g, rep).order();
    }
  }
  std::vector<SubgroupClass> out;
  for (auto& [rep, size] : seen) out.push_back(SubgroupClass{Subgroup{&g, rep}, size});
  std::sort(out.begin(), out.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.representative.members.size() != b.representative.members.size())
      return a.representative.members.size() < b.representative.members.size();
    return a.representative.members < b.representative.members;
  });
  return out;
}

VerschiebungSplit split_verschiebung(long long k, long long m) {
  if (k < 1) throw SpecError("split_verschiebung: k must be positive");
  if (m < 1) throw SpecError("split_verschiebung: m must be positive");
  VerschiebungSplit s;
  s.k1 = 1;
  for (auto [q, e] : factorize(k))
    if (m % q == 0) s.k1 *= ipow(q, e);
  s.k0 = k / s.k1;
  s.l0 = mod_inverse(s.k0, m);
  return s;
}

long long frobenius_verschiebung_identity(long long k, long long x) {
  if (k < 1) throw SpecError("frobenius_verschiebung_identity: k must be positive");
  long long r;
  if (__builtin_mul_overflow(k, x, &r))
    throw SpecError("frobenius_verschiebung_identity: k x overflows");
  return r;
}

namespace {

// least q^l >= target
long long least_power_at_least(long long q, long long target) {
  long long r = 1;
  while (r < target) r *= q;
  return r;
}

}  // namespace

ExponentReport exponent_report(long long n) {
  if (n < 1) throw SpecError("exponent_report: n must be positive");
  if (n > 1000000000000000LL)
    throw SpecError("exponent_report: n above 10^15 is not supported");
  ExponentReport rep;
  rep.n = n;
  for (auto [q, e] : factorize(n)) {
    const long long cq = least_power_at_least(q, static_cast<long long>(e) * n);
    rep.perPrime.emplace_back(q, cq);
    rep.c *= cq;
    // c(n_q) has only the prime q: least q^l >= e * q^e
    const long long cnq = least_power_at_least(q, static_cast<long long>(e) * ipow(q, e));
    rep.d *= cnq;
    if (e >= 2)
      rep.refinedNK0 *= cnq;
    else
      rep.vanishingPrimes.push_back(q);
  }
  return rep;
}

VanishingReport vanishing_report(const FiniteGroup& g) {
  VanishingReport r;
  r.order = g.n;
  r.squarefree = true;
  for (auto [q, e] : factorize(g.n)) {
    if (e == 1)
      r.zeroLocalizations.push_back(q);
    else
      r.squarefree = false;
  }
  std::ostringstream os;
  if (r.squarefree) {
    os << "NK_n(ZG) = 0 for n <= 1: |G| = " << g.n
       << " is square-free, so every p-localization vanishes";
  } else if (!r.zeroLocalizations.empty()) {
    os << "NK_n(ZG)_(p) = 0 for n <= 1 at p in {";
    for (std::size_t i = 0; i < r.zeroLocalizations.size(); ++i)
      os << (i ? "," : "") << r.zeroLocalizations[i];
    os << "}: p^2 does not divide |G| = " << g.n;
  } else {
    os << "no prime p with p^2 not dividing |G| = " << g.n
       << "; no vanishing statement at this level";
  }
  r.statement = os.str();
  return r;
}

}  // namespace nkind
