#include "nkind/gamma.hpp"

#include <algorithm>
#include <set>
#include <numeric>
#include <sstream>

#include "nkind/arith.hpp"
#include "nkind/families.hpp"

namespace nkind {

int ClassificationRecord::j_image(const FiniteGroup& g, int x, long long t) const {
  return g.compose(x, g.power(g0, pos_mod(t, ell)));
}

GroupHom ClassificationRecord::j_hom(const FiniteGroup& g,
                                     std::shared_ptr<const FiniteGroup>& storage) const {
  FiniteGroup pgrp = materialize(g, P);
  FiniteGroup cyc = make_cyclic(ell);
  auto src = std::make_shared<FiniteGroup>(make_product(pgrp, cyc, kDefaultMaterializeCap));
  GroupHom j;
  j.source = src.get();
  j.target = &g;
  j.image.resize(src->n);
  for (int xi = 0; xi < pgrp.n; ++xi)
    for (long long t = 0; t < ell; ++t)
      j.image[xi * cyc.n + t] = j_image(g, P.members[xi], t);
  storage = std::move(src);
  return j;
}

long long choose_N(long long M, long long n, long long p) {
  if (!is_prime(p)) throw SpecError("choose_N: p must be prime");
  if (M < 1 || n < 1) throw SpecError("choose_N: M and n must be positive");
  if (M > (1LL << 40) / n) throw SpecError("choose_N: M n is out of range");
  long long N = 1;
  for (long long q : prime_divisors(n)) {
    if (q == p) continue;
    long long qk = q;
    while (qk < M * n) qk *= q;
    if (N > (1LL << 62) / qk) throw SpecError("choose_N: modulus overflows");
    N *= qk;
  }
  return N;
}

ClassificationRecord classify(const FiniteGroup& g, const GoursatRecord& H, long long M,
                              long long p) {
  if (M < 1) throw SpecError("classify: M must be positive");
  ClassificationRecord rec;
  rec.H = H;
  rec.m = H.N / H.d1;
  rec.k = rec.m;
  rec.hIsElementary = is_p_elementary_product(g, H, p);
  if (rec.m >= M) {
    rec.kind = GammaCase::Deep;
    return rec;
  }

  // Shallow case: the dichotomy forces H elementary with G'' a p-group.
  if (!is_p_hyperelementary_product(g, H, p))
    throw SpecError("classify: H is not p-hyperelementary");
  if (!rec.hIsElementary)
    throw InternalError("classification dichotomy failed: shallow H not p-elementary");
  rec.kind = GammaCase::Elementary;
  rec.P = H.B;
  if (p_prime_part(rec.P.order(), p) != 1)
    throw InternalError("classification dichotomy failed: G'' is not a p-group");
  rec.ell = H.ell();
  if (std::gcd(rec.ell, p) != 1)
    throw InternalError("classification: ell not prime to p");
  rec.u = (rec.ell == 1) ? 0 : 1;

  // Splitting: least preimage of u in G' that is an ell-th root of identity.
  rec.g0 = -1;
  for (int a : H.A.members) {
    if (H.value[a] != static_cast<int>(rec.u)) continue;
    if (g.power(a, rec.ell) != g.identity) continue;
    rec.g0 = a;
    break;
  }
  if (rec.g0 < 0)
    throw InternalError("classification: no splitting preimage of the generator exists");

  // j injective: x * g0^t pairwise distinct over P x Z/ell.
  std::set<int> seen;
  for (int x : rec.P.members)
    for (long long t = 0; t < rec.ell; ++t)
      if (!seen.insert(rec.j_image(g, x, t)).second)
        throw InternalError("classification: j is not injective");
  return rec;
}

bool verify_alpha(const FiniteGroup& g, const ClassificationRecord& rec, long long window,
                  std::string* fail) {
  if (rec.kind != GammaCase::Elementary)
    throw SpecError("verify_alpha: record is not in the elementary case");
  auto report = [&](const std::string& msg) {
    if (fail) *fail = msg;
    return false;
  };
  const GoursatRecord& H = rec.H;
  std::set<std::pair<int, long long>> image;
  for (long long n = -window; n <= window; ++n) {
    const long long z = n * rec.k;
    const long long cmod = pos_mod(z, H.N);
    for (int x : rec.P.members) {
      const int h = g.compose(x, g.power(rec.g0, n));
      if (!H.member(h, cmod)) {
        std::ostringstream os;
        os << "alpha(" << g.names[x] << "," << n << ") = (" << g.names[h] << "," << z
           << ") is not in Gamma_H";
        return report(os.str());
      }
      image.insert({h, z});
    }
    // every slice element is hit
    const int g0inv_n = g.power(rec.g0, -n);
    for (int h = 0; h < g.n; ++h) {
      if (!H.member(h, cmod)) continue;
      if (!rec.P.contains(g.compose(h, g0inv_n))) {
        std::ostringstream os;
        os << "slice element (" << g.names[h] << "," << z << ") is not in the image of alpha";
        return report(os.str());
      }
    }
  }
  const long long expected = static_cast<long long>(rec.P.order()) * (2 * window + 1);
  if (static_cast<long long>(image.size()) != expected)
    return report("alpha is not injective on the window");
  return true;
}

bool verify_diagram(const FiniteGroup& g, const ClassificationRecord& rec) {
  if (rec.kind != GammaCase::Elementary)
    throw SpecError("verify_diagram: record is not in the elementary case");
  // both composites as maps P x Z -> G x Z, compared on (x,0) for generators
  // x of P and on (e,1)
  auto lhs = [&](int x, long long n) {
    const long long t = pos_mod(n * rec.u, rec.ell);  // beta then j x k.id
    return std::make_pair(rec.j_image(g, x, t), rec.k * n);
  };
  auto rhs = [&](int x, long long n) {  // i . alpha
    return std::make_pair(g.compose(x, g.power(rec.g0, n)), n * rec.k);
  };
  std::vector<std::pair<int, long long>> probes;
  for (int x : generating_set(g, rec.P.members)) probes.emplace_back(x, 0);
  probes.emplace_back(g.identity, 1);
  for (auto [x, n] : probes)
    if (lhs(x, n) != rhs(x, n)) return false;
  return true;
}

bool gamma_ladder_check(const FiniteGroup& g, const GoursatRecord& H, long long window) {
  const long long k = H.N / H.d1;
  for (long long z = -window; z <= window; ++z) {
    bool nonempty = false;
    for (int h = 0; h < g.n && !nonempty; ++h)
      if (H.member(h, pos_mod(z, H.N))) nonempty = true;
    if (nonempty != (z % k == 0)) return false;
  }
  return true;
}

std::vector<std::size_t> ClassifySweep::shallow() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < records.size(); ++i)
    if (records[i].m < M) out.push_back(i);
  return out;
}

ClassifySweep classify_all(const FiniteGroup& g, long long p, long long M, Exec exec) {
  ClassifySweep sweep;
  sweep.M = M;
  sweep.p = p;
  sweep.N = choose_N(M, g.n, p);
  std::vector<GoursatRecord> recs = goursat_enumerate(g, sweep.N, exec);

  std::vector<char> keep(recs.size(), 0);
  for_each_index(recs.size(), exec, [&](std::size_t i) {
    keep[i] = is_p_hyperelementary_product(g, recs[i], p) ? 1 : 0;
  });
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < recs.size(); ++i)
    if (keep[i]) chosen.push_back(i);

  sweep.records.resize(chosen.size());
  for_each_index(chosen.size(), exec, [&](std::size_t i) {
    sweep.records[i] = classify(g, recs[chosen[i]], M, p);
  });
  return sweep;
}

}  // namespace nkind
