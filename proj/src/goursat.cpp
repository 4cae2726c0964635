#include "nkind/goursat.hpp"

#include <algorithm>
#include <numeric>

#include "nkind/arith.hpp"
#include "nkind/families.hpp"

namespace nkind {

bool GoursatRecord::member(int a, long long c) const {
  if (a < 0 || a >= static_cast<int>(value.size()) || value[a] < 0) return false;
  long long m1 = N / d1;
  c = pos_mod(c, N);
  if (c % m1 != 0) return false;
  long long t = c / m1;
  return value[a] == static_cast<int>(t % ell());
}

std::vector<std::pair<int, long long>> GoursatRecord::elements(const FiniteGroup&) const {
  std::vector<std::pair<int, long long>> out;
  const long long m1 = N / d1;
  for (int a : A.members)
    for (long long t = 0; t < d1; ++t)
      if (value[a] == static_cast<int>(t % ell())) out.emplace_back(a, m1 * t);
  return out;
}

namespace {

// Discrete-log table of A/B against its least generator coset; empty when B
// is not normal in A or A/B is not cyclic.
std::vector<int> coset_dlog(const FiniteGroup& g, const Subgroup& A, const Subgroup& B) {
  for (int a : A.members)
    for (int b : B.members)
      if (!B.contains(g.conjugate(b, a))) return {};
  const long long ell = A.order() / B.order();

  int gen = -1;
  for (int x : A.members) {
    long long k = 1;
    int y = x;
    while (!B.contains(y)) {
      y = g.compose(y, x);
      ++k;
    }
    if (k == ell) {
      gen = x;
      break;
    }
  }
  if (gen < 0) return {};  // not cyclic

  std::vector<int> value(g.n, -1);
  int z = g.identity;
  for (long long t = 0; t < ell; ++t) {
    for (int b : B.members) value[g.compose(z, b)] = static_cast<int>(t);
    z = g.compose(z, gen);
  }
  return value;
}

}  // namespace

std::vector<GoursatRecord> goursat_enumerate(const FiniteGroup& g, long long N, Exec exec) {
  if (N < 1) throw SpecError("goursat: N must be positive");
  std::vector<Subgroup> subs = all_subgroups(g, exec);

  struct PairTask {
    std::size_t ai, bi;
  };
  std::vector<PairTask> candidates;
  for (std::size_t ai = 0; ai < subs.size(); ++ai)
    for (std::size_t bi = 0; bi < subs.size(); ++bi)
      if (subgroup_leq(subs[bi], subs[ai])) candidates.push_back({ai, bi});

  std::vector<std::vector<int>> dlog(candidates.size());
  for_each_index(candidates.size(), exec, [&](std::size_t t) {
    dlog[t] = coset_dlog(g, subs[candidates[t].ai], subs[candidates[t].bi]);
  });

  // divisor pairs of N grouped by ratio
  std::vector<long long> divs = divisors(N);
  std::vector<std::pair<long long, long long>> divpairs;  // (d1, d2)
  for (long long d1 : divs)
    for (long long d2 : divs)
      if (d1 % d2 == 0) divpairs.emplace_back(d1, d2);
  std::sort(divpairs.begin(), divpairs.end());

  std::vector<GoursatRecord> out;
  for (std::size_t t = 0; t < candidates.size(); ++t) {
    if (dlog[t].empty()) continue;
    const Subgroup& A = subs[candidates[t].ai];
    const Subgroup& B = subs[candidates[t].bi];
    const long long ell = A.order() / B.order();
    for (auto [d1, d2] : divpairs) {
      if (d1 / d2 != ell || d1 % d2 != 0) continue;
      for (long long s : units_mod(ell)) {
        GoursatRecord rec;
        rec.A = A;
        rec.B = B;
        rec.d1 = d1;
        rec.d2 = d2;
        rec.N = N;
        rec.value.assign(g.n, -1);
        for (int a : A.members)
          rec.value[a] = static_cast<int>((ell == 1) ? 0 : pos_mod(s * dlog[t][a], ell));
        out.push_back(std::move(rec));
      }
    }
  }
  return out;
}

ProjectData project_data(const FiniteGroup&, const GoursatRecord& rec) {
  return ProjectData{rec.A, rec.B, rec.d1, rec.d2, rec.ell()};
}

// p'-order elements of H form S = {(a, c) : a in A, p does not divide
// ord(a)}; since p never divides N, the Z/N coordinate is always p'.
bool is_p_hyperelementary_product(const FiniteGroup& g, const GoursatRecord& rec, long long p) {
  if (!is_prime(p)) throw SpecError("p not prime");
  if (rec.N % p == 0)
    throw SpecError("product detector: p divides the modulus N");
  std::vector<int> as;  // p'-elements of A
  for (int a : rec.A.members)
    if (g.order(a) % p != 0) as.push_back(a);
  for (int a1 : as)
    for (int a2 : as)
      if (g.order(g.compose(a1, a2)) % p == 0) return false;  // S not closed
  const long long sOrder = static_cast<long long>(as.size()) * rec.d2;
  // cyclic: some (a, c) in S with lcm(ord(a), ord(c)) = |S|
  for (int a : as) {
    const long long oa = g.order(a);
    for (long long t = 0; t < rec.d1; ++t) {
      if (rec.value[a] != static_cast<int>(t % rec.ell())) continue;
      const long long oc = rec.d1 / std::gcd(rec.d1, t == 0 ? rec.d1 : t);
      if (lcm_ll(oa, oc) == sOrder) return true;
    }
  }
  return false;
}

bool is_p_elementary_product(const FiniteGroup& g, const GoursatRecord& rec, long long p) {
  if (!is_p_hyperelementary_product(g, rec, p)) return false;
  // p-power elements of H are {(b, 0) : b in B, ord(b) a p-power}
  std::vector<int> ts;
  for (int b : rec.B.members)
    if (p_prime_part(g.order(b), p) == 1) ts.push_back(b);
  std::vector<char> in(g.n, 0);
  for (int b : ts) in[b] = 1;
  for (int b1 : ts)
    for (int b2 : ts)
      if (!in[g.compose(b1, b2)]) return false;
  for (int a : rec.A.members) {
    if (g.order(a) % p == 0) continue;
    for (int b : ts)
      if (g.compose(a, b) != g.compose(b, a)) return false;
  }
  return true;
}

FiniteGroup materialize_product(const FiniteGroup& g, const GoursatRecord& rec, int cap) {
  const long long order = rec.order();
  if (order > cap)
    throw CapError("materialize_product: order " + std::to_string(order) + " exceeds cap " +
                   std::to_string(cap));
  std::vector<std::pair<int, long long>> elems = rec.elements(g);
  auto index_of = [&](int a, long long c) {
    auto it = std::lower_bound(elems.begin(), elems.end(), std::make_pair(a, c));
    return static_cast<int>(it - elems.begin());
  };
  FiniteGroup h;
  h.n = static_cast<int>(elems.size());
  h.identity = index_of(g.identity, 0);
  h.label = "product_subgroup(order=" + std::to_string(order) + ",N=" + std::to_string(rec.N) +
            "," + g.label + ")";
  h.mul.resize(static_cast<std::size_t>(h.n) * h.n);
  for (int i = 0; i < h.n; ++i)
    for (int j = 0; j < h.n; ++j)
      h.mul[i * h.n + j] = index_of(g.compose(elems[i].first, elems[j].first),
                                    pos_mod(elems[i].second + elems[j].second, rec.N));
  h.names.resize(h.n);
  for (int i = 0; i < h.n; ++i)
    h.names[i] = "(" + g.names[elems[i].first] + "," + std::to_string(elems[i].second) + ")";
  finalize_tables(h);
  return h;
}

bool verify_record(const FiniteGroup& g, const GoursatRecord& rec) {
  if (!subgroup_leq(rec.B, rec.A)) return false;
  if (rec.d1 % rec.d2 != 0 || rec.N % rec.d1 != 0) return false;
  const long long ell = rec.ell();
  if (static_cast<long long>(rec.A.order()) != static_cast<long long>(rec.B.order()) * ell)
    return false;
  // value is multiplicative on A with kernel exactly B
  for (int a : rec.A.members) {
    if (rec.value[a] < 0 || rec.value[a] >= ell) return false;
    if ((rec.value[a] == 0) != rec.B.contains(a)) return false;
  }
  for (int a1 : rec.A.members)
    for (int a2 : rec.A.members)
      if (rec.value[g.compose(a1, a2)] !=
          static_cast<int>((rec.value[a1] + rec.value[a2]) % ell))
        return false;
  // value hits every residue (A/B -> Z/ell onto, hence iso since |A/B| = ell)
  std::vector<char> hit(ell, 0);
  for (int a : rec.A.members) hit[rec.value[a]] = 1;
  for (long long t = 0; t < ell; ++t)
    if (!hit[t]) return false;
  // order bookkeeping
  return static_cast<long long>(rec.elements(g).size()) == rec.order();
}

}  // namespace nkind
