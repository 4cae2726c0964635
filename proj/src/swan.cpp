#include "nkind/swan.hpp"

#include <algorithm>
#include <numeric>

#include "nkind/arith.hpp"

namespace nkind {

namespace {

int least_generator(const FiniteGroup& g, const Subgroup& c) {
  for (int x : c.members)
    if (g.order(x) == c.order()) return x;
  throw SpecError("marks: column subgroup is not cyclic");
}

}  // namespace

long long mark(const FiniteGroup& g, const Subgroup& H, const Subgroup& C) {
  const int c0 = least_generator(g, C);
  std::vector<char> seen(g.n, 0);
  long long fixed = 0;
  for (int x = 0; x < g.n; ++x) {
    if (seen[x]) continue;
    for (int h : H.members) seen[g.compose(x, h)] = 1;
    // coset xH is fixed by C iff x^-1 c0 x lies in H
    if (H.contains(g.conjugate(c0, x))) ++fixed;
  }
  return fixed;
}

MarksMatrix marks_matrix(const FiniteGroup& g, long long p, Exec exec) {
  FamilyReport fam = family_report(g, p, exec);
  MarksMatrix mm;
  mm.rows = fam.pHyperelementaryClasses;
  std::vector<SubgroupClass> all = subgroup_classes(g, exec);
  for (const SubgroupClass& sc : all)
    if (is_cyclic_subgroup(g, sc.representative)) mm.columns.push_back(sc);
  mm.entries.assign(mm.rows.size() * mm.columns.size(), 0);
  for_each_index(mm.rows.size() * mm.columns.size(), exec, [&](std::size_t t) {
    const std::size_t r = t / mm.columns.size();
    const std::size_t c = t % mm.columns.size();
    mm.entries[t] = mark(g, mm.rows[r].representative, mm.columns[c].representative);
  });
  return mm;
}

namespace {

// System matrix: rows = cyclic classes, columns = the active family members.
Mat restricted_system(const MarksMatrix& mm, const std::vector<std::size_t>& active) {
  Mat a(mm.columns.size(), std::vector<BigInt>(active.size(), 0));
  for (std::size_t ci = 0; ci < mm.columns.size(); ++ci)
    for (std::size_t k = 0; k < active.size(); ++k) a[ci][k] = mm.at(active[k], ci);
  return a;
}

}  // namespace

DressCertificate dress_certificate(const FiniteGroup& g, long long p, Exec exec) {
  if (!is_prime(p)) throw SpecError("dress_certificate: p must be prime");
  MarksMatrix mm = marks_matrix(g, p, exec);
  const std::vector<BigInt> ones(mm.columns.size(), 1);

  std::vector<std::size_t> active(mm.rows.size());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;
  if (!solve_p_local(restricted_system(mm, active), ones, p))
    throw InternalError("dress_certificate: marks system has no p-local solution for " +
                        g.label + " at p = " + std::to_string(p));

  // Greedy support minimization, least index dropped first.
  for (std::size_t idx = 0; idx < mm.rows.size(); ++idx) {
    std::vector<std::size_t> trimmed;
    for (std::size_t k : active)
      if (k != idx) trimmed.push_back(k);
    if (trimmed.size() == active.size()) continue;
    if (solve_p_local(restricted_system(mm, trimmed), ones, p)) active = std::move(trimmed);
  }

  auto sol = solve_p_local(restricted_system(mm, active), ones, p);
  if (!sol)
    throw InternalError("dress_certificate: reduced system lost solvability");

  DressCertificate cert;
  cert.prime = p;
  cert.classes = mm.rows;
  cert.coefficients.assign(mm.rows.size(), BigRat(0));
  for (std::size_t k = 0; k < active.size(); ++k) cert.coefficients[active[k]] = (*sol)[k];
  return cert;
}

bool verify_certificate(const FiniteGroup& g, const DressCertificate& cert, Exec exec) {
  for (const BigRat& a : cert.coefficients)
    if (boost::multiprecision::denominator(a) % cert.prime == 0) return false;

  std::vector<SubgroupClass> all = subgroup_classes(g, exec);
  std::vector<const Subgroup*> cyclics;
  for (const SubgroupClass& sc : all)
    if (is_cyclic_subgroup(g, sc.representative)) cyclics.push_back(&sc.representative);

  for (const Subgroup* c : cyclics) {
    BigRat total = 0;
    for (std::size_t i = 0; i < cert.classes.size(); ++i) {
      if (cert.coefficients[i] == 0) continue;
      total += cert.coefficients[i] * BigRat(mark(g, cert.classes[i].representative, *c));
    }
    if (total != 1) return false;
  }
  return true;
}

}  // namespace nkind
