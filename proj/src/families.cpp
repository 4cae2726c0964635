#include "nkind/families.hpp"

#include <algorithm>
#include <numeric>

#include "nkind/arith.hpp"

namespace nkind {

namespace {

void require_prime(long long p) {
  if (!is_prime(p)) throw SpecError("p = " + std::to_string(p) + " is not prime");
}

// Elements of s whose order is prime to p / whose order is a power of p.
std::vector<int> p_prime_elements(const FiniteGroup& g, const std::vector<int>& members,
                                  long long p) {
  std::vector<int> out;
  for (int x : members)
    if (g.order(x) % p != 0) out.push_back(x);
  return out;
}

std::vector<int> p_power_elements(const FiniteGroup& g, const std::vector<int>& members,
                                  long long p) {
  std::vector<int> out;
  for (int x : members)
    if (p_prime_part(g.order(x), p) == 1) out.push_back(x);
  return out;
}

bool closed_under_mul(const FiniteGroup& g, const std::vector<int>& set) {
  std::vector<char> in(g.n, 0);
  for (int x : set) in[x] = 1;
  for (int a : set)
    for (int b : set)
      if (!in[g.compose(a, b)]) return false;
  return true;
}

bool has_element_of_order(const FiniteGroup& g, const std::vector<int>& set, long long ord) {
  for (int x : set)
    if (g.order(x) == ord) return true;
  return false;
}

}  // namespace

bool is_p_group(const FiniteGroup& g, long long p) {
  require_prime(p);
  return p_prime_part(g.n, p) == 1;
}

bool is_p_group_sub(const FiniteGroup&, const Subgroup& s, long long p) {
  require_prime(p);
  return p_prime_part(s.order(), p) == 1;
}

// In C x P the p'-order elements are exactly C, so the structure search
// reduces to closure checks on the p'-set S and the p-set T.
bool is_p_hyperelementary_sub(const FiniteGroup& g, const Subgroup& s, long long p) {
  require_prime(p);
  std::vector<int> sset = p_prime_elements(g, s.members, p);
  if (!closed_under_mul(g, sset)) return false;
  return has_element_of_order(g, sset, static_cast<long long>(sset.size()));
}

bool is_p_elementary_sub(const FiniteGroup& g, const Subgroup& s, long long p) {
  if (!is_p_hyperelementary_sub(g, s, p)) return false;
  std::vector<int> sset = p_prime_elements(g, s.members, p);
  std::vector<int> tset = p_power_elements(g, s.members, p);
  if (!closed_under_mul(g, tset)) return false;
  for (int a : sset)
    for (int b : tset)
      if (g.compose(a, b) != g.compose(b, a)) return false;
  // sanity: the two factors exhaust the subgroup
  if (static_cast<long long>(sset.size() * tset.size()) != static_cast<long long>(s.order()))
    throw InternalError("p-elementary detector: |S||T| != |G|");
  return true;
}

bool is_p_elementary(const FiniteGroup& g, long long p) {
  return is_p_elementary_sub(g, full_subgroup(g), p);
}

bool is_p_hyperelementary(const FiniteGroup& g, long long p) {
  return is_p_hyperelementary_sub(g, full_subgroup(g), p);
}

FamilyReport family_report(const FiniteGroup& g, long long p, Exec exec) {
  require_prime(p);
  std::vector<SubgroupClass> classes = subgroup_classes(g, exec);
  FamilyReport r;
  r.prime = p;
  std::vector<int> kind(classes.size(), 0);  // bit 1: p-group, 2: elem, 4: hyper
  for_each_index(classes.size(), exec, [&](std::size_t i) {
    const Subgroup& rep = classes[i].representative;
    int k = 0;
    if (is_p_group_sub(g, rep, p)) k |= 1;
    if (is_p_elementary_sub(g, rep, p)) k |= 2;
    if (is_p_hyperelementary_sub(g, rep, p)) k |= 4;
    kind[i] = k;
  });
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (kind[i] & 1) r.pSubgroupClasses.push_back(classes[i]);
    if (kind[i] & 2) r.pElementaryClasses.push_back(classes[i]);
    if (kind[i] & 4) r.pHyperelementaryClasses.push_back(classes[i]);
    if ((kind[i] & 1) && !(kind[i] & 2))
      throw InternalError("family report: p-group class not detected as p-elementary");
    if ((kind[i] & 2) && !(kind[i] & 4))
      throw InternalError("family report: p-elementary class not p-hyperelementary");
  }
  return r;
}

PerpSet c_perp(const FiniteGroup& g, const Subgroup& p_sub, long long p) {
  if (!is_p_group_sub(g, p_sub, p)) throw SpecError("c_perp: subgroup is not a p-group");
  PerpSet out;
  out.base = p_sub;
  Subgroup cent = centralizer(g, p_sub);
  for (int x : cent.members)
    if (g.order(x) % p != 0) out.elements.push_back(PerpElement{x, g.order(x)});
  return out;
}

bool in_I(long long k, long long ord_g) {
  if (k < 1) return false;
  for (long long q : prime_divisors(k))
    if (ord_g % q != 0) return false;
  return true;
}

std::vector<long long> i_set(long long ord_g, long long bound) {
  std::vector<long long> out;
  for (long long k = 1; k <= bound; ++k)
    if (in_I(k, ord_g)) out.push_back(k);
  return out;
}

ElementarityCheck elementarity_criterion(const FiniteGroup& g, long long p) {
  require_prime(p);
  if (!is_p_hyperelementary(g, p))
    throw SpecError("elementarity criterion: group is not p-hyperelementary");
  long long ab = abelianization_order(g);
  bool hyp = true;
  for (long long q : prime_divisors(g.n))
    if (q != p && ab % q != 0) {
      hyp = false;
      break;
    }
  bool concl = is_p_elementary(g, p);
  if (hyp && !concl)
    throw InternalError("elementarity criterion violated for " + g.label +
                        " at p = " + std::to_string(p));
  return ElementarityCheck{hyp, concl};
}

bool induction_isomorphism_condition(const FiniteGroup& g, long long p) {
  require_prime(p);
  if (g.n % p != 0) throw SpecError("condition: p does not divide |G|");
  Subgroup syl = sylow_subgroup(g, p);
  if (!is_normal(g, syl)) return false;
  FiniteGroup sylg = materialize(g, syl);
  for (const Subgroup& sub : all_subgroups(sylg, Exec::Serial)) {
    if (sub.order() == 1) continue;
    std::vector<int> lifted;
    lifted.reserve(sub.members.size());
    for (int i : sub.members) lifted.push_back(syl.members[i]);
    std::sort(lifted.begin(), lifted.end());
    Subgroup psub{&g, lifted};
    Subgroup cent = centralizer(g, psub);
    if (!subgroup_leq(cent, psub)) return false;
  }
  return true;
}

std::vector<FiniteGroup> corpus_p_groups(long long p, int order_bound) {
  std::vector<FiniteGroup> out;
  for (long long pk = 1; pk <= order_bound; pk *= p) {
    out.push_back(make_cyclic(pk, order_bound));
    if (pk > order_bound / p) break;
  }
  if (p * p <= order_bound) {
    FiniteGroup cp = make_cyclic(p, order_bound);
    out.push_back(make_product(cp, cp, order_bound));
  }
  if (p == 2 && 8 <= order_bound) {
    out.push_back(make_dihedral(4, order_bound));
    out.push_back(make_quaternion8());
  }
  return out;
}

std::vector<std::vector<long long>> action_maps(const FiniteGroup& p_group, long long m) {
  std::vector<int> gens = canonical_generators(p_group);
  std::vector<long long> units = units_mod(m);
  std::vector<std::vector<long long>> out;
  std::vector<long long> tuple(gens.size());
  // lexicographic enumeration over unit tuples; keep the ones that extend to
  // a homomorphism (make_semidirect re-verifies, this is the cheap filter)
  std::vector<std::size_t> digit(gens.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < gens.size(); ++i) tuple[i] = units[digit[i]];
    // extend over the group and test multiplicativity
    std::vector<long long> unit(p_group.n, -1);
    unit[p_group.identity] = (m == 1) ? 0 : 1;
    std::vector<int> queue{p_group.identity};
    while (!queue.empty()) {
      int x = queue.back();
      queue.pop_back();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        int y = p_group.compose(x, gens[i]);
        if (unit[y] < 0) {
          unit[y] = (m == 1) ? 0 : pos_mod(unit[x] * tuple[i], m);
          queue.push_back(y);
        }
      }
    }
    bool ok = true;
    for (int x = 0; x < p_group.n && ok; ++x)
      for (int y = 0; y < p_group.n && ok; ++y) {
        long long want = (m == 1) ? 0 : pos_mod(unit[x] * unit[y], m);
        if (unit[p_group.compose(x, y)] != want) ok = false;
      }
    if (ok) out.push_back(tuple);

    // advance the odometer
    std::size_t i = 0;
    for (; i < digit.size(); ++i) {
      if (++digit[i] < units.size()) break;
      digit[i] = 0;
    }
    if (i == digit.size()) break;
  }
  return out;
}

std::vector<FiniteGroup> hyperelementary_corpus(long long p, int order_bound) {
  require_prime(p);
  std::vector<FiniteGroup> out;
  std::vector<FiniteGroup> pgroups = corpus_p_groups(p, order_bound);
  for (long long m = 1; m <= order_bound; ++m) {
    if (m % p == 0) continue;
    for (const FiniteGroup& pg : pgroups) {
      if (m * pg.n > order_bound) continue;
      for (const auto& tuple : action_maps(pg, m))
        out.push_back(make_semidirect(m, pg, tuple, order_bound));
    }
  }
  return out;
}

}  // namespace nkind
