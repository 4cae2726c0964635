#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "nkind/arith.hpp"
#include "nkind/group.hpp"
#include "nkind/oracles.hpp"

using namespace nkind;

namespace {

std::vector<int> order_profile(const std::vector<Subgroup>& subs) {
  std::vector<int> out;
  for (const Subgroup& s : subs) out.push_back(s.order());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("arith basics") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(divisors(12) == std::vector<long long>{1, 2, 3, 4, 6, 12});
  CHECK(p_part(60, 2) == 4);
  CHECK(p_prime_part(60, 2) == 15);
  CHECK(mod_inverse(2, 3) == 2);
  CHECK(mod_inverse(7, 1) == 1);
  CHECK(euler_phi(27) == 18);
  CHECK(units_mod(8) == std::vector<long long>{1, 3, 5, 7});
}

TEST_CASE("cyclic:1 is the trivial group") {
  FiniteGroup g = make_group("cyclic:1");
  CHECK(g.n == 1);
  check_group_axioms(g);
  CHECK(all_subgroups(g).size() == 1);
}

TEST_CASE("constructed groups satisfy the axioms exhaustively") {
  for (const char* spec :
       {"cyclic:12", "sym:3", "sym:4", "dihedral:4", "dihedral:6",
        "perm(4;(1,2,3);(2,3,4))", "product(sym:3,cyclic:2)",
        "semidirect(c:3,p:cyclic:2,action:[2])", "semidirect(c:5,p:cyclic:4,action:[2])"}) {
    CAPTURE(spec);
    FiniteGroup g = make_group(spec);
    check_group_axioms(g);
  }
  check_group_axioms(make_quaternion8());
}

TEST_CASE("sym:3 subgroup structure") {
  FiniteGroup g = make_group("sym:3");
  CHECK(g.n == 6);
  std::vector<Subgroup> subs = all_subgroups(g);
  CHECK(subs.size() == 6);
  CHECK(order_profile(subs) == std::vector<int>{1, 2, 2, 2, 3, 6});

  std::vector<SubgroupClass> classes = subgroup_classes(g);
  REQUIRE(classes.size() == 4);
  std::vector<long long> sizes;
  for (const auto& c : classes) sizes.push_back(c.classSize);
  CHECK(sizes == std::vector<long long>{1, 3, 1, 1});

  // two conjugacy classes of nontrivial proper subgroups
  int proper = 0;
  for (const auto& c : classes)
    if (c.representative.order() > 1 && c.representative.order() < 6) ++proper;
  CHECK(proper == 2);
}

TEST_CASE("semidirect inversion action gives the nonabelian group of order 6") {
  FiniteGroup s = make_group("semidirect(c:3,p:cyclic:2,action:[2])");
  FiniteGroup sym3 = make_group("sym:3");
  CHECK(s.n == 6);
  bool abelian = true;
  for (int a = 0; a < s.n && abelian; ++a)
    for (int b = 0; b < s.n && abelian; ++b)
      if (s.compose(a, b) != s.compose(b, a)) abelian = false;
  CHECK_FALSE(abelian);
  CHECK(order_profile(all_subgroups(s)) == order_profile(all_subgroups(sym3)));
  CHECK(are_isomorphic(s, sym3));
  CHECK_FALSE(are_isomorphic(make_group("cyclic:6"), sym3));
}

TEST_CASE("all_subgroups of cyclic:12 counts divisors") {
  FiniteGroup g = make_group("cyclic:12");
  CHECK(all_subgroups(g).size() == divisors(12).size());
}

TEST_CASE("all_subgroups agrees with the subset-scan oracle up to order 16") {
  for (const char* spec : {"cyclic:8", "cyclic:12", "dihedral:4", "sym:3", "dihedral:6",
                           "product(cyclic:2,cyclic:6)"}) {
    CAPTURE(spec);
    FiniteGroup g = make_group(spec);
    REQUIRE(g.n <= 16);
    CHECK(order_profile(all_subgroups(g)) == order_profile(subgroups_by_subset_scan(g)));
  }
  FiniteGroup q8 = make_quaternion8();
  std::vector<Subgroup> a = all_subgroups(q8);
  std::vector<Subgroup> b = subgroups_by_subset_scan(q8);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].members == b[i].members);
}

TEST_CASE("all_subgroups agrees with the generator-BFS oracle up to order 24") {
  for (const char* spec : {"sym:4", "perm(4;(1,2,3);(2,3,4))", "cyclic:24",
                           "product(dihedral:4,cyclic:3)"}) {
    CAPTURE(spec);
    FiniteGroup g = make_group(spec);
    std::vector<Subgroup> a = all_subgroups(g);
    std::vector<Subgroup> b = subgroups_by_generator_bfs(g);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].members == b[i].members);
  }
}

TEST_CASE("subgroup count is invariant under relabeling") {
  std::mt19937 rng(20240811);
  for (const char* spec : {"sym:3", "dihedral:4", "cyclic:12", "perm(4;(1,2,3);(2,3,4))"}) {
    CAPTURE(spec);
    FiniteGroup g = make_group(spec);
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    FiniteGroup h = relabel(g, perm);
    check_group_axioms(h);
    CHECK(all_subgroups(h).size() == all_subgroups(g).size());
    CHECK(are_isomorphic(g, h));
  }
}

TEST_CASE("class sizes sum to the subgroup count and match normalizer indices") {
  for (const char* spec : {"sym:3", "dihedral:4", "sym:4", "product(sym:3,cyclic:2)"}) {
    CAPTURE(spec);
    FiniteGroup g = make_group(spec);
    std::vector<Subgroup> subs = all_subgroups(g);
    std::vector<SubgroupClass> classes = subgroup_classes(g);
    long long total = 0;
    for (const SubgroupClass& c : classes) {
      total += c.classSize;
      CHECK(c.classSize == g.n / normalizer(g, c.representative).order());
      // conjugates are pairwise distinct subgroups counted by classSize
      std::set<std::vector<int>> conj;
      for (int by = 0; by < g.n; ++by)
        conj.insert(conjugate_subgroup(g, c.representative, by).members);
      CHECK(static_cast<long long>(conj.size()) == c.classSize);
    }
    CHECK(total == static_cast<long long>(subs.size()));
    for (const Subgroup& s : subs) CHECK(g.n % s.order() == 0);  // Lagrange
  }
}

TEST_CASE("abelian groups have singleton classes") {
  FiniteGroup g = make_group("cyclic:12");
  for (const SubgroupClass& c : subgroup_classes(g)) CHECK(c.classSize == 1);
}

TEST_CASE("dihedral:4 has 8 subgroup classes") {
  FiniteGroup g = make_group("dihedral:4");
  CHECK(g.n == 8);
  CHECK(all_subgroups(g).size() == 10);
  CHECK(subgroup_classes(g).size() == 8);
}

TEST_CASE("quotients") {
  FiniteGroup g = make_group("sym:3");

  SUBCASE("by the whole group") {
    Quotient q = quotient(g, full_subgroup(g));
    CHECK(q.group->n == 1);
  }
  SUBCASE("sym:3 by C3") {
    Subgroup c3 = cyclic_subgroup(g, 3);  // a 3-cycle
    REQUIRE(c3.order() == 3);
    Quotient q = quotient(g, c3);
    CHECK(q.group->n == 2);
    CHECK(q.projection.is_homomorphism());
    CHECK(q.projection.is_surjective());
    // kernel is exactly C3
    std::vector<int> kernel;
    for (int x = 0; x < g.n; ++x)
      if (q.projection(x) == q.group->identity) kernel.push_back(x);
    CHECK(kernel == c3.members);
  }
  SUBCASE("cyclic:12 by its C4 gives cyclic:3") {
    FiniteGroup c12 = make_group("cyclic:12");
    Subgroup c4 = cyclic_subgroup(c12, 3);
    REQUIRE(c4.order() == 4);
    Quotient q = quotient(c12, c4);
    CHECK(q.group->n == 3);
    FiniteGroup c3 = make_group("cyclic:3");
    CHECK(are_isomorphic(*q.group, c3));
    CHECK(c12.n == q.group->n * c4.order());
  }
  SUBCASE("non-normal subgroup is rejected") {
    Subgroup c2 = cyclic_subgroup(g, 1);
    REQUIRE(c2.order() == 2);
    CHECK_THROWS_AS(quotient(g, c2), SpecError);
  }
}

TEST_CASE("abelianization orders") {
  CHECK(abelianization_order(make_group("cyclic:12")) == 12);
  CHECK(abelianization_order(make_group("sym:3")) == 2);
  CHECK(abelianization_order(make_group("perm(4;(1,2,3);(2,3,4))")) == 3);
  CHECK(abelianization_order(make_group("sym:4")) == 2);
  CHECK(abelianization_order(make_quaternion8()) == 4);
}

TEST_CASE("centralizers") {
  FiniteGroup g = make_group("sym:3");
  CHECK(centralizer(g, trivial_subgroup(g)).order() == g.n);
  Subgroup c3 = cyclic_subgroup(g, 3);
  REQUIRE(c3.order() == 3);
  CHECK(centralizer(g, c3).members == c3.members);
  FiniteGroup ab = make_group("cyclic:12");
  Subgroup sub = cyclic_subgroup(ab, 4);
  CHECK(centralizer(ab, sub).order() == ab.n);
}

TEST_CASE("sylow subgroups") {
  FiniteGroup g = make_group("sym:4");
  CHECK(sylow_subgroup(g, 2).order() == 8);
  CHECK(sylow_subgroup(g, 3).order() == 3);
  FiniteGroup a4 = make_group("perm(4;(1,2,3);(2,3,4))");
  Subgroup v4 = sylow_subgroup(a4, 2);
  CHECK(v4.order() == 4);
  CHECK(is_normal(a4, v4));
}

TEST_CASE("construction grammar errors") {
  CHECK_THROWS_AS(make_group("cyclic:0"), SpecError);
  CHECK_THROWS_AS(make_group("frobnicate:3"), SpecError);
  CHECK_THROWS_AS(make_group("product(sym:3"), SpecError);
  CHECK_THROWS_AS(make_group("sym:3 trailing"), SpecError);
  CHECK_THROWS_AS(make_group("perm(3;(1,4))"), SpecError);    // point out of range
  CHECK_THROWS_AS(make_group("perm(3;(1,1,2))"), SpecError);  // repeated point
  CHECK_THROWS_AS(make_group("semidirect(c:5,p:cyclic:2,action:[3])"), SpecError);
  CHECK_THROWS_AS(make_group("semidirect(c:8,p:cyclic:2,action:[2])"), SpecError);
  CHECK_THROWS_AS(make_group("semidirect(c:7,p:cyclic:4,action:[3,2])"), SpecError);
  CHECK_THROWS_AS(make_group("cyclic:99999999999999999999"), SpecError);
  CHECK_THROWS_AS(make_group("sym:6"), CapError);
  CHECK_THROWS_AS(make_group("product(sym:5,cyclic:2)"), CapError);
  CHECK_NOTHROW(make_group("product(sym:5,cyclic:2)", 240));  // cap override
}

TEST_CASE("whitespace-insensitive grammar") {
  FiniteGroup a = make_group("semidirect( c:3, p: cyclic:2, action: [2] )");
  FiniteGroup b = make_group("semidirect(c:3,p:cyclic:2,action:[2])");
  CHECK(a.mul == b.mul);
  CHECK(a.label == b.label);
}

TEST_CASE("quaternion group of order 8") {
  FiniteGroup q = make_quaternion8();
  CHECK(q.n == 8);
  std::multiset<int> orders(q.element_orders.begin(), q.element_orders.end());
  CHECK(orders == std::multiset<int>{1, 2, 4, 4, 4, 4, 4, 4});
  CHECK(all_subgroups(q).size() == 6);
  for (const Subgroup& s : all_subgroups(q)) CHECK(is_normal(q, s));
  CHECK_FALSE(are_isomorphic(q, make_group("dihedral:4")));
}

TEST_CASE("dihedral edge cases") {
  CHECK(make_group("dihedral:1").n == 2);
  FiniteGroup v4 = make_group("dihedral:2");
  CHECK(v4.n == 4);
  CHECK(are_isomorphic(v4, make_group("product(cyclic:2,cyclic:2)")));
  FiniteGroup d3 = make_group("dihedral:3");
  CHECK(are_isomorphic(d3, make_group("sym:3")));
}

TEST_CASE("generating sets are small and generate") {
  for (const char* spec : {"sym:4", "cyclic:12", "dihedral:6"}) {
    FiniteGroup g = make_group(spec);
    std::vector<int> gens = canonical_generators(g);
    CHECK(gens.size() <= 3);
    std::vector<int> cl = close_subset(g, gens);
    CHECK(static_cast<int>(cl.size()) == g.n);
  }
}

TEST_CASE("materialize preserves structure") {
  FiniteGroup g = make_group("sym:4");
  Subgroup syl = sylow_subgroup(g, 2);
  FiniteGroup h = materialize(g, syl);
  check_group_axioms(h);
  CHECK(h.n == 8);
  CHECK(are_isomorphic(h, make_group("dihedral:4")));
}
