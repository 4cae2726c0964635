#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "nkind/arith.hpp"
#include "nkind/families.hpp"
#include "nkind/oracles.hpp"

using namespace nkind;

namespace {

std::vector<int> class_orders(const std::vector<SubgroupClass>& v) {
  std::vector<int> out;
  for (const auto& c : v) out.push_back(c.representative.order());
  return out;
}

}  // namespace

TEST_CASE("p-group detection") {
  CHECK(is_p_group(make_group("cyclic:1"), 2));
  CHECK(is_p_group(make_group("cyclic:1"), 7));
  CHECK(is_p_group(make_group("dihedral:4"), 2));
  CHECK_FALSE(is_p_group(make_group("sym:3"), 2));
  CHECK_THROWS_AS(is_p_group(make_group("sym:3"), 6), SpecError);
}

TEST_CASE("p-elementary detection") {
  CHECK(is_p_elementary(make_group("cyclic:6"), 2));
  CHECK_FALSE(is_p_elementary(make_group("sym:3"), 2));
  CHECK(is_p_elementary(make_group("dihedral:4"), 2));
  CHECK(is_p_elementary(make_quaternion8(), 2));
  CHECK(is_p_elementary(make_group("product(cyclic:3,dihedral:4)"), 2));
  CHECK_FALSE(is_p_elementary(make_group("perm(4;(1,2,3);(2,3,4))"), 2));
}

TEST_CASE("p-hyperelementary detection") {
  CHECK(is_p_hyperelementary(make_group("sym:3"), 2));
  CHECK_FALSE(is_p_hyperelementary(make_group("sym:3"), 3));
  // p'-elements of the alternating group of degree 4 are the 3-cycles plus
  // identity; not a subgroup
  CHECK_FALSE(is_p_hyperelementary(make_group("perm(4;(1,2,3);(2,3,4))"), 2));
  CHECK(is_p_hyperelementary(make_group("dihedral:6"), 2));
  CHECK_FALSE(is_p_hyperelementary(make_group("sym:4"), 2));
}

TEST_CASE("family report for sym:3 at p = 2") {
  FiniteGroup g = make_group("sym:3");
  FamilyReport fr = family_report(g, 2);
  CHECK(class_orders(fr.pSubgroupClasses) == std::vector<int>{1, 2});
  CHECK(class_orders(fr.pElementaryClasses) == std::vector<int>{1, 2, 3});
  CHECK(class_orders(fr.pHyperelementaryClasses) == std::vector<int>{1, 2, 3, 6});
}

TEST_CASE("family report of a p-group lists every class in all three families") {
  FiniteGroup g = make_group("dihedral:4");
  FamilyReport fr = family_report(g, 2);
  auto all = class_orders(subgroup_classes(g));
  CHECK(class_orders(fr.pSubgroupClasses) == all);
  CHECK(class_orders(fr.pElementaryClasses) == all);
  CHECK(class_orders(fr.pHyperelementaryClasses) == all);
}

TEST_CASE("family report for cyclic:6 at p = 2") {
  FiniteGroup g = make_group("cyclic:6");
  FamilyReport fr = family_report(g, 2);
  CHECK(class_orders(fr.pElementaryClasses) == std::vector<int>{1, 2, 3, 6});
  CHECK(class_orders(fr.pHyperelementaryClasses) == std::vector<int>{1, 2, 3, 6});
}

TEST_CASE("c_perp") {
  FiniteGroup g = make_group("sym:3");

  SUBCASE("of the trivial subgroup: all p'-order elements") {
    PerpSet ps = c_perp(g, trivial_subgroup(g), 2);
    REQUIRE(ps.elements.size() == 3);  // e and both 3-cycles
    std::multiset<int> orders;
    for (const auto& pe : ps.elements) orders.insert(pe.order);
    CHECK(orders == std::multiset<int>{1, 3, 3});
  }
  SUBCASE("of a transposition subgroup: only the identity") {
    Subgroup c2 = cyclic_subgroup(g, 1);
    REQUIRE(c2.order() == 2);
    PerpSet ps = c_perp(g, c2, 2);
    REQUIRE(ps.elements.size() == 1);
    CHECK(ps.elements[0].element == g.identity);
  }
  SUBCASE("inside a p-group only the identity has p'-order") {
    FiniteGroup d4 = make_group("dihedral:4");
    PerpSet ps = c_perp(d4, sylow_subgroup(d4, 2), 2);
    REQUIRE(ps.elements.size() == 1);
    CHECK(ps.elements[0].element == d4.identity);
  }
  SUBCASE("a non-p-subgroup is rejected") {
    CHECK_THROWS_AS(c_perp(g, full_subgroup(g), 2), SpecError);
  }
}

TEST_CASE("c_perp closure under inversion and normalizer conjugation") {
  for (const char* spec : {"sym:3", "product(sym:3,cyclic:2)", "dihedral:6"}) {
    CAPTURE(spec);
    FiniteGroup g = make_group(spec);
    for (long long p : {2LL, 3LL}) {
      FamilyReport fr = family_report(g, p);
      for (const SubgroupClass& pc : fr.pSubgroupClasses) {
        PerpSet ps = c_perp(g, pc.representative, p);
        std::set<int> in;
        for (const auto& pe : ps.elements) in.insert(pe.element);
        Subgroup nm = normalizer(g, pc.representative);
        for (int x : in) {
          CHECK(in.count(g.inverse(x)) == 1);
          for (int z : nm.members) CHECK(in.count(g.conjugate(x, z)) == 1);
        }
        // every listed element commutes with P and has p'-order
        for (const auto& pe : ps.elements) {
          CHECK(pe.order % p != 0);
          for (int y : pc.representative.members)
            CHECK(g.compose(pe.element, y) == g.compose(y, pe.element));
        }
      }
    }
  }
}

TEST_CASE("I(g) predicate and sieve") {
  CHECK(in_I(1, 1));
  CHECK(in_I(1, 30));
  CHECK(i_set(3, 30) == std::vector<long long>{1, 3, 9, 27});
  CHECK(i_set(6, 20) == std::vector<long long>{1, 2, 3, 4, 6, 8, 9, 12, 16, 18});
  CHECK(i_set(1, 10) == std::vector<long long>{1});
  // closed under multiplication below the bound
  for (long long m : {2LL, 6LL, 30LL}) {
    std::vector<long long> is = i_set(m, 60);
    std::set<long long> s(is.begin(), is.end());
    for (long long a : is)
      for (long long b : is)
        if (a * b <= 60) CHECK(s.count(a * b) == 1);
  }
}

TEST_CASE("elementarity criterion") {
  SUBCASE("sym:3 at 2: hypothesis and conclusion both fail") {
    ElementarityCheck c = elementarity_criterion(make_group("sym:3"), 2);
    CHECK_FALSE(c.hypothesisHolds);
    CHECK_FALSE(c.conclusionHolds);
  }
  SUBCASE("cyclic:6 at 2: both hold") {
    ElementarityCheck c = elementarity_criterion(make_group("cyclic:6"), 2);
    CHECK(c.hypothesisHolds);
    CHECK(c.conclusionHolds);
  }
  SUBCASE("cyclic p-power: vacuous hypothesis") {
    ElementarityCheck c = elementarity_criterion(make_group("cyclic:8"), 2);
    CHECK(c.hypothesisHolds);
    CHECK(c.conclusionHolds);
  }
  SUBCASE("non-hyperelementary input is rejected") {
    CHECK_THROWS_AS(elementarity_criterion(make_group("sym:3"), 3), SpecError);
  }
}

TEST_CASE("normal-Sylow centralizer condition") {
  CHECK(induction_isomorphism_condition(make_group("sym:3"), 3));
  CHECK_FALSE(induction_isomorphism_condition(make_group("cyclic:6"), 3));
  CHECK_FALSE(induction_isomorphism_condition(make_group("sym:3"), 2));
  CHECK_THROWS_AS(induction_isomorphism_condition(make_group("sym:3"), 5), SpecError);
  // semidirect with faithful action: condition holds
  CHECK(induction_isomorphism_condition(make_group("semidirect(c:5,p:cyclic:4,action:[2])"),
                                        5));
}

TEST_CASE("hyperelementary corpus composition") {
  SUBCASE("(2, 6) contains both actions of C2 on C3") {
    std::vector<FiniteGroup> corpus = hyperelementary_corpus(2, 6);
    int order6 = 0;
    bool has_cyclic6 = false, has_sym3 = false;
    FiniteGroup c6 = make_group("cyclic:6");
    FiniteGroup s3 = make_group("sym:3");
    for (const FiniteGroup& g : corpus) {
      if (g.n != 6) continue;
      ++order6;
      if (are_isomorphic(g, c6)) has_cyclic6 = true;
      if (are_isomorphic(g, s3)) has_sym3 = true;
    }
    CHECK(order6 == 2);  // Aut(C3) has order 2
    CHECK(has_cyclic6);
    CHECK(has_sym3);
  }
  SUBCASE("(2, 2) contains only the trivial group and C2") {
    std::vector<FiniteGroup> corpus = hyperelementary_corpus(2, 2);
    REQUIRE(corpus.size() == 2);
    CHECK(corpus[0].n == 1);
    CHECK(corpus[1].n == 2);
  }
  SUBCASE("(3, 24) includes cyclic:6 and every member is 3-hyperelementary") {
    std::vector<FiniteGroup> corpus = hyperelementary_corpus(3, 24);
    bool has_c6 = false;
    FiniteGroup c6 = make_group("cyclic:6");
    for (const FiniteGroup& g : corpus) {
      if (g.n == 6 && are_isomorphic(g, c6)) has_c6 = true;
      CHECK(is_p_hyperelementary(g, 3));
    }
    CHECK(has_c6);
  }
}

TEST_CASE("corpus groups: elementary implies hyperelementary") {
  for (long long p : {2LL, 3LL, 5LL}) {
    for (const FiniteGroup& g : hyperelementary_corpus(p, 24)) {
      for (long long q : {2LL, 3LL, 5LL}) {
        if (is_p_elementary(g, q)) CHECK(is_p_hyperelementary(g, q));
      }
    }
  }
}

TEST_CASE("detectors agree with the structure-search oracles on small groups") {
  for (const char* spec : {"sym:3", "cyclic:6", "dihedral:4", "dihedral:6", "sym:4",
                           "perm(4;(1,2,3);(2,3,4))", "cyclic:30",
                           "semidirect(c:7,p:cyclic:3,action:[2])"}) {
    CAPTURE(spec);
    FiniteGroup g = make_group(spec);
    for (long long p : {2LL, 3LL, 5LL, 7LL}) {
      CAPTURE(p);
      CHECK(is_p_elementary(g, p) == brute_force_p_elementary(g, p));
      CHECK(is_p_hyperelementary(g, p) == brute_force_p_hyperelementary(g, p));
    }
  }
  FiniteGroup q8 = make_quaternion8();
  CHECK(is_p_elementary(q8, 2) == brute_force_p_elementary(q8, 2));
}

TEST_CASE("action map enumeration counts homomorphisms") {
  // Aut(C3) = C2: two maps from C2, one from C3
  CHECK(action_maps(make_group("cyclic:2"), 3).size() == 2);
  CHECK(action_maps(make_group("cyclic:3"), 3).size() == 1);
  // hom(C2 x C2 -> units mod 5 = C4) has 4 elements (images of order <= 2)
  CHECK(action_maps(make_group("product(cyclic:2,cyclic:2)"), 5).size() == 4);
  // hom(C4 -> C4) has 4
  CHECK(action_maps(make_group("cyclic:4"), 5).size() == 4);
  // quaternion and dihedral abelianizations are C2 x C2
  CHECK(action_maps(make_quaternion8(), 3).size() == 4);
  CHECK(action_maps(make_group("dihedral:4"), 3).size() == 4);
}
