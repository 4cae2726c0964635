#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "nkind/arith.hpp"
#include "nkind/families.hpp"
#include "nkind/snf.hpp"
#include "nkind/swan.hpp"

using namespace nkind;

namespace {

Mat mat_mul(const Mat& a, const Mat& b) {
  Mat c(a.size(), std::vector<BigInt>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

BigRat det(Mat a) {
  const std::size_t n = a.size();
  std::vector<std::vector<BigRat>> m(n, std::vector<BigRat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = BigRat(a[i][j]);
  BigRat d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      BigRat f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

std::size_t column_of(const MarksMatrix& mm, int order) {
  for (std::size_t c = 0; c < mm.columns.size(); ++c)
    if (mm.columns[c].representative.order() == order) return c;
  throw std::runtime_error("column not found");
}

std::size_t row_of(const MarksMatrix& mm, int order) {
  for (std::size_t r = 0; r < mm.rows.size(); ++r)
    if (mm.rows[r].representative.order() == order) return r;
  throw std::runtime_error("row not found");
}

}  // namespace

TEST_CASE("smith normal form on random matrices") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dim(1, 6), val(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = dim(rng), c = dim(rng);
    Mat a(r, std::vector<BigInt>(c));
    for (auto& row : a)
      for (auto& x : row) x = val(rng);
    SmithForm f = smith_normal_form(a);
    // U a V equals the diagonal
    Mat uav = mat_mul(mat_mul(f.U, a), f.V);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        BigInt want = (i == j && i < f.diag.size()) ? f.diag[i] : 0;
        CHECK(uav[i][j] == want);
      }
    // transforms are unimodular
    BigRat du = det(f.U), dv = det(f.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    // divisibility chain
    for (std::size_t i = 0; i + 1 < f.diag.size(); ++i) {
      if (f.diag[i + 1] == 0) continue;
      REQUIRE(f.diag[i] != 0);
      CHECK(f.diag[i + 1] % f.diag[i] == 0);
    }
    for (const BigInt& d : f.diag) CHECK(d >= 0);
  }
}

TEST_CASE("p-local solving") {
  SUBCASE("2x = 1 has no 2-local solution but a 3-local one") {
    Mat a{{BigInt(2)}};
    std::vector<BigInt> b{BigInt(1)};
    CHECK_FALSE(solve_p_local(a, b, 2).has_value());
    auto x = solve_p_local(a, b, 3);
    REQUIRE(x.has_value());
    CHECK((*x)[0] == BigRat(1, 2));
  }
  SUBCASE("inconsistent system") {
    Mat a{{BigInt(1)}, {BigInt(1)}};
    std::vector<BigInt> b{BigInt(0), BigInt(1)};
    CHECK_FALSE(solve_p_local(a, b, 2).has_value());
  }
  SUBCASE("underdetermined system picks a valid solution") {
    Mat a{{BigInt(2), BigInt(3)}};
    std::vector<BigInt> b{BigInt(1)};
    auto x = solve_p_local(a, b, 2);
    REQUIRE(x.has_value());
    CHECK(BigRat(2) * (*x)[0] + BigRat(3) * (*x)[1] == 1);
    for (const BigRat& v : *x)
      CHECK(boost::multiprecision::denominator(v) % 2 != 0);
  }
}

TEST_CASE("marks matrix for sym:3 at p = 3") {
  FiniteGroup g = make_group("sym:3");
  MarksMatrix mm = marks_matrix(g, 3);
  // inducing family: 1, C2, C3 (the whole group is not 3-hyperelementary)
  REQUIRE(mm.rows.size() == 3);
  REQUIRE(mm.columns.size() == 3);
  std::size_t r1 = row_of(mm, 1), r2 = row_of(mm, 2), r3 = row_of(mm, 3);
  std::size_t c1 = column_of(mm, 1), c2 = column_of(mm, 2), c3 = column_of(mm, 3);
  CHECK(mm.at(r1, c1) == 6);
  CHECK(mm.at(r1, c2) == 0);
  CHECK(mm.at(r1, c3) == 0);
  CHECK(mm.at(r2, c1) == 3);
  CHECK(mm.at(r2, c2) == 1);
  CHECK(mm.at(r2, c3) == 0);
  CHECK(mm.at(r3, c1) == 2);
  CHECK(mm.at(r3, c2) == 0);
  CHECK(mm.at(r3, c3) == 2);
}

TEST_CASE("marks structure") {
  for (const char* spec : {"sym:3", "dihedral:6", "sym:4"}) {
    CAPTURE(spec);
    FiniteGroup g = make_group(spec);
    for (long long p : {2LL, 3LL}) {
      MarksMatrix mm = marks_matrix(g, p);
      std::size_t c1 = column_of(mm, 1);
      for (std::size_t r = 0; r < mm.rows.size(); ++r) {
        const Subgroup& H = mm.rows[r].representative;
        // trivial column is the index vector
        CHECK(mm.at(r, c1) == g.n / H.order());
        for (std::size_t c = 0; c < mm.columns.size(); ++c) {
          const Subgroup& C = mm.columns[c].representative;
          // nonzero iff some conjugate of C embeds in H
          bool embeds = false;
          for (int by = 0; by < g.n && !embeds; ++by)
            embeds = subgroup_leq(conjugate_subgroup(g, C, by), H);
          CHECK((mm.at(r, c) != 0) == embeds);
          if (H.order() % C.order() != 0) CHECK(mm.at(r, c) == 0);
        }
        // whole-group row (when present) is all ones
        if (H.order() == g.n)
          for (std::size_t c = 0; c < mm.columns.size(); ++c) CHECK(mm.at(r, c) == 1);
      }
      // conjugate representatives give identical rows and columns
      for (std::size_t r = 0; r < mm.rows.size(); ++r)
        for (std::size_t c = 0; c < mm.columns.size(); ++c)
          for (int by = 0; by < g.n; by += 3) {
            Subgroup hc = conjugate_subgroup(g, mm.rows[r].representative, by);
            Subgroup cc = conjugate_subgroup(g, mm.columns[c].representative, by);
            CHECK(mark(g, hc, cc) == mm.at(r, c));
          }
    }
  }
}

TEST_CASE("dress certificate for sym:3 at p = 3 is the textbook solution") {
  FiniteGroup g = make_group("sym:3");
  DressCertificate cert = dress_certificate(g, 3);
  REQUIRE(cert.classes.size() == 3);
  std::map<int, BigRat> by_order;
  for (std::size_t i = 0; i < cert.classes.size(); ++i)
    by_order[cert.classes[i].representative.order()] = cert.coefficients[i];
  CHECK(by_order[1] == BigRat(-1, 2));
  CHECK(by_order[2] == BigRat(1));
  CHECK(by_order[3] == BigRat(1, 2));
  CHECK(verify_certificate(g, cert));
}

TEST_CASE("dress certificate degenerates to {G: 1} when G is in its own family") {
  SUBCASE("p-group") {
    FiniteGroup g = make_group("dihedral:4");
    DressCertificate cert = dress_certificate(g, 2);
    for (std::size_t i = 0; i < cert.classes.size(); ++i) {
      if (cert.classes[i].representative.order() == g.n)
        CHECK(cert.coefficients[i] == 1);
      else
        CHECK(cert.coefficients[i] == 0);
    }
    CHECK(verify_certificate(g, cert));
  }
  SUBCASE("sym:3 at p = 2 (2-hyperelementary already)") {
    FiniteGroup g = make_group("sym:3");
    DressCertificate cert = dress_certificate(g, 2);
    for (std::size_t i = 0; i < cert.classes.size(); ++i) {
      if (cert.classes[i].representative.order() == g.n)
        CHECK(cert.coefficients[i] == 1);
      else
        CHECK(cert.coefficients[i] == 0);
    }
    CHECK(verify_certificate(g, cert));
  }
}

TEST_CASE("certificate verification rejects perturbations") {
  FiniteGroup g = make_group("sym:3");
  DressCertificate cert = dress_certificate(g, 3);
  REQUIRE(verify_certificate(g, cert));
  DressCertificate bad = cert;
  bad.coefficients[0] += 1;
  CHECK_FALSE(verify_certificate(g, bad));
  // denominator not coprime to p is rejected even if the identity held
  DressCertificate badden = cert;
  badden.prime = 2;
  CHECK_FALSE(verify_certificate(g, badden));
}

TEST_CASE("hand-built {G: 1} certificate verifies when G is p-hyperelementary") {
  FiniteGroup g = make_group("cyclic:6");
  DressCertificate cert;
  cert.prime = 2;
  cert.classes = family_report(g, 2).pHyperelementaryClasses;
  cert.coefficients.assign(cert.classes.size(), BigRat(0));
  for (std::size_t i = 0; i < cert.classes.size(); ++i)
    if (cert.classes[i].representative.order() == g.n) cert.coefficients[i] = 1;
  CHECK(verify_certificate(g, cert));
}

TEST_CASE("round-trip over small groups, all primes dividing the order") {
  for (const char* spec : {"sym:3", "cyclic:6", "cyclic:12", "dihedral:4", "dihedral:6",
                           "sym:4", "perm(4;(1,2,3);(2,3,4))", "product(sym:3,cyclic:2)",
                           "cyclic:30"}) {
    CAPTURE(spec);
    FiniteGroup g = make_group(spec);
    for (long long p : prime_divisors(g.n)) {
      CAPTURE(p);
      DressCertificate cert = dress_certificate(g, p);
      CHECK(verify_certificate(g, cert));
      for (const BigRat& a : cert.coefficients)
        CHECK(boost::multiprecision::denominator(a) % p != 0);
    }
  }
  FiniteGroup q8 = make_quaternion8();
  CHECK(verify_certificate(q8, dress_certificate(q8, 2)));
}
