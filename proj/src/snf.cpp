#include "nkind/snf.hpp"

#include <algorithm>
#include <stdexcept>

namespace nkind {

namespace {

Mat identity_matrix(std::size_t n) {
  Mat m(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

SmithForm smith_normal_form(Mat a) {
  const std::size_t r = a.size();
  const std::size_t c = r ? a[0].size() : 0;
  SmithForm f;
  f.rows = r;
  f.cols = c;
  f.U = identity_matrix(r);
  f.V = identity_matrix(c);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(f.U[i], f.U[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < r; ++k) std::swap(a[k][i], a[k][j]);
    for (std::size_t k = 0; k < c; ++k) std::swap(f.V[k][i], f.V[k][j]);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t k = 0; k < c; ++k) a[dst][k] += q * a[src][k];
    for (std::size_t k = 0; k < r; ++k) f.U[dst][k] += q * f.U[src][k];
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t k = 0; k < r; ++k) a[k][dst] += q * a[k][src];
    for (std::size_t k = 0; k < c; ++k) f.V[k][dst] += q * f.V[k][src];
  };
  auto negate_row = [&](std::size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : f.U[i]) x = -x;
  };

  const std::size_t steps = std::min(r, c);
  for (std::size_t t = 0; t < steps; ++t) {
    // locate the smallest nonzero entry of the trailing submatrix
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j)
        if (a[i][j] != 0 &&
            (!found || abs_big(a[i][j]) < abs_big(a[pi][pj]))) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    if (pi != t) swap_rows(pi, t);
    if (pj != t) swap_cols(pj, t);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a[i][t] == 0) continue;
        BigInt q = a[i][t] / a[t][t];
        if (q != 0) add_row(i, t, -q);
        if (a[i][t] != 0) {  // remainder strictly smaller, promote it
          swap_rows(i, t);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a[t][j] == 0) continue;
        BigInt q = a[t][j] / a[t][t];
        if (q != 0) add_col(j, t, -q);
        if (a[t][j] != 0) {
          swap_cols(j, t);
          clean = false;
        }
      }
      if (!clean) continue;

      // pivot must divide every remaining entry; if not, fold that row in
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c && divides; ++j)
          if (a[i][j] % a[t][t] != 0) {
            add_row(t, i, 1);
            divides = false;
          }
      if (divides) break;
    }
    if (a[t][t] < 0) negate_row(t);
  }

  f.diag.resize(steps);
  for (std::size_t t = 0; t < steps; ++t) f.diag[t] = a[t][t];
  return f;
}

std::optional<std::vector<BigRat>> solve_p_local(const Mat& a, const std::vector<BigInt>& b,
                                                 long long p) {
  const std::size_t r = a.size();
  const std::size_t c = r ? a[0].size() : 0;
  if (b.size() != r) throw std::invalid_argument("solve_p_local: size mismatch");

  SmithForm f = smith_normal_form(a);
  std::vector<BigInt> ub(r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) ub[i] += f.U[i][k] * b[k];

  const std::size_t steps = std::min(r, c);
  std::vector<BigRat> y(c, 0);
  for (std::size_t i = 0; i < steps; ++i) {
    if (f.diag[i] == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      BigRat v(ub[i], f.diag[i]);
      if (boost::multiprecision::denominator(v) % p == 0) return std::nullopt;
      y[i] = v;
    }
  }
  for (std::size_t i = steps; i < r; ++i)
    if (ub[i] != 0) return std::nullopt;

  std::vector<BigRat> x(c, 0);
  for (std::size_t j = 0; j < c; ++j)
    for (std::size_t k = 0; k < c; ++k)
      if (y[k] != 0) x[j] += BigRat(f.V[j][k]) * y[k];

  // exact re-check of A x = b
  for (std::size_t i = 0; i < r; ++i) {
    BigRat acc = 0;
    for (std::size_t j = 0; j < c; ++j)
      if (x[j] != 0) acc += BigRat(a[i][j]) * x[j];
    if (acc != BigRat(b[i])) return std::nullopt;
  }
  return x;
}

}  // namespace nkind
