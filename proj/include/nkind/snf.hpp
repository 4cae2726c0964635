#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

namespace nkind {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;
using Mat = std::vector<std::vector<BigInt>>;

// U * A * V = diag(d), d nonnegative with d[i] | d[i+1].
struct SmithForm {
  Mat U, V;
  std::vector<BigInt> diag;
  std::size_t rows = 0, cols = 0;
};

SmithForm smith_normal_form(Mat a);

// Exact solution x of A x = b whose entries lie in the p-local integers
// (every reduced denominator coprime to p), or nullopt when none exists.
// Solvability over Z_(p) reduces to p-adic divisibility of the transformed
// right-hand side by the elementary divisors.
std::optional<std::vector<BigRat>> solve_p_local(const Mat& a, const std::vector<BigInt>& b,
                                                 long long p);

}  // namespace nkind
