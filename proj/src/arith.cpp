#include "nkind/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace nkind {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
  std::vector<std::pair<long long, int>> out;
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<long long> prime_divisors(long long n) {
  std::vector<long long> out;
  for (auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::vector<long long> divisors(long long n) {
  std::vector<long long> out{1};
  for (auto& [p, e] : factorize(n)) {
    std::size_t base = out.size();
    long long pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long ipow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

long long p_part(long long n, long long p) {
  long long r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

long long p_prime_part(long long n, long long p) { return n / p_part(n, p); }

int valuation(long long n, long long p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }
long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

long long mod_inverse(long long a, long long m) {
  if (m < 1) throw std::invalid_argument("mod_inverse: modulus must be positive");
  if (m == 1) return 1;
  long long r0 = m, r1 = pos_mod(a, m);
  long long t0 = 0, t1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  if (r0 != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
  return pos_mod(t0, m);
}

long long euler_phi(long long n) {
  long long r = n;
  for (auto& [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

std::vector<long long> units_mod(long long m) {
  if (m == 1) return {0};
  std::vector<long long> out;
  for (long long u = 1; u < m; ++u)
    if (std::gcd(u, m) == 1) out.push_back(u);
  return out;
}

}  // namespace nkind
