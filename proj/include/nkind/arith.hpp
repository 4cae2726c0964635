#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace nkind {

// Elementary exact number theory shared across the modules. All inputs are
// small (group orders, moduli of the second factor), so trial division is
// enough everywhere.

bool is_prime(long long n);

// (prime, exponent) pairs, primes ascending; factorize(1) == {}.
std::vector<std::pair<long long, int>> factorize(long long n);

std::vector<long long> prime_divisors(long long n);

// Ascending list of all positive divisors.
std::vector<long long> divisors(long long n);

long long ipow(long long base, int exp);

// Largest power of p dividing n (n >= 1).
long long p_part(long long n, long long p);
long long p_prime_part(long long n, long long p);
int valuation(long long n, long long p);

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

// Least positive inverse of a modulo m; requires gcd(a, m) == 1.
// mod_inverse(a, 1) == 1 by convention.
long long mod_inverse(long long a, long long m);

long long euler_phi(long long n);

// Residues coprime to m, ascending. units_mod(1) == {0} (the trivial unit).
std::vector<long long> units_mod(long long m);

// Positive mod: result in [0, m).
inline long long pos_mod(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace nkind
