#pragma once

#include <string>
#include <vector>

#include "nkind/group.hpp"
#include "nkind/parallel.hpp"

namespace nkind {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// The exact per-prime values 128/81/125 and the products 1296000/120 for
// n = 60, plus structural sanity over 1 <= n <= 10000.
CheckResult check_exponent_values();

// Every hyperelementary corpus group with all cyclic q-quotients present is
// elementary (machine verification of the promotion criterion).
CheckResult check_elementarity_corpus(int order_bound, const std::vector<long long>& primes,
                                      Exec exec);

// Deep-or-elementary dichotomy with verified alpha (window 3N) and diagram
// over the fixed group/prime/M matrix.
CheckResult check_classification_dichotomy(Exec exec);

// dress_certificate + verify_certificate round-trip over the corpus, all
// primes dividing each order.
CheckResult check_dress_roundtrip(int order_bound, Exec exec);

// goursat_enumerate vs brute-force enumeration of the materialized product:
// counts and order multisets.
CheckResult check_goursat_counts(Exec exec);

// split_verschiebung postconditions and in_I multiplicativity on 1..bound.
CheckResult check_arithmetic_laws(long long bound);

// Square-free |G| = 30 and |G| = 12 vanishing statements.
CheckResult check_vanishing_reports();

// family detectors vs the definition-unfolding brute-force searches on every
// subgroup class of every corpus group up to the bound.
CheckResult check_families_bruteforce(int order_bound, Exec exec);

std::vector<CheckResult> run_full_suite(Exec exec);

// Named groups used across the verification corpus.
std::vector<FiniteGroup> named_test_groups();

}  // namespace nkind
