#include "nkind/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "nkind/arith.hpp"
#include "nkind/families.hpp"
#include "nkind/gamma.hpp"
#include "nkind/generation.hpp"
#include "nkind/goursat.hpp"
#include "nkind/oracles.hpp"
#include "nkind/swan.hpp"

namespace nkind {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Wraps a check body so exceptions become failures with the message attached.
template <class Fn>
CheckResult timed_check(const std::string& name, Fn&& body) {
  CheckResult r;
  r.name = name;
  auto t0 = Clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = seconds_since(t0);
  return r;
}

std::vector<FiniteGroup> corpus_with_named(int order_bound,
                                           const std::vector<long long>& primes) {
  std::vector<FiniteGroup> all;
  for (long long p : primes)
    for (FiniteGroup& g : hyperelementary_corpus(p, order_bound)) all.push_back(std::move(g));
  for (FiniteGroup& g : named_test_groups())
    if (g.n <= order_bound) all.push_back(std::move(g));
  return all;
}

// Drops literal duplicates (same composition table); pure functions give the
// same result on them.
std::vector<std::size_t> distinct_tables(const std::vector<FiniteGroup>& groups) {
  std::set<std::pair<int, std::vector<int>>> seen;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < groups.size(); ++i)
    if (seen.insert({groups[i].n, groups[i].mul}).second) keep.push_back(i);
  return keep;
}

}  // namespace

std::vector<FiniteGroup> named_test_groups() {
  std::vector<FiniteGroup> out;
  out.push_back(make_group("cyclic:1"));
  out.push_back(make_group("cyclic:6"));
  out.push_back(make_group("cyclic:12"));
  out.push_back(make_group("cyclic:30"));
  out.push_back(make_group("sym:3"));
  out.push_back(make_group("sym:4"));
  out.push_back(make_group("dihedral:4"));
  out.push_back(make_group("dihedral:6"));
  out.push_back(make_group("perm(4;(1,2,3);(2,3,4))"));  // alternating of degree 4
  out.push_back(make_group("product(sym:3,cyclic:2)"));
  out.push_back(make_quaternion8());
  return out;
}

CheckResult check_exponent_values() {
  return timed_check("exponent bounds c(n)/d(n)", [](CheckResult& r) {
    ExponentReport rep = exponent_report(60);
    bool ok = rep.c == 1296000 && rep.d == 120;
    std::map<long long, long long> per(rep.perPrime.begin(), rep.perPrime.end());
    ok = ok && per.at(2) == 128 && per.at(3) == 81 && per.at(5) == 125;
    ok = ok && rep.refinedNK0 == 8 &&
         rep.vanishingPrimes == std::vector<long long>{3, 5};
    // structural guards over the whole range
    long long bad = 0;
    for (long long n = 1; n <= 10000 && ok; ++n) {
      ExponentReport e = exponent_report(n);
      for (auto [q, cq] : e.perPrime) {
        long long k = valuation(n, q);
        if (cq < p_part(n, q) || cq >= q * k * n) ++bad;
      }
      if (e.c % e.d != 0) ++bad;          // d(n) divides c(n)
      if (e.d % e.refinedNK0 != 0) ++bad; // refined bound divides d(n)
      if (bad) ok = false;
    }
    r.pass = ok;
    std::ostringstream os;
    os << "c(60) = " << rep.c.str() << ", d(60) = " << rep.d.str()
       << ", per-prime 128/81/125, guards over n <= 10000";
    r.detail = os.str();
  });
}

CheckResult check_elementarity_corpus(int order_bound, const std::vector<long long>& primes,
                                      Exec exec) {
  return timed_check("elementarity criterion over the hyperelementary corpus",
                     [&](CheckResult& r) {
    long long groups = 0, hyp_true = 0, violations = 0;
    for (long long p : primes) {
      std::vector<FiniteGroup> corpus = hyperelementary_corpus(p, order_bound);
      groups += static_cast<long long>(corpus.size());
      std::vector<char> hyp(corpus.size(), 0), bad(corpus.size(), 0);
      for_each_index(corpus.size(), exec, [&](std::size_t i) {
        try {
          ElementarityCheck c = elementarity_criterion(corpus[i], p);
          hyp[i] = c.hypothesisHolds ? 1 : 0;
          if (c.hypothesisHolds && !c.conclusionHolds) bad[i] = 1;  // unreachable: thrown
        } catch (const InternalError&) {
          bad[i] = 1;
        }
      });
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        hyp_true += hyp[i];
        violations += bad[i];
      }
    }
    r.pass = violations == 0 && groups > 0;
    std::ostringstream os;
    os << groups << " corpus groups (bound " << order_bound << "), hypothesis held for "
       << hyp_true << ", violations " << violations;
    r.detail = os.str();
  });
}

CheckResult check_classification_dichotomy(Exec exec) {
  return timed_check("deep-or-elementary classification dichotomy", [&](CheckResult& r) {
    const std::vector<std::string> specs = {"sym:3", "cyclic:6", "dihedral:4",
                                            "perm(4;(1,2,3);(2,3,4))",
                                            "product(sym:3,cyclic:2)"};
    long long total = 0, elementary = 0, failures = 0;
    for (const std::string& spec : specs) {
      FiniteGroup g = make_group(spec);
      for (long long p : {2LL, 3LL}) {
        for (long long M : {2LL, 3LL}) {
          ClassifySweep sweep = classify_all(g, p, M, exec);
          total += static_cast<long long>(sweep.records.size());
          std::vector<char> bad(sweep.records.size(), 0);
          for_each_index(sweep.records.size(), exec, [&](std::size_t i) {
            const ClassificationRecord& rec = sweep.records[i];
            if (rec.kind == GammaCase::Deep) {
              if (rec.m < M || !gamma_ladder_check(g, rec.H, 2 * sweep.N)) bad[i] = 1;
            } else {
              std::string why;
              if (!verify_alpha(g, rec, 3 * sweep.N, &why) || !verify_diagram(g, rec))
                bad[i] = 1;
            }
          });
          for (std::size_t i = 0; i < sweep.records.size(); ++i) {
            if (bad[i]) ++failures;
            if (sweep.records[i].kind == GammaCase::Elementary) ++elementary;
          }
        }
      }
    }
    r.pass = failures == 0 && total > 0;
    std::ostringstream os;
    os << total << " hyperelementary subgroups classified over 5 groups x {2,3} x {2,3}, "
       << elementary << " elementary (alpha window 3N + diagram verified), failures "
       << failures;
    r.detail = os.str();
  });
}

CheckResult check_dress_roundtrip(int order_bound, Exec exec) {
  return timed_check("p-local induction certificate round-trip", [&](CheckResult& r) {
    std::vector<FiniteGroup> all = corpus_with_named(order_bound, {2, 3, 5});
    std::vector<std::size_t> keep = distinct_tables(all);
    long long certraw = 0, failures = 0;
    std::vector<long long> counts(keep.size(), 0), bad(keep.size(), 0);
    for_each_index(keep.size(), exec, [&](std::size_t t) {
      const FiniteGroup& g = all[keep[t]];
      for (long long q : prime_divisors(g.n)) {
        try {
          DressCertificate cert = dress_certificate(g, q, Exec::Serial);
          if (!verify_certificate(g, cert, Exec::Serial)) ++bad[t];
        } catch (const std::exception&) {
          ++bad[t];
        }
        ++counts[t];
      }
    });
    for (std::size_t t = 0; t < keep.size(); ++t) {
      certraw += counts[t];
      failures += bad[t];
    }
    r.pass = failures == 0 && certraw > 0;
    std::ostringstream os;
    os << certraw << " certificates over " << keep.size()
       << " distinct corpus groups (order <= " << order_bound << "), failures " << failures;
    r.detail = os.str();
  });
}

CheckResult check_goursat_counts(Exec exec) {
  return timed_check("product-subgroup enumeration vs brute force", [&](CheckResult& r) {
    const std::vector<std::string> specs = {
        "cyclic:1", "cyclic:2",    "cyclic:3",   "cyclic:4",
        "cyclic:6", "cyclic:8",    "cyclic:12",  "sym:3",
        "dihedral:4", "dihedral:6", "perm(4;(1,2,3);(2,3,4))"};
    std::vector<FiniteGroup> groups;
    for (const std::string& s : specs) groups.push_back(make_group(s));

    struct Task {
      std::size_t gi;
      long long N;
    };
    std::vector<Task> tasks;
    for (std::size_t gi = 0; gi < groups.size(); ++gi)
      for (long long N = 1; N <= 8; ++N) tasks.push_back({gi, N});

    std::vector<char> ok(tasks.size(), 0);
    for_each_index(tasks.size(), exec, [&](std::size_t t) {
      const FiniteGroup& g = groups[tasks[t].gi];
      const long long N = tasks[t].N;
      std::vector<GoursatRecord> recs = goursat_enumerate(g, N, Exec::Serial);
      std::multiset<long long> got;
      for (const GoursatRecord& rec : recs) got.insert(rec.order());
      FiniteGroup prod = make_product(g, make_cyclic(N), 1 << 20);
      std::multiset<long long> want;
      for (const Subgroup& s : subgroups_by_generator_bfs(prod)) want.insert(s.order());
      ok[t] = (got == want) ? 1 : 0;
    });
    long long failures = std::count(ok.begin(), ok.end(), 0);
    r.pass = failures == 0;
    std::ostringstream os;
    os << tasks.size() << " (G, N) pairs with |G| <= 12, N <= 8; count and order-multiset "
       << "mismatches " << failures;
    r.detail = os.str();
  });
}

CheckResult check_arithmetic_laws(long long bound) {
  return timed_check("Verschiebung splitting and I(g) laws", [&](CheckResult& r) {
    long long cases = 0, failures = 0;
    for (long long k = 1; k <= bound; ++k)
      for (long long m = 1; m <= bound; ++m) {
        VerschiebungSplit s = split_verschiebung(k, m);
        ++cases;
        bool ok = s.k0 * s.k1 == k;
        for (long long q : prime_divisors(s.k1))
          if (m % q != 0) ok = false;
        ok = ok && std::gcd(s.k0, m) == 1;
        ok = ok && pos_mod(s.l0 * s.k0, m) == pos_mod(1, m);
        ok = ok && std::gcd(s.l0, m) == 1;
        if (!ok) ++failures;
      }
    // I-set multiplicativity: k1, k2 in I(m), k1 k2 <= bound => k1 k2 in I(m)
    for (long long m = 1; m <= bound; ++m) {
      std::vector<long long> is = i_set(m, bound);
      for (long long k1 : is)
        for (long long k2 : is) {
          if (k1 * k2 > bound) continue;
          ++cases;
          if (!in_I(k1 * k2, m)) ++failures;
        }
    }
    r.pass = failures == 0;
    std::ostringstream os;
    os << cases << " cases on 1.." << bound << ", failures " << failures;
    r.detail = os.str();
  });
}

CheckResult check_vanishing_reports() {
  return timed_check("square-free vanishing statements", [](CheckResult& r) {
    FiniteGroup g30 = make_group("cyclic:30");
    VanishingReport v30 = vanishing_report(g30);
    bool ok = v30.squarefree && v30.zeroLocalizations == std::vector<long long>{2, 3, 5} &&
              v30.statement.find("NK_n(ZG) = 0 for n <= 1") != std::string::npos &&
              v30.statement.find("square-free") != std::string::npos;
    FiniteGroup g12 = make_group("cyclic:12");
    VanishingReport v12 = vanishing_report(g12);
    ok = ok && !v12.squarefree && v12.zeroLocalizations == std::vector<long long>{3};
    FiniteGroup g4 = make_group("cyclic:4");
    ok = ok && vanishing_report(g4).zeroLocalizations.empty();
    r.pass = ok;
    r.detail = "|G| = 30 square-free (all of 2,3,5 vanish), |G| = 12 -> {3}, |G| = 4 -> {}";
  });
}

CheckResult check_families_bruteforce(int order_bound, Exec exec) {
  return timed_check("family detectors vs structure search", [&](CheckResult& r) {
    std::vector<FiniteGroup> all = corpus_with_named(order_bound, {2, 3, 5});
    std::vector<std::size_t> keep = distinct_tables(all);
    std::vector<long long> checked(keep.size(), 0), bad(keep.size(), 0);
    for_each_index(keep.size(), exec, [&](std::size_t t) {
      const FiniteGroup& g = all[keep[t]];
      std::set<long long> primes{2, 3, 5};
      for (long long q : prime_divisors(g.n)) primes.insert(q);
      for (const SubgroupClass& sc : subgroup_classes(g, Exec::Serial)) {
        FiniteGroup h = materialize(g, sc.representative);
        for (long long q : primes) {
          ++checked[t];
          if (is_p_elementary_sub(g, sc.representative, q) != brute_force_p_elementary(h, q))
            ++bad[t];
          if (is_p_hyperelementary_sub(g, sc.representative, q) !=
              brute_force_p_hyperelementary(h, q))
            ++bad[t];
        }
      }
    });
    long long total = std::accumulate(checked.begin(), checked.end(), 0LL);
    long long failures = std::accumulate(bad.begin(), bad.end(), 0LL);
    r.pass = failures == 0 && total > 0;
    std::ostringstream os;
    os << total << " detector comparisons over " << keep.size()
       << " distinct groups (order <= " << order_bound << "), mismatches " << failures;
    r.detail = os.str();
  });
}

std::vector<CheckResult> run_full_suite(Exec exec) {
  std::vector<CheckResult> out;
  out.push_back(check_exponent_values());
  out.push_back(check_arithmetic_laws(200));
  out.push_back(check_vanishing_reports());
  out.push_back(check_goursat_counts(exec));
  out.push_back(check_families_bruteforce(48, exec));
  out.push_back(check_elementarity_corpus(100, {2, 3, 5}, exec));
  out.push_back(check_classification_dichotomy(exec));
  out.push_back(check_dress_roundtrip(48, exec));
  return out;
}

}  // namespace nkind
