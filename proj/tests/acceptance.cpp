// Acceptance suite: runs each criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>

#include "nkind/cli.hpp"
#include "nkind/families.hpp"
#include "nkind/swan.hpp"
#include "nkind/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void line(int criterion, const std::string& name, bool pass, const std::string& detail,
          double seconds) {
  std::printf("criterion %d [%s] %s: %s (%.2f s)\n", criterion, pass ? "PASS" : "FAIL",
              name.c_str(), detail.c_str(), seconds);
  if (!pass) ++failures;
}

void from_check(int criterion, const nkind::CheckResult& r, double budget_seconds) {
  bool pass = r.pass && (budget_seconds <= 0 || r.seconds < budget_seconds);
  std::string detail = r.detail;
  if (budget_seconds > 0) {
    std::ostringstream os;
    os << detail << "; budget " << budget_seconds << " s";
    detail = os.str();
  }
  line(criterion, r.name, pass, detail, r.seconds);
}

// Criterion 1: the CLI itself must print the exact integers, under a second.
void criterion_exponents() {
  auto t0 = Clock::now();
  std::ostringstream out, err;
  int code = nkind::run_cli({"exponents", "60"}, out, err);
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  bool pass = code == 0 && out.str().find("c(60) = 1296000") != std::string::npos &&
              out.str().find("d(60) = 120") != std::string::npos && secs < 1.0;
  // per-prime values against the derived oracle
  nkind::CheckResult per = nkind::check_exponent_values();
  pass = pass && per.pass;
  line(1, "exponent reproduction c(60)/d(60)",
       pass, "CLI printed c = 1296000, d = 120; per-prime 128/81/125; budget 1 s", secs);
}

// Criterion 4 includes the explicit three-column identity for sym:3 at p = 3.
bool sym3_marks_identity() {
  nkind::FiniteGroup g = nkind::make_group("sym:3");
  nkind::DressCertificate cert = nkind::dress_certificate(g, 3);
  nkind::MarksMatrix mm = nkind::marks_matrix(g, 3);
  if (mm.columns.size() != 3) return false;
  for (std::size_t c = 0; c < mm.columns.size(); ++c) {
    nkind::BigRat total = 0;
    for (std::size_t i = 0; i < cert.classes.size(); ++i)
      total += cert.coefficients[i] *
               nkind::BigRat(nkind::mark(g, cert.classes[i].representative,
                                         mm.columns[c].representative));
    if (total != 1) return false;
  }
  return true;
}

}  // namespace

int main() {
  const nkind::Exec exec = nkind::Exec::Parallel;

  criterion_exponents();

  from_check(2, nkind::check_elementarity_corpus(100, {2, 3, 5}, exec), 120.0);

  from_check(3, nkind::check_classification_dichotomy(exec), 600.0);

  {
    nkind::CheckResult r = nkind::check_dress_roundtrip(48, exec);
    auto t0 = Clock::now();
    bool marks_ok = sym3_marks_identity();
    double extra = std::chrono::duration<double>(Clock::now() - t0).count();
    bool pass = r.pass && marks_ok && (r.seconds + extra) < 300.0;
    line(4, r.name, pass,
         r.detail + std::string("; sym:3 p=3 marks identity on all three cyclic columns ") +
             (marks_ok ? "holds" : "FAILS") + "; budget 300 s",
         r.seconds + extra);
  }

  from_check(5, nkind::check_goursat_counts(exec), 0.0);

  from_check(6, nkind::check_arithmetic_laws(200), 0.0);

  from_check(7, nkind::check_vanishing_reports(), 0.0);

  if (failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
