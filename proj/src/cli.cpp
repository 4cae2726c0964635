#include "nkind/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nkind/report.hpp"
#include "nkind/verify.hpp"

namespace nkind {

namespace {

struct CommonOpts {
  std::string format = "text";
  std::string outfile;
  int cap = kDefaultOrderCap;
  bool serial = false;

  Exec exec() const { return serial ? Exec::Serial : Exec::Parallel; }
};

void add_common(CLI::App* sub, CommonOpts& o) {
  sub->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  sub->add_option("--out", o.outfile, "write the report to this file instead of stdout");
  sub->add_option("--cap", o.cap, "group order cap")->capture_default_str();
  sub->add_flag("--serial", o.serial, "run the sweep kernels single-threaded");
}

void emit(const CommonOpts& o, const report::Json& doc, const std::string& text,
          std::ostream& out) {
  std::string payload = (o.format == "json") ? doc.dump(2) + "\n" : text;
  if (o.outfile.empty()) {
    out << payload;
    return;
  }
  std::ofstream f(o.outfile, std::ios::binary);
  if (!f) throw SpecError("cannot open output file " + o.outfile);
  f << payload;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite-group induction data for Bass Nil groups"};
  app.require_subcommand(1);

  struct {
    std::string spec;
    long long prime = 0;
    long long M = 0;
    long long window = 0;
    bool dedupe = false;
    long long n = 0;
    CommonOpts common;
  } o;

  auto* families = app.add_subcommand(
      "families", "p-subgroup, p-elementary and p-hyperelementary classes");
  families->add_option("spec", o.spec, "group construction expression")->required();
  families->add_option("--prime", o.prime, "the prime p")->required();
  add_common(families, o.common);

  auto* generation = app.add_subcommand(
      "generation", "twisted induction generation data (P, g) with targets E");
  generation->add_option("spec", o.spec)->required();
  generation->add_option("--prime", o.prime)->required();
  generation->add_flag("--dedupe", o.dedupe,
                       "collapse data with equal (P-class, E-class, |g|)");
  add_common(generation, o.common);

  auto* cover = app.add_subcommand("cover", "p-elementary classes covering NK after "
                                            "localization");
  cover->add_option("spec", o.spec)->required();
  cover->add_option("--prime", o.prime)->required();
  add_common(cover, o.common);

  auto* classify = app.add_subcommand(
      "classify", "deep/elementary classification of hyperelementary subgroups of G x Z/N");
  classify->add_option("spec", o.spec)->required();
  classify->add_option("--prime", o.prime)->required();
  classify->add_option("--M", o.M, "depth threshold M")->required();
  classify->add_option("--window", o.window, "verification window (default 3N)");
  add_common(classify, o.common);

  auto* dress = app.add_subcommand(
      "dress", "p-local induction certificate over the hyperelementary family");
  dress->add_option("spec", o.spec)->required();
  dress->add_option("--prime", o.prime)->required();
  add_common(dress, o.common);

  auto* exponents =
      app.add_subcommand("exponents", "exponent bounds c(n), d(n) for NK_0(ZG), |G| = n");
  exponents->add_option("n", o.n, "the group order")->required();
  add_common(exponents, o.common);

  auto* vanishing =
      app.add_subcommand("vanishing", "vanishing localizations from square-free parts");
  vanishing->add_option("spec", o.spec)->required();
  add_common(vanishing, o.common);

  auto* verify = app.add_subcommand("verify", "run the full property suite");
  add_common(verify, o.common);

  std::vector<const char*> argv;
  argv.push_back("nkind");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    const Exec exec = o.common.exec();
    if (*families) {
      FiniteGroup g = make_group(o.spec, o.common.cap);
      FamilyReport fr = family_report(g, o.prime, exec);
      report::FamiliesExtras extras;
      extras.condition_applicable = (g.n % o.prime == 0);
      if (extras.condition_applicable)
        extras.condition_holds = induction_isomorphism_condition(g, o.prime);
      emit(o.common, report::families_doc(g, o.prime, fr, extras),
           report::families_text(g, o.prime, fr, extras), out);
    } else if (*generation) {
      FiniteGroup g = make_group(o.spec, o.common.cap);
      std::vector<GenerationDatum> data = generation_data(g, o.prime, exec);
      std::vector<DedupedDatum> dd;
      if (o.dedupe) dd = dedupe_generation_data(g, data);
      emit(o.common, report::generation_doc(g, o.prime, data, o.dedupe, dd),
           report::generation_text(g, o.prime, data, o.dedupe, dd), out);
    } else if (*cover) {
      FiniteGroup g = make_group(o.spec, o.common.cap);
      std::vector<SubgroupClass> cov = elementary_cover(g, o.prime, exec);
      emit(o.common, report::cover_doc(g, o.prime, cov), report::cover_text(g, o.prime, cov),
           out);
    } else if (*classify) {
      FiniteGroup g = make_group(o.spec, o.common.cap);
      ClassifySweep sweep = classify_all(g, o.prime, o.M, exec);
      const long long window = o.window > 0 ? o.window : 3 * sweep.N;
      std::vector<char> alpha_ok(sweep.records.size(), 1), diagram_ok(sweep.records.size(), 1);
      for_each_index(sweep.records.size(), exec, [&](std::size_t i) {
        if (sweep.records[i].kind != GammaCase::Elementary) return;
        alpha_ok[i] = verify_alpha(g, sweep.records[i], window) ? 1 : 0;
        diagram_ok[i] = verify_diagram(g, sweep.records[i]) ? 1 : 0;
      });
      emit(o.common, report::classify_doc(g, sweep, window, alpha_ok, diagram_ok),
           report::classify_text(g, sweep, window, alpha_ok, diagram_ok), out);
    } else if (*dress) {
      FiniteGroup g = make_group(o.spec, o.common.cap);
      DressCertificate cert = dress_certificate(g, o.prime, exec);
      bool verified = verify_certificate(g, cert, exec);
      if (!verified)
        throw InternalError("certificate failed its own verification for " + g.label);
      emit(o.common, report::dress_doc(g, cert, verified),
           report::dress_text(g, cert, verified), out);
    } else if (*exponents) {
      ExponentReport rep = exponent_report(o.n);
      emit(o.common, report::exponents_doc(rep), report::exponents_text(rep), out);
    } else if (*vanishing) {
      FiniteGroup g = make_group(o.spec, o.common.cap);
      VanishingReport rep = vanishing_report(g);
      emit(o.common, report::vanishing_doc(g, rep), report::vanishing_text(g, rep), out);
    } else if (*verify) {
      std::vector<CheckResult> checks = run_full_suite(exec);
      bool all = true;
      std::ostringstream text;
      report::Json arr = report::Json::array();
      for (const CheckResult& c : checks) {
        all = all && c.pass;
        char line[512];
        std::snprintf(line, sizeof line, "[%s] %s: %s (%.2f s)\n",
                      c.pass ? "PASS" : "FAIL", c.name.c_str(), c.detail.c_str(), c.seconds);
        text << line;
        arr.push_back(report::Json{{"name", c.name},
                                   {"pass", c.pass},
                                   {"detail", c.detail},
                                   {"seconds", c.seconds}});
      }
      text << (all ? "all checks passed\n" : "CHECKS FAILED\n");
      report::Json doc;
      doc["schemaVersion"] = "1";
      doc["command"] = "verify";
      doc["checks"] = std::move(arr);
      doc["allPass"] = all;
      emit(o.common, doc, text.str(), out);
      if (!all) return 1;
    }
  } catch (const SpecError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}

}  // namespace nkind
