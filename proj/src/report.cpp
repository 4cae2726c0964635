#include "nkind/report.hpp"

#include <sstream>

namespace nkind::report {

namespace {

Json header(const char* command, const FiniteGroup* g) {
  Json doc;
  doc["schemaVersion"] = "1";
  doc["command"] = command;
  if (g) {
    doc["group"] = Json{{"spec", g->label}, {"order", g->n}};
  }
  return doc;
}

std::string member_names(const FiniteGroup& g, const std::vector<int>& members) {
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += g.names[members[i]];
  }
  return out + "}";
}

Json class_array(const FiniteGroup& g, const std::vector<SubgroupClass>& classes) {
  Json arr = Json::array();
  for (const SubgroupClass& c : classes) arr.push_back(class_json(g, c));
  return arr;
}

void class_lines(std::ostream& os, const FiniteGroup& g,
                 const std::vector<SubgroupClass>& classes) {
  for (const SubgroupClass& c : classes)
    os << "  order " << c.representative.order() << "  size " << c.classSize << "  "
       << member_names(g, c.representative.members) << "\n";
}

}  // namespace

Json subgroup_json(const FiniteGroup& g, const Subgroup& s) {
  Json j;
  j["order"] = s.order();
  j["members"] = s.members;
  Json names = Json::array();
  for (int x : s.members) names.push_back(g.names[x]);
  j["names"] = names;
  return j;
}

Json class_json(const FiniteGroup& g, const SubgroupClass& c) {
  Json j = subgroup_json(g, c.representative);
  j["classSize"] = c.classSize;
  return j;
}

Json families_doc(const FiniteGroup& g, long long p, const FamilyReport& fr,
                  const FamiliesExtras& extras) {
  Json doc = header("families", &g);
  doc["prime"] = p;
  doc["pSubgroupClasses"] = class_array(g, fr.pSubgroupClasses);
  doc["pElementaryClasses"] = class_array(g, fr.pElementaryClasses);
  doc["pHyperelementaryClasses"] = class_array(g, fr.pHyperelementaryClasses);
  Json cond;
  cond["applicable"] = extras.condition_applicable;
  cond["holds"] = extras.condition_applicable ? Json(extras.condition_holds) : Json(nullptr);
  cond["statement"] =
      !extras.condition_applicable ? "p does not divide the group order"
      : extras.condition_holds
          ? "Sylow p-subgroup is normal and contains every centralizer of its nontrivial "
            "subgroups; induction from its Nil group fixed points is an isomorphism after "
            "localizing at p"
          : "condition fails; twisted induction data does not degenerate";
  doc["normalSylowCondition"] = cond;
  return doc;
}

std::string families_text(const FiniteGroup& g, long long p, const FamilyReport& fr,
                          const FamiliesExtras& extras) {
  std::ostringstream os;
  os << "group " << g.label << " (order " << g.n << "), prime " << p << "\n";
  os << "p-subgroup classes (" << fr.pSubgroupClasses.size() << "):\n";
  class_lines(os, g, fr.pSubgroupClasses);
  os << "p-elementary classes (" << fr.pElementaryClasses.size() << "):\n";
  class_lines(os, g, fr.pElementaryClasses);
  os << "p-hyperelementary classes (" << fr.pHyperelementaryClasses.size() << "):\n";
  class_lines(os, g, fr.pHyperelementaryClasses);
  if (!extras.condition_applicable)
    os << "normal-Sylow condition: not applicable (p does not divide |G|)\n";
  else if (extras.condition_holds)
    os << "normal-Sylow condition: holds; induction from the Sylow p-subgroup's Nil group "
          "fixed points is an isomorphism after localizing at p\n";
  else
    os << "normal-Sylow condition: does not hold\n";
  return os.str();
}

namespace {

Json datum_json(const FiniteGroup& g, const GenerationDatum& d) {
  Json j;
  j["P"] = class_json(g, d.Pclass);
  j["g"] = Json{{"index", d.g}, {"name", g.names[d.g]}, {"order", d.gOrder}};
  j["allowedKPrimes"] = d.allowedKPrimes;
  j["E"] = subgroup_json(g, d.E);
  j["plainInduction"] = d.plainInduction;
  return j;
}

}  // namespace

Json generation_doc(const FiniteGroup& g, long long p,
                    const std::vector<GenerationDatum>& data, bool deduped,
                    const std::vector<DedupedDatum>& dd) {
  Json doc = header("generation", &g);
  doc["prime"] = p;
  doc["provenance"] =
      "after localizing at p, NK_n(RG) is generated by Verschiebung twists V_k of the "
      "twisted induction maps phi(P,g) over the listed (P,g), k restricted to I(g); with "
      "g = e the map is ordinary induction from P";
  doc["notes"] =
      "the data list every g exhaustively; no canonical reduction on g is known, so "
      "distinct rows may generate the same image (--dedupe collapses equal "
      "(P-class, E-class, |g|) triples)";
  doc["dedupe"] = deduped;
  Json arr = Json::array();
  if (deduped) {
    for (const DedupedDatum& d : dd) {
      Json j = datum_json(g, d.datum);
      j["multiplicity"] = d.multiplicity;
      arr.push_back(std::move(j));
    }
  } else {
    for (const GenerationDatum& d : data) arr.push_back(datum_json(g, d));
  }
  doc["data"] = std::move(arr);
  return doc;
}

std::string generation_text(const FiniteGroup& g, long long p,
                            const std::vector<GenerationDatum>& data, bool deduped,
                            const std::vector<DedupedDatum>& dd) {
  std::ostringstream os;
  os << "group " << g.label << " (order " << g.n << "), prime " << p << "\n";
  os << "generation data (surjective after localizing at p; k ranges over I(g); all g "
        "listed, possibly redundantly):\n";
  auto line = [&](const GenerationDatum& d, long long mult) {
    os << "  P " << member_names(g, d.Pclass.representative.members) << "  g = "
       << g.names[d.g] << " (order " << d.gOrder << ")  E of order " << d.E.order();
    if (d.plainInduction) os << "  [ordinary induction]";
    if (mult > 1) os << "  x" << mult;
    os << "\n";
  };
  if (deduped)
    for (const DedupedDatum& d : dd) line(d.datum, d.multiplicity);
  else
    for (const GenerationDatum& d : data) line(d, 1);
  return os.str();
}

Json cover_doc(const FiniteGroup& g, long long p, const std::vector<SubgroupClass>& cover) {
  Json doc = header("cover", &g);
  doc["prime"] = p;
  doc["provenance"] =
      "induction from the listed p-elementary subgroup classes is surjective on NK_n "
      "after localizing at p";
  doc["classes"] = class_array(g, cover);
  return doc;
}

std::string cover_text(const FiniteGroup& g, long long p,
                       const std::vector<SubgroupClass>& cover) {
  std::ostringstream os;
  os << "group " << g.label << " (order " << g.n << "), prime " << p << "\n";
  os << "p-elementary cover (" << cover.size() << " classes):\n";
  class_lines(os, g, cover);
  return os.str();
}

Json classify_doc(const FiniteGroup& g, const ClassifySweep& sweep, long long window,
                  const std::vector<char>& alpha_ok, const std::vector<char>& diagram_ok) {
  Json doc = header("classify", &g);
  doc["prime"] = sweep.p;
  doc["M"] = sweep.M;
  doc["N"] = sweep.N;
  doc["window"] = window;
  long long deep = 0;
  Json arr = Json::array();
  for (std::size_t i = 0; i < sweep.records.size(); ++i) {
    const ClassificationRecord& r = sweep.records[i];
    Json j;
    j["order"] = r.H.order();
    j["m"] = r.m;
    j["case"] = (r.kind == GammaCase::Deep) ? "deep" : "elementary";
    j["elementaryFlag"] = r.hIsElementary;
    if (r.kind == GammaCase::Deep) {
      ++deep;
      j["pOrder"] = nullptr;
      j["ell"] = nullptr;
      j["k"] = r.m;
    } else {
      j["pOrder"] = r.P.order();
      j["ell"] = r.ell;
      j["k"] = r.k;
      j["alphaVerified"] = static_cast<bool>(alpha_ok[i]);
      j["diagramVerified"] = static_cast<bool>(diagram_ok[i]);
    }
    arr.push_back(std::move(j));
  }
  doc["counts"] = Json{{"hyperelementary", sweep.records.size()},
                       {"deep", deep},
                       {"elementary", sweep.records.size() - deep}};
  doc["records"] = std::move(arr);
  return doc;
}

std::string classify_text(const FiniteGroup& g, const ClassifySweep& sweep, long long window,
                          const std::vector<char>& alpha_ok,
                          const std::vector<char>& diagram_ok) {
  std::ostringstream os;
  os << "group " << g.label << " (order " << g.n << "), prime " << sweep.p << ", M " << sweep.M
     << ", N " << sweep.N << ", window " << window << "\n";
  long long deep = 0;
  for (const ClassificationRecord& r : sweep.records)
    if (r.kind == GammaCase::Deep) ++deep;
  os << "p-hyperelementary subgroups of G x Z/" << sweep.N << ": " << sweep.records.size()
     << " (deep " << deep << ", elementary " << sweep.records.size() - deep << ")\n";
  os << "  order    m  case        |P|  ell    k  alpha  diagram\n";
  for (std::size_t i = 0; i < sweep.records.size(); ++i) {
    const ClassificationRecord& r = sweep.records[i];
    char buf[128];
    if (r.kind == GammaCase::Deep)
      std::snprintf(buf, sizeof buf, "  %5lld %4lld  deep          -    -  %3lld      -        -",
                    r.H.order(), r.m, r.m);
    else
      std::snprintf(buf, sizeof buf, "  %5lld %4lld  elementary %4d %4lld  %3lld  %5s  %7s",
                    r.H.order(), r.m, r.P.order(), r.ell, r.k, alpha_ok[i] ? "ok" : "FAIL",
                    diagram_ok[i] ? "ok" : "FAIL");
    os << buf << "\n";
  }
  return os.str();
}

Json dress_doc(const FiniteGroup& g, const DressCertificate& cert, bool verified) {
  Json doc = header("dress", &g);
  doc["prime"] = cert.prime;
  Json entries = Json::array();
  for (std::size_t i = 0; i < cert.classes.size(); ++i) {
    if (cert.coefficients[i] == 0) continue;
    Json e;
    e["subgroup"] = cert.classes[i].representative.members;
    Json names = Json::array();
    for (int x : cert.classes[i].representative.members) names.push_back(g.names[x]);
    e["names"] = names;
    e["classSize"] = cert.classes[i].classSize;
    e["numerator"] = boost::multiprecision::numerator(cert.coefficients[i]).str();
    e["denominator"] = boost::multiprecision::denominator(cert.coefficients[i]).str();
    entries.push_back(std::move(e));
  }
  doc["certificate"] = Json{{"prime", cert.prime}, {"entries", std::move(entries)}};
  doc["verified"] = verified;
  return doc;
}

std::string dress_text(const FiniteGroup& g, const DressCertificate& cert, bool verified) {
  std::ostringstream os;
  os << "group " << g.label << " (order " << g.n << "), prime " << cert.prime << "\n";
  os << "induction certificate over Z_(" << cert.prime << ") (sum over classes H of a_H "
     << "Ind Res = 1 on all cyclic marks):\n";
  for (std::size_t i = 0; i < cert.classes.size(); ++i) {
    if (cert.coefficients[i] == 0) continue;
    os << "  a = " << cert.coefficients[i].str() << "  H = order "
       << cert.classes[i].representative.order() << " "
       << member_names(g, cert.classes[i].representative.members) << "\n";
  }
  os << "verified: " << (verified ? "yes" : "NO") << "\n";
  return os.str();
}

Json exponents_doc(const ExponentReport& rep) {
  Json doc = header("exponents", nullptr);
  doc["n"] = rep.n;
  Json per = Json::array();
  for (auto [q, cq] : rep.perPrime) per.push_back(Json{{"prime", q}, {"c_q", cq}});
  doc["perPrime"] = std::move(per);
  doc["c"] = rep.c.str();
  doc["d"] = rep.d.str();
  doc["refinedNK0"] = rep.refinedNK0.str();
  doc["vanishingPrimes"] = rep.vanishingPrimes;
  doc["notes"] =
      "c and d bound the exponent of NK_0(ZG) for |G| = n; refinedNK0 additionally drops "
      "primes whose square does not divide n (a derived combination of the per-prime "
      "bounds) since those localizations vanish for n <= 1";
  return doc;
}

std::string exponents_text(const ExponentReport& rep) {
  std::ostringstream os;
  os << "exponent report for n = " << rep.n << "\n";
  for (auto [q, cq] : rep.perPrime) os << "  c_" << q << "(" << rep.n << ") = " << cq << "\n";
  os << "  c(" << rep.n << ") = " << rep.c.str() << "\n";
  os << "  d(" << rep.n << ") = " << rep.d.str() << "\n";
  os << "  refined NK_0 bound (primes with square dividing n) = " << rep.refinedNK0.str()
     << "\n";
  os << "  vanishing localizations (q^2 does not divide n): ";
  if (rep.vanishingPrimes.empty()) os << "none";
  for (std::size_t i = 0; i < rep.vanishingPrimes.size(); ++i)
    os << (i ? "," : "") << rep.vanishingPrimes[i];
  os << "\n";
  return os.str();
}

Json vanishing_doc(const FiniteGroup& g, const VanishingReport& rep) {
  Json doc = header("vanishing", &g);
  doc["order"] = rep.order;
  doc["squarefree"] = rep.squarefree;
  doc["zeroLocalizations"] = rep.zeroLocalizations;
  doc["statement"] = rep.statement;
  return doc;
}

std::string vanishing_text(const FiniteGroup& g, const VanishingReport& rep) {
  std::ostringstream os;
  os << "group " << g.label << " (order " << rep.order << ")\n";
  os << rep.statement << "\n";
  return os.str();
}

}  // namespace nkind::report
