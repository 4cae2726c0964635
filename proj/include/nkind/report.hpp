#pragma once

#include <string>

#include "json.hpp"
#include "nkind/families.hpp"
#include "nkind/gamma.hpp"
#include "nkind/generation.hpp"
#include "nkind/group.hpp"
#include "nkind/swan.hpp"

namespace nkind::report {

// All documents are nlohmann ordered JSON with schemaVersion "1"; key order
// is fixed so identical commands produce byte-identical output.
using Json = nlohmann::ordered_json;

Json subgroup_json(const FiniteGroup& g, const Subgroup& s);
Json class_json(const FiniteGroup& g, const SubgroupClass& c);

struct FamiliesExtras {
  bool condition_applicable = false;
  bool condition_holds = false;
};

Json families_doc(const FiniteGroup& g, long long p, const FamilyReport& fr,
                  const FamiliesExtras& extras);
std::string families_text(const FiniteGroup& g, long long p, const FamilyReport& fr,
                          const FamiliesExtras& extras);

Json generation_doc(const FiniteGroup& g, long long p,
                    const std::vector<GenerationDatum>& data, bool deduped,
                    const std::vector<DedupedDatum>& dd);
std::string generation_text(const FiniteGroup& g, long long p,
                            const std::vector<GenerationDatum>& data, bool deduped,
                            const std::vector<DedupedDatum>& dd);

Json cover_doc(const FiniteGroup& g, long long p, const std::vector<SubgroupClass>& cover);
std::string cover_text(const FiniteGroup& g, long long p,
                       const std::vector<SubgroupClass>& cover);

Json classify_doc(const FiniteGroup& g, const ClassifySweep& sweep, long long window,
                  const std::vector<char>& alpha_ok, const std::vector<char>& diagram_ok);
std::string classify_text(const FiniteGroup& g, const ClassifySweep& sweep, long long window,
                          const std::vector<char>& alpha_ok,
                          const std::vector<char>& diagram_ok);

Json dress_doc(const FiniteGroup& g, const DressCertificate& cert, bool verified);
std::string dress_text(const FiniteGroup& g, const DressCertificate& cert, bool verified);

Json exponents_doc(const ExponentReport& rep);
std::string exponents_text(const ExponentReport& rep);

Json vanishing_doc(const FiniteGroup& g, const VanishingReport& rep);
std::string vanishing_text(const FiniteGroup& g, const VanishingReport& rep);

}  // namespace nkind::report
