#pragma once

#include <json.hpp>
#include <string>

#include "repring/ktheory.hpp"
#include "repring/presentation.hpp"
#include "repring/rfring.hpp"

namespace repring {

using Json = nlohmann::ordered_json;

// Exact wire formats: rationals are canonical "num/den" strings, cyclotomic
// values are {"conductor": m, "coeffs": [rational, ...]}. Key order is fixed
// by construction so identical inputs serialize byte-identically.

Json rat_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json cyclotomic_json(const Cyclotomic& v);
Cyclotomic cyclotomic_from_json(const Json& j);

Json int_vec_json(const IntVec& v);
IntVec int_vec_from_json(const Json& j);

Json int_mat_json(const IntMat& m);
IntMat int_mat_from_json(const Json& j);

Json chartab_json(const std::string& name, const CharacterTable& table);

Json classes_json(const std::string& name, const AmalgamAnalysis& ctx);

Json ring_json(const RFRing& ring);
/// Re-parses an exported ring report; used for round-trip validation.
/// Returns the canonical JSON rebuilt from the parsed in-memory values.
Json ring_json_roundtrip(const Json& j);

Json kreport_json(const KReport& r);
KReport kreport_from_json(const Json& j);

Json gl_report_json(const GLRankReport& r);
GLRankReport gl_report_from_json(const Json& j);

Json certificate_json(const IsoCertificate& c);
IsoCertificate certificate_from_json(const Json& j);

Json failure_json(const IsoFailure& f);

bool operator==(const KReport& a, const KReport& b);
bool operator==(const GLRankReport& a, const GLRankReport& b);

}  // namespace repring
