#pragma once

// JSON file formats and report serialization. Rationals are always written
// as "num/den" strings, derived reals with 12 significant digits.

#include <string>

#include <json.hpp>

#include "acfu/construct.hpp"
#include "acfu/designs.hpp"
#include "acfu/hash_family.hpp"
#include "acfu/privacy.hpp"
#include "acfu/verify.hpp"

namespace acfu::io {

using nlohmann::ordered_json;

/// Two-space indentation with arrays of scalars kept on one line.
std::string dump(const ordered_json& j);

/// Throws ParseError.
ordered_json parse(const std::string& text);
ordered_json read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

ordered_json family_to_json(const HashFamily& f, std::size_t budget = kDefaultTableBudget);
HashFamily family_from_json(const ordered_json& j);

ordered_json incidence_to_json(const IncidenceStructure& d);
IncidenceStructure incidence_from_json(const ordered_json& j);

ordered_json mosaic_to_json(const Mosaic& m);
Mosaic mosaic_from_json(const ordered_json& j);

ordered_json quasigroup_to_json(const Quasigroup& q);
Quasigroup quasigroup_from_json(const ordered_json& j);

ordered_json source_to_json(const JointSource& src);
JointSource source_from_json(const ordered_json& j);

ordered_json rational_json(const Rational& r);
ordered_json to_json(const EpsilonResult& e, const std::vector<const std::vector<std::string>*>& witness_labels);
ordered_json to_json(const BoundReport& b);
ordered_json to_json(const BoundEqualities& e);
ordered_json to_json(const VerificationReport& r, const HashFamily& f);
ordered_json to_json(const DesignParams& p, const IncidenceStructure& d);
ordered_json to_json(const Resolution& r, const IncidenceStructure& d);
ordered_json to_json(const ResolutionSearch& r, const IncidenceStructure& d);
ordered_json to_json(const TheoremReport& r);
ordered_json to_json(const PAResult& r);

}  // namespace acfu::io
