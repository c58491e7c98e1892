#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "polyform/complexaudit.hpp"
#include "polyform/core.hpp"
#include "polyform/feasibility.hpp"

namespace polyform {

using OrderedJson = nlohmann::ordered_json;

// Canonical wire forms.  Field order is part of the contract: the same
// value always serializes to the same bytes.

OrderedJson canonical_json(const PolygonMultiset& m);
OrderedJson canonical_json(const FeasibilityReport& r);
OrderedJson canonical_json(const AccountingRow& row);
OrderedJson canonical_json(const AuditReport& r);

// {"polygons": {"<degree>": <count>, ...}}
PolygonMultiset multiset_from_json(const nlohmann::json& j);
PolygonMultiset parse_multiset(const std::string& text);

// {"vertices": <n>, "tets": [[i,j,k,l], ...]}
TetComplex complex_from_json(const nlohmann::json& j);
TetComplex load_complex(const std::filesystem::path& file);

nlohmann::json load_json_file(const std::filesystem::path& file);

}  // namespace polyform
