#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "pqk/geometry.hpp"
#include "pqk/pqmap.hpp"

namespace pqk::formats {

using Json = nlohmann::json;

// Polynomial terms: [{"coef": "<rational or decimal>", "exp": [e0,e1,e2,e3]}, ...]
// sorted by exponent quadruple. Polynomial maps: {"f0": terms, ..., "f3": terms}.
// All readers throw ParseError on schema violations.

Json to_json(const RealPoly4& p);
RealPoly4 poly_from_json(const Json& j);

Json to_json(const PQPolyMap& f);
PQPolyMap pqmap_from_json(const Json& j);

/// {"chirality", "domain": {"lower", "upper"}, "epsilon", "f", "h_sq"}.
Json to_json(const EpsilonStructure& s);
EpsilonStructure structure_from_json(const Json& j);

/// Report document; residuals and tolerances are decimal strings.
Json to_json(const StructureReport& r);

/// Shortest decimal text that reads back to the same double.
std::string decimal_string(double v);

/// Canonical text of a document: two-space indent, keys sorted, trailing
/// newline. Equal documents serialize to identical bytes.
std::string serialize(const Json& j);

/// Parses JSON text; ParseError carries the byte offset on failure.
Json parse_json(const std::string& text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace pqk::formats
