#include "pqk/formats.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "pqk/error.hpp"

namespace pqk::formats {
namespace {

// Caps exponents read from files; a single huge power would make every
// later product explode.
constexpr std::uint64_t kMaxExponent = 64;

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing \"" + key + "\"");
  return *it;
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

Json point_to_json(const PointQ& p) {
  Json out = Json::array();
  for (const auto& x : p) out.push_back(to_string(x));
  return out;
}

PointQ point_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 4) throw ParseError(where + ": expected 4 coordinates");
  PointQ p;
  for (std::size_t k = 0; k < 4; ++k) p[k] = rational_from_json(j[k], where + "[" + std::to_string(k) + "]");
  return p;
}

}  // namespace

Json to_json(const RealPoly4& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"coef", to_string(c)}, {"exp", {e[0], e[1], e[2], e[3]}}});
  return terms;
}

RealPoly4 poly_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial: expected an array of terms");
  RealPoly4 p;
  for (std::size_t n = 0; n < j.size(); ++n) {
    const std::string where = "term " + std::to_string(n);
    const Json& term = j[n];
    const Rational coef = rational_from_json(member(term, "coef", where), where + ".coef");
    const Json& exp = member(term, "exp", where);
    if (!exp.is_array() || exp.size() != 4) throw ParseError(where + ".exp: expected 4 exponents");
    RealPoly4::Exponent e{};
    for (std::size_t k = 0; k < 4; ++k) {
      if (!exp[k].is_number_unsigned()) throw ParseError(where + ".exp: exponents must be nonnegative integers");
      const auto v = exp[k].get<std::uint64_t>();
      if (v > kMaxExponent) throw ParseError(where + ".exp: exponent too large");
      e[k] = static_cast<std::uint32_t>(v);
    }
    if (p.terms().count(e) != 0) throw ParseError(where + ": duplicate exponent");
    p.add_term(e, coef);
  }
  return p;
}

Json to_json(const PQPolyMap& f) {
  return {{"f0", to_json(f[0])}, {"f1", to_json(f[1])}, {"f2", to_json(f[2])}, {"f3", to_json(f[3])}};
}

PQPolyMap pqmap_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("polynomial map: expected an object with f0..f3");
  PQPolyMap f;
  for (int k = 0; k < 4; ++k) {
    const std::string key = "f" + std::to_string(k);
    try {
      f[k] = poly_from_json(member(j, key.c_str(), "polynomial map"));
    } catch (const ParseError& e) {
      throw ParseError(key + ": " + e.what());
    }
  }
  return f;
}

Json to_json(const EpsilonStructure& s) {
  return {
      {"chirality", to_string(s.chirality)},
      {"domain", {{"lower", point_to_json(s.domain.lower)}, {"upper", point_to_json(s.domain.upper)}}},
      {"epsilon", s.epsilon},
      {"f", to_json(s.f)},
      {"h_sq", to_json(s.h_sq)},
  };
}

EpsilonStructure structure_from_json(const Json& j) {
  const std::string where = "structure";
  EpsilonStructure s;
  const Json& chirality = member(j, "chirality", where);
  if (chirality == "left") {
    s.chirality = Chirality::LeftJ;
  } else if (chirality == "right") {
    s.chirality = Chirality::RightJ;
  } else {
    throw ParseError("structure.chirality: expected \"left\" or \"right\"");
  }
  const Json& eps = member(j, "epsilon", where);
  if (!eps.is_number_integer() || (eps != 1 && eps != -1)) throw ParseError("structure.epsilon: expected 1 or -1");
  s.epsilon = eps.get<int>();
  const Json& domain = member(j, "domain", where);
  s.domain.lower = point_from_json(member(domain, "lower", "structure.domain"), "structure.domain.lower");
  s.domain.upper = point_from_json(member(domain, "upper", "structure.domain"), "structure.domain.upper");
  try {
    s.domain.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("structure.domain: ") + e.what());
  }
  try {
    s.f = pqmap_from_json(member(j, "f", where));
  } catch (const ParseError& e) {
    throw ParseError(std::string("structure.f.") + e.what());
  }
  try {
    s.h_sq = poly_from_json(member(j, "h_sq", where));
  } catch (const ParseError& e) {
    throw ParseError(std::string("structure.h_sq: ") + e.what());
  }
  return s;
}

std::string decimal_string(double v) {
  char buf[64];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

Json to_json(const StructureReport& r) {
  return {
      {"passed", r.passed()},
      {"symbolic",
       {{"real_part_zero", r.real_part_zero},
        {"h_sq_identity", r.h_sq_identity},
        {"regularity", r.regularity_verdict},
        {"dOmega_zero", r.symbolic_dOmega_zero}}},
      {"residuals",
       {{"j_squared", decimal_string(r.j_squared)},
        {"metric_compatibility", decimal_string(r.metric_compatibility)},
        {"omega_consistency", decimal_string(r.omega_consistency)},
        {"omega_antisymmetry", decimal_string(r.omega_antisymmetry)},
        {"norm_constraint", decimal_string(r.norm_constraint)},
        {"weyl", decimal_string(r.weyl)}}},
      {"samples_used", r.samples_used},
      {"weyl_points_used", r.weyl_points_used},
      {"tolerances",
       {{"tol", decimal_string(r.options.tol)},
        {"weyl_tol", decimal_string(r.options.weyl_tol)},
        {"weyl_step", decimal_string(r.options.weyl_step)}}},
      {"seed", r.options.seed},
  };
}

std::string serialize(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ParseError("cannot write " + path.string());
  out << contents;
  if (!out) throw ParseError("failed writing " + path.string());
}

}  // namespace pqk::formats
