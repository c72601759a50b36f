#pragma once

// Malformed command lines for the CLI. Every case must be rejected with the
// usage-error status. File-based cases are written into `dir`.

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace pqk::testing {

using Args = std::vector<std::string>;

inline std::string write_case(const std::filesystem::path& dir, const std::string& name, const std::string& body) {
  const std::filesystem::path p = dir / name;
  std::ofstream(p, std::ios::binary) << body;
  return p.string();
}

/// `structure` and `map` are valid serialized files; proper prefixes of a
/// JSON object are never valid JSON, so truncations are safe corpus entries.
inline std::vector<Args> malformed_corpus(const std::filesystem::path& dir, const std::string& structure,
                                          const std::string& map) {
  std::vector<Args> cases;

  for (const char* bad : {"i4", "", "1+", "2i1", "1/0", "i12", "*", "1..2", "i1i2", "abc"}) {
    cases.push_back({"mul", bad, "i1"});
    cases.push_back({"classify", bad});
  }
  cases.push_back({"mul", "i1"});
  cases.push_back({});
  cases.push_back({"frobnicate"});
  cases.push_back({"mul", "i1", "i2", "i3"});
  cases.push_back({"check", "--side", "up", "x.json"});
  cases.push_back({"check", "--side", "left"});
  cases.push_back({"fueter", "--side", "left"});
  cases.push_back({"fueter", "--side", "left", "--term", "14:i1"});
  cases.push_back({"fueter", "--side", "left", "--term", ":i1"});
  cases.push_back({"fueter", "--side", "left", "--term", "12:i5"});
  cases.push_back({"fueter", "--side", "left", "--term", "1x"});
  cases.push_back({"fueter", "--side", "middle", "--term", "1"});
  cases.push_back({"build"});
  cases.push_back({"build", "--example", "c"});
  cases.push_back({"build", "--example", "a", "--input", "m.json"});
  cases.push_back({"build", "--example", "a", "--box", "2:3,0:1"});
  cases.push_back({"build", "--example", "a", "--box", "3:2,0:1,0:1,0:1"});
  cases.push_back({"build", "--example", "a", "--box", "a:b,0:1,0:1,0:1"});
  cases.push_back({"build", "--example", "a", "--chirality", "up"});
  cases.push_back({"build", "--input", (dir / "missing.json").string(), "--chirality", "left"});
  cases.push_back({"verify", (dir / "missing.json").string()});
  cases.push_back({"verify", "--samples", "-3", "s.json"});
  cases.push_back({"verify", "--tol", "abc", "s.json"});
  cases.push_back({"verify", "--tol", "0", "s.json"});

  // Truncated structure and map files.
  int n = 0;
  for (std::size_t len = 0; len < structure.size(); len += 1 + structure.size() / 30) {
    const std::string path = write_case(dir, "trunc_s" + std::to_string(n++) + ".json", structure.substr(0, len));
    cases.push_back({"verify", path});
  }
  for (std::size_t len = 0; len < map.size(); len += 1 + map.size() / 15) {
    const std::string path = write_case(dir, "trunc_m" + std::to_string(n++) + ".json", map.substr(0, len));
    cases.push_back({"check", "--side", "left", path});
  }

  // Well-formed JSON with the wrong shape or content.
  const std::vector<std::string> bad_maps = {
      "[]",
      "{}",
      R"({"f0": [], "f1": [], "f2": []})",
      R"({"f0": 3, "f1": [], "f2": [], "f3": []})",
      R"({"f0": [{"coef": 1, "exp": [0,0,0,0]}], "f1": [], "f2": [], "f3": []})",
      R"({"f0": [{"coef": "1", "exp": [0,0,0]}], "f1": [], "f2": [], "f3": []})",
      R"({"f0": [{"coef": "1", "exp": [0,0,0,-1]}], "f1": [], "f2": [], "f3": []})",
      R"({"f0": [{"coef": "1", "exp": [0,0,0,1.5]}], "f1": [], "f2": [], "f3": []})",
      R"({"f0": [{"coef": "1/0", "exp": [0,0,0,0]}], "f1": [], "f2": [], "f3": []})",
      R"({"f0": [{"coef": "x", "exp": [0,0,0,0]}], "f1": [], "f2": [], "f3": []})",
      R"({"f0": [{"exp": [0,0,0,0]}], "f1": [], "f2": [], "f3": []})",
      R"({"f0": [{"coef": "1", "exp": [0,0,0,1000]}], "f1": [], "f2": [], "f3": []})",
      R"({"f0": [{"coef": "1", "exp": [1,0,0,0]}, {"coef": "2", "exp": [1,0,0,0]}], "f1": [], "f2": [], "f3": []})",
      "\xff\xfe",
      "null",
  };
  for (const auto& body : bad_maps) {
    cases.push_back({"check", "--side", "right", write_case(dir, "map" + std::to_string(n++) + ".json", body)});
  }

  const std::string f = R"("f": {"f0": [], "f1": [], "f2": [], "f3": []})";
  const std::string h = R"("h_sq": [{"coef": "1", "exp": [0,0,0,0]}])";
  const std::string dom = R"("domain": {"lower": ["2","0","0","0"], "upper": ["3","1/10","1/10","1/10"]})";
  const std::vector<std::string> bad_structures = {
      "{}",
      "{" + f + "," + h + "," + dom + R"(, "epsilon": -1})",
      "{" + f + "," + h + "," + dom + R"(, "epsilon": 0, "chirality": "left"})",
      "{" + f + "," + h + "," + dom + R"(, "epsilon": "-1", "chirality": "left"})",
      "{" + f + "," + h + "," + dom + R"(, "epsilon": -1, "chirality": "up"})",
      "{" + f + "," + h + R"(, "epsilon": -1, "chirality": "left"})",
      "{" + f + "," + dom + R"(, "epsilon": -1, "chirality": "left"})",
      "{" + h + "," + dom + R"(, "epsilon": -1, "chirality": "left"})",
      "{" + f + "," + h +
          R"(, "domain": {"lower": ["3","0","0","0"], "upper": ["2","1","1","1"]}, "epsilon": -1, "chirality": "left"})",
      "{" + f + "," + h + R"(, "domain": {"lower": ["2","0","0"], "upper": ["3","1","1","1"]}, "epsilon": -1, "chirality": "left"})",
      "{" + f + "," + h + R"(, "domain": {"lower": [2,0,0,0], "upper": [3,1,1,1]}, "epsilon": -1, "chirality": "left"})",
      "{" + f + "," + h + R"(, "domain": [], "epsilon": -1, "chirality": "left"})",
  };
  for (const auto& body : bad_structures) {
    cases.push_back({"verify", write_case(dir, "structure" + std::to_string(n++) + ".json", body)});
  }
  return cases;
}

}  // namespace pqk::testing
