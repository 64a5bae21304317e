#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dehnforge/dehn.hpp"
#include "dehnforge/relation.hpp"
#include "json.hpp"

namespace dehnforge::app {

using nlohmann::json;

// Polytope / simplex-list schema:
//   {"form": [[..]], "vol_scale": "1", "simplices": [{"multiplicity": "1", "points": [[..], ..]}]}
// or a bare array of simplices. Entries are numbers or expression strings;
// form defaults to the standard one and vol_scale to 1.
EnChain parse_polytope(const json& j);
// Generator-list schema: {"field": "Q(t)", "weight": 3, "generators": ["t", {"expr": "1-t"}, ..]}
// or a bare array.
struct GeneratorList {
  std::vector<Scalar> generators;
  std::optional<std::string> field;
  std::optional<int> weight;
};
GeneratorList parse_generators(const json& j);

json read_json_file(const std::string& path);

json certificate_json(const RelationCertificate& c);
RelationCertificate certificate_from_json(const json& j);

struct Report {
  json data;
  int exit_code = 0;
};

// Human-readable rendering of a report; carries the same fields as the JSON.
std::string render_text(const json& j);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dehnforge::app
