#include <algorithm>
#include <fstream>
#include <sstream>

#include "dehnforge/error.hpp"
#include "dehnforge/expression.hpp"
#include "dehnforge_app/app.hpp"

namespace dehnforge::app {

namespace {

Scalar scalar_of(const json& v) {
  if (v.is_string()) return parse_expression(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(v.get<long>());
  throw Error(ErrorCode::ParseError, "expected an integer or an expression string, got " + v.dump(), v.dump());
}

Vector vector_of(const json& v) {
  if (!v.is_array()) throw Error(ErrorCode::ParseError, "expected a coordinate array, got " + v.dump(), v.dump());
  Vector out;
  for (const auto& x : v) out.push_back(scalar_of(x));
  return out;
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorCode::ParseError, std::string("missing field \"") + key + "\"", key);
  return j.at(key);
}

}  // namespace

EnChain parse_polytope(const json& j) {
  const json& simplices = j.is_array() ? j : require(j, "simplices");
  if (!simplices.is_array() || simplices.empty()) throw Error(ErrorCode::ParseError, "simplex list is empty");
  std::optional<Matrix> form;
  Scalar vol_scale(1);
  if (j.is_object() && j.contains("form")) {
    std::vector<Vector> rows;
    for (const auto& r : j.at("form")) rows.push_back(vector_of(r));
    form = Matrix(rows);
  }
  if (j.is_object() && j.contains("vol_scale")) vol_scale = scalar_of(j.at("vol_scale"));
  EnChain out;
  std::size_t index = 0;
  for (const auto& s : simplices) {
    const Scalar mult = s.contains("multiplicity") ? scalar_of(s.at("multiplicity")) : Scalar(1);
    std::vector<Vector> pts;
    for (const auto& p : require(s, "points")) pts.push_back(vector_of(p));
    if (pts.empty()) throw Error(ErrorCode::ParseError, "simplex " + std::to_string(index) + " has no points");
    const std::size_t d = pts.front().size();
    for (const auto& p : pts)
      if (p.size() != d)
        throw Error(ErrorCode::ParseError, "simplex " + std::to_string(index) + " mixes coordinate dimensions");
    if (pts.size() != d + 1)
      throw Error(ErrorCode::ParseError,
                  "simplex " + std::to_string(index) + " needs " + std::to_string(d + 1) + " points");
    Scalar scale = vol_scale;
    if (s.contains("vol_scale")) scale = scalar_of(s.at("vol_scale"));
    QuadSpace space = form ? QuadSpace(*form) : QuadSpace::standard(d);
    if (space.dim() != d) throw Error(ErrorCode::ParseError, "form size does not match the coordinates");
    out.emplace_back(mult, PointSimplex{space, scale, std::move(pts)});
    ++index;
  }
  return out;
}

GeneratorList parse_generators(const json& j) {
  GeneratorList out;
  const json& gens = j.is_array() ? j : require(j, "generators");
  if (j.is_object()) {
    if (j.contains("field")) out.field = j.at("field").get<std::string>();
    if (j.contains("weight")) out.weight = j.at("weight").get<int>();
  }
  for (const auto& g : gens) out.generators.push_back(g.is_object() ? scalar_of(require(g, "expr")) : scalar_of(g));
  if (out.generators.empty()) throw Error(ErrorCode::ParseError, "generator list is empty");
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path, path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what(), std::to_string(e.byte));
  }
}

json certificate_json(const RelationCertificate& c) {
  json j;
  j["outcome"] = c.outcome == RelationOutcome::RelationFound ? "RelationFound" : "NoRelationUpToHeight";
  if (c.outcome == RelationOutcome::RelationFound) {
    json coeffs = json::array();
    for (const auto& q : c.coefficients) coeffs.push_back(q.get_str());
    j["coefficients"] = coeffs;
  }
  j["names"] = c.names;
  j["precision_digits"] = c.precision_digits;
  j["height_bound"] = c.height_bound.get_str();
  j["residual_log10"] = c.residual_log10;
  j["heuristic"] = true;
  return j;
}

RelationCertificate certificate_from_json(const json& j) {
  RelationCertificate c;
  const std::string outcome = require(j, "outcome").get<std::string>();
  if (outcome == "RelationFound")
    c.outcome = RelationOutcome::RelationFound;
  else if (outcome == "NoRelationUpToHeight")
    c.outcome = RelationOutcome::NoRelationUpToHeight;
  else
    throw Error(ErrorCode::ParseError, "unknown outcome " + outcome, outcome);
  if (j.contains("coefficients"))
    for (const auto& q : j.at("coefficients")) c.coefficients.emplace_back(q.get<std::string>());
  if (j.contains("names")) c.names = j.at("names").get<std::vector<std::string>>();
  c.precision_digits = require(j, "precision_digits").get<int>();
  c.height_bound = Integer(require(j, "height_bound").get<std::string>());
  c.residual_log10 = require(j, "residual_log10").get<double>();
  return c;
}

namespace {

void render(const json& j, int indent, std::ostringstream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  for (const auto& [key, v] : j.items()) {
    if (v.is_object()) {
      os << pad << key << ":\n";
      render(v, indent + 2, os);
    } else if (v.is_array()) {
      const bool flat = std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); });
      if (flat) {
        os << pad << key << ": [";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << scalar(v[i]);
        os << "]\n";
      } else {
        os << pad << key << ":\n";
        for (const auto& x : v) {
          if (x.is_object()) {
            os << pad << "  -\n";
            render(x, indent + 4, os);
          } else {
            os << pad << "  - " << (x.is_array() ? x.dump() : scalar(x)) << "\n";
          }
        }
      }
    } else {
      os << pad << key << ": " << scalar(v) << "\n";
    }
  }
}

}  // namespace

std::string render_text(const json& j) {
  std::ostringstream os;
  render(j, 0, os);
  return os.str();
}

}  // namespace dehnforge::app
