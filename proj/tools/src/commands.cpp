#include <ostream>

#include "CLI11.hpp"
#include "dehnforge/cathelineau.hpp"
#include "dehnforge/classical.hpp"
#include "dehnforge/error.hpp"
#include "dehnforge/euclid_complex.hpp"
#include "dehnforge/qeps.hpp"
#include "dehnforge/samples.hpp"
#include "dehnforge_app/app.hpp"
#include "dehnforge_app/checks.hpp"

namespace dehnforge::app {

namespace {

constexpr std::size_t kShownRepresentatives = 20;
constexpr std::size_t kShownNotes = 50;

struct Options {
  std::string command;
  std::string input;
  std::string kind = "cathelineau";
  std::string check;
  int weight = 2;
  std::string field = "Q";
  std::string gens;
  std::size_t samples = 10;
  std::uint64_t seed = 1;
  int precision_digits = kDefaultPrecisionDigits;
  std::string height_bound = "1000000";
  std::size_t cap = 0;
  std::string b_structure = "compatible";
  bool skip_homology = false;
  std::vector<std::size_t> v_dims{1, 1};
  std::vector<std::size_t> w_dims{1, 1};
  int exterior = 2;
  bool json_out = false;
};

json job_echo(const Options& o) {
  json j;
  j["command"] = o.command;
  if (!o.input.empty()) j["input"] = o.input;
  if (o.command == "classical") {
    j["precision_digits"] = o.precision_digits;
    j["height_bound"] = o.height_bound;
  }
  if (o.command == "complex" || o.command == "check") {
    j["weight"] = o.weight;
    j["field"] = o.field;
    j["b_structure"] = o.b_structure;
    j["samples"] = o.samples;
    j["seed"] = o.seed;
    if (!o.gens.empty()) j["gens"] = o.gens;
  }
  if (o.command == "complex") j["kind"] = o.kind;
  if (o.command == "check") j["check"] = o.check;
  if (o.command == "qeps") {
    j["v"] = o.v_dims;
    j["w"] = o.w_dims;
    j["exterior"] = o.exterior;
  }
  return j;
}

json string_list(const std::vector<std::string>& v, std::size_t limit) {
  json a = json::array();
  for (std::size_t i = 0; i < v.size() && i < limit; ++i) a.push_back(v[i]);
  return a;
}

Report run_classical(const Options& o) {
  const EnChain p = parse_polytope(read_json_file(o.input));
  const ClassicalDehnValue v = classical_dehn_3d(p, o.precision_digits, Integer(o.height_bound));
  Report r;
  json res;
  res["value"] = v.is_zero() ? "0" : v.to_string().substr(0, v.to_string().find(" ["));
  res["is_zero"] = v.is_zero();
  json pairs = json::array();
  for (const auto& q : v.pairs)
    pairs.push_back({{"length", q.length.to_string()}, {"cos_angle", q.cos_arg.to_string()},
                     {"multiplicity", q.multiplicity.get_str()}});
  res["edge_classes"] = pairs;
  json terms = json::array();
  for (const auto& q : v.normalized.pairs)
    terms.push_back({{"length", q.length.to_string()}, {"angle", q.angle.name}});
  res["normalized"] = terms;
  r.data["results"] = res;
  json certs = json::array();
  certs.push_back(certificate_json(v.normalized.basis_certificate));
  for (const auto& c : v.normalized.relations_found) certs.push_back(certificate_json(c));
  r.data["certificates"] = certs;
  return r;
}

json dehn_json(const DehnTensor& d) {
  json comps = json::object();
  for (const auto& [kl, t] : d.components)
    comps["(" + std::to_string(kl.first) + "," + std::to_string(kl.second) + ")"] = t.to_string();
  return comps;
}

Report run_euclid(const Options& o) {
  const EnChain p = parse_polytope(read_json_file(o.input));
  const DehnTensor d = euclidean_dehn(p);
  Report r;
  json res;
  res["weight"] = d.weight;
  res["is_zero"] = d.is_zero();
  res["components"] = dehn_json(d);
  res["vol_hom"] = vol_hom(p).to_string();
  res["heuristic"] = d.heuristic;
  json terms = json::array();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (const auto& t : euclidean_dehn(p[i].second).terms) {
      json e;
      e["simplex"] = i;
      e["cut"] = t.I;
      e["k"] = t.k;
      e["l"] = t.l;
      e["e"] = t.k == 1 ? t.e_value.to_string() : t.e_key;
      e["s"] = t.l == 1 ? t.s_value.to_string() : t.s_key;
      terms.push_back(e);
    }
  res["terms"] = terms;
  r.data["results"] = res;
  return r;
}

std::vector<Scalar> complex_arguments(const Options& o) {
  if (!o.gens.empty()) return parse_generators(read_json_file(o.gens)).generators;
  return sample_arguments(sample_field_from_string(o.field), o.samples, o.seed);
}

template <class K>
json homology_json(const FiniteComplex<K>& cx, bool skip) {
  json out = json::array();
  if (skip) return out;
  for (int k = cx.first_degree(); k <= cx.last_degree(); ++k) {
    const auto h = cx.homology(k);
    json reps = json::array();
    for (std::size_t i = 0; i < h.representatives.size() && i < kShownRepresentatives; ++i)
      reps.push_back(h.representatives[i].to_string());
    out.push_back({{"degree", k}, {"dimension", h.dimension}, {"representatives", reps}});
  }
  return out;
}

template <class K>
json complex_json(const WeightComplex<K>& w, bool skip_homology) {
  json j;
  j["kind"] = to_string(w.kind);
  j["weight"] = w.weight;
  j["twist"] = w.twist;
  j["degrees"] = {w.cx.first_degree(), w.cx.last_degree()};
  j["term_sizes"] = w.term_sizes();
  j["d_squared"] = "zero on every generator";
  j["heuristic"] = w.heuristic;
  j["warnings"] = w.warnings;
  j["homology"] = homology_json(w.cx, skip_homology);
  return j;
}

Report run_complex(const Options& o) {
  Report r;
  if (o.kind == "euclidean-dehn") {
    std::vector<PointSimplex> gens;
    if (!o.gens.empty())
      for (const auto& [m, g] : parse_polytope(read_json_file(o.gens))) gens.push_back(g);
    else
      gens = random_point_simplices(o.weight, o.samples, o.seed);
    const auto w = build_euclidean_dehn_complex(o.weight, gens, o.cap ? o.cap : kDefaultEuclidCap);
    r.data["results"] = complex_json(w, o.skip_homology);
    r.data["truncation"] = {{"generators", w.cx.term(1).generators().size()}};
    return r;
  }
  const auto args = complex_arguments(o);
  const BStructure b = b_structure_by_name(o.b_structure);
  const std::size_t cap = o.cap ? o.cap : kDefaultGeneratorCap;
  std::vector<std::string> names;
  for (const auto& a : args) names.push_back(a.to_string());
  r.data["truncation"] = {{"generators", names}};
  if (o.kind == "cathelineau") {
    r.data["results"] = complex_json(build_cathelineau_complex(o.weight, args, b, cap), o.skip_homology);
  } else if (o.kind == "additive") {
    const AdditiveComplex a = build_additive_complex(o.weight, args, b, cap);
    json res = complex_json(a.total, o.skip_homology);
    json parts = json::array();
    for (const auto& s : a.summands) parts.push_back(complex_json(s, o.skip_homology));
    res["summands"] = parts;
    r.data["results"] = res;
  } else {
    throw Error(ErrorCode::InvalidInput, "unknown complex kind " + o.kind, o.kind);
  }
  return r;
}

EpsObject make_object(const std::vector<std::size_t>& dims, const std::string& name) {
  if (dims.size() != 2) throw Error(ErrorCode::InvalidInput, "dimensions are given as d0,d1");
  EpsObject v;
  for (std::size_t i = 0; i < dims[0]; ++i) v.v0.add_generator(name + std::to_string(i));
  for (std::size_t i = 0; i < dims[1]; ++i) v.v1.add_generator(name + "e" + std::to_string(i));
  return v;
}

Report run_qeps(const Options& o) {
  const EpsObject v = make_object(o.v_dims, "v");
  const EpsObject w = make_object(o.w_dims, "w");
  Report r;
  const auto t = eps_tensor(v, w).dims();
  const auto e = eps_exterior(v, o.exterior).dims();
  const auto rank = antisymmetrizer_rank(v, o.exterior);
  json res;
  res["tensor_dims"] = {t.first, t.second};
  res["exterior_dims"] = {e.first, e.second};
  res["antisymmetrizer_rank"] = {rank.first, rank.second};
  res["exterior_matches_rank"] = e == rank;
  r.data["results"] = res;
  if (e != rank) r.exit_code = 2;
  return r;
}

Report run_check(const Options& o) {
  std::vector<Scalar> gens;
  if (!o.gens.empty()) gens = parse_generators(read_json_file(o.gens)).generators;
  const CheckOutcome c = run_named_check(o.check, o.weight, o.samples, o.seed, sample_field_from_string(o.field),
                                         gens, b_structure_by_name(o.b_structure));
  Report r;
  json res;
  res["check"] = c.name;
  res["status"] = c.ok ? "pass" : "fail";
  res["instances"] = c.instances;
  res["seed"] = c.seed;
  if (!c.ok) {
    res["witness"] = c.witness;
    res["detail"] = c.detail;
  }
  res["notes"] = string_list(c.notes, kShownNotes);
  r.data["results"] = res;
  r.exit_code = c.ok ? 0 : 2;
  return r;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"dehnforge: scissor-congruence invariants and their complexes, computed exactly"};
  app.require_subcommand(1);
  Options o;
  auto format_flags = [&o](CLI::App* s) {
    auto* j = s->add_flag("--json", o.json_out, "JSON output");
    s->add_flag("--text", "text output (default)")->excludes(j);
  };
  auto* classical = app.add_subcommand("classical", "classical Dehn invariant of a 3-dimensional polytope");
  classical->add_option("input", o.input, "polytope JSON")->required()->check(CLI::ExistingFile);
  classical->add_option("--precision-digits", o.precision_digits, "decimal digits for the relation finder");
  classical->add_option("--height-bound", o.height_bound, "maximal relation coefficient");
  format_flags(classical);

  auto* euclid = app.add_subcommand("euclid", "Euclidean Dehn invariant D^E and vol_hom of a chain of simplices");
  euclid->add_option("input", o.input, "simplex-list JSON")->required()->check(CLI::ExistingFile);
  format_flags(euclid);

  auto* complex = app.add_subcommand("complex", "build a weight-n complex, verify d^2 = 0, report homology");
  complex->add_option("--kind", o.kind, "cathelineau | additive | euclidean-dehn")
      ->check(CLI::IsMember({"cathelineau", "additive", "euclidean-dehn"}));
  format_flags(complex);

  auto* qeps = app.add_subcommand("qeps", "dimensions of tensor and exterior powers in Q_eps-mod");
  qeps->add_option("--v", o.v_dims, "dimensions d0,d1 of V")->delimiter(',')->expected(2);
  qeps->add_option("--w", o.w_dims, "dimensions d0,d1 of W")->delimiter(',')->expected(2);
  qeps->add_option("--exterior", o.exterior, "exterior power of V")->check(CLI::Range(0, 8));
  format_flags(qeps);

  auto* check = app.add_subcommand("check", "randomized exact identity checks");
  check->add_option("name", o.check, "check to run")->required()->check(CLI::IsMember(check_names()));
  format_flags(check);

  for (auto* s : {complex, check}) {
    s->add_option("--weight", o.weight, "weight n")->check(CLI::Range(1, 6));
    s->add_option("--field", o.field, "Q | Q(t) | Q(t,t1)");
    s->add_option("--gens", o.gens, "generator-list JSON")->check(CLI::ExistingFile);
    s->add_option("--samples", o.samples, "number of random samples or generators");
    s->add_option("--seed", o.seed, "base seed; sample i uses seed + i");
    s->add_option("--b-structure", o.b_structure, "compatible | standard")
        ->check(CLI::IsMember({"compatible", "standard"}));
    s->add_option("--cap", o.cap, "truncation generator cap");
  }
  complex->add_flag("--skip-homology", o.skip_homology, "only build and verify");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  o.command = app.get_subcommands().front()->get_name();
  Report r;
  try {
    if (o.command == "classical") r = run_classical(o);
    else if (o.command == "euclid") r = run_euclid(o);
    else if (o.command == "complex") r = run_complex(o);
    else if (o.command == "qeps") r = run_qeps(o);
    else r = run_check(o);
  } catch (const Error& e) {
    err << e.what() << (e.witness().empty() ? "" : " [witness: " + e.witness() + "]") << "\n";
    return e.code() == ErrorCode::NotAComplex ? 2 : 1;
  } catch (const json::exception& e) {
    err << "ParseError: " << e.what() << "\n";
    return 1;
  }
  json report;
  report["job"] = job_echo(o);
  for (auto& [k, v] : r.data.items()) report[k] = v;
  report["exit_code"] = r.exit_code;
  out << (o.json_out ? report.dump(2) + "\n" : render_text(report));
  return r.exit_code;
}

}  // namespace dehnforge::app
