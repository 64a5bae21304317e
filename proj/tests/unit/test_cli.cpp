#include <sstream>
#include <vector>

#include "doctest.h"
#include "dehnforge_app/app.hpp"

using namespace dehnforge;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "dehnforge");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = app::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(DEHNFORGE_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("classical on the cube") {
  const Run r = cli({"classical", fixture("cube.json"), "--json"});
  CHECK(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j.at("job").at("command") == "classical");
  CHECK(j.at("exit_code") == 0);
}

TEST_CASE("text and JSON carry the same job") {
  const Run t = cli({"qeps", "--v", "2,1", "--w", "1,3", "--exterior", "3"});
  CHECK(t.code == 0);
  CHECK(t.out.find("qeps") != std::string::npos);
  const json j = json::parse(cli({"qeps", "--v", "2,1", "--w", "1,3", "--exterior", "3", "--json"}).out);
  CHECK(j.at("job").at("command") == "qeps");
}

TEST_CASE("exit codes") {
  CHECK(cli({"classical", "/nonexistent.json"}).code == 1);
  CHECK(cli({"bogus"}).code == 1);
  CHECK(cli({"check", "five-term", "--samples", "5"}).code == 0);
  CHECK(cli({"check", "d2", "--weight", "4", "--gens", fixture("gens_w4.json"), "--b-structure", "standard"}).code == 2);
}

TEST_CASE("certificate round trip") {
  RelationCertificate c;
  c.outcome = RelationOutcome::RelationFound;
  c.coefficients = {Integer(3), Integer(-1)};
  c.names = {"arccos(1/2)", "pi"};
  c.residual_log10 = -150.5;
  c.precision_digits = 200;
  c.height_bound = Integer(1000000);
  const RelationCertificate back = app::certificate_from_json(app::certificate_json(c));
  CHECK(back.outcome == c.outcome);
  CHECK(back.coefficients == c.coefficients);
  CHECK(back.names == c.names);
  CHECK(back.precision_digits == 200);
  CHECK(back.height_bound == c.height_bound);
}

TEST_CASE("polytope parsing") {
  const json j = json::parse(R"j({"simplices": [{"multiplicity": "2", "points": [[0,0,0],[1,0,0],[0,"1/2",0],[0,0,"sqrt(2)"]]}]})j");
  const EnChain c = app::parse_polytope(j);
  REQUIRE(c.size() == 1);
  CHECK(c[0].first == Scalar(2));
  CHECK(c[0].second.points[2][1] == Scalar(Rational(1, 2)));
  CHECK_THROWS(app::parse_polytope(json::parse(R"({"simplices": [{"points": [[0,0],[1]]}]})")));
}
