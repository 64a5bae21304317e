// Acceptance run: one line per criterion, tolerances and time limits fixed here.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "criteria.hpp"

namespace {

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<acc::Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::stoi(argv[i]));

  const std::vector<Criterion> all{
      {1, "cube and regular tetrahedron", 30, acc::criterion_classical},
      {2, "Hill tetrahedron", 30, acc::criterion_hill},
      {3, "relation soundness", 300, acc::criterion_relations},
      {4, "coassociativity", 300, acc::criterion_coassoc},
      {5, "d^2 = 0", 600, acc::criterion_d2},
      {6, "Q_eps laws", 120, acc::criterion_qeps},
      {7, "Vol twist", 60, acc::criterion_twist},
      {8, "additive decomposition", 120, acc::criterion_decomposition},
      {9, "weight-2 normalization", 120, acc::criterion_normalization},
      {10, "dlog of the terminal differential", 120, acc::criterion_dlog},
  };

  int failures = 0;
  for (const auto& c : all) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    acc::Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.limit_seconds;
    const bool ok = v.ok && in_time;
    if (!ok) ++failures;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << c.id << " [" << c.title << "]: " << (ok ? "PASS" : "FAIL") << " (" << secs << " s, limit "
         << c.limit_seconds << " s)";
    if (!in_time) line << " over time";
    if (!v.detail.empty()) line << " :: " << v.detail;
    std::cout << line.str() << std::endl;
  }
  std::cout << (failures ? "acceptance: " + std::to_string(failures) + " criteria failed" : "acceptance: all passed")
            << std::endl;
  return failures ? 1 : 0;
}
