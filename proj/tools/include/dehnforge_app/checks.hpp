#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dehnforge/cathelineau.hpp"
#include "dehnforge/samples.hpp"

namespace dehnforge::app {

struct CheckOutcome {
  std::string name;
  bool ok = true;
  std::size_t instances = 0;
  std::uint64_t seed = 0;
  std::string witness;
  std::string detail;
  std::vector<std::string> notes;
};

// Randomized exact checks. Sample i draws from seed + i.
CheckOutcome check_coassoc(int weight, std::size_t samples, std::uint64_t seed);
// kinds: "ii(a)", "ii(b)", "iii", "iv"
CheckOutcome check_relation(const std::string& kind, int weight, std::size_t samples, std::uint64_t seed);
CheckOutcome check_twist(int weight, std::size_t samples, std::uint64_t seed);
// d^2 = 0 for a complex built on the given arguments (kind cathelineau or additive).
CheckOutcome check_d2(ComplexKind kind, int weight, const std::vector<Scalar>& gens,
                      const BStructure& b = compatible_b_structure());
CheckOutcome check_euclid_d2(int weight, std::size_t samples, std::uint64_t seed);
CheckOutcome check_eps_part(int weight, std::size_t samples, std::uint64_t seed);
// Homology of the additive complex against the sum over its summands.
CheckOutcome check_decomposition(int weight, const std::vector<Scalar>& gens);
// delta_2 kills random five-term elements.
CheckOutcome check_five_term(std::size_t samples, std::uint64_t seed, const BStructure& b);

std::vector<std::string> check_names();
CheckOutcome run_named_check(const std::string& name, int weight, std::size_t samples, std::uint64_t seed,
                             SampleField field, const std::vector<Scalar>& gens, const BStructure& b);

}  // namespace dehnforge::app
