#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dehnforge/geometry.hpp"
#include "dehnforge/scalar.hpp"

namespace dehnforge {

// RationalFunctions is Q(t); TwoVariables is Q(t, t1).
enum class SampleField { Rationals, RationalFunctions, TwoVariables };

SampleField sample_field_from_string(const std::string& s);

// Distinct elements of F* minus {1}, reproducible from the seed. Over Q(t) the
// samples are ratios of products of small linear factors so that every
// argument and its complement factor quickly.
std::vector<Scalar> sample_arguments(SampleField field, std::size_t count, std::uint64_t seed);

// A non-degenerate simplex of the given weight in the standard Euclidean
// space of dimension 2n - 1, integer coordinates in [-9, 9].
PointSimplex random_point_simplex(int weight, std::uint64_t seed);
// Sample i uses seed + i.
std::vector<PointSimplex> random_point_simplices(int weight, std::size_t count, std::uint64_t seed);

}  // namespace dehnforge
