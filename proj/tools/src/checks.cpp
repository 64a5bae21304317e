#include "dehnforge_app/checks.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "dehnforge/dehn.hpp"
#include "dehnforge/error.hpp"
#include "dehnforge/euclid_complex.hpp"

namespace dehnforge::app {

namespace {

CheckOutcome start(std::string name, std::uint64_t seed) {
  CheckOutcome c;
  c.name = std::move(name);
  c.seed = seed;
  return c;
}

CheckOutcome& fail(CheckOutcome& c, std::string witness, std::string detail) {
  c.ok = false;
  c.witness = std::move(witness);
  c.detail = std::move(detail);
  return c;
}

std::string describe(const PointSimplex& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.points.size(); ++i) {
    s += i ? "; " : "";
    for (std::size_t j = 0; j < g.points[i].size(); ++j) s += (j ? "," : "") + g.points[i][j].to_string();
  }
  return s + ")";
}

Vector random_vector(std::mt19937_64& rng, std::size_t d) {
  std::uniform_int_distribution<long> coord(-9, 9);
  Vector v(d);
  for (auto& x : v) x = Scalar(coord(rng));
  return v;
}

// 2n + 1 points with every facial simplex Euclidean.
std::vector<Vector> scissor_points(int weight, std::uint64_t seed) {
  const std::size_t d = static_cast<std::size_t>(2 * weight - 1);
  std::mt19937_64 rng(seed);
  for (;;) {
    std::vector<Vector> pts;
    for (std::size_t i = 0; i < d + 2; ++i) pts.push_back(random_vector(rng, d));
    bool ok = true;
    for (std::size_t i = 0; i < pts.size() && ok; ++i) {
      PointSimplex f{QuadSpace::standard(d), Scalar(1), {}};
      for (std::size_t a = 0; a < pts.size(); ++a)
        if (a != i) f.points.push_back(pts[a]);
      ok = !degenerate_face(f).has_value();
    }
    if (ok) return pts;
  }
}

EnChain relation_instance(const std::string& kind, int weight, std::uint64_t seed) {
  const std::size_t d = static_cast<std::size_t>(2 * weight - 1);
  std::mt19937_64 rng(seed);
  if (kind == "iii") return relation_scissor(QuadSpace::standard(d), Scalar(1), scissor_points(weight, seed));
  const PointSimplex g = random_point_simplex(weight, seed);
  if (kind == "ii(a)") return relation_skew_volume(g);
  if (kind == "ii(b)") {
    std::vector<int> sigma(d + 1);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    return relation_permutation(g, sigma);
  }
  if (kind == "iv") {
    for (;;) {
      std::vector<Vector> cols;
      for (std::size_t i = 0; i < d; ++i) cols.push_back(random_vector(rng, d));
      const Matrix a = Matrix::from_columns(cols);
      if (a.determinant().is_zero()) continue;
      return relation_affine(g, a, random_vector(rng, d));
    }
  }
  throw Error(ErrorCode::InvalidInput, "unknown relation " + kind, kind);
}

}  // namespace

CheckOutcome check_coassoc(int weight, std::size_t samples, std::uint64_t seed) {
  auto c = start("coassoc", seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const PointSimplex g = random_point_simplex(weight, seed + i);
    const CheckResult r = coassoc_check(g);
    ++c.instances;
    c.notes.push_back(describe(g));
    if (!r.ok) return fail(c, describe(g) + " partition " + r.witness, r.detail);
  }
  return c;
}

CheckOutcome check_relation(const std::string& kind, int weight, std::size_t samples, std::uint64_t seed) {
  auto c = start("relation " + kind, seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const EnChain chain = relation_instance(kind, weight, seed + i);
    ++c.instances;
    const Scalar v = vol_hom(chain);
    if (!v.is_zero()) return fail(c, "sample " + std::to_string(i), "vol_hom = " + v.to_string());
    if (kind == "iii") {
      // Weight 3 needs the S_2 scissor relations of the configuration.
      const auto d = static_cast<std::size_t>(2 * weight - 1);
      const CheckResult r = scissor_consistency(scissor_points(weight, seed + i), QuadSpace::standard(d), Scalar(1));
      if (!r.ok) return fail(c, "sample " + std::to_string(i) + " " + r.witness, r.detail);
      continue;
    }
    const DehnTensor d = euclidean_dehn(chain);
    if (!d.is_zero()) return fail(c, "sample " + std::to_string(i), d.to_string());
  }
  return c;
}

CheckOutcome check_twist(int weight, std::size_t samples, std::uint64_t seed) {
  auto c = start("twist", seed);
  for (std::size_t i = 0; i < samples; ++i) {
    std::mt19937_64 rng(seed + i);
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 20);
    long p = 0;
    while (p == 0) p = num(rng);
    Rational fq(p, den(rng));
    fq.canonicalize();
    const Scalar f(fq);
    const PointSimplex g = random_point_simplex(weight, seed + i);
    const Scalar lhs = vol_hom({{Scalar(1), dilate(g, f)}});
    Scalar pw(1);
    for (int k = 0; k < 2 * weight - 1; ++k) pw *= f;
    const Scalar rhs = pw * vol_hom({{Scalar(1), g}});
    ++c.instances;
    if (!(lhs == rhs))
      return fail(c, "f = " + f.to_string() + " on " + describe(g), lhs.to_string() + " != " + rhs.to_string());
  }
  return c;
}

CheckOutcome check_d2(ComplexKind kind, int weight, const std::vector<Scalar>& gens, const BStructure& b) {
  auto c = start("d2 " + to_string(kind) + " weight " + std::to_string(weight), 0);
  try {
    std::vector<std::size_t> sizes;
    if (kind == ComplexKind::Additive) {
      const auto a = build_additive_complex(weight, gens, b);
      sizes = a.total.term_sizes();
      c.notes = a.total.warnings;
    } else {
      const auto w = build_cathelineau_complex(weight, gens, b);
      sizes = w.term_sizes();
      c.notes = w.warnings;
    }
    for (auto s : sizes) c.instances += s;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotAComplex) throw;
    return fail(c, e.witness(), e.what());
  }
  return c;
}

CheckOutcome check_euclid_d2(int weight, std::size_t samples, std::uint64_t seed) {
  auto c = start("d2 euclidean-dehn weight " + std::to_string(weight), seed);
  try {
    const auto w = build_euclidean_dehn_complex(weight, random_point_simplices(weight, samples, seed));
    for (auto s : w.term_sizes()) c.instances += s;
    c.notes = w.warnings;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotAComplex) throw;
    return fail(c, e.witness(), e.what());
  }
  return c;
}

CheckOutcome check_eps_part(int weight, std::size_t samples, std::uint64_t seed) {
  auto c = start("eps-part weight " + std::to_string(weight), seed);
  const CheckResult r = eps_part_agreement(weight, random_point_simplices(weight, samples, seed));
  c.instances = samples;
  if (!r.ok) return fail(c, r.witness, r.detail);
  return c;
}

CheckOutcome check_decomposition(int weight, const std::vector<Scalar>& gens) {
  auto c = start("decomposition weight " + std::to_string(weight), 0);
  const AdditiveComplex a = build_additive_complex(weight, gens);
  for (int k = 1; k <= weight; ++k) {
    const std::size_t total = a.total.cx.homology(k).dimension;
    std::size_t sum = 0;
    for (const auto& s : a.summands)
      if (s.cx.has_degree(k)) sum += s.cx.homology(k).dimension;
    c.notes.push_back("H^" + std::to_string(k) + ": " + std::to_string(total) + " = " + std::to_string(sum));
    ++c.instances;
    if (total != sum)
      return fail(c, "degree " + std::to_string(k), std::to_string(total) + " != " + std::to_string(sum));
  }
  return c;
}

CheckOutcome check_five_term(std::size_t samples, std::uint64_t seed, const BStructure& b) {
  auto c = start("five-term " + b.name, seed);
  for (std::size_t i = 0; i < samples; ++i) {
    std::mt19937_64 rng(seed + i);
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 30);
    auto draw = [&] {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      return Scalar(q);
    };
    Scalar x = draw();
    Scalar y = draw();
    while (x.is_zero() || x == Scalar(1)) x = draw();
    while (y.is_zero() || y == Scalar(1) || y == x) y = draw();
    const QSum img = b2_coproduct(five_term_element(x, y), b);
    ++c.instances;
    if (!img.is_zero()) return fail(c, "x = " + x.to_string() + ", y = " + y.to_string(), img.to_string());
  }
  return c;
}

std::vector<std::string> check_names() {
  return {"coassoc", "relations", "twist", "d2", "euclid-d2", "eps-part", "decomposition", "five-term"};
}

CheckOutcome run_named_check(const std::string& name, int weight, std::size_t samples, std::uint64_t seed,
                             SampleField field, const std::vector<Scalar>& gens, const BStructure& b) {
  auto arguments = [&] { return gens.empty() ? sample_arguments(field, samples, seed) : gens; };
  if (name == "coassoc") return check_coassoc(weight, samples, seed);
  if (name == "twist") return check_twist(weight, samples, seed);
  if (name == "euclid-d2") return check_euclid_d2(weight, samples, seed);
  if (name == "eps-part") return check_eps_part(weight, samples, seed);
  if (name == "five-term") return check_five_term(samples, seed, b);
  if (name == "d2") {
    auto c = check_d2(ComplexKind::Cathelineau, weight, arguments(), b);
    if (!c.ok) return c;
    auto a = check_d2(ComplexKind::Additive, weight, arguments(), b);
    a.instances += c.instances;
    return a;
  }
  if (name == "decomposition") return check_decomposition(weight, arguments());
  if (name == "relations") {
    CheckOutcome all = start("relations", seed);
    for (const char* k : {"ii(a)", "ii(b)", "iii", "iv"}) {
      auto c = check_relation(k, weight, samples, seed);
      all.instances += c.instances;
      if (!c.ok) return c;
    }
    return all;
  }
  throw Error(ErrorCode::InvalidInput, "unknown check " + name, name);
}

}  // namespace dehnforge::app
