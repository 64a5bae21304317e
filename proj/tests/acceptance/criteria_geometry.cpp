#include <cstdint>
#include <string>
#include <vector>

#include "criteria.hpp"
#include "dehnforge/classical.hpp"
#include "dehnforge/dehn.hpp"
#include "dehnforge/expression.hpp"
#include "dehnforge/geometry.hpp"
#include "dehnforge/relation.hpp"
#include "dehnforge/samples.hpp"
#include "dehnforge_app/app.hpp"
#include "dehnforge_app/checks.hpp"

#ifndef DEHNFORGE_FIXTURE_DIR
#error "DEHNFORGE_FIXTURE_DIR must point at fixtures/"
#endif

using namespace dehnforge;

namespace acc {

namespace {

constexpr std::uint64_t kSeed = 20240601;
constexpr int kDigits = 200;
constexpr long kHeight = 1000000;

EnChain fixture(const std::string& name) {
  return app::parse_polytope(app::read_json_file(std::string(DEHNFORGE_FIXTURE_DIR) + "/" + name));
}

Verdict from(const app::CheckOutcome& c) {
  if (c.ok) return {true, c.name + " x" + std::to_string(c.instances)};
  return {false, c.name + " witness " + c.witness + ": " + c.detail};
}

// Stops at the first failure, otherwise joins the summaries.
Verdict all_of(const std::vector<Verdict>& vs) {
  Verdict out;
  for (const auto& v : vs) {
    if (!v.ok) return v;
    out.detail += (out.detail.empty() ? "" : "; ") + v.detail;
  }
  return out;
}

Scalar ip(const Vector& a, const Vector& b) {
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
Vector sub(const Vector& a, const Vector& b) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
Vector scaled(const Vector& a, const Scalar& c) {
  Vector r(a);
  for (auto& x : r) x *= c;
  return r;
}
Vector cross(const Vector& a, const Vector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Independent cross-ratio of the two facets through an edge, in the plane
// orthogonal to the edge, against the isotropic lines. The edge runs from the
// lower to the higher remaining vertex; (b1, b2) is oriented so that
// (edge, b1, b2) is positive; L_alpha is the +i eigenline of * on that plane,
// slope i*sqrt(A/B) in the orthogonal basis with |b1|^2 = A, |b2|^2 = B.
Scalar oracle_cross_ratio(const PointSimplex& g, int cut0, int cut1) {
  std::vector<int> rest;
  for (int v = 0; v < 4; ++v)
    if (v != cut0 && v != cut1) rest.push_back(v);
  const Vector& vi = g.points[static_cast<std::size_t>(rest[0])];
  const Vector e = sub(g.points[static_cast<std::size_t>(rest[1])], vi);
  const Scalar ee = ip(e, e);
  auto project = [&](const Vector& x) { return sub(x, scaled(e, ip(x, e) / ee)); };
  // facet opposite cut0 contains cut1, and the other way round
  const Vector u1 = project(sub(g.points[static_cast<std::size_t>(cut1)], vi));
  const Vector u2 = project(sub(g.points[static_cast<std::size_t>(cut0)], vi));
  Vector b2 = cross(e, u1);
  if (g.vol_scale.rational_value() < 0) b2 = scaled(b2, Scalar(-1));
  const Scalar a = ip(u1, u1);
  const Scalar b = ip(b2, b2);
  const Scalar c1 = ip(u2, u1) / a;
  const Scalar c2 = ip(u2, b2) / b;
  const Scalar il = exact_sqrt(-(a / b));
  return (c1 * il + c2) / (c1 * il - c2);
}

}  // namespace

Verdict criterion_classical() {
  const auto cube = classical_dehn_3d(fixture("cube.json"), kDigits, Integer(kHeight));
  if (!cube.is_zero()) return {false, "cube: " + cube.to_string()};
  const auto reg = classical_dehn_3d(fixture("regular_tetrahedron.json"), kDigits, Integer(kHeight));
  const auto& n = reg.normalized;
  if (n.pairs.size() != 1) return {false, "regular tetrahedron: " + reg.to_string()};
  const auto& p = n.pairs[0];
  if (!(p.length == Scalar(6)) || !(parse_expression(p.cos_arg) == Scalar(Rational(1, 3))))
    return {false, "regular tetrahedron: " + reg.to_string()};
  const auto& cert = n.basis_certificate;
  if (cert.outcome != RelationOutcome::NoRelationUpToHeight || cert.precision_digits != kDigits ||
      cert.height_bound != Integer(kHeight))
    return {false, "certificate: " + cert.to_string()};
  return {true, "cube 0; regular 6*(1 (x) arccos(1/3)), " + cert.to_string()};
}

Verdict criterion_hill() {
  const EnChain hill = fixture("hill_tetrahedron.json");
  const auto v = classical_dehn_3d(hill, kDigits, Integer(kHeight));
  if (!v.is_zero()) return {false, "Hill: " + v.to_string()};
  // every dihedral angle must itself be a rational multiple of pi
  std::size_t angles = 0;
  for (const auto& [mult, s] : hill)
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        const Scalar c = dihedral_cos(s, i, j);
        RelationQuery q;
        q.values = {arccos_symbol(c), pi_symbol()};
        q.precision_digits = kDigits;
        q.height_bound = Integer(kHeight);
        const auto cert = find_relation(q);
        if (cert.outcome != RelationOutcome::RelationFound)
          return {false, "angle arccos(" + c.to_string() + ") not in pi*Q: " + cert.to_string()};
        ++angles;
      }
  return {true, "Hill 0; " + std::to_string(angles) + " angles certified in pi*Q"};
}

Verdict criterion_relations() {
  std::vector<Verdict> vs;
  for (const char* k : {"ii(a)", "ii(b)", "iii", "iv"}) vs.push_back(from(app::check_relation(k, 2, 50, kSeed)));
  for (const char* k : {"ii(a)", "ii(b)", "iii", "iv"}) vs.push_back(from(app::check_relation(k, 3, 20, kSeed)));
  return all_of(vs);
}

Verdict criterion_coassoc() { return from(app::check_coassoc(3, 20, kSeed)); }

Verdict criterion_twist() {
  return all_of({from(app::check_twist(2, 100, kSeed)), from(app::check_twist(3, 100, kSeed))});
}

Verdict criterion_normalization() {
  std::size_t s_count = 0;
  std::size_t e_count = 0;
  for (std::uint64_t i = 0; i < 20; ++i) {
    const PointSimplex g = random_point_simplex(2, kSeed + i);
    const DehnTensor d = euclidean_dehn(g);
    for (const auto& t : d.terms) {
      if (t.k != 1 || t.l != 1) continue;
      if (t.I.size() != 2) return {false, "unexpected cut set size"};
      std::vector<int> rest;
      for (int v = 0; v < 4; ++v)
        if (v != t.I[0] && v != t.I[1]) rest.push_back(v);
      const Vector e = sub(g.points[static_cast<std::size_t>(rest[1])], g.points[static_cast<std::size_t>(rest[0])]);
      const Scalar len = exact_sqrt(ip(e, e));
      if (!(t.e_value == len))
        return {false, "sample " + std::to_string(i) + ": E_1 " + t.e_value.to_string() + " != " + len.to_string()};
      ++e_count;
      const Scalar cr = oracle_cross_ratio(g, t.I[0], t.I[1]);
      if (!(t.s_value == cr))
        return {false, "sample " + std::to_string(i) + ": S_1 " + t.s_value.to_string() + " != " + cr.to_string()};
      ++s_count;
    }
  }
  if (e_count != 20 * 6) return {false, "expected 120 edge terms, got " + std::to_string(e_count)};
  return {true, std::to_string(e_count) + " E_1 and " + std::to_string(s_count) + " S_1 factors"};
}

}  // namespace acc
