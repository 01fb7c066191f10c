#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "cubecert/errors.hpp"
#include "cubecert/polytope.hpp"
#include "cubecert/rng.hpp"

using namespace cubecert;

namespace {

Vector vec(std::initializer_list<double> values) {
  Vector v(values.size());
  int i = 0;
  for (double x : values) v[i++] = x;
  return v;
}

std::map<int, int> face_counts_by_codim(const Polytope& p) {
  std::map<int, int> counts;
  for (const Face& f : p.faces()) ++counts[f.codim];
  return counts;
}

// Shoelace area oracle for a 2-polytope (vertices sorted by angle).
double shoelace_area(const Polytope& p) {
  std::vector<Vector> verts = p.vertices();
  std::sort(verts.begin(), verts.end(),
            [](const Vector& a, const Vector& b) {
              return std::atan2(a[1], a[0]) < std::atan2(b[1], b[0]);
            });
  double area = 0.0;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const Vector& a = verts[i];
    const Vector& b = verts[(i + 1) % verts.size()];
    area += a[0] * b[1] - a[1] * b[0];
  }
  return std::abs(area) / 2.0;
}

double perimeter(const Polytope& p) {
  std::vector<Vector> verts = p.vertices();
  std::sort(verts.begin(), verts.end(),
            [](const Vector& a, const Vector& b) {
              return std::atan2(a[1], a[0]) < std::atan2(b[1], b[0]);
            });
  double length = 0.0;
  for (std::size_t i = 0; i < verts.size(); ++i)
    length += (verts[(i + 1) % verts.size()] - verts[i]).norm();
  return length;
}

Matrix hexagon_basis() {
  // plane x + y + z = 0 in N = 3
  Matrix basis(2, 3);
  basis << 1, -1, 0, 1, 1, -2;
  return basis;
}

}  // namespace

TEST_CASE("square from four halfspaces") {
  std::vector<Halfspace> hs = {{vec({1, 0}), 1}, {vec({-1, 0}), 1}, {vec({0, 1}), 1}, {vec({0, -1}), 1}};
  Polytope p = Polytope::from_halfspaces(hs);
  CHECK(p.vertices().size() == 4);
  CHECK(p.volume() == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("origin outside the interior is rejected") {
  std::vector<Halfspace> hs = {{vec({1, 0, 0}), -0.5}, {vec({-1, 0, 0}), 1},
                               {vec({0, 1, 0}), 1},    {vec({0, -1, 0}), 1},
                               {vec({0, 0, 1}), 1},    {vec({0, 0, -1}), 1}};
  CHECK_THROWS_AS(Polytope::from_halfspaces(hs), OriginNotInteriorError);
}

TEST_CASE("a slab is unbounded") {
  std::vector<Halfspace> hs = {{vec({1, 0}), 1}, {vec({-1, 0}), 1}};
  CHECK_THROWS_AS(Polytope::from_halfspaces(hs), UnboundedError);
}

TEST_CASE("half-bounded strip with full-rank normals is unbounded") {
  std::vector<Halfspace> hs = {{vec({1, 0}), 1}, {vec({-1, 0}), 1}, {vec({0, -1}), 1}};
  CHECK_THROWS_AS(Polytope::from_halfspaces(hs), UnboundedError);
}

TEST_CASE("cubes") {
  Polytope c1 = Polytope::cube(1);
  CHECK(c1.vertices().size() == 2);
  CHECK(c1.volume() == doctest::Approx(2.0).epsilon(1e-14));

  Polytope c2 = Polytope::cube(2);
  REQUIRE(c2.vertices().size() == 4);
  for (const Vector& v : c2.vertices()) {
    CHECK(std::abs(std::abs(v[0]) - 1.0) < 1e-12);
    CHECK(std::abs(std::abs(v[1]) - 1.0) < 1e-12);
  }

  Polytope c3 = Polytope::cube(3);
  CHECK(c3.vertices().size() == 8);
  CHECK(c3.volume() == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(c3.surface_area() == doctest::Approx(24.0).epsilon(1e-12));
}

TEST_CASE("face lattice counts") {
  auto counts3 = face_counts_by_codim(Polytope::cube(3));
  CHECK(counts3[0] == 1);
  CHECK(counts3[1] == 6);
  CHECK(counts3[2] == 12);
  CHECK(counts3[3] == 8);

  auto counts2 = face_counts_by_codim(Polytope::cube(2));
  CHECK(counts2[0] == 1);
  CHECK(counts2[1] == 4);
  CHECK(counts2[2] == 4);
}

TEST_CASE("hexagonal section of the 3-cube") {
  Polytope hex = Polytope::cube_section(3, hexagon_basis());
  REQUIRE(hex.dim() == 2);
  CHECK(hex.vertices().size() == 6);
  for (const Vector& v : hex.vertices())
    CHECK(v.norm() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));

  auto counts = face_counts_by_codim(hex);
  CHECK(counts[0] == 1);
  CHECK(counts[1] == 6);
  CHECK(counts[2] == 6);

  double area = hex.volume();
  CHECK(area == doctest::Approx(3.0 * std::sqrt(3.0)).epsilon(1e-9));
  CHECK(area == doctest::Approx(shoelace_area(hex)).epsilon(1e-12));
  CHECK(hex.surface_area() == doctest::Approx(perimeter(hex)).epsilon(1e-12));
}

TEST_CASE("full section reproduces the cube") {
  Matrix identity = Matrix::Identity(3, 3);
  Polytope p = Polytope::cube_section(3, identity);
  CHECK(p.vertices().size() == 8);
  CHECK(p.volume() == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("diagonal section of the square is a segment of length 2 sqrt 2") {
  Matrix basis(1, 2);
  basis << 1, 1;
  Polytope p = Polytope::cube_section(2, basis);
  REQUIRE(p.dim() == 1);
  CHECK(p.volume() == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("rank-deficient section basis is rejected") {
  Matrix basis(2, 3);
  basis << 1, 1, 0, 2, 2, 0;
  CHECK_THROWS_AS(Polytope::cube_section(3, basis), RankDeficientError);
}

TEST_CASE("closest points in cube faces") {
  Polytope c3 = Polytope::cube(3);
  CHECK(c3.closest_point_in_face(0).norm() < 1e-12);  // face 0 is P itself

  for (int f = 0; f < static_cast<int>(c3.faces().size()); ++f) {
    const Face& face = c3.faces()[f];
    Vector a = c3.closest_point_in_face(f);
    Vector b = c3.closest_point_in_affine_span(f);
    CHECK(a.norm() == doctest::Approx(std::sqrt(static_cast<double>(face.codim))).epsilon(1e-9));
    CHECK(a.norm() >= b.norm() - 1e-12);
    // variational inequality: a is the closest point of conv(face vertices)
    for (int v : face.vertex_ids) CHECK(a.dot(c3.vertices()[v] - a) >= -1e-8);
  }
}

TEST_CASE("Euler characteristic of every lattice") {
  std::vector<Polytope> polys;
  polys.push_back(Polytope::cube(2));
  polys.push_back(Polytope::cube(3));
  polys.push_back(Polytope::cube(4));
  polys.push_back(Polytope::cube_section(3, hexagon_basis()));
  for (const Polytope& p : polys) {
    auto counts = face_counts_by_codim(p);
    double chi = 0.0;
    for (const auto& [codim, count] : counts) {
      if (codim == 0) continue;
      int dim = p.dim() - codim;
      chi += (dim % 2 == 0 ? 1.0 : -1.0) * count;
    }
    CHECK(chi == doctest::Approx(1.0 + ((p.dim() - 1) % 2 == 0 ? 1.0 : -1.0)));
  }
}

TEST_CASE("sections inherit the sqrt(k) distance property") {
  CounterRng rng(41);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 2 + trial % 2;
    int big_n = n + 1 + trial % 3;
    Matrix basis(n, big_n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < big_n; ++j) basis(i, j) = rng.normal();
    }
    Polytope p = Polytope::cube_section(big_n, basis);
    for (int f = 0; f < static_cast<int>(p.faces().size()); ++f) {
      int k = p.faces()[f].codim;
      if (k == 0) continue;
      double dist = p.closest_point_in_affine_span(f).norm();
      CHECK(dist >= std::sqrt(static_cast<double>(k)) - 1e-9);
    }
  }
}

TEST_CASE("section volume does not depend on the basis of the subspace") {
  Matrix basis = hexagon_basis();
  double reference = Polytope::cube_section(3, basis).volume();
  CounterRng rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    Matrix mix(2, 2);
    do {
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) mix(i, j) = rng.uniform(-2.0, 2.0);
    } while (std::abs(mix.determinant()) < 0.1);
    Polytope p = Polytope::cube_section(3, mix * basis);
    CHECK(p.volume() == doctest::Approx(reference).epsilon(1e-9));
  }
}

TEST_CASE("triangle from an H-representation") {
  // conv{0, e1, e2} shifted so the origin is interior: use the triangle
  // x >= -0.25, y >= -0.25, x + y <= 0.5 of area 1/2
  std::vector<Halfspace> hs = {{vec({-1, 0}), 0.25}, {vec({0, -1}), 0.25},
                               {vec({1, 1}) / std::sqrt(2.0), 0.5 / std::sqrt(2.0)}};
  Polytope p = Polytope::from_halfspaces(hs);
  CHECK(p.vertices().size() == 3);
  CHECK(p.volume() == doctest::Approx(0.5).epsilon(1e-12));
}
