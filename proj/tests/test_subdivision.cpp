#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cubecert/errors.hpp"
#include "cubecert/polytope.hpp"
#include "cubecert/rng.hpp"
#include "cubecert/subdivision.hpp"

using namespace cubecert;

namespace {

Polytope hexagon() {
  Matrix basis(2, 3);
  basis << 1, -1, 0, 1, 1, -2;
  return Polytope::cube_section(3, basis);
}

void check_triple_invariants(const Polytope& p, const SimplexTriple& t) {
  const int n = p.dim();
  CHECK(t.a[0].norm() < 1e-12);
  CHECK(t.b[0].norm() < 1e-12);
  for (int k = 0; k <= n; ++k) CHECK(t.a[k].norm() >= t.b[k].norm() - 1e-12);
  // the b-edges form an orthogonal chain
  for (int k = 1; k <= n; ++k) {
    for (int j = k + 1; j <= n; ++j)
      CHECK(std::abs((t.b[k] - t.b[k - 1]).dot(t.b[j] - t.b[j - 1])) < 1e-9);
  }
  // the opposite facet of A lies in the boundary facet F_1
  const Face& facet = p.faces()[t.flag.face_ids[1]];
  for (int k = 1; k <= n; ++k) {
    for (int c : facet.active) {
      CHECK(std::abs(p.halfspaces()[c].normal.dot(t.a[k]) - p.halfspaces()[c].offset) < kFeasTol);
    }
  }
}

}  // namespace

TEST_CASE("flag counts") {
  CHECK(enumerate_flags(Polytope::cube(2)).size() == 8);
  CHECK(enumerate_flags(Polytope::cube(3)).size() == 48);
  CHECK(enumerate_flags(hexagon()).size() == 12);
}

TEST_CASE("flags descend one codimension at a time") {
  Polytope p = Polytope::cube(3);
  for (const Flag& flag : enumerate_flags(p)) {
    REQUIRE(flag.face_ids.size() == 4);
    for (int k = 0; k <= 3; ++k) CHECK(p.faces()[flag.face_ids[k]].codim == k);
    for (int k = 1; k <= 3; ++k) {
      CHECK(p.face_within(flag.face_ids[k], flag.face_ids[k - 1]));
      CHECK(p.faces()[flag.face_ids[k]].vertex_ids.size() <
            p.faces()[flag.face_ids[k - 1]].vertex_ids.size());
    }
  }
}

TEST_CASE("cube simplices have A = B and volume 1/n!") {
  for (int n = 2; n <= 4; ++n) {
    Polytope p = Polytope::cube(n);
    double factorial = 1.0;
    for (int k = 2; k <= n; ++k) factorial *= k;
    auto triples = build_simplices(p);
    for (const SimplexTriple& t : triples) {
      REQUIRE(!t.degenerate);
      for (int k = 0; k <= n; ++k) CHECK((t.a[k] - t.b[k]).norm() < 1e-12);
      CHECK(simplex_volume(t.a) == doctest::Approx(1.0 / factorial).epsilon(1e-12));
      check_triple_invariants(p, t);
    }
  }
}

TEST_CASE("hexagon simplices are 12 nondegenerate triangles summing to the area") {
  Polytope p = hexagon();
  auto triples = build_simplices(p);
  REQUIRE(triples.size() == 12);
  double total = 0.0;
  for (const SimplexTriple& t : triples) {
    CHECK(!t.degenerate);
    total += simplex_volume(t.a);
    check_triple_invariants(p, t);
  }
  CHECK(total == doctest::Approx(p.volume()).epsilon(1e-9));
}

TEST_CASE("covering check on cube and hexagon") {
  for (const Polytope& p : {Polytope::cube(3), hexagon()}) {
    auto triples = build_simplices(p);
    CoveringReport report = covering_check(p, triples, 10000, 2024);
    CHECK(report.volume_gap <= 1e-10 * p.volume());
    CHECK(report.uncovered_hits == 0);
    CHECK(report.max_overlap_hits == 0);
    CHECK(report.tested_points > 0);
  }
}

TEST_CASE("deleting a simplex is detected as an uncovered region") {
  Polytope p = Polytope::cube(3);
  auto triples = build_simplices(p);
  triples.pop_back();
  CoveringReport report = covering_check(p, triples, 10000, 2024);
  CHECK(report.uncovered_hits > 0);
  CHECK(report.volume_gap > 1e-3);
}

TEST_CASE("canonical orthoscheme") {
  Orthoscheme c3 = canonical_orthoscheme(3);
  REQUIRE(c3.vertices.size() == 4);
  CHECK(c3.vertices[0].norm() == 0.0);
  CHECK((c3.vertices[1] - (Vector(3) << 1, 0, 0).finished()).norm() == 0.0);
  CHECK((c3.vertices[2] - (Vector(3) << 1, 1, 0).finished()).norm() == 0.0);
  CHECK((c3.vertices[3] - (Vector(3) << 1, 1, 1).finished()).norm() == 0.0);
  for (int k = 0; k <= 3; ++k)
    CHECK(c3.vertices[k].norm() == doctest::Approx(std::sqrt(static_cast<double>(k))));
  CHECK(simplex_volume(c3.vertices) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));

  Orthoscheme c1 = canonical_orthoscheme(1);
  CHECK(c1.vertices[1][0] == 1.0);
}

TEST_CASE("orthoscheme from cube triple equals the canonical orthoscheme") {
  Polytope p = Polytope::cube(3);
  auto triples = build_simplices(p);
  Orthoscheme canonical = canonical_orthoscheme(3);
  for (const SimplexTriple& t : triples) {
    Orthoscheme o = orthoscheme_from_b(t);
    for (int k = 0; k < 3; ++k) CHECK(o.edge_lengths[k] == doctest::Approx(1.0).epsilon(1e-12));
    for (int k = 0; k <= 3; ++k)
      CHECK((o.vertices[k] - canonical.vertices[k]).norm() < 1e-12);
  }
}

TEST_CASE("adapted coordinates preserve vertex norms") {
  for (const Polytope& p : {hexagon(), Polytope::cube(3)}) {
    for (const SimplexTriple& t : build_simplices(p)) {
      if (t.degenerate) continue;
      Orthoscheme o = orthoscheme_from_b(t);
      CHECK(is_orthoscheme(o.vertices));
      for (std::size_t k = 0; k < t.b.size(); ++k)
        CHECK(o.vertices[k].norm() == doctest::Approx(t.b[k].norm()).epsilon(1e-9));
      // Pythagorean chain
      for (int k = 1; k <= o.dim(); ++k)
        CHECK(o.vertices[k].squaredNorm() ==
              doctest::Approx(o.vertex_norm(k) * o.vertex_norm(k)).epsilon(1e-9));
    }
  }
}

TEST_CASE("hexagon orthoscheme has first edge at the edge distance") {
  Polytope p = hexagon();
  for (const SimplexTriple& t : build_simplices(p)) {
    Orthoscheme o = orthoscheme_from_b(t);
    double edge_distance = p.closest_point_in_affine_span(t.flag.face_ids[1]).norm();
    CHECK(o.edge_lengths[0] == doctest::Approx(edge_distance).epsilon(1e-12));
    CHECK(o.edge_lengths[0] >= 1.0);
  }
}

TEST_CASE("volume sum matches the polytope volume on random sections") {
  CounterRng rng(99);
  for (int trial = 0; trial < 8; ++trial) {
    int n = 2 + trial % 2;
    int big_n = n + 1 + trial % 3;
    Matrix basis(n, big_n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < big_n; ++j) basis(i, j) = rng.normal();
    Polytope p = Polytope::cube_section(big_n, basis);
    double sum = 0.0;
    for (const SimplexTriple& t : build_simplices(p)) {
      if (!t.degenerate) sum += simplex_volume(t.a);
    }
    CHECK(sum == doctest::Approx(p.volume()).epsilon(1e-8));
  }
}
