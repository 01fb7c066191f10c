#include "cubecert/subdivision.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cubecert/errors.hpp"
#include "cubecert/rng.hpp"

namespace cubecert {

double Orthoscheme::vertex_norm(int k) const {
  double s = 0.0;
  for (int i = 0; i < k; ++i) s += edge_lengths[i] * edge_lengths[i];
  return std::sqrt(s);
}

std::vector<Flag> enumerate_flags(const Polytope& p) {
  const int n = p.dim();
  std::vector<Flag> flags;
  std::vector<int> chain;

  // The lattice is sorted by (codim, vertex set), so the whole polytope is
  // face 0 and DFS order is deterministic.
  auto descend = [&](auto&& self, int face_id, int codim) -> void {
    chain.push_back(face_id);
    if (codim == n) {
      flags.push_back(Flag{chain});
    } else {
      for (int g = 0; g < static_cast<int>(p.faces().size()); ++g) {
        if (p.faces()[g].codim == codim + 1 && p.face_within(g, face_id)) self(self, g, codim + 1);
      }
    }
    chain.pop_back();
  };
  descend(descend, 0, 0);
  return flags;
}

std::vector<SimplexTriple> build_simplices(const Polytope& p) {
  const int n = p.dim();
  const double eps_deg = 1e-12 * std::pow(p.circumradius(), n);
  std::vector<Flag> flags = enumerate_flags(p);
  std::vector<SimplexTriple> triples;
  triples.reserve(flags.size());
  for (int i = 0; i < static_cast<int>(flags.size()); ++i) {
    SimplexTriple t;
    t.flag_id = i;
    t.flag = flags[i];
    for (int face_id : flags[i].face_ids) {
      t.a.push_back(p.closest_point_in_face(face_id));
      t.b.push_back(p.closest_point_in_affine_span(face_id));
    }
    t.degenerate = simplex_volume(t.a) < eps_deg;
    triples.push_back(std::move(t));
  }
  return triples;
}

CoveringReport covering_check(const Polytope& p, const std::vector<SimplexTriple>& triples,
                              int sample_count, std::uint64_t seed) {
  const int n = p.dim();
  CoveringReport report;

  double simplex_sum = 0.0;
  std::vector<Eigen::PartialPivLU<Matrix>> inverses;
  std::vector<const SimplexTriple*> live;
  for (const SimplexTriple& t : triples) {
    if (t.degenerate) continue;
    simplex_sum += simplex_volume(t.a);
    Matrix edges(n, n);
    for (int i = 0; i < n; ++i) edges.col(i) = t.a[i + 1] - t.a[0];
    inverses.emplace_back(edges);
    live.push_back(&t);
  }
  report.volume_gap = std::abs(simplex_sum - p.volume());

  Vector lo = Vector::Constant(n, std::numeric_limits<double>::infinity());
  Vector hi = -lo;
  for (const Vector& v : p.vertices()) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
  }

  const double closed_margin = 1e-9;
  const double interior_margin = 1e-9;
  CounterRng rng(seed);
  for (int s = 0; s < sample_count; ++s) {
    Vector x(n);
    for (int i = 0; i < n; ++i) x[i] = rng.uniform(lo[i], hi[i]);
    if (!p.contains(x)) continue;
    ++report.tested_points;
    int closed_hits = 0;
    int interior_hits = 0;
    for (std::size_t k = 0; k < live.size(); ++k) {
      Vector lambda = inverses[k].solve(x - live[k]->a[0]);
      double sum = lambda.sum();
      if (lambda.minCoeff() >= -closed_margin && sum <= 1.0 + closed_margin) ++closed_hits;
      if (lambda.minCoeff() > interior_margin && sum < 1.0 - interior_margin) ++interior_hits;
    }
    if (closed_hits == 0) ++report.uncovered_hits;
    if (interior_hits > 1) ++report.max_overlap_hits;
  }
  return report;
}

Orthoscheme canonical_orthoscheme(int n) {
  if (n < 1) throw UnsupportedDimensionError("orthoscheme dimension must be positive");
  Orthoscheme o;
  for (int k = 0; k <= n; ++k) {
    Vector c = Vector::Zero(n);
    for (int i = 0; i < k; ++i) c[i] = 1.0;
    o.vertices.push_back(c);
  }
  o.edge_lengths.assign(n, 1.0);
  return o;
}

Orthoscheme orthoscheme_from_b(const SimplexTriple& triple) {
  if (triple.degenerate) throw DegenerateInputError("degenerate simplex triple");
  const int n = static_cast<int>(triple.b.size()) - 1;
  Orthoscheme o;
  o.edge_lengths.resize(n);
  double scale = 0.0;
  for (const Vector& b : triple.b) scale = std::max(scale, b.norm());
  for (int k = 1; k <= n; ++k) {
    double beta = (triple.b[k] - triple.b[k - 1]).norm();
    if (beta <= 1e-12 * std::max(1.0, scale)) throw DegenerateInputError("zero orthoscheme edge");
    o.edge_lengths[k - 1] = beta;
  }
  // The edges are pairwise orthogonal, so the adapted coordinates are just
  // the prefix of edge lengths.
  for (int k = 0; k <= n; ++k) {
    Vector v = Vector::Zero(n);
    for (int i = 0; i < k; ++i) v[i] = o.edge_lengths[i];
    o.vertices.push_back(v);
  }
  return o;
}

bool is_orthoscheme(const std::vector<Vector>& vertices, double tol) {
  const int n = static_cast<int>(vertices.size()) - 1;
  for (int i = 1; i <= n; ++i) {
    Vector di = vertices[i] - vertices[i - 1];
    if (di.norm() == 0.0) return false;
    for (int j = i + 1; j <= n; ++j) {
      Vector dj = vertices[j] - vertices[j - 1];
      if (std::abs(di.dot(dj)) > tol * di.norm() * dj.norm()) return false;
    }
  }
  return true;
}

}  // namespace cubecert
