#include "cubecert/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "cubecert/errors.hpp"

namespace cubecert {

namespace {

// Visits all k-subsets of {0..m-1}.
template <typename F>
void for_each_subset(int m, int k, F&& visit) {
  if (k > m) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

int normal_rank(const std::vector<Halfspace>& hs, const std::vector<int>& which) {
  std::vector<Vector> normals;
  normals.reserve(which.size());
  for (int i : which) normals.push_back(hs[i].normal);
  return static_cast<int>(gram_schmidt(normals).size());
}

bool lex_less(const Vector& a, const Vector& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Polytope Polytope::from_halfspaces(const std::vector<Halfspace>& halfspaces) {
  if (halfspaces.empty()) throw ParseError("no halfspaces given");
  Polytope p;
  p.dim_ = static_cast<int>(halfspaces.front().normal.size());
  for (const Halfspace& h : halfspaces) {
    if (h.normal.size() != p.dim_) throw DimensionMismatchError("inconsistent halfspace dimensions");
    if (!h.normal.allFinite() || !std::isfinite(h.offset)) throw ParseError("non-finite halfspace data");
    double norm = h.normal.norm();
    if (norm < kRankTol) throw DegenerateInputError("zero halfspace normal");
    double offset = h.offset / norm;
    if (offset < kInteriorTol)
      throw OriginNotInteriorError("origin is not strictly interior (offset " + std::to_string(offset) + ")");
    p.halfspaces_.push_back({h.normal / norm, offset});
  }
  p.check_bounded();
  p.enumerate_vertices();
  if (p.vertices_.empty()) throw EmptyInteriorError();
  p.build_lattice();
  return p;
}

Polytope Polytope::cube(int n) {
  if (n < 1 || n > 8) throw UnsupportedDimensionError("cube dimension must be in [1,8]");
  std::vector<Halfspace> hs;
  for (int i = 0; i < n; ++i) {
    Vector e = Vector::Zero(n);
    e[i] = 1.0;
    hs.push_back({e, 1.0});
    hs.push_back({-e, 1.0});
  }
  return from_halfspaces(hs);
}

Polytope Polytope::cube_section(int N, const Matrix& basis) {
  const int n = static_cast<int>(basis.rows());
  if (basis.cols() != N) throw DimensionMismatchError("basis must have N columns");
  if (n < 1 || N < n || N > 8) throw UnsupportedDimensionError("need 1 <= n <= N <= 8");
  std::vector<Vector> rows;
  for (int i = 0; i < n; ++i) rows.push_back(basis.row(i).transpose());
  std::vector<Vector> frame = gram_schmidt(rows);
  if (static_cast<int>(frame.size()) < n)
    throw RankDeficientError("basis rows do not span an n-dimensional subspace");
  Matrix q(n, N);
  for (int i = 0; i < n; ++i) q.row(i) = frame[i].transpose();
  std::vector<Halfspace> hs;
  for (int j = 0; j < N; ++j) {
    Vector col = q.col(j);
    double norm = col.norm();
    if (norm < kOrthTol) continue;  // cube constraint vacuous on the subspace
    hs.push_back({col / norm, 1.0 / norm});
    hs.push_back({-col / norm, 1.0 / norm});
  }
  return from_halfspaces(hs);
}

void Polytope::check_bounded() const {
  const int m = static_cast<int>(halfspaces_.size());
  std::vector<Vector> all_normals;
  for (const Halfspace& h : halfspaces_) all_normals.push_back(h.normal);
  if (static_cast<int>(gram_schmidt(all_normals).size()) < dim_) throw UnboundedError();

  // Recession cone {d : Nd <= 0} is pointed here (normals span R^n); it is
  // nontrivial iff it has an extreme ray, which has n-1 independent active
  // constraints.
  bool unbounded = false;
  for_each_subset(m, dim_ - 1, [&](const std::vector<int>& subset) {
    if (unbounded) return;
    Matrix a(static_cast<int>(subset.size()), dim_);
    for (int i = 0; i < static_cast<int>(subset.size()); ++i)
      a.row(i) = halfspaces_[subset[i]].normal.transpose();
    Eigen::FullPivLU<Matrix> lu(a);
    lu.setThreshold(kRankTol);
    if (lu.rank() != dim_ - 1) return;
    Matrix kernel = lu.kernel();
    Vector d = kernel.col(0).normalized();
    for (int sign = 0; sign < 2; ++sign) {
      bool feasible = true;
      for (const Halfspace& h : halfspaces_) {
        if (h.normal.dot(d) > kRankTol) {
          feasible = false;
          break;
        }
      }
      if (feasible) {
        unbounded = true;
        return;
      }
      d = -d;
    }
  });
  if (unbounded) throw UnboundedError();
}

void Polytope::enumerate_vertices() {
  const int m = static_cast<int>(halfspaces_.size());
  std::vector<Vector> kept;
  for_each_subset(m, dim_, [&](const std::vector<int>& subset) {
    Matrix a(dim_, dim_);
    Vector b(dim_);
    for (int i = 0; i < dim_; ++i) {
      a.row(i) = halfspaces_[subset[i]].normal.transpose();
      b[i] = halfspaces_[subset[i]].offset;
    }
    Eigen::FullPivLU<Matrix> lu(a);
    lu.setThreshold(kRankTol);
    if (lu.rank() != dim_) return;
    Vector x = lu.solve(b);
    if (!contains(x, kFeasTol)) return;
    for (const Vector& y : kept) {
      if ((x - y).lpNorm<Eigen::Infinity>() <= kMergeTol) return;
    }
    kept.push_back(x);
  });
  std::sort(kept.begin(), kept.end(), lex_less);
  vertices_ = std::move(kept);

  vertex_active_.resize(vertices_.size());
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    for (int i = 0; i < m; ++i) {
      if (std::abs(halfspaces_[i].normal.dot(vertices_[v]) - halfspaces_[i].offset) <= kActiveTol)
        vertex_active_[v].push_back(i);
    }
  }
}

void Polytope::build_lattice() {
  const int m = static_cast<int>(halfspaces_.size());
  const int nv = static_cast<int>(vertices_.size());

  // Vertex sets of the exposed faces {v : constraint i active at v}; their
  // intersection closure is exactly the set of nonempty faces.
  std::vector<std::vector<int>> generators;
  for (int i = 0; i < m; ++i) {
    std::vector<int> vs;
    for (int v = 0; v < nv; ++v) {
      if (std::binary_search(vertex_active_[v].begin(), vertex_active_[v].end(), i)) vs.push_back(v);
    }
    if (!vs.empty()) generators.push_back(vs);
  }

  std::set<std::vector<int>> pool;
  std::vector<int> all(nv);
  for (int v = 0; v < nv; ++v) all[v] = v;
  pool.insert(all);  // the polytope itself, codim 0
  std::vector<std::vector<int>> worklist = generators;
  for (const auto& g : generators) pool.insert(g);
  while (!worklist.empty()) {
    std::vector<int> s = std::move(worklist.back());
    worklist.pop_back();
    for (const auto& g : generators) {
      std::vector<int> t = intersect_sorted(s, g);
      if (t.empty() || pool.count(t)) continue;
      pool.insert(t);
      worklist.push_back(t);
    }
  }

  faces_.clear();
  for (const auto& vs : pool) {
    Face f;
    f.vertex_ids = vs;
    f.active = vertex_active_[vs[0]];
    for (std::size_t i = 1; i < vs.size(); ++i) f.active = intersect_sorted(f.active, vertex_active_[vs[i]]);
    f.codim = normal_rank(halfspaces_, f.active);
    Vector centroid = Vector::Zero(dim_);
    for (int v : vs) centroid += vertices_[v];
    centroid /= static_cast<double>(vs.size());
    std::vector<Vector> dirs;
    for (int v : vs) dirs.push_back(vertices_[v] - centroid);
    f.span = AffineSpan{centroid, gram_schmidt(dirs)};
    faces_.push_back(std::move(f));
  }
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.codim != b.codim) return a.codim < b.codim;
    return a.vertex_ids < b.vertex_ids;
  });
}

bool Polytope::contains(const Vector& point, double tol) const {
  for (const Halfspace& h : halfspaces_) {
    if (h.normal.dot(point) > h.offset + tol) return false;
  }
  return true;
}

bool Polytope::face_within(int inner, int outer) const {
  const auto& a = faces_[inner].vertex_ids;
  const auto& b = faces_[outer].vertex_ids;
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Vector Polytope::closest_point_in_face(int face_id) const {
  double best_norm = std::numeric_limits<double>::infinity();
  Vector best;
  for (int g = 0; g < static_cast<int>(faces_.size()); ++g) {
    if (!face_within(g, face_id)) continue;
    Vector candidate = project_onto_affine(faces_[g].span, Vector::Zero(dim_));
    // The affine hull of a face meets P exactly in the face, so feasibility
    // certifies membership in the subface.
    if (!contains(candidate, kFeasTol)) continue;
    if (candidate.norm() < best_norm) {
      best_norm = candidate.norm();
      best = candidate;
    }
  }
  return best;
}

Vector Polytope::closest_point_in_affine_span(int face_id) const {
  return project_onto_affine(faces_[face_id].span, Vector::Zero(dim_));
}

std::vector<std::vector<int>> Polytope::triangulate_face(int face_id) const {
  const Face& f = faces_[face_id];
  const int face_dim = dim_ - f.codim;
  if (static_cast<int>(f.vertex_ids.size()) == face_dim + 1) return {f.vertex_ids};
  const int apex = f.vertex_ids.front();
  std::vector<std::vector<int>> out;
  for (int g = 0; g < static_cast<int>(faces_.size()); ++g) {
    if (faces_[g].codim != f.codim + 1 || !face_within(g, face_id)) continue;
    if (std::binary_search(faces_[g].vertex_ids.begin(), faces_[g].vertex_ids.end(), apex)) continue;
    for (const auto& simplex : triangulate_face(g)) {
      std::vector<int> cell;
      cell.reserve(simplex.size() + 1);
      cell.push_back(apex);
      cell.insert(cell.end(), simplex.begin(), simplex.end());
      out.push_back(std::move(cell));
    }
  }
  return out;
}

double Polytope::volume() const {
  double total = 0.0;
  for (int f = 0; f < static_cast<int>(faces_.size()); ++f) {
    if (faces_[f].codim != 1) continue;
    for (const auto& cell : triangulate_face(f)) {
      std::vector<Vector> verts;
      verts.push_back(Vector::Zero(dim_));
      for (int v : cell) verts.push_back(vertices_[v]);
      total += simplex_volume(verts);
    }
  }
  return total;
}

double Polytope::surface_area() const {
  double total = 0.0;
  for (int f = 0; f < static_cast<int>(faces_.size()); ++f) {
    if (faces_[f].codim != 1) continue;
    for (const auto& cell : triangulate_face(f)) {
      std::vector<Vector> verts;
      for (int v : cell) verts.push_back(vertices_[v]);
      total += facet_volume(verts);
    }
  }
  return total;
}

double Polytope::circumradius() const {
  double r = 0.0;
  for (const Vector& v : vertices_) r = std::max(r, v.norm());
  return r;
}

}  // namespace cubecert
