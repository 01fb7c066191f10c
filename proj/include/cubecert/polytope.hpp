#pragma once

#include <vector>

#include "cubecert/geometry.hpp"

namespace cubecert {

inline constexpr double kInteriorTol = 1e-9;   // minimal offset for interior origin
inline constexpr double kActiveTol = 1e-7;     // constraint-activity detection

/// One constraint normal . x <= offset with |normal| = 1.
struct Halfspace {
  Vector normal;
  double offset;
};

/// A face of a polytope. Identity is the vertex set; the active set is the
/// common active constraints of those vertices and codim is the rank of the
/// active normals.
struct Face {
  std::vector<int> active;      // sorted constraint indices
  int codim = 0;                // rank of active normals
  AffineSpan span;              // affine hull of the face
  std::vector<int> vertex_ids;  // sorted indices into Polytope vertices
};

/// Bounded polytope in H-representation with the origin strictly interior.
/// Vertices and the full face lattice are enumerated at construction; the
/// object is immutable afterwards, so reads are safe concurrently.
class Polytope {
 public:
  /// Builds from raw (normal, offset) pairs; normals are normalized.
  /// Throws UnboundedError, OriginNotInteriorError or EmptyInteriorError.
  static Polytope from_halfspaces(const std::vector<Halfspace>& halfspaces);

  /// The cube [-1,1]^n, 1 <= n <= 8.
  static Polytope cube(int n);

  /// Section of [-1,1]^N by the row space of `basis` (n x N, rank n),
  /// expressed in orthonormal coordinates of the subspace so that volumes
  /// and distances match the ambient section. Throws RankDeficientError.
  static Polytope cube_section(int N, const Matrix& basis);

  int dim() const { return dim_; }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
  const std::vector<Vector>& vertices() const { return vertices_; }
  const std::vector<Face>& faces() const { return faces_; }

  bool contains(const Vector& point, double tol = kFeasTol) const;

  /// Vertex-set inclusion: face g is contained in face f.
  bool face_within(int inner, int outer) const;

  /// The unique point of face f closest to the origin, found by projecting
  /// the origin onto the affine hull of every subface and keeping the
  /// feasible candidate of minimal norm.
  Vector closest_point_in_face(int face_id) const;

  /// Projection of the origin onto the affine hull of face f.
  Vector closest_point_in_affine_span(int face_id) const;

  /// Fan triangulation volume: cone from the origin over the triangulated
  /// boundary facets.
  double volume() const;

  /// Sum of the (n-1)-volumes of the codim-1 faces.
  double surface_area() const;

  /// Triangulation of a face into simplices given as vertex-id tuples
  /// (dim(F)+1 ids each), pulled from the face's first vertex.
  std::vector<std::vector<int>> triangulate_face(int face_id) const;

  double circumradius() const;

 private:
  Polytope() = default;
  void enumerate_vertices();
  void build_lattice();
  void check_bounded() const;

  int dim_ = 0;
  std::vector<Halfspace> halfspaces_;
  std::vector<Vector> vertices_;
  std::vector<std::vector<int>> vertex_active_;  // per vertex, sorted
  std::vector<Face> faces_;
};

}  // namespace cubecert
