#pragma once

#include <Eigen/Dense>
#include <vector>

namespace cubecert {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Numerical tolerances used throughout. Inputs are desk-scale (n <= 8)
// with conditioning far from these thresholds.
inline constexpr double kOrthTol = 1e-12;   // orthonormality drift
inline constexpr double kRankTol = 1e-9;    // numerical rank decisions
inline constexpr double kFeasTol = 1e-9;    // halfspace feasibility
inline constexpr double kMergeTol = 1e-8;   // duplicate-vertex merge

/// Affine subspace given by a base point and an orthonormal direction frame.
struct AffineSpan {
  Vector base;
  std::vector<Vector> directions;

  int dim() const { return static_cast<int>(directions.size()); }
};

/// Orthonormal basis of the span of the inputs. Linearly dependent inputs
/// are dropped (residual below kRankTol); the output size is the numerical
/// rank. Orthonormalization is performed twice to keep kOrthTol achievable
/// in chained projections.
std::vector<Vector> gram_schmidt(const std::vector<Vector>& vectors);

/// Orthogonal projection of a point onto an affine span with orthonormal
/// directions: base + sum <p - base, d_i> d_i.
Vector project_onto_affine(const AffineSpan& span, const Vector& point);

/// n-volume of a simplex on n+1 vertices in R^n: |det of edge matrix| / n!.
/// Degenerate simplices give 0.
double simplex_volume(const std::vector<Vector>& vertices);

/// (m-1)-volume of a simplex on m vertices in R^n via the Gram determinant
/// of its edge vectors.
double facet_volume(const std::vector<Vector>& vertices);

/// Volume of the n-dimensional unit ball, pi^{n/2} / Gamma(n/2 + 1).
double unit_ball_volume(int n);

}  // namespace cubecert
