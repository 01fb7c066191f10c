#include "cubecert/geometry.hpp"

#include <cmath>

namespace cubecert {

namespace {

// One orthogonalization sweep of v against an orthonormal frame.
void sweep(const std::vector<Vector>& frame, Vector& v) {
  for (const Vector& d : frame) v -= d.dot(v) * d;
}

}  // namespace

std::vector<Vector> gram_schmidt(const std::vector<Vector>& vectors) {
  std::vector<Vector> frame;
  for (const Vector& input : vectors) {
    Vector v = input;
    sweep(frame, v);
    sweep(frame, v);  // reorthogonalize
    if (v.norm() < kRankTol * std::max(1.0, input.norm())) continue;
    frame.push_back(v / v.norm());
  }
  return frame;
}

Vector project_onto_affine(const AffineSpan& span, const Vector& point) {
  Vector rel = point - span.base;
  Vector result = span.base;
  for (const Vector& d : span.directions) result += d.dot(rel) * d;
  return result;
}

double simplex_volume(const std::vector<Vector>& vertices) {
  const int n = static_cast<int>(vertices.size()) - 1;
  Matrix edges(n, n);
  for (int i = 0; i < n; ++i) edges.col(i) = vertices[i + 1] - vertices[0];
  double det = edges.partialPivLu().determinant();
  double factorial = 1.0;
  for (int k = 2; k <= n; ++k) factorial *= k;
  return std::abs(det) / factorial;
}

double facet_volume(const std::vector<Vector>& vertices) {
  const int m = static_cast<int>(vertices.size()) - 1;
  if (m == 0) return 1.0;  // a point has counting measure 1
  Matrix edges(vertices[0].size(), m);
  for (int i = 0; i < m; ++i) edges.col(i) = vertices[i + 1] - vertices[0];
  double gram = (edges.transpose() * edges).determinant();
  if (gram < 0.0) gram = 0.0;
  double factorial = 1.0;
  for (int k = 2; k <= m; ++k) factorial *= k;
  return std::sqrt(gram) / factorial;
}

double unit_ball_volume(int n) {
  return std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

}  // namespace cubecert
