#pragma once

#include <cstdint>
#include <vector>

#include "cubecert/geometry.hpp"

namespace cubecert {

/// A normalized solid angle in [0,1]. std_error is 0 on the exact paths
/// (n <= 3 closed forms, orthoscheme-cone quadrature) and the Monte Carlo
/// standard error otherwise.
struct SolidAngle {
  double value = 0.0;
  double std_error = 0.0;
  long samples = 0;
  std::uint64_t seed = 0;

  bool exact() const { return std_error == 0.0; }
};

/// Monte Carlo estimate with statistical metadata so callers can apply
/// 3-sigma criteria.
struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  long samples = 0;
  std::uint64_t seed = 0;
};

/// Fraction of the unit sphere subtended at the origin by the cone over the
/// non-apex vertices. The first vertex must be the origin (tol 1e-12).
///
/// n = 1: 1/2 per ray. n = 2: planar angle / 2pi. n = 3: spherical excess
/// (Girard, via unit tangent vectors) / 4pi. n >= 4: exact chain quadrature
/// when the vertex order forms an orthoscheme, seeded Monte Carlo otherwise.
SolidAngle solid_angle(const std::vector<Vector>& apex_simplex, long sample_count = 200000,
                       std::uint64_t seed = 0);

/// Solid angle of the cone over an orthoscheme chain with edge lengths
/// beta_k, computed as the Gaussian chain probability
/// P(Z_1/beta_1 >= ... >= Z_n/beta_n >= 0) by iterated Chebyshev quadrature.
double orthoscheme_cone_angle(const std::vector<double>& beta);

/// vol(B_0(r) intersect simplex). Exact when the simplex lies inside the
/// ball or when it is an origin-apex cone whose far facet clears the ball
/// (cone identity omega * kappa_n * r^n); Monte Carlo otherwise.
McEstimate ball_simplex_volume(const std::vector<Vector>& simplex, double r, long sample_count,
                               std::uint64_t seed);

/// Right spherical triangle with legs t = |s1 s2| and c = |s2 s3| meeting at
/// the right angle in s2; q = tan c is the central-projection leg length.
struct SphericalTriangleSpec {
  double t;
  double c;

  double q() const;
  void validate() const;  // throws DegenerateInputError outside (0, pi/2)
};

/// Area by adaptive quadrature of the central-projection integral
/// int_0^q (1 - y/q) tan t / (sqrt(1 + y^2 + ((1-y/q) tan t)^2) (1 + y^2)) dy.
double spherical_triangle_area_integral(const SphericalTriangleSpec& spec);

/// Area by Girard's excess: vertices placed on the sphere, three vertex
/// angles from unit tangent vectors, A + B + C - pi.
double spherical_triangle_area_girard(const SphericalTriangleSpec& spec);

}  // namespace cubecert
