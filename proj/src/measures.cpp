#include "cubecert/measures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "cubecert/errors.hpp"
#include "cubecert/rng.hpp"
#include "cubecert/subdivision.hpp"

namespace cubecert {

namespace {

double angle_between(const Vector& u, const Vector& v) {
  // atan2 form is accurate for both tiny and near-pi angles
  Vector a = u.normalized(), b = v.normalized();
  return 2.0 * std::atan2((a - b).norm(), (a + b).norm());
}

// Spherical excess of the triangle on unit vectors u1, u2, u3 via the three
// vertex angles between unit tangent vectors.
double spherical_excess(const Vector& u1, const Vector& u2, const Vector& u3) {
  auto vertex_angle = [](const Vector& at, const Vector& p, const Vector& q) {
    Vector tp = p - p.dot(at) * at;
    Vector tq = q - q.dot(at) * at;
    return angle_between(tp, tq);
  };
  return vertex_angle(u1, u2, u3) + vertex_angle(u2, u3, u1) + vertex_angle(u3, u1, u2) - M_PI;
}

// ---- Chebyshev toolbox on [0, T] ------------------------------------------
//
// Values live at Chebyshev-Lobatto nodes w_j = T (1 - cos(j pi / m)) / 2.
// cumulative_integral maps node values of f to node values of
// int_0^{w_j} f(w) dw via the antiderivative of the interpolant.

struct ChebGrid {
  double length;
  std::vector<double> nodes;   // w_j, ascending from 0 to T
  std::vector<double> cosjpm;  // cos(j pi / m)

  explicit ChebGrid(double t, int m) : length(t), nodes(m + 1), cosjpm(m + 1) {
    for (int j = 0; j <= m; ++j) {
      cosjpm[j] = std::cos(j * M_PI / m);
      nodes[j] = t * (1.0 - cosjpm[j]) / 2.0;
    }
  }
  int order() const { return static_cast<int>(nodes.size()) - 1; }
};

std::vector<double> cheb_coefficients(const ChebGrid& grid, const std::vector<double>& values) {
  const int m = grid.order();
  std::vector<double> coeff(m + 1, 0.0);
  for (int r = 0; r <= m; ++r) {
    double acc = 0.5 * (values[0] * std::cos(0.0) + values[m] * std::cos(r * M_PI));
    for (int j = 1; j < m; ++j) acc += values[j] * std::cos(r * j * M_PI / m);
    coeff[r] = 2.0 * acc / m;
  }
  coeff[0] *= 0.5;
  coeff[m] *= 0.5;
  return coeff;
}

double cheb_eval(const std::vector<double>& coeff, double u) {
  // Clenshaw recurrence
  double b1 = 0.0, b2 = 0.0;
  for (int r = static_cast<int>(coeff.size()) - 1; r >= 1; --r) {
    double b0 = 2.0 * u * b1 - b2 + coeff[r];
    b2 = b1;
    b1 = b0;
  }
  return u * b1 - b2 + coeff[0];
}

std::vector<double> cumulative_integral(const ChebGrid& grid, const std::vector<double>& values) {
  const int m = grid.order();
  std::vector<double> a = cheb_coefficients(grid, values);
  std::vector<double> b(m + 2, 0.0);
  // plain-coefficient convention: int T_0 = T_1, so r = 1 takes the full a_0
  b[1] = a[0] - (m >= 2 ? a[2] / 2.0 : 0.0);
  for (int r = 2; r <= m + 1; ++r) {
    double prev = a[r - 1];
    double next = (r + 1 <= m) ? a[r + 1] : 0.0;
    b[r] = (prev - next) / (2.0 * r);
  }
  // w = T (1 - u) / 2, so dw = -(T/2) du and the node at w = 0 is u = 1.
  double at_zero = cheb_eval(b, 1.0);
  std::vector<double> out(m + 1);
  for (int j = 0; j <= m; ++j)
    out[j] = -(grid.length / 2.0) * (cheb_eval(b, grid.cosjpm[j]) - at_zero);
  return out;
}

}  // namespace

double orthoscheme_cone_angle(const std::vector<double>& beta) {
  const int n = static_cast<int>(beta.size());
  for (double bk : beta) {
    if (!(bk > 0.0)) throw DegenerateInputError("orthoscheme edge lengths must be positive");
  }
  if (n == 1) return 0.5;

  // omega = P(W_1 >= W_2 >= ... >= W_n >= 0) with W_k ~ N(0, 1/beta_k^2)
  // independent, evaluated by the backward recursion
  //   H_k(t) = int_0^t phi_k(w) H_{k+1}(w) dw,   H_{n+1} = 1,
  // so that omega = H_1(infinity).
  std::vector<double> sigma(n);
  double sigma_max = 0.0;
  for (int k = 0; k < n; ++k) {
    sigma[k] = 1.0 / beta[k];
    sigma_max = std::max(sigma_max, sigma[k]);
  }
  const double domain = 10.0 * sigma_max;  // Gaussian tail beyond is ~1e-23
  const int order = 512;
  ChebGrid grid(domain, order);

  std::vector<double> h(order + 1, 1.0);
  for (int k = n - 1; k >= 0; --k) {
    std::vector<double> integrand(order + 1);
    const double inv = 1.0 / (sigma[k] * std::sqrt(2.0 * M_PI));
    for (int j = 0; j <= order; ++j) {
      double w = grid.nodes[j];
      integrand[j] = inv * std::exp(-0.5 * w * w / (sigma[k] * sigma[k])) * h[j];
    }
    h = cumulative_integral(grid, integrand);
  }
  return h.back();
}

SolidAngle solid_angle(const std::vector<Vector>& apex_simplex, long sample_count,
                       std::uint64_t seed) {
  const int n = static_cast<int>(apex_simplex.size()) - 1;
  if (n < 1 || apex_simplex[0].size() != n)
    throw DimensionMismatchError("apex simplex needs n+1 vertices in R^n");
  if (apex_simplex[0].norm() > 1e-12)
    throw DegenerateSimplexError("first vertex must be the origin");
  double scale = 0.0;
  for (const Vector& v : apex_simplex) scale = std::max(scale, v.norm());
  if (simplex_volume(apex_simplex) < 1e-14 * std::pow(std::max(scale, 1e-30), n))
    throw DegenerateSimplexError("degenerate apex simplex");

  if (n == 1) return {0.5, 0.0, 0, seed};
  if (n == 2) {
    double theta = angle_between(apex_simplex[1], apex_simplex[2]);
    return {theta / (2.0 * M_PI), 0.0, 0, seed};
  }
  if (n == 3) {
    double excess = spherical_excess(apex_simplex[1].normalized(), apex_simplex[2].normalized(),
                                     apex_simplex[3].normalized());
    return {excess / (4.0 * M_PI), 0.0, 0, seed};
  }

  if (is_orthoscheme(apex_simplex)) {
    std::vector<double> beta(n);
    for (int k = 1; k <= n; ++k) beta[k - 1] = (apex_simplex[k] - apex_simplex[k - 1]).norm();
    // Cube-style subdivisions produce thousands of congruent cones; cache by
    // quantized edge profile.
    static std::map<std::vector<long long>, double> cache;
    static std::mutex cache_mutex;
    std::vector<long long> key(n);
    for (int k = 0; k < n; ++k) key[k] = std::llround(beta[k] * 1e12);
    {
      std::lock_guard<std::mutex> lock(cache_mutex);
      auto it = cache.find(key);
      if (it != cache.end()) return {it->second, 0.0, 0, seed};
    }
    double omega = orthoscheme_cone_angle(beta);
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache[key] = omega;
    return {omega, 0.0, 0, seed};
  }

  // Monte Carlo over seeded sphere directions: a direction is a hit when the
  // ray from the origin enters the simplicial cone, i.e. its coordinates in
  // the generator basis are all nonnegative.
  Matrix generators(n, n);
  for (int i = 0; i < n; ++i) generators.col(i) = apex_simplex[i + 1];
  Eigen::PartialPivLU<Matrix> lu(generators);
  CounterRng rng(seed);
  long hits = 0;
  for (long s = 0; s < sample_count; ++s) {
    Vector d(n);
    for (int i = 0; i < n; ++i) d[i] = rng.normal();
    Vector lambda = lu.solve(d);
    if (lambda.minCoeff() >= 0.0) ++hits;
  }
  double p = static_cast<double>(hits) / sample_count;
  double err = std::sqrt(std::max(p * (1.0 - p), 0.0) / sample_count);
  return {p, err, sample_count, seed};
}

McEstimate ball_simplex_volume(const std::vector<Vector>& simplex, double r, long sample_count,
                               std::uint64_t seed) {
  if (!(r > 0.0)) throw DegenerateInputError("radius must be positive");
  const int n = static_cast<int>(simplex.size()) - 1;
  const double vol = simplex_volume(simplex);

  double max_norm = 0.0;
  for (const Vector& v : simplex) max_norm = std::max(max_norm, v.norm());
  if (max_norm <= r) return {vol, 0.0, 0, seed};  // simplex inside the ball

  if (simplex[0].norm() <= 1e-12) {
    std::vector<Vector> facet(simplex.begin() + 1, simplex.end());
    std::vector<Vector> dirs;
    for (int i = 1; i < n; ++i) dirs.push_back(facet[i] - facet[0]);
    AffineSpan span{facet[0], gram_schmidt(dirs)};
    double facet_distance = project_onto_affine(span, Vector::Zero(n)).norm();
    if (facet_distance >= r) {
      // Cone case: the ball cap inside the cone is a sector.
      SolidAngle omega = solid_angle(simplex, sample_count, seed);
      double sector = unit_ball_volume(n) * std::pow(r, n);
      return {omega.value * sector, omega.std_error * sector, omega.samples, seed};
    }
  }

  CounterRng rng(seed);
  long hits = 0;
  for (long s = 0; s < sample_count; ++s) {
    std::vector<double> lambda = rng.barycentric(n + 1);
    Vector x = Vector::Zero(n);
    for (int i = 0; i <= n; ++i) x += lambda[i] * simplex[i];
    if (x.norm() <= r) ++hits;
  }
  double p = static_cast<double>(hits) / sample_count;
  double err = std::sqrt(std::max(p * (1.0 - p), 0.0) / sample_count);
  return {p * vol, err * vol, sample_count, seed};
}

double SphericalTriangleSpec::q() const { return std::tan(c); }

void SphericalTriangleSpec::validate() const {
  if (!(t > 0.0) || !(t < M_PI / 2) || !(c > 0.0) || !(c < M_PI / 2))
    throw DegenerateInputError("spherical triangle legs must lie in (0, pi/2)");
}

namespace {

template <typename F>
double adaptive_simpson(F&& f, double a, double b, double fa, double fm, double fb, double whole,
                        double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m);
  double rm = 0.5 * (m + b);
  double flm = f(lm);
  double frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

template <typename F>
double integrate(F&& f, double a, double b, double tol) {
  double fa = f(a);
  double fb = f(b);
  double fm = f(0.5 * (a + b));
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace

double spherical_triangle_area_integral(const SphericalTriangleSpec& spec) {
  spec.validate();
  const double q = spec.q();
  const double tan_t = std::tan(spec.t);
  auto integrand = [q, tan_t](double y) {
    double x_top = (1.0 - y / q) * tan_t;
    return x_top / (std::sqrt(1.0 + y * y + x_top * x_top) * (1.0 + y * y));
  };
  return integrate(integrand, 0.0, q, 1e-10);
}

double spherical_triangle_area_girard(const SphericalTriangleSpec& spec) {
  spec.validate();
  Vector s2(3), s1(3), s3(3);
  s2 << 0.0, 0.0, 1.0;
  s1 << std::sin(spec.t), 0.0, std::cos(spec.t);
  s3 << 0.0, std::sin(spec.c), std::cos(spec.c);
  return spherical_excess(s1, s2, s3);
}

}  // namespace cubecert
