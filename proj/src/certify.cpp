#include "cubecert/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cubecert/errors.hpp"
#include "cubecert/rng.hpp"

namespace cubecert {

double distance_threshold(HypothesisMode mode, int codim) {
  if (mode == HypothesisMode::vaaler) return std::sqrt(static_cast<double>(codim));
  return std::sqrt(2.0 * codim / (codim + 1.0));
}

std::string to_string(HypothesisMode mode) {
  return mode == HypothesisMode::vaaler ? "vaaler" : "rogers";
}

double Certificate::min_margin() const {
  double m = std::numeric_limits<double>::infinity();
  for (const SimplexLedgerEntry& e : simplices) {
    if (!e.degenerate) m = std::min(m, e.margin);
  }
  return m;
}

HypothesisReport check_distance_hypothesis(const Polytope& p, HypothesisMode mode) {
  HypothesisReport report;
  report.mode = mode;
  report.pass = true;
  for (int f = 0; f < static_cast<int>(p.faces().size()); ++f) {
    int k = p.faces()[f].codim;
    if (k < 1) continue;
    double d = p.closest_point_in_affine_span(f).norm();
    double tau = distance_threshold(mode, k);
    double margin = d - tau;
    report.entries.push_back({f, k, d, tau, margin});
    if (margin < -1e-9) report.pass = false;
  }
  return report;
}

namespace {

Certificate make_certificate(const Polytope& p, CertificateKind kind, bool enforce_pass,
                             long sample_count, std::uint64_t seed) {
  const int n = p.dim();
  Certificate cert;
  cert.kind = kind;
  cert.dim = n;
  cert.claimed_bound = (kind == CertificateKind::volume) ? std::pow(2.0, n) : n * std::pow(2.0, n);
  cert.hypothesis = check_distance_hypothesis(p, HypothesisMode::vaaler);
  if (enforce_pass && !cert.hypothesis.pass)
    throw HypothesisFailedError("distance hypothesis fails; certificate is not applicable");

  std::vector<SimplexTriple> triples = build_simplices(p);
  for (const SimplexTriple& t : triples) {
    SimplexLedgerEntry e{};
    e.flag_id = t.flag_id;
    e.degenerate = t.degenerate;
    if (!t.degenerate) {
      e.volume = simplex_volume(t.a);
      e.omega = solid_angle(t.a, sample_count, seed + static_cast<std::uint64_t>(t.flag_id)).value;
      std::vector<Vector> facet(t.a.begin() + 1, t.a.end());
      e.facet_area = facet_volume(facet);
      e.bound = cert.claimed_bound * e.omega;
      e.margin = (kind == CertificateKind::volume ? e.volume : e.facet_area) - e.bound;
      cert.total += (kind == CertificateKind::volume ? e.volume : e.facet_area);
      cert.omega_sum += e.omega;
    }
    cert.simplices.push_back(e);
  }

  const double eps = cert.epsilon();
  cert.pass = cert.hypothesis.pass && cert.min_margin() >= -eps &&
              cert.total >= cert.claimed_bound - eps && std::abs(cert.omega_sum - 1.0) <= 1e-8;
  return cert;
}

}  // namespace

Certificate certify_volume(const Polytope& p) {
  return make_certificate(p, CertificateKind::volume, true, 200000, 0);
}

Certificate certify_surface(const Polytope& p) {
  if (p.dim() < 2 || p.dim() > 3)
    throw UnsupportedDimensionError("surface certificate is only stated for n in {2,3}");
  return make_certificate(p, CertificateKind::surface, true, 200000, 0);
}

Certificate surface_experiment(const Polytope& p, long sample_count, std::uint64_t seed) {
  Certificate cert = make_certificate(p, CertificateKind::surface, false, sample_count, seed);
  cert.pass = false;  // no certificate semantics outside the theorem's range
  return cert;
}

ContractionReport orthoscheme_contraction_check(const Orthoscheme& b, const Orthoscheme& c,
                                                int sample_count, std::uint64_t seed) {
  const int n = b.dim();
  if (c.dim() != n) throw DimensionMismatchError("orthoscheme dimensions differ");
  ContractionReport report;
  for (int k = 1; k <= n; ++k) {
    if (b.vertex_norm(k) < c.vertex_norm(k) - 1e-12) {
      report.status = CheckStatus::precondition_unmet;
      return report;
    }
  }

  // Adapted coordinates make f the diagonal map lambda_k = gamma_k / beta_k.
  std::vector<double> ratio(n);
  for (int k = 0; k < n; ++k) ratio[k] = c.edge_lengths[k] / b.edge_lengths[k];

  for (int k = 1; k <= n; ++k) {
    double image_norm = 0.0;
    for (int i = 0; i < k; ++i) {
      double coord = b.edge_lengths[i] * ratio[i];
      image_norm += coord * coord;
    }
    image_norm = std::sqrt(image_norm);
    report.max_vertex_error =
        std::max(report.max_vertex_error, std::abs(image_norm - c.vertex_norm(k)));
  }

  CounterRng rng(seed);
  report.samples = sample_count;
  for (int s = 0; s < sample_count; ++s) {
    std::vector<double> lambda = rng.barycentric(n + 1);
    double norm2 = 0.0, image2 = 0.0;
    // x_i in adapted coordinates: beta_i * (lambda_i + ... + lambda_n)
    double tail = 0.0;
    std::vector<double> suffix(n);
    for (int i = n; i >= 1; --i) {
      tail += lambda[i];
      suffix[i - 1] = tail;
    }
    for (int i = 0; i < n; ++i) {
      double xi = b.edge_lengths[i] * suffix[i];
      norm2 += xi * xi;
      double fi = xi * ratio[i];
      image2 += fi * fi;
    }
    double excess = std::sqrt(image2) - std::sqrt(norm2);
    report.max_excess = std::max(report.max_excess, excess);
    if (excess > 1e-12) ++report.violations;
  }
  return report;
}

StepwiseReport stepwise_contraction_check(const SimplexTriple& triple, int sample_count,
                                          std::uint64_t seed) {
  if (triple.degenerate) throw DegenerateInputError("degenerate simplex triple");
  const int n = static_cast<int>(triple.a.size()) - 1;
  StepwiseReport report;
  report.steps = n;
  report.samples = sample_count;

  CounterRng rng(seed);
  std::vector<std::vector<double>> barycentric(sample_count);
  std::vector<double> norms(sample_count);
  for (int s = 0; s < sample_count; ++s) {
    barycentric[s] = rng.barycentric(n + 1);
    Vector x = Vector::Zero(n);
    for (int i = 0; i <= n; ++i) x += barycentric[s][i] * triple.a[i];
    norms[s] = x.norm();
  }

  std::vector<Vector> current = triple.a;
  for (int k = 1; k <= n; ++k) {
    for (int j = 0; j < k; ++j) {
      double residual = std::abs((triple.b[j] - triple.b[k]).dot(triple.a[k] - triple.b[k]));
      report.max_orthogonality_residual = std::max(report.max_orthogonality_residual, residual);
    }
    current[k] = triple.b[k];
    for (int s = 0; s < sample_count; ++s) {
      Vector x = Vector::Zero(n);
      for (int i = 0; i <= n; ++i) x += barycentric[s][i] * current[i];
      double next = x.norm();
      double increase = next - norms[s];
      if (increase > 1e-10) {
        ++report.norm_violations;
        report.max_norm_increase = std::max(report.max_norm_increase, increase);
      }
      norms[s] = next;
    }
  }
  return report;
}

CircleMoveReport circle_move_check(const SimplexTriple& triple) {
  if (triple.degenerate) throw DegenerateInputError("degenerate simplex triple");
  const int n = static_cast<int>(triple.b.size()) - 1;
  if (n < 2 || n > 3)
    throw UnsupportedDimensionError("circle move is only stated for n in {2,3}");
  CircleMoveReport report;

  const Vector& b1 = triple.b[1];
  const Vector& b2 = triple.b[2];
  if (b1.norm() < 1.0 - 1e-9) {
    report.status = CheckStatus::precondition_unmet;
    return report;
  }
  if (b2.norm() <= 1.0) {
    // |b_2| >= sqrt(2) under the hypothesis, but report instead of assuming.
    report.status = CheckStatus::no_valid_position;
    return report;
  }

  // b_1' at norm 1 on the circle with diameter b_0 b_2 (b_0 = 0), in the
  // plane of b_1 and b_2: |p|^2 = p . b_2 and |p| = 1.
  Vector u = b2.normalized();
  Vector w = b1 - b1.dot(u) * u;
  double alpha = 1.0 / b2.norm();
  Vector b1_prime;
  if (w.norm() < 1e-12) {
    b1_prime = alpha * u;  // already radial; degenerate in-plane direction
  } else {
    double gamma = std::sqrt(std::max(0.0, 1.0 - alpha * alpha));
    b1_prime = alpha * u + gamma * w.normalized();
  }

  std::vector<Vector> b_simplex = triple.b;
  std::vector<Vector> b_prime = triple.b;
  b_prime[1] = b1_prime;

  std::vector<Vector> facet(b_simplex.begin() + 1, b_simplex.end());
  std::vector<Vector> facet_prime(b_prime.begin() + 1, b_prime.end());
  report.lhs = facet_volume(facet) / solid_angle(b_simplex).value;
  report.rhs = facet_volume(facet_prime) / solid_angle(b_prime).value;
  return report;
}

ObtusePairResult obtuse_pair_bound(const std::vector<Vector>& unit_vectors) {
  const int k = static_cast<int>(unit_vectors.size()) - 1;
  if (k < 1) throw DegenerateInputError("need at least two vectors");
  for (const Vector& u : unit_vectors) {
    if (std::abs(u.norm() - 1.0) > 1e-9) throw NotUnitVectorsError("inputs must be unit vectors");
  }
  double max_dot = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < unit_vectors.size(); ++i) {
    for (std::size_t j = i + 1; j < unit_vectors.size(); ++j)
      max_dot = std::max(max_dot, unit_vectors[i].dot(unit_vectors[j]));
  }
  return {max_dot, max_dot >= -1.0 / k - 1e-12};
}

MonotonicityReport sin_ratio_monotonicity_check(double c, const std::vector<double>& t_grid) {
  MonotonicityReport report;
  report.t_values = t_grid;
  for (double t : t_grid) {
    SphericalTriangleSpec spec{t, c};
    report.ratios.push_back(spherical_triangle_area_integral(spec) / std::sin(t));
  }
  report.pass = true;
  report.min_difference = std::numeric_limits<double>::infinity();
  if (report.ratios.size() < 2) {
    report.min_difference = 0.0;
    return report;
  }
  for (std::size_t i = 1; i < report.ratios.size(); ++i) {
    double diff = report.ratios[i] - report.ratios[i - 1];
    report.min_difference = std::min(report.min_difference, diff);
    if (diff <= -1e-10) report.pass = false;
  }
  return report;
}

}  // namespace cubecert
