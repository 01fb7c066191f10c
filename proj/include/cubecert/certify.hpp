#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubecert/measures.hpp"
#include "cubecert/polytope.hpp"
#include "cubecert/subdivision.hpp"

namespace cubecert {

enum class HypothesisMode { vaaler, rogers };

/// Per-codim distance threshold: sqrt(k) for the cube-section hypothesis,
/// sqrt(2k/(k+1)) for the sphere-packing variant.
double distance_threshold(HypothesisMode mode, int codim);

std::string to_string(HypothesisMode mode);

struct HypothesisEntry {
  int face_id;
  int codim;
  double distance;
  double threshold;
  double margin;  // distance - threshold
};

struct HypothesisReport {
  HypothesisMode mode = HypothesisMode::vaaler;
  std::vector<HypothesisEntry> entries;
  bool pass = false;
};

enum class CertificateKind { volume, surface };

struct SimplexLedgerEntry {
  int flag_id;
  bool degenerate;
  double volume;      // vol A
  double omega;       // solid angle of A at the origin (0 for degenerate)
  double facet_area;  // (n-1)-volume of conv{a_1..a_n}; surface kind only
  double bound;       // claimed_bound * omega
  double margin;      // ledger quantity minus bound
};

/// Per-simplex ledger whose summed inequalities reproduce the theorem's
/// global bound with explicit numerical margins.
struct Certificate {
  CertificateKind kind = CertificateKind::volume;
  HypothesisMode mode = HypothesisMode::vaaler;
  int dim = 0;
  double claimed_bound = 0.0;  // 2^n or n 2^n
  double total = 0.0;          // sum of vol A, or of facet areas
  double omega_sum = 0.0;      // must be 1 within 1e-8
  bool pass = false;
  HypothesisReport hypothesis;
  std::vector<SimplexLedgerEntry> simplices;

  double min_margin() const;
  double epsilon() const { return 1e-8 * claimed_bound; }
};

/// One entry per face of codim >= 1: distance from the origin to the face's
/// affine span against the mode's threshold.
HypothesisReport check_distance_hypothesis(const Polytope& p, HypothesisMode mode);

/// Volume certificate: per non-degenerate simplex the bound 2^n omega(A)
/// against vol A, summed over the flag subdivision. Requires the vaaler
/// hypothesis (throws HypothesisFailedError).
Certificate certify_volume(const Polytope& p);

/// Surface certificate for n in {2,3}: per-simplex facet area against
/// n 2^n omega(A). Throws UnsupportedDimensionError or HypothesisFailedError.
Certificate certify_surface(const Polytope& p);

/// Surface totals without pass/fail semantics; the theorem is only stated
/// for n <= 3, so higher dimensions are exploratory.
Certificate surface_experiment(const Polytope& p, long sample_count = 200000,
                               std::uint64_t seed = 0);

enum class CheckStatus { ok, precondition_unmet, no_valid_position };

struct ContractionReport {
  CheckStatus status = CheckStatus::ok;
  int samples = 0;
  int violations = 0;
  double max_excess = 0.0;         // max of |f(x)| - |x| over samples
  double max_vertex_error = 0.0;   // max | |f(b_k)| - |c_k| |
  bool pass() const { return status == CheckStatus::ok && violations == 0; }
};

/// Checks that the vertex-interpolating map B -> C (diagonal
/// gamma_k / beta_k in adapted coordinates) contracts norms on sampled
/// interior points, given |b_k| >= |c_k| for all k.
ContractionReport orthoscheme_contraction_check(const Orthoscheme& b, const Orthoscheme& c,
                                                int sample_count, std::uint64_t seed);

struct StepwiseReport {
  int steps = 0;
  int samples = 0;
  int norm_violations = 0;         // per-step norm increases beyond 1e-10
  double max_norm_increase = 0.0;
  double max_orthogonality_residual = 0.0;  // <b_j - b_k, a_k - b_k> residuals
  bool pass() const { return norm_violations == 0 && max_orthogonality_residual <= 1e-8; }
};

/// Replays the n vertex swaps a_k -> b_k of the A -> B transformation,
/// tracking sampled points and checking per-step norm monotonicity plus the
/// orthogonality of each motion to the hyperplane through b_0..b_k.
StepwiseReport stepwise_contraction_check(const SimplexTriple& triple, int sample_count,
                                          std::uint64_t seed);

struct CircleMoveReport {
  CheckStatus status = CheckStatus::ok;
  double lhs = 0.0;  // facet area / solid angle for B
  double rhs = 0.0;  // same ratio for B'
  bool pass() const { return status == CheckStatus::ok && lhs >= rhs - 1e-8; }
};

/// Moves b_1 to the unit-norm point b_1' on the circle with diameter
/// b_0 b_2 and compares the facet-area-to-solid-angle ratios of B and B'.
/// n in {2,3} only (throws UnsupportedDimensionError).
CircleMoveReport circle_move_check(const SimplexTriple& triple);

struct ObtusePairResult {
  double max_dot;
  bool pass;
};

/// For k+1 unit vectors, max pairwise dot product against the -1/k bound.
/// Throws NotUnitVectorsError when an input is not unit length (tol 1e-9).
ObtusePairResult obtuse_pair_bound(const std::vector<Vector>& unit_vectors);

struct MonotonicityReport {
  std::vector<double> t_values;
  std::vector<double> ratios;  // area / sin t
  double min_difference = 0.0;
  bool pass = false;
};

/// Evaluates area(T(t))/sin t on an increasing grid and verifies strict
/// growth (successive differences > -1e-10).
MonotonicityReport sin_ratio_monotonicity_check(double c, const std::vector<double>& t_grid);

}  // namespace cubecert
