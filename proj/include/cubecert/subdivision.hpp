#pragma once

#include <cstdint>
#include <vector>

#include "cubecert/polytope.hpp"

namespace cubecert {

/// Maximal chain of faces P = F_0 > F_1 > ... > F_n, codim(F_k) = k.
struct Flag {
  std::vector<int> face_ids;
};

/// One flag's simplices: a_k is the point of F_k closest to the origin,
/// b_k the point of aff F_k closest to the origin. B is an orthoscheme.
struct SimplexTriple {
  int flag_id = 0;
  Flag flag;
  std::vector<Vector> a;
  std::vector<Vector> b;
  bool degenerate = false;
};

/// Simplex whose edge chain p_0 p_1, p_1 p_2, ... is pairwise orthogonal,
/// with p_0 = 0. edge_lengths[k-1] = |p_k - p_{k-1}|.
struct Orthoscheme {
  std::vector<Vector> vertices;
  std::vector<double> edge_lengths;

  int dim() const { return static_cast<int>(edge_lengths.size()); }
  double vertex_norm(int k) const;  // sqrt of the Pythagorean prefix sum
};

struct CoveringReport {
  double volume_gap = 0.0;      // |sum vol A - vol P|
  int uncovered_hits = 0;       // sampled points in no closed simplex
  int max_overlap_hits = 0;     // sampled points in >1 shrunk interior
  int tested_points = 0;
  bool pass(double volume_tol) const {
    return volume_gap <= volume_tol && uncovered_hits == 0 && max_overlap_hits == 0;
  }
};

/// All maximal face chains, descending the lattice one codimension at a
/// time, in deterministic (face-id lexicographic) order.
std::vector<Flag> enumerate_flags(const Polytope& p);

/// One simplex triple per flag. Degenerate flags (vol A below
/// 1e-12 * circumradius^n) are kept and marked, so the ledger stays in
/// bijection with the flags.
std::vector<SimplexTriple> build_simplices(const Polytope& p);

/// Empirical covering/non-overlap verification: compares the simplex volume
/// sum against the polytope volume and tests seeded sample points for
/// membership in exactly one simplex (closed cover, margin-shrunk interiors
/// disjoint).
CoveringReport covering_check(const Polytope& p, const std::vector<SimplexTriple>& triples,
                              int sample_count, std::uint64_t seed);

/// Vertices c_k = (1,...,1,0,...,0) with k ones; all edge lengths 1.
Orthoscheme canonical_orthoscheme(int n);

/// Re-expresses the b-simplex of a triple in the adapted orthonormal
/// coordinates where b_k = (beta_1, ..., beta_k, 0, ..., 0). Throws
/// DegenerateInputError on degenerate triples or zero edges.
Orthoscheme orthoscheme_from_b(const SimplexTriple& triple);

/// Edge-chain orthogonality test for a vertex list starting at the apex.
bool is_orthoscheme(const std::vector<Vector>& vertices, double tol = 1e-9);

}  // namespace cubecert
