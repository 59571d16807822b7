#pragma once

#include <string>
#include <vector>

#include "banachlab/algebra.hpp"

namespace banachlab::gallery {

// --- model algebras -------------------------------------------------------

// Convolution algebra of the cyclic group Z_n with the l1 norm.
AlgebraPtr l1_cyclic(int n);

// l1 algebra of the commutative semigroup {1, a, b, c} with
// a^2 = a, b^2 = b, c^2 = c and every mixed product equal to c.
AlgebraPtr l1_semigroup4();

// C^n with the pointwise product and the l1 norm.  The discovered
// identity (1, ..., 1) has norm n, so for n > 1 the algebra is treated
// as non-unital and gains its identity through the multiplier
// unitization.
AlgebraPtr pointwise_l1(int n);

// Truncated convolution algebra on {0, ..., k-1}: e_i e_j = e_{i+j}
// when i + j < k and 0 otherwise, with the l1 norm.
AlgebraPtr truncated_conv(int k);

// Lower-triangular 2x2 matrices, basis (E11, E21, E22), operator norm
// induced by the l1 norm on C^2.
AlgebraPtr lower_triangular2();

// One-dimensional scalar algebra.
AlgebraPtr scalars();

// --- regression gallery ----------------------------------------------------

struct ClaimResult {
  std::string id;
  std::string description;
  bool pass = false;
  double value = 0.0;      // the quantity that was measured
  double threshold = 0.0;  // what it was compared against
  double margin = 0.0;     // distance from the decision boundary
  double tolerance = 0.0;  // numerical tolerance of the computation
  std::string detail;
};

struct CaseResult {
  std::string id;
  std::string title;
  std::vector<ClaimResult> claims;
  std::vector<std::string> notes;
  bool pass = true;
};

struct GalleryReport {
  std::vector<CaseResult> cases;
  bool all_pass = true;
};

// Runs every case whose id contains `filter` (all cases when empty).
// Deterministic: fixed seed, fixed grids, no wall-clock input.
GalleryReport run_gallery(const std::string& filter = "");

// Canonical JSON rendering of a report; byte-identical across runs.
std::string report_json(const GalleryReport& report);

}  // namespace banachlab::gallery
