#pragma once

#include <optional>
#include <vector>

#include "banachlab/algebra.hpp"

namespace banachlab {

enum class IdealSide { Right, Left, TwoSided };

struct IdealBasis {
  AlgebraPtr alg;
  std::vector<Element> generators;
  cmat basis;  // orthonormal columns spanning the ideal in coefficient space
  IdealSide side = IdealSide::Right;

  int rank() const { return static_cast<int>(basis.cols()); }
  bool contains(const Element& x, double tol = 1e-9) const;
  Element project(const Element& x) const;  // Euclidean projection, utility
};

// Span of a list of coefficient vectors, orthonormalized with a relative
// rank threshold.
cmat orthonormal_span(const std::vector<cvec>& cols, double rank_rel = 1e-10);
bool spans_equal(const cmat& a, const cmat& b, double tol = 1e-9);

// Right ideal generated by a list of elements (closure under right
// multiplication by the basis).
IdealBasis right_ideal(const std::vector<Element>& gens, double rank_rel = 1e-10);
IdealBasis left_ideal(const std::vector<Element>& gens, double rank_rel = 1e-10);

// Basis of {x*a : a in A} (plus x itself when the ambient is unital).
IdealBasis principal_right_ideal(const Element& x, double rank_rel = 1e-10);
IdealBasis principal_left_ideal(const Element& x, double rank_rel = 1e-10);

// Span of {x, x^2, ..., x^dim}: the subalgebra generated by x.
cmat ba_span(const Element& x, double rank_rel = 1e-10);

struct SupportIdempotent {
  Element s;
  double route_gap = 0.0;     // algebraic vs. limit route
  int limit_steps = 0;
  double defect_idem = 0.0;   // norm(s*s - s)
  double defect_left = 0.0;   // norm(s*x - x)
  double defect_right = 0.0;  // norm(x*s - x)
  double norm_one_minus = 0.0;
};

// s(x) for accretive x: algebraic route (r = x^{1/2}, solve x*y = r,
// s = r*y), cross-checked against the limit of x^{1/2^k}.
SupportIdempotent support_idempotent(const Element& x,
                                     const Tolerances& tol = default_tols());

// Minimal-norm (Euclidean, on coefficients) solution of x*y*x = x.
Element pseudo_invert(const Element& x, const Tolerances& tol = default_tols());

struct WsReport {
  bool support_ok = false;       // s(x) exists in A with all defects small
  bool pseudo_ok = false;        // x*y*x = x solvable
  bool invertible_in_ba = false; // x has an inverse inside span{x, x^2, ...}
  bool zero_ok = false;          // 0 absent/isolated in Sp(x); gap on xA
  double spectral_gap = 0.0;     // min |eigenvalue| of L_x restricted to xA
  int rank_xA = 0;
  bool all_ok = false;
};

WsReport ws_equivalences_report(const Element& x,
                                const Tolerances& tol = default_tols());

struct CohenStep {
  int chosen = -1;        // pool index
  double defect = 0.0;    // max over targets of the step defect
  double bound = 0.0;     // 2^{-n} eps (or 2^{-2n} eps for the two-sided form)
  double neumann = 0.0;   // norm(z_n^{-1})
  double one_minus_zn = 0.0;
};

struct CohenTrace {
  std::vector<CohenStep> steps;
  std::vector<double> residuals;       // per target, norm(z*w - x)
  std::vector<double> factor_dist;     // per target, norm(w - x)
};

struct CohenResult {
  Element z;
  std::vector<Element> factors;
  CohenTrace trace;
};

// Cohen-style factorization: given a pool inside J intersect F_A acting as
// approximate left identities on the targets, produce z in J intersect F_A
// and factors w with z*w = x.  Greedy pool selection, deterministic
// tie-break by index.
CohenResult cohen_factorize(const std::vector<Element>& targets,
                            const std::vector<Element>& cai_pool, double eps,
                            const Tolerances& tol = default_tols());

// Two-sided variant: z*w*z = target with the tighter step bound 2^{-2n} eps.
CohenResult hsa_factorize(const std::vector<Element>& targets,
                          const std::vector<Element>& bai_pool, double eps,
                          const Tolerances& tol = default_tols());

// Best-effort minimal ambient norm of a left identity for J inside J;
// nullopt when the defining linear system is inconsistent (no left identity
// exists at all).
std::optional<std::pair<Element, double>> min_norm_left_identity(
    const IdealBasis& J, const Tolerances& tol = default_tols());

// (x+y)/2 generates the joined ideal span(xA + yA) in a commutative algebra.
Element comm_join(const Element& x, const Element& y,
                  const Tolerances& tol = default_tols());

// s(x) + s(y) - s(x) s(y).
Element support_join(const Element& x, const Element& y,
                     const Tolerances& tol = default_tols());

}  // namespace banachlab
