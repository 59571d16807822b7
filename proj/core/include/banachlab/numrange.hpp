#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "banachlab/algebra.hpp"

namespace banachlab {

// Convex outer body described by support-function samples on uniformly
// spaced directions theta_k = 2*pi*k/directions.  The body is the
// intersection of the half-planes Re(z * conj(u_k)) <= h[k].
struct OuterBody {
  std::vector<double> h;
  int directions = 0;
  // Grid metadata: the lambda grid was center + rings up to `radius`.
  cplx center;
  double radius = 0.0;
  int rings = 0;
  int ring_angles = 0;

  double support(int k) const { return h[k]; }
  double theta(int k) const;
  double min_re() const;   // smallest real part of the body
  double width(int k) const;  // h[k] + h[k + N/2]
  double min_width() const;
  double max_width() const;   // diameter proxy
};

// Intersection-of-disks outer estimate for a numerical range, given the
// distance function lambda -> norm(x - lambda*1).  The lambda grid is
// {center} together with `rings` concentric rings of `ring_angles` points up
// to `radius`; doubling either count refines the grid monotonically.
OuterBody williams_outer_fn(const std::function<double(cplx)>& dist, cplx center,
                            double radius, int rings = 8, int ring_angles = 16,
                            int directions = 360);

std::vector<cplx> support_vertices(const OuterBody& body);
cplx support_centroid(const OuterBody& body);

struct NumericalRangeEstimate {
  OuterBody outer;
  std::vector<cplx> inner;     // state values; empty if no state family applies
  bool has_inner = false;
  double hausdorff_gap = 0.0;  // sup-distance of support functions, if inner present
};

// Outer estimate of the numerical range of `a` (computed in the unital
// ambient of its algebra).
NumericalRangeEstimate numrange_outer(const Element& a, int rings = 8,
                                      int ring_angles = 16, int directions = 360,
                                      const Tolerances& tol = default_tols());

// True whether a closed-form state family is available for this algebra:
// an (optionally weighted) l1 norm whose identity is a basis vector, or an
// linf sum of two supported algebras.
bool has_state_family(const AlgebraPtr& alg);

// Sampled states as dual coefficient vectors f (phi(x) = sum f_i x_i):
// deterministic extreme combinations plus `n_random` seeded samples.
std::vector<cvec> sample_states(const AlgebraPtr& alg, int n_random = 400,
                                std::uint64_t seed = 0x5EED);

// Fills est.inner with state values phi(a) and est.hausdorff_gap with the
// support-function gap between the inner hull and the outer body.  Throws
// UnsupportedStateFamily when no family applies.
void numrange_inner(NumericalRangeEstimate& est, const Element& a,
                    int n_random = 400, std::uint64_t seed = 0x5EED);

// min Re of the numerical range through the one-sided derivative of
// t -> g(t) = norm(1 - t*a) at 0+, evaluated at t = 2^-k and Richardson
// extrapolated.  `g` is exposed so quotient norms can reuse the routine.
double abscissa_from_norm(const std::function<double(double)>& g,
                          double* err_out = nullptr,
                          const Tolerances& tol = default_tols());

double min_re_abscissa(const Element& a, double* err_out = nullptr,
                       const Tolerances& tol = default_tols());

struct ConeReport {
  bool in_F = false;        // norm(1 - a) <= 1
  bool in_half_F = false;   // norm(1 - 2a) <= 1
  bool accretive = false;   // numerical range in the closed right half-plane
  double norm_one_minus = 0.0;
  double norm_one_minus_two = 0.0;
  double min_re = 0.0;
  double min_re_err = 0.0;
  double t_sweep_margin = 0.0;  // min over t of 1 + t^2 norm(a)^2 - norm(1 - t a)
};

ConeReport cone_report(const Element& a, const Tolerances& tol = default_tols());

// a preceq b iff b - a is accretive.
bool preceq(const Element& a, const Element& b,
            const Tolerances& tol = default_tols());

// For unital A and norm(x) < 1: x = a - b with both halves in (1/2)F_A.
std::pair<Element, Element> decompose_unital(const Element& x,
                                             const Tolerances& tol = default_tols());

}  // namespace banachlab
