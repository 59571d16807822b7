#pragma once

#include <utility>
#include <vector>

#include "banachlab/algebra.hpp"
#include "banachlab/ideals.hpp"
#include "banachlab/numrange.hpp"

namespace banachlab {

// An ideal that is also an M-ideal, represented by its support projection
// P = left multiplication by the central idempotent z = P(1).  Only explicit
// constructions are accepted (linf sums and verified central idempotents);
// the M-property is sampled at build time.
struct MIdealIdeal {
  AlgebraPtr alg;
  cmat P;                 // dense projection on coefficient space
  Element z;              // P(1)
  IdealBasis ideal_basis; // range(P)
  bool exact_quotient = false;  // built from an linf_sum split

  Element apply(const Element& x) const;         // P x
  Element complement(const Element& x) const;    // x - P x
  double qnorm(const Element& x) const;          // norm(x - P x)
};

// Wraps left multiplication by a central idempotent and verifies all
// MIdealIdeal invariants (P^2 = P, sampled M-property, centrality, z in F_A).
MIdealIdeal mideal_from_central_idempotent(const Element& z,
                                           const Tolerances& tol = default_tols());

// B (+)inf C together with the M-ideal ideal B (+) 0.
std::pair<AlgebraPtr, MIdealIdeal> linf_sum(AlgebraPtr left, AlgebraPtr right,
                                            const Tolerances& tol = default_tols());

MIdealIdeal mideal_meet(const MIdealIdeal& a, const MIdealIdeal& b,
                        const Tolerances& tol = default_tols());
MIdealIdeal mideal_join(const std::vector<MIdealIdeal>& ideals,
                        const Tolerances& tol = default_tols());

struct QuotientElement {
  Element representative;
  const MIdealIdeal* ideal = nullptr;
  double qnorm = 0.0;  // norm((I - P) representative)
};

QuotientElement quotient_element(const Element& x, const MIdealIdeal& J);

// dist(x, J) by projected subgradient over the ideal span; cross-checks the
// closed-form quotient norm in tests.
double quotient_norm_minimized(const Element& x, const MIdealIdeal& J,
                               int iterations = 20000);

// Williams outer body in the quotient norm; same grid contract as
// numrange_outer.
NumericalRangeEstimate quotient_numrange(const Element& x, const MIdealIdeal& J,
                                         int rings = 8, int ring_angles = 16,
                                         int directions = 360,
                                         const Tolerances& tol = default_tols());

enum class LiftMode { ClosedForm, Iterative };

struct LiftTrace {
  Element v;
  // Worst violation of W(x_n) inside the dilated body N(C, alpha, 2^{-n}),
  // one entry per iteration (iterative mode only).
  std::vector<double> containment_slack;
};

// Norm-preserving lift through an M-ideal: v = x - P(x - alpha*1) for an
// alpha strictly interior to the quotient numerical range.
Element cssw_lift(const Element& x, const MIdealIdeal& J, cplx alpha,
                  LiftMode mode = LiftMode::ClosedForm,
                  const Tolerances& tol = default_tols());
LiftTrace cssw_lift_traced(const Element& x, const MIdealIdeal& J, cplx alpha,
                           LiftMode mode, const Tolerances& tol = default_tols());

// Lift when the quotient range is a point or a segment: embed into
// A (+)inf C, fatten the segment into a thin triangle with apex offset
// eps_tri, lift there and project back.
Element segment_lift(const Element& x, const MIdealIdeal& J,
                     double eps_tri = 0.05,
                     const Tolerances& tol = default_tols());

// Accretive lift of a quotient-real-positive element, preserving the norm
// and hitting the same coset exactly.
Element real_positive_lift(const Element& x, const MIdealIdeal& J,
                           const Tolerances& tol = default_tols());

}  // namespace banachlab
