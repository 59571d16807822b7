#pragma once

namespace banachlab {

// Every numeric threshold used by the library lives here so a caller can
// tighten or relax the whole stack at once.  Individual entry points take a
// `const Tolerances&` defaulting to `default_tols()`.
struct Tolerances {
  // Structure-constant checks at build time.
  double structure = 1e-12;        // associativity defect
  double identity_norm = 1e-12;    // |norm(identity) - 1|
  double submult_slack = 1e-9;     // allowed slack in sampled submultiplicativity

  // Dense linear algebra.
  double rank_rel = 1e-12;         // relative rank threshold (LU / QR pivots)
  double invert_verify = 1e-10;    // residual of a*inv(a) - 1
  double power_iter_rel = 1e-10;   // relative change stop for the l2 operator norm
  int power_iter_cap = 20000;

  // Cone membership and numerical ranges.
  double cone = 1e-7;              // slack on norm conditions for cone membership
  double abscissa = 1e-5;          // convergence demand on the abscissa extrapolation
  double state_face = 1e-8;        // face property of sampled states

  // Fractional powers.
  double power_tol = 1e-9;         // default truncation/quadrature error target
  long series_cap = 1000000;       // hard cap on series terms
  int quad_refine_cap = 6;         // panel-doubling rounds for the quadrature route

  // Support idempotents and factorization.
  double route_agree = 1e-6;       // algebraic vs. limit route for support idempotents
  double idempotent_defect = 1e-7; // allowed defect in s*s - s etc.
  double factor_residual = 1e-9;   // ||z*w - x|| demanded from factorization
  int factor_step_cap = 80;

  // M-ideals and lifting.
  double mproperty = 1e-9;         // sampled max-norm identity
  double central = 1e-10;          // centrality defect of the support idempotent
  double interior_margin = 1e-4;   // demanded interiority of the lift base point
  double lift_norm = 1e-6;         // |norm(lift) - quotient norm|
};

inline const Tolerances& default_tols() {
  static const Tolerances t{};
  return t;
}

}  // namespace banachlab
