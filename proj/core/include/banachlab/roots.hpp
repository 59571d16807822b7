#pragma once

#include <vector>

#include "banachlab/algebra.hpp"

namespace banachlab {

struct PowerResult {
  Element value;       // element of the unital ambient of the input
  double est_error = 0.0;
  long work = 0;       // series terms or quadrature nodes
  const char* method = "";
};

// Principal power x^t, t in [0,1], by the binomial series
//   x^t = 1 - sum_{k>=1} |binom(t,k)| (1-x)^k,
// valid on F_A.  The signed coefficients for k >= 1 sum to -1, which gives a
// rigorous tail bound from the norm of the last computed power of (1-x).
PowerResult power_series(const Element& x, double t, double tol_target = 1e-9,
                         const Tolerances& tol = default_tols());

// Principal power x^alpha, alpha in (0,1), by the quadrature route
//   x^alpha = (sin(alpha*pi)/pi) * Int_0^inf t^(alpha-1) (t+x)^{-1} x dt,
// valid for accretive x.  The substitution t = e^s turns both tails into
// explicit exponentials; composite Gauss-Legendre panels are refined by
// doubling until the target is met.
PowerResult power_balakrishnan(const Element& x, double alpha,
                               double tol_target = 1e-9,
                               const Tolerances& tol = default_tols());

// Series when the input is safely inside F_A, quadrature otherwise.
PowerResult power_auto(const Element& x, double alpha, double tol_target = 1e-9,
                       const Tolerances& tol = default_tols());

// F(x) = x (1+x)^{-1} = 1 - (1+x)^{-1}.  The result lies in the algebra of x
// (the scalar part of the unitization cancels exactly).
Element f_transform(const Element& x, const Tolerances& tol = default_tols());

// y (1-y)^{-1}; inverse of the above on its range.
Element inverse_f_transform(const Element& y, const Tolerances& tol = default_tols());

struct RootDefectProfile {
  std::vector<int> ns;
  std::vector<double> defects;  // norm(x^{1/n} * x - x)
};

RootDefectProfile root_defect_profile(const Element& x, const std::vector<int>& ns,
                                      const Tolerances& tol = default_tols());

// Checks norm((a^alpha - b^alpha) c) <= K * norm((a-b) c)^alpha with the
// constant K = (sin(alpha*pi)/pi) * (4/alpha + 1/(1-alpha)), for commuting
// accretive a, b.
struct LipschitzCheck {
  double lhs = 0.0;
  double rhs = 0.0;       // norm((a-b) c)
  double K = 0.0;
  double bound = 0.0;     // K * rhs^alpha
  bool ok = false;
};

LipschitzCheck commuting_power_lipschitz_check(const Element& a, const Element& b,
                                               const Element& c, double alpha,
                                               const Tolerances& tol = default_tols());

}  // namespace banachlab
