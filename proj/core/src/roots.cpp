#include "banachlab/roots.hpp"

#include <cmath>
#include <numbers>

#include "banachlab/numrange.hpp"

namespace banachlab {

namespace {
constexpr double kPi = std::numbers::pi;

// 12-point Gauss-Legendre rule on [-1, 1].
constexpr int kGL = 12;
constexpr double kGLx[kGL / 2] = {0.1252334085114689, 0.3678314989981802,
                                  0.5873179542866175, 0.7699026741943047,
                                  0.9041172563704749, 0.9815606342467192};
constexpr double kGLw[kGL / 2] = {0.2491470458134028, 0.2334925365383548,
                                  0.2031674267230659, 0.1600783285433462,
                                  0.1069393259953184, 0.0471753363865118};

}  // namespace

PowerResult power_series(const Element& x, double t, double tol_target,
                         const Tolerances& tol) {
  if (t < 0.0 || t > 1.0) throw Error("power_series: exponent must be in [0,1]");
  UnitalView v = ensure_unital(x.algebra(), tol);
  Element X = v.to_ambient(x);
  Element one = v.one();
  Element y = one - X;
  double q = norm(y);
  if (q > 1.0 + tol.cone)
    throw NotInF("power_series: norm(1 - x) exceeds 1");

  if (t == 0.0) return {one, 0.0, 0, "series"};
  if (t == 1.0) return {X, 0.0, 1, "series"};

  // m_k = |binom(t, k)|; the m_k are positive and sum to 1 over k >= 1.
  double m = t;
  double mass_rem = 1.0 - t;
  Element powk = y;
  Element S = one - t * y;
  long k = 1;
  double tail = mass_rem * std::min(1.0, norm(powk));
  while (tail >= tol_target) {
    if (++k > tol.series_cap)
      throw TolNotReached("power_series: term cap reached before tolerance");
    powk = powk * y;
    m *= (k - 1 - t) / k;
    mass_rem -= m;
    S = S - m * powk;
    // norm((1-x)^j) <= norm((1-x)^k) for j >= k while norm(1-x) <= 1.
    tail = std::max(0.0, mass_rem) * norm(powk);
  }
  return {S, tail, k, "series"};
}

PowerResult power_balakrishnan(const Element& x, double alpha, double tol_target,
                               const Tolerances& tol) {
  if (alpha <= 0.0 || alpha >= 1.0)
    throw Error("power_balakrishnan: exponent must be in (0,1)");
  UnitalView v = ensure_unital(x.algebra(), tol);
  Element X = v.to_ambient(x);
  const double nx = norm(X);
  if (nx == 0.0) return {0.0 * v.one(), 0.0, 0, "quadrature"};
  if (min_re_abscissa(x, nullptr, tol) < -tol.cone)
    throw NotAccretive("power_balakrishnan: input is not accretive");

  // Work with x/norm(x); scale back by norm(x)^alpha at the end.
  Element Xs = (1.0 / nx) * X;
  const AlgebraSpec& amb = *v.ambient;
  const cmat L = amb.lmat(Xs.coeffs());
  const cvec xc = Xs.coeffs();

  // Resolvent oracle z(s) = (e^s + x)^{-1} x via one eigendecomposition when
  // it reconstructs L accurately, dense LU per node otherwise.
  Eigen::ComplexEigenSolver<cmat> es(L);
  bool diag_ok = es.info() == Eigen::Success;
  cmat V, Vinv;
  cvec D, wreduced;
  if (diag_ok) {
    V = es.eigenvectors();
    D = es.eigenvalues();
    Eigen::PartialPivLU<cmat> lu(V);
    if (lu.rcond() > 1e-10) {
      Vinv = lu.inverse();
      diag_ok = (V * D.asDiagonal() * Vinv - L).cwiseAbs().maxCoeff() <=
                1e-11 * (1.0 + L.cwiseAbs().maxCoeff());
      // Applying lambda -> lambda/(e^s + lambda) to the identity's
      // coefficients keeps kernel sectors exactly zero; feeding x's own
      // coefficients instead would divide their numerical noise by e^s.
      if (diag_ok) {
        wreduced = Vinv * v.one().coeffs();
        // Eigenvalues below solver resolution are kernel noise. Left as-is,
        // a noise value with negative real part puts a pole of
        // lambda/(e^s + lambda) inside the integration interval.
        const double snap = 64.0 * std::numeric_limits<double>::epsilon() *
                            std::max(1.0, L.cwiseAbs().maxCoeff());
        for (Eigen::Index i = 0; i < D.size(); ++i)
          if (std::abs(D[i]) <= snap) D[i] = 0.0;
      }
    } else {
      diag_ok = false;
    }
  }
  auto resolvent_x = [&](double s) -> cvec {
    double es_ = std::exp(s);
    if (diag_ok) {
      cvec scaled(wreduced.size());
      for (Eigen::Index i = 0; i < scaled.size(); ++i)
        scaled[i] = wreduced[i] * D[i] / (es_ + D[i]);
      return V * scaled;
    }
    // Solve against the identity's coefficients and multiply by L last so
    // kernel-direction noise is damped by L instead of amplified by e^{-s}.
    cmat M = L + es_ * cmat::Identity(L.rows(), L.cols());
    return L * M.partialPivLu().solve(v.one().coeffs());
  };

  const double sa = std::sin(alpha * kPi);
  const double tail_tol = tol_target / 4.0;
  // Tail bounds: norm((t+x)^{-1} x) <= 2 on the left, norm(x)/t on the right.
  const double S1 =
      std::max(1.0, std::log(8.0 * sa / (kPi * alpha * tail_tol)) / alpha);
  const double S2 =
      std::max(1.0, std::log(4.0 * sa / (kPi * (1.0 - alpha) * tail_tol)) /
                        (1.0 - alpha));

  auto integrate = [&](int panels) -> cvec {
    cvec acc = cvec::Zero(xc.size());
    const double a = -S1, b = S2, hw = (b - a) / panels / 2.0;
    long nodes = 0;
    for (int p = 0; p < panels; ++p) {
      double mid = a + (2 * p + 1) * hw;
      for (int i = 0; i < kGL / 2; ++i) {
        for (double sgn : {-1.0, 1.0}) {
          double s = mid + sgn * hw * kGLx[i];
          acc += (kGLw[i] * hw * std::exp(alpha * s)) * resolvent_x(s);
          ++nodes;
        }
      }
    }
    (void)nodes;
    return acc;
  };

  int panels = std::max(8, static_cast<int>(std::ceil((S1 + S2) / 2.0)));
  cvec I = integrate(panels);
  double diff = std::numeric_limits<double>::infinity();
  for (int round = 0; round < tol.quad_refine_cap; ++round) {
    cvec I2 = integrate(panels * 2);
    diff = amb.vec_norm((I2 - I) * (sa / kPi));
    I = I2;
    panels *= 2;
    if (diff < tol_target / 2.0) break;
  }
  if (!(diff < tol_target / 2.0))
    throw TolNotReached("power_balakrishnan: panel refinement stalled");

  Element out = std::pow(nx, alpha) * amb.element((sa / kPi) * I);
  return {out, diff + 2.0 * tail_tol, panels * kGL, "quadrature"};
}

PowerResult power_auto(const Element& x, double alpha, double tol_target,
                       const Tolerances& tol) {
  if (alpha == 1.0) {
    UnitalView v = ensure_unital(x.algebra(), tol);
    return {v.to_ambient(x), 0.0, 0, "exact"};
  }
  UnitalView v = ensure_unital(x.algebra(), tol);
  double q = norm(v.one() - v.to_ambient(x));
  if (q <= 0.999) return power_series(x, alpha, tol_target, tol);
  return power_balakrishnan(x, alpha, tol_target, tol);
}

Element f_transform(const Element& x, const Tolerances& tol) {
  UnitalView v = ensure_unital(x.algebra(), tol);
  Element X = v.to_ambient(x);
  Element y = X * invert(v.one() + X, tol);
  if (v.unit) {
    // x * (1+x)^{-1} stays in the ideal A of A^1; the adjoined coordinate is
    // exactly zero by the structure constants.
    return v.unit->algebra_part(y);
  }
  return y;
}

Element inverse_f_transform(const Element& y, const Tolerances& tol) {
  UnitalView v = ensure_unital(y.algebra(), tol);
  Element Y = v.to_ambient(y);
  Element x = Y * invert(v.one() - Y, tol);
  if (v.unit) return v.unit->algebra_part(x);
  return x;
}

RootDefectProfile root_defect_profile(const Element& x, const std::vector<int>& ns,
                                      const Tolerances& tol) {
  UnitalView v = ensure_unital(x.algebra(), tol);
  Element X = v.to_ambient(x);
  RootDefectProfile out;
  out.ns = ns;
  for (int n : ns) {
    PowerResult r = power_auto(x, 1.0 / n, tol.power_tol, tol);
    out.defects.push_back(norm(r.value * X - X));
  }
  return out;
}

LipschitzCheck commuting_power_lipschitz_check(const Element& a, const Element& b,
                                               const Element& c, double alpha,
                                               const Tolerances& tol) {
  double scale = 1.0 + norm(a) * norm(b);
  if (norm(a * b - b * a) > 1e-10 * scale)
    throw NotCommuting("commuting_power_lipschitz_check: a and b do not commute");
  PowerResult pa = power_auto(a, alpha, tol.power_tol, tol);
  PowerResult pb = power_auto(b, alpha, tol.power_tol, tol);
  UnitalView v = ensure_unital(a.algebra(), tol);
  Element C = v.to_ambient(c);
  LipschitzCheck chk;
  chk.lhs = norm((pa.value - pb.value) * C);
  chk.rhs = norm((v.to_ambient(a) - v.to_ambient(b)) * C);
  chk.K = std::sin(alpha * kPi) / kPi * (4.0 / alpha + 1.0 / (1.0 - alpha));
  chk.bound = chk.K * std::pow(chk.rhs, alpha);
  chk.ok = chk.lhs <= chk.bound + 1e-6;
  return chk;
}

}  // namespace banachlab
