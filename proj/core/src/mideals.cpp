#include "banachlab/mideals.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace banachlab {

namespace {
constexpr double kPi = std::numbers::pi;

void verify_mideal(const MIdealIdeal& J, const Tolerances& tol) {
  const AlgebraSpec& alg = *J.alg;
  const int d = alg.dim();
  if ((J.P * J.P - J.P).cwiseAbs().maxCoeff() > 1e-12)
    throw MPropertyViolated("support projection is not idempotent");

  const cvec zc = J.z.coeffs();
  for (int i = 0; i < d; ++i) {
    cvec ei = cvec::Zero(d);
    ei[i] = 1.0;
    if ((alg.mul(zc, ei) - alg.mul(ei, zc)).cwiseAbs().maxCoeff() > tol.central)
      throw MPropertyViolated("support idempotent is not central");
  }
  if (alg.vec_norm(alg.mul(zc, zc) - zc) > 1e-10)
    throw SupportNotIdempotent("support element is not idempotent");
  double nz = alg.vec_norm(zc);
  if (nz > 1e-10 && std::abs(nz - 1.0) > 1e-9)
    throw MPropertyViolated("support idempotent has norm outside {0,1}");
  if (alg.is_unital() &&
      alg.vec_norm(alg.identity_coeffs() - zc) > 1.0 + tol.cone)
    throw MPropertyViolated("support idempotent escaped F_A");

  // Sampled M-property.
  std::mt19937_64 rng(0x5EED);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int s = 0; s < 500; ++s) {
    cvec x(d);
    for (int i = 0; i < d; ++i) x[i] = cplx(gauss(rng), gauss(rng));
    double full = alg.vec_norm(x);
    double split = std::max(alg.vec_norm(J.P * x), alg.vec_norm(x - J.P * x));
    if (std::abs(full - split) > tol.mproperty * (1.0 + full))
      throw MPropertyViolated("sampled max-norm identity fails");
  }
}

MIdealIdeal make_mideal(const Element& z, bool exact, const Tolerances& tol) {
  MIdealIdeal J;
  J.alg = z.algebra();
  J.P = J.alg->lmat(z.coeffs());
  J.z = z;
  J.exact_quotient = exact;
  std::vector<cvec> cols;
  for (int i = 0; i < J.alg->dim(); ++i) cols.push_back(J.P.col(i));
  J.ideal_basis.alg = J.alg;
  J.ideal_basis.generators = {z};
  J.ideal_basis.side = IdealSide::TwoSided;
  J.ideal_basis.basis = orthonormal_span(cols, 1e-10);
  verify_mideal(J, tol);
  return J;
}

}  // namespace

Element MIdealIdeal::apply(const Element& x) const {
  if (x.algebra() != alg) throw AlgebraMismatch("element not in the ideal's algebra");
  return alg->element(P * x.coeffs());
}

Element MIdealIdeal::complement(const Element& x) const {
  if (x.algebra() != alg) throw AlgebraMismatch("element not in the ideal's algebra");
  return alg->element(x.coeffs() - P * x.coeffs());
}

double MIdealIdeal::qnorm(const Element& x) const {
  return norm(complement(x));
}

MIdealIdeal mideal_from_central_idempotent(const Element& z, const Tolerances& tol) {
  return make_mideal(z, false, tol);
}

std::pair<AlgebraPtr, MIdealIdeal> linf_sum(AlgebraPtr left, AlgebraPtr right,
                                            const Tolerances& tol) {
  if (!left->is_unital())
    throw Error("linf_sum ideal needs a unital left block");
  AlgebraPtr sum = linf_sum_algebra(left, right);
  cvec zc = cvec::Zero(sum->dim());
  zc.head(left->dim()) = left->identity_coeffs();
  MIdealIdeal J = make_mideal(sum->element(zc), true, tol);
  return {sum, J};
}

MIdealIdeal mideal_meet(const MIdealIdeal& a, const MIdealIdeal& b,
                        const Tolerances& tol) {
  if (a.alg != b.alg) throw AlgebraMismatch("meet of ideals over different algebras");
  MIdealIdeal out = make_mideal(a.z * b.z, a.exact_quotient && b.exact_quotient, tol);
  // Span of the meet must equal the intersection of the spans.
  const cmat &B1 = a.ideal_basis.basis, &B2 = b.ideal_basis.basis;
  cmat T = B1 - B2 * (B2.adjoint() * B1);
  Eigen::JacobiSVD<cmat> svd(T, Eigen::ComputeFullV);
  std::vector<cvec> inter;
  const auto& sv = svd.singularValues();
  for (Eigen::Index i = 0; i < B1.cols(); ++i) {
    double s = i < sv.size() ? sv[i] : 0.0;
    if (s <= 1e-9) inter.push_back(B1 * svd.matrixV().col(i));
  }
  cmat I = inter.empty() ? cmat(B1.rows(), 0) : orthonormal_span(inter, 1e-10);
  if (!spans_equal(out.ideal_basis.basis, I, 1e-8))
    throw SupportNotIdempotent("meet span does not match intersection of spans");
  return out;
}

MIdealIdeal mideal_join(const std::vector<MIdealIdeal>& ideals,
                        const Tolerances& tol) {
  if (ideals.empty()) throw Error("join of an empty family");
  MIdealIdeal out = ideals[0];
  for (size_t i = 1; i < ideals.size(); ++i) {
    const MIdealIdeal& b = ideals[i];
    if (out.alg != b.alg) throw AlgebraMismatch("join of ideals over different algebras");
    Element zj = out.z + b.z - out.z * b.z;
    bool exact = out.exact_quotient && b.exact_quotient;
    std::vector<cvec> cols;
    for (Eigen::Index c = 0; c < out.ideal_basis.basis.cols(); ++c)
      cols.push_back(out.ideal_basis.basis.col(c));
    for (Eigen::Index c = 0; c < b.ideal_basis.basis.cols(); ++c)
      cols.push_back(b.ideal_basis.basis.col(c));
    MIdealIdeal j = make_mideal(zj, exact, tol);
    if (!spans_equal(j.ideal_basis.basis, orthonormal_span(cols, 1e-10), 1e-8))
      throw SupportNotIdempotent("join span does not match sum of spans");
    out = std::move(j);
  }
  return out;
}

QuotientElement quotient_element(const Element& x, const MIdealIdeal& J) {
  return {x, &J, J.qnorm(x)};
}

double quotient_norm_minimized(const Element& x, const MIdealIdeal& J,
                               int iterations) {
  const cmat& B = J.ideal_basis.basis;
  if (B.cols() == 0) return norm(x);
  auto value = [&](const cvec& t) {
    return J.alg->vec_norm(x.coeffs() - B * t);
  };
  cvec t = cvec::Zero(B.cols());
  double best = value(t);
  cvec best_t = t;
  const double h = 1e-7, c = 0.5 * (1.0 + best);
  for (int k = 1; k <= iterations; ++k) {
    cvec g = cvec::Zero(B.cols());
    for (Eigen::Index j = 0; j < B.cols(); ++j) {
      cvec tp = t, tm = t;
      tp[j] += h;
      tm[j] -= h;
      double dre = (value(tp) - value(tm)) / (2 * h);
      tp = t;
      tm = t;
      tp[j] += cplx(0, h);
      tm[j] -= cplx(0, h);
      double dim_ = (value(tp) - value(tm)) / (2 * h);
      g[j] = cplx(dre, dim_);
    }
    double gn = g.norm();
    if (gn < 1e-14) break;
    t -= (c / std::sqrt(static_cast<double>(k)) / gn) * g;
    double val = value(t);
    if (val < best) {
      best = val;
      best_t = t;
    }
  }
  return best;
}

NumericalRangeEstimate quotient_numrange(const Element& x, const MIdealIdeal& J,
                                         int rings, int ring_angles, int directions,
                                         const Tolerances& tol) {
  (void)tol;
  const AlgebraPtr& alg = J.alg;
  if (!alg->is_unital()) throw Error("quotient_numrange needs a unital ambient");
  Element one = alg->one();
  // The translation-equivariant grid center must be computed modulo the
  // ideal: project both x and 1 onto the complement before the inner
  // product, or the ideal block drags the center off the quotient body.
  const cvec uq = J.complement(one).coeffs();
  cplx c = uq.dot(J.complement(x).coeffs()) / uq.dot(uq).real();
  double radius = 3.0 * J.qnorm(x - c * one);
  auto dist = [&](cplx lam) { return J.qnorm(x - lam * one); };
  NumericalRangeEstimate est;
  est.outer = williams_outer_fn(dist, c, radius, rings, ring_angles, directions);
  return est;
}

// ---------------------------------------------------------------------------
// Lifts.

namespace {

void require_interior(const OuterBody& body, cplx alpha, double margin) {
  if (body.min_width() < 1e-6)
    throw EmptyInterior("quotient numerical range has empty interior");
  for (int k = 0; k < body.directions; ++k) {
    double th = body.theta(k);
    cplx uk(std::cos(th), std::sin(th));
    if ((alpha * std::conj(uk)).real() > body.h[k] - margin)
      throw AlphaNotInterior("alpha is not interior to the quotient range");
  }
}

// Williams support refined along one direction: probe lambda = mid - t u for
// a geometric ladder of t. Every probe point is a valid Williams witness, so
// this only tightens the outer bound; for a flat (segment) body it recovers
// the support to ~1e-7 where the default ring grid leaves a sagitta of about
// one sixth of the segment length.
template <typename Dist>
double refined_support(const Dist& dist, cplx mid, cplx u) {
  double best = (mid * std::conj(u)).real() + dist(mid);
  for (double t = 1e-3; t <= 1e8; t *= 2.0) {
    cplx lam = mid - t * u;
    best = std::min(best, (lam * std::conj(u)).real() + dist(lam));
  }
  return best;
}

OuterBody outer_on_grid(const Element& x, const OuterBody& grid) {
  const AlgebraPtr& alg = x.algebra();
  Element one = alg->one();
  auto dist = [&](cplx lam) { return norm(x - lam * one); };
  return williams_outer_fn(dist, grid.center, grid.radius, grid.rings,
                           grid.ring_angles, grid.directions);
}

}  // namespace

LiftTrace cssw_lift_traced(const Element& x, const MIdealIdeal& J, cplx alpha,
                           LiftMode mode, const Tolerances& tol) {
  const AlgebraPtr& alg = J.alg;
  if (!alg->is_unital()) throw Error("cssw_lift needs a unital ambient");
  Element one = alg->one();
  NumericalRangeEstimate qe = quotient_numrange(x, J, 8, 16, 360, tol);
  require_interior(qe.outer, alpha, tol.interior_margin);

  Element v = x - J.apply(x - alpha * one);
  LiftTrace out{v, {}};

  if (mode == LiftMode::Iterative) {
    Element xn = x;
    const int N = 20;
    for (int n = 0; n < N; ++n) {
      xn = xn - std::ldexp(1.0, -n) * J.apply(xn - alpha * one);
      double eps = std::ldexp(1.0, -(n + 1));
      // W(x_{n+1}) must sit inside N(C, alpha, eps) = alpha + (1+eps)(C - alpha).
      OuterBody wb = outer_on_grid(xn, qe.outer);
      double worst = 0.0;
      for (int k = 0; k < wb.directions; ++k) {
        double th = wb.theta(k);
        cplx uk(std::cos(th), std::sin(th));
        double ha = (alpha * std::conj(uk)).real();
        double hN = ha + (1.0 + eps) * (qe.outer.h[k] - ha);
        worst = std::max(worst, wb.h[k] - hN);
      }
      out.containment_slack.push_back(worst);
      if (worst > 1e-6)
        throw Error("cssw_lift: iterate escaped the dilated quotient body");
    }
    if (norm(xn - v) > 1e-7)
      throw Error("cssw_lift: iteration disagrees with the closed form");
    out.v = v;
  }

  // Theorem postconditions for the closed form.
  double qn = J.qnorm(x);
  if (std::abs(norm(v) - qn) > 1e-8 * (1.0 + qn))
    throw Error("cssw_lift: norm of the lift differs from the quotient norm");
  if ((v.coeffs() - x.coeffs() - J.P * (v.coeffs() - x.coeffs())).cwiseAbs().maxCoeff() >
      1e-12)
    throw Error("cssw_lift: lift left the coset of x");
  OuterBody wv = outer_on_grid(v, qe.outer);
  for (int k = 0; k < wv.directions; ++k)
    if (wv.h[k] > qe.outer.h[k] + 1e-6)
      throw Error("cssw_lift: numerical range of the lift escaped the quotient body");
  return out;
}

Element cssw_lift(const Element& x, const MIdealIdeal& J, cplx alpha,
                  LiftMode mode, const Tolerances& tol) {
  return cssw_lift_traced(x, J, alpha, mode, tol).v;
}

Element segment_lift(const Element& x, const MIdealIdeal& J, double eps_tri,
                     const Tolerances& tol) {
  const AlgebraPtr& alg = J.alg;
  Element one = alg->one();
  NumericalRangeEstimate qe = quotient_numrange(x, J, 8, 16, 360, tol);
  const OuterBody& body = qe.outer;

  if (body.max_width() < 1e-6) {
    // Point case: Q(x) = mu * Q(1).
    cplx mu = support_centroid(body);
    Element a = mu * one;
    if (J.qnorm(x - a) > 1e-6 * (1.0 + J.qnorm(x)))
      throw Error("segment_lift: quotient is not the expected scalar");
    return a;
  }
  // The ring grid cannot pinch a flat body below its sagitta, so classify
  // thinness with directionally refined supports instead of raw widths.
  auto dist = [&](cplx lam) { return J.qnorm(x - lam * one); };
  cplx mid0 = support_centroid(body);
  int kmin = 0;
  double wmin = std::numeric_limits<double>::infinity();
  double wmax = 0.0;
  for (int k = 0; k < body.directions / 2; ++k) {
    double thk = body.theta(k);
    cplx uk(std::cos(thk), std::sin(thk));
    double w = refined_support(dist, mid0, uk) + refined_support(dist, mid0, -uk);
    if (w < wmin) { wmin = w; kmin = k; }
    wmax = std::max(wmax, w);
  }
  if (wmin >= 1e-6)
    throw Error("segment_lift: quotient range has interior; use cssw_lift");

  double th = body.theta(kmin);
  cplx normal(std::cos(th), std::sin(th));
  // Canonical offset sign: to the right, or upward when vertical.
  if (normal.real() < -1e-12 ||
      (std::abs(normal.real()) <= 1e-12 && normal.imag() < 0.0))
    normal = -normal;
  cplx mid = mid0;
  double seglen = wmax;

  double eps = eps_tri;
  for (int attempt = 0; attempt < 10; ++attempt, eps /= 2.0) {
    cplx apex = mid + eps * std::max(seglen, 0.1) * normal;

    // Embed into A (+)inf C; the ideal keeps its support in the A block.
    std::vector<cmat> smult{cmat::Ones(1, 1)};
    AlgebraPtr scalars =
        build_algebra(1, smult, NormKind::l1(), cvec::Ones(1), "C");
    AlgebraPtr big = linf_sum_algebra(alg, scalars);
    cvec zb = cvec::Zero(big->dim());
    zb.head(alg->dim()) = J.z.coeffs();
    MIdealIdeal Jb = mideal_from_central_idempotent(big->element(zb), tol);

    cvec xb = cvec::Zero(big->dim());
    xb.head(alg->dim()) = x.coeffs();
    xb[alg->dim()] = apex;
    Element Xb = big->element(xb);

    NumericalRangeEstimate tri = quotient_numrange(Xb, Jb, 8, 16, 360, tol);
    cplx alpha = support_centroid(tri.outer);
    Element vb;
    try {
      vb = cssw_lift(Xb, Jb, alpha, LiftMode::ClosedForm, tol);
    } catch (const AlphaNotInterior&) {
      continue;  // triangle too thin for the margin; retry with smaller eps
    }
    Element a = alg->element(vb.coeffs().head(alg->dim()));
    if (std::abs(norm(a) - J.qnorm(x)) <= tol.lift_norm * (1.0 + J.qnorm(x))) {
      // W(a) must stay inside the declared triangle conv(K, apex). Both
      // sides need refined supports: raw grid bodies carry sagitta fuzz that
      // would make the comparison meaningless at this scale. The segment's
      // endpoints are reconstructed from its refined extents.
      cplx dir = cplx(0.0, 1.0) * normal;
      double dp = refined_support(dist, mid0, dir);
      double dm = refined_support(dist, mid0, -dir);
      double n0 = 0.5 * (refined_support(dist, mid0, normal) -
                         refined_support(dist, mid0, -normal));
      cplx pend = dp * dir + n0 * normal;
      cplx qend = -dm * dir + n0 * normal;
      auto dist_a = [&](cplx lam) { return norm(a - lam * one); };
      for (int k = 0; k < body.directions; ++k) {
        double t2 = body.theta(k);
        cplx uk(std::cos(t2), std::sin(t2));
        double htri = std::max({(pend * std::conj(uk)).real(),
                                (qend * std::conj(uk)).real(),
                                (apex * std::conj(uk)).real()});
        if (refined_support(dist_a, mid, uk) > htri + 1e-5)
          throw Error("segment_lift: lift escaped the thin triangle");
      }
      return a;
    }
  }
  throw Error("segment_lift: norm preservation failed for all apex offsets");
}

Element real_positive_lift(const Element& x, const MIdealIdeal& J,
                           const Tolerances& tol) {
  const AlgebraPtr& alg = J.alg;
  Element one = alg->one();
  auto g = [&](double t) { return J.qnorm(one - t * x); };
  double err = 0.0;
  double min_re_q = abscissa_from_norm(g, &err, tol);
  if (min_re_q < -1e-8)
    throw NotQuotientRealPositive("quotient numerical range crosses Re < 0");

  NumericalRangeEstimate qe = quotient_numrange(x, J, 8, 16, 360, tol);
  if (qe.outer.min_width() < 1e-6) return segment_lift(x, J, 0.05, tol);

  cplx alpha = support_centroid(qe.outer);
  if (alpha.real() <= 0.0) alpha = cplx(1e-6, alpha.imag());
  Element v = cssw_lift(x, J, alpha, LiftMode::ClosedForm, tol);
  if (min_re_abscissa(v, nullptr, tol) < -1e-6)
    throw Error("real_positive_lift: lift failed to be accretive");
  return v;
}

}  // namespace banachlab
