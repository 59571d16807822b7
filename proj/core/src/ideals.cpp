#include "banachlab/ideals.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "banachlab/numrange.hpp"
#include "banachlab/roots.hpp"

namespace banachlab {

namespace {

cmat stack_cols(const std::vector<cvec>& cols) {
  if (cols.empty()) return cmat(0, 0);
  cmat M(cols[0].size(), cols.size());
  for (size_t j = 0; j < cols.size(); ++j) M.col(j) = cols[j];
  return M;
}

void check_commutative(const AlgebraSpec& alg) {
  for (int i = 0; i < alg.dim(); ++i)
    for (int j = i + 1; j < alg.dim(); ++j)
      if ((alg.mult(i).row(j) - alg.mult(j).row(i)).cwiseAbs().maxCoeff() > 1e-12)
        throw NotCommutative("algebra '" + alg.label() + "' is not commutative");
}

}  // namespace

cmat orthonormal_span(const std::vector<cvec>& cols, double rank_rel) {
  cmat M = stack_cols(cols);
  if (M.size() == 0) return cmat(M.rows(), 0);
  Eigen::JacobiSVD<cmat> svd(M, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv[0] == 0.0) return cmat(M.rows(), 0);
  int r = 0;
  while (r < sv.size() && sv[r] > rank_rel * sv[0]) ++r;
  return svd.matrixU().leftCols(r);
}

bool spans_equal(const cmat& a, const cmat& b, double tol) {
  if (a.rows() != b.rows()) return false;
  auto inside = [&](const cmat& v, const cmat& basis) {
    for (Eigen::Index j = 0; j < v.cols(); ++j) {
      cvec x = v.col(j);
      cvec res = x - basis * (basis.adjoint() * x);
      if (res.norm() > tol * (1.0 + x.norm())) return false;
    }
    return true;
  };
  return a.cols() == b.cols() && inside(a, b) && inside(b, a);
}

bool IdealBasis::contains(const Element& x, double tol) const {
  cvec v = x.coeffs();
  cvec res = v - basis * (basis.adjoint() * v);
  return res.norm() <= tol * (1.0 + v.norm());
}

Element IdealBasis::project(const Element& x) const {
  return alg->element(basis * (basis.adjoint() * x.coeffs()));
}

static IdealBasis ideal_impl(const std::vector<Element>& gens, IdealSide side,
                             double rank_rel) {
  if (gens.empty()) throw Error("ideal needs at least one generator");
  const AlgebraPtr alg = gens[0].algebra();
  std::vector<cvec> cols;
  for (const Element& g : gens) {
    if (g.algebra() != alg) throw AlgebraMismatch("generators from different algebras");
    cols.push_back(g.coeffs());
    for (int j = 0; j < alg->dim(); ++j) {
      cvec ej = cvec::Zero(alg->dim());
      ej[j] = 1.0;
      if (side != IdealSide::Left) cols.push_back(alg->mul(g.coeffs(), ej));
      if (side != IdealSide::Right) cols.push_back(alg->mul(ej, g.coeffs()));
    }
  }
  IdealBasis J;
  J.alg = alg;
  J.generators = gens;
  J.side = side;
  J.basis = orthonormal_span(cols, rank_rel);
  // Closure sanity check (1e-9): the span must absorb basis multiplications.
  for (Eigen::Index c = 0; c < J.basis.cols(); ++c)
    for (int j = 0; j < alg->dim(); ++j) {
      cvec ej = cvec::Zero(alg->dim());
      ej[j] = 1.0;
      auto check = [&](const cvec& prod) {
        cvec res = prod - J.basis * (J.basis.adjoint() * prod);
        if (res.norm() > 1e-9 * (1.0 + prod.norm()))
          throw Error("ideal basis is not closed under multiplication");
      };
      if (side != IdealSide::Left) check(alg->mul(J.basis.col(c), ej));
      if (side != IdealSide::Right) check(alg->mul(ej, J.basis.col(c)));
    }
  return J;
}

IdealBasis right_ideal(const std::vector<Element>& gens, double rank_rel) {
  return ideal_impl(gens, IdealSide::Right, rank_rel);
}

IdealBasis left_ideal(const std::vector<Element>& gens, double rank_rel) {
  return ideal_impl(gens, IdealSide::Left, rank_rel);
}

IdealBasis principal_right_ideal(const Element& x, double rank_rel) {
  return ideal_impl({x}, IdealSide::Right, rank_rel);
}

IdealBasis principal_left_ideal(const Element& x, double rank_rel) {
  return ideal_impl({x}, IdealSide::Left, rank_rel);
}

cmat ba_span(const Element& x, double rank_rel) {
  const AlgebraPtr alg = x.algebra();
  // Krylov-style generation: orthonormalize after every multiplication so a
  // new direction enters at unit scale. Raw powers would bury high-order
  // directions (e.g. nilpotent tails decaying like eps^k) under the rank
  // threshold even though they are genuinely independent.
  std::vector<cvec> basis;
  cvec p = x.coeffs();
  for (int k = 0; k < alg->dim(); ++k) {
    cvec r = p;
    for (const cvec& q : basis) r -= q * q.dot(r);
    for (const cvec& q : basis) r -= q * q.dot(r);  // re-orthogonalize
    if (r.norm() > rank_rel * (1.0 + p.norm())) basis.push_back(r / r.norm());
    p = alg->mul(p, x.coeffs());
    double pn = p.norm();
    if (pn > 0.0) p /= pn;  // keep iterates at unit scale
  }
  cmat out(alg->dim(), static_cast<Eigen::Index>(basis.size()));
  for (size_t i = 0; i < basis.size(); ++i) out.col(static_cast<Eigen::Index>(i)) = basis[i];
  return out;
}

// ---------------------------------------------------------------------------
// Support idempotents.

SupportIdempotent support_idempotent(const Element& x, const Tolerances& tol) {
  UnitalView v = ensure_unital(x.algebra(), tol);
  Element X = v.to_ambient(x);

  SupportIdempotent out{v.ambient->zero(), 0, 0, 0, 0, 0, 0};
  if (norm(X) == 0.0) {
    out.norm_one_minus = 0.0;  // norm(1 - 0) - 1 handled below
    out.s = x.algebra()->zero();
    return out;
  }
  if (min_re_abscissa(x, nullptr, tol) < -tol.cone)
    throw NotAccretive("support_idempotent: input is not accretive");

  // Algebraic route: r = x^{1/2}, solve x*y = r (consistent since r lies in
  // xA in finite dimensions), s = r*y.
  Element r = power_auto(X, 0.5, 1e-10, tol).value;
  cmat L = v.ambient->lmat(X.coeffs());
  Eigen::CompleteOrthogonalDecomposition<cmat> cod(L);
  cvec y = cod.solve(r.coeffs());
  Element s = r * v.ambient->element(y);

  // Limit route: x^{1/2^k} until the iterates settle.
  Element z = X;
  int steps = 0;
  for (int k = 1; k <= 40; ++k) {
    Element znew = power_auto(z, 0.5, 1e-10, tol).value;
    double d = norm(znew - z);
    z = znew;
    steps = k;
    if (d < 1e-8) break;
  }
  out.limit_steps = steps;
  out.route_gap = norm(s - z);
  if (out.route_gap > tol.route_agree)
    throw RouteDisagreement("support idempotent routes differ by " +
                            std::to_string(out.route_gap));

  out.defect_idem = norm(s * s - s);
  out.defect_left = norm(s * X - X);
  out.defect_right = norm(X * s - X);
  out.norm_one_minus = norm(v.one() - s) - 1.0;
  if (out.defect_idem > tol.idempotent_defect ||
      out.defect_left > tol.idempotent_defect ||
      out.defect_right > tol.idempotent_defect ||
      out.norm_one_minus > tol.idempotent_defect)
    throw Error("support idempotent invariants violated");

  // span(sA) = span(xA).
  if (!spans_equal(principal_right_ideal(X.algebra()->element(s.coeffs())).basis,
                   principal_right_ideal(X).basis, 1e-7))
    throw Error("support idempotent does not generate xA");

  if (v.unit) {
    cplx sc = v.unit->scalar_part(s);
    if (std::abs(sc) > 1e-6)
      throw Error("support idempotent escaped the ambient algebra");
    out.s = v.unit->algebra_part(s);
  } else {
    out.s = s;
  }
  return out;
}

Element pseudo_invert(const Element& x, const Tolerances& tol) {
  const AlgebraPtr alg = x.algebra();
  cmat M = alg->lmat(x.coeffs()) * alg->rmat(x.coeffs());
  Eigen::CompleteOrthogonalDecomposition<cmat> cod(M);
  cvec y = cod.solve(x.coeffs());
  Element Y = alg->element(y);
  double res = norm(x * Y * x - x);
  if (res > tol.factor_residual * (1.0 + norm(x)))
    throw NotPseudoInvertible("x*y*x = x has no solution (residual " +
                              std::to_string(res) + ")");
  return Y;
}

WsReport ws_equivalences_report(const Element& x, const Tolerances& tol) {
  UnitalView v = ensure_unital(x.algebra(), tol);
  Element X = v.to_ambient(x);
  WsReport rep;

  SupportIdempotent si = support_idempotent(x, tol);  // throws on failure
  rep.support_ok = true;
  Element s = v.to_ambient(si.s);

  try {
    pseudo_invert(X, tol);
    rep.pseudo_ok = true;
  } catch (const NotPseudoInvertible&) {
    rep.pseudo_ok = false;
  }

  // Invertibility inside ba(x): solve x*z = s(x) with z constrained to the
  // span of the powers of x.
  cmat K = ba_span(X);
  cmat L = v.ambient->lmat(X.coeffs());
  cmat LK = L * K;
  cvec t = LK.completeOrthogonalDecomposition().solve(s.coeffs());
  rep.invertible_in_ba = (LK * t - s.coeffs()).norm() <= 1e-8 * (1.0 + s.coeffs().norm());

  // Spectrum of L_x restricted to xA (an invariant subspace).
  IdealBasis J = principal_right_ideal(X);
  rep.rank_xA = J.rank();
  if (J.rank() > 0) {
    cmat B = J.basis;
    cmat M = B.adjoint() * L * B;
    if ((L * B - B * M).cwiseAbs().maxCoeff() > 1e-8)
      throw Error("xA is not invariant under left multiplication by x");
    Eigen::ComplexEigenSolver<cmat> es(M);
    double gap = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
      gap = std::min(gap, std::abs(es.eigenvalues()[i]));
    rep.spectral_gap = gap;
    rep.zero_ok = gap >= 1e-6;
  } else {
    rep.spectral_gap = std::numeric_limits<double>::infinity();
    rep.zero_ok = true;
  }
  rep.all_ok = rep.support_ok && rep.pseudo_ok && rep.invertible_in_ba && rep.zero_ok;
  return rep;
}

// ---------------------------------------------------------------------------
// Cohen factorization.

namespace {

CohenResult factorize_impl(const std::vector<Element>& targets,
                           const std::vector<Element>& pool, double eps,
                           bool two_sided, const Tolerances& tol) {
  if (pool.empty()) throw Error("factorize: empty pool");
  if (targets.empty()) throw Error("factorize: no targets");
  UnitalView v = ensure_unital(pool[0].algebra(), tol);
  Element one = v.one();

  std::vector<Element> F, Xs;
  for (const Element& f : pool) {
    Element fa = v.to_ambient(f);
    if (norm(one - fa) > 1.0 + tol.cone)
      throw NotInF("factorize: pool element outside F_A");
    F.push_back(fa);
  }
  IdealBasis J = two_sided ? ideal_impl(pool, IdealSide::TwoSided, 1e-10)
                           : right_ideal(pool);
  for (const Element& x : targets) {
    if (!J.contains(x, 1e-8))
      throw Error("factorize: target outside the ideal generated by the pool");
    Xs.push_back(v.to_ambient(x));
  }

  CohenResult res{one, {}, {}};
  Element z = one;             // z_n, starts at z_0 = 1
  int last_choice = 0;
  for (int n = 0; n < tol.factor_step_cap; ++n) {
    Element zinv = invert(z, tol);
    double bound = std::ldexp(eps, two_sided ? -2 * n : -n);

    int best = -1;
    double best_defect = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < F.size(); ++i) {
      double d = 0.0;
      for (const Element& x : Xs) {
        if (two_sided)
          d = std::max(d, norm((one - F[i]) * (zinv * x)) +
                              norm((x * zinv) * (one - F[i])));
        else
          d = std::max(d, norm((one - F[i]) * (zinv * x)));
      }
      if (d < best_defect) {
        best_defect = d;
        best = static_cast<int>(i);
      }
    }
    if (best_defect > bound + 1e-12)
      throw PoolExhausted("factorize: no pool element meets the step bound " +
                          std::to_string(bound) + " at step " + std::to_string(n) +
                          " (best defect " + std::to_string(best_defect) + ")");

    z = z + std::ldexp(1.0, -(n + 1)) * (F[best] - one);
    last_choice = best;

    CohenStep step;
    step.chosen = best;
    step.defect = best_defect;
    step.bound = bound;
    Element zinv_next = invert(z, tol);
    step.neumann = norm(zinv_next);
    step.one_minus_zn = norm(one - z);
    if (step.one_minus_zn > 1.0 - std::ldexp(1.0, -(n + 1)) + 1e-10)
      throw Error("factorize: contraction invariant on 1 - z_n violated");
    res.trace.steps.push_back(step);

    // Tentative finish: replace the 2^{-N} * 1 tail by 2^{-N} * f_last, which
    // keeps z inside conv(pool) and makes the residual equal to the final
    // step defect scaled by 2^{-N}.
    Element z_fin = z + std::ldexp(1.0, -(n + 1)) * (F[best] - one);
    std::vector<Element> ws;
    std::vector<double> resid, dist;
    bool ok = true;
    for (const Element& x : Xs) {
      Element w = two_sided ? Element(zinv_next * x * zinv_next) : Element(zinv_next * x);
      double r = two_sided ? norm(z_fin * w * z_fin - x) : norm(z_fin * w - x);
      double dd = norm(w - x);
      ws.push_back(w);
      resid.push_back(r);
      dist.push_back(dd);
      if (r > tol.factor_residual || dd > 2.0 * eps + 1e-9) ok = false;
    }
    if (ok) {
      res.z = z_fin;
      res.factors = std::move(ws);
      res.trace.residuals = std::move(resid);
      res.trace.factor_dist = std::move(dist);
      if (norm(one - res.z) > 1.0 + tol.cone)
        throw Error("factorize: z escaped F_A");
      (void)last_choice;
      return res;
    }
  }
  throw TolNotReached("factorize: residual target not reached within step cap");
}

}  // namespace

CohenResult cohen_factorize(const std::vector<Element>& targets,
                            const std::vector<Element>& cai_pool, double eps,
                            const Tolerances& tol) {
  return factorize_impl(targets, cai_pool, eps, false, tol);
}

CohenResult hsa_factorize(const std::vector<Element>& targets,
                          const std::vector<Element>& bai_pool, double eps,
                          const Tolerances& tol) {
  return factorize_impl(targets, bai_pool, eps, true, tol);
}

// ---------------------------------------------------------------------------
// Minimal-norm left identities.

std::optional<std::pair<Element, double>> min_norm_left_identity(
    const IdealBasis& J, const Tolerances& tol) {
  const AlgebraPtr alg = J.alg;
  const int d = alg->dim(), r = J.rank();
  if (r == 0) return std::nullopt;

  // u = B t must satisfy u * b_i = b_i for each basis column b_i.
  cmat M(static_cast<Eigen::Index>(r) * d, r);
  cvec rhs(static_cast<Eigen::Index>(r) * d);
  for (int i = 0; i < r; ++i) {
    M.middleRows(static_cast<Eigen::Index>(i) * d, d) = alg->rmat(J.basis.col(i)) * J.basis;
    rhs.segment(static_cast<Eigen::Index>(i) * d, d) = J.basis.col(i);
  }
  Eigen::JacobiSVD<cmat> svd(M, Eigen::ComputeThinU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double smax = sv.size() ? sv[0] : 0.0;
  int rank = 0;
  while (rank < sv.size() && sv[rank] > 1e-10 * std::max(1.0, smax)) ++rank;
  cvec t0 = cvec::Zero(r);
  for (int i = 0; i < rank; ++i)
    t0 += (svd.matrixU().col(i).dot(rhs) / sv[i]) * svd.matrixV().col(i);
  if ((M * t0 - rhs).norm() > 1e-9 * (1.0 + rhs.norm())) return std::nullopt;

  cmat N = svd.matrixV().rightCols(r - rank);  // kernel directions
  auto value = [&](const cvec& s) {
    return alg->vec_norm(J.basis * (t0 + N * s));
  };
  cvec s = cvec::Zero(N.cols());
  cvec best_s = s;
  double best = value(s);
  if (N.cols() > 0) {
    const double h = 1e-7;
    const double c = 0.5 * (1.0 + best);
    for (int k = 1; k <= 50000; ++k) {
      // Numerical subgradient in the 2*nullity real coordinates.
      cvec g = cvec::Zero(N.cols());
      for (Eigen::Index j = 0; j < N.cols(); ++j) {
        cvec sp = s, sm = s;
        sp[j] += h;
        sm[j] -= h;
        double dre = (value(sp) - value(sm)) / (2 * h);
        sp = s;
        sm = s;
        sp[j] += cplx(0, h);
        sm[j] -= cplx(0, h);
        double dim_ = (value(sp) - value(sm)) / (2 * h);
        g[j] = cplx(dre, dim_);
      }
      double gn = g.norm();
      if (gn < 1e-14) break;
      s -= (c / std::sqrt(static_cast<double>(k)) / gn) * g;
      double val = value(s);
      if (val < best) {
        best = val;
        best_s = s;
      }
    }
  }
  Element u = alg->element(J.basis * (t0 + N * best_s));
  (void)tol;
  return std::make_pair(u, best);
}

// ---------------------------------------------------------------------------
// Commutative joins.

Element comm_join(const Element& x, const Element& y, const Tolerances& tol) {
  const AlgebraPtr alg = x.algebra();
  check_commutative(*alg);
  UnitalView v = ensure_unital(alg, tol);
  if (norm_one_minus(v, x) > 1.0 + tol.cone || norm_one_minus(v, y) > 1.0 + tol.cone)
    throw NotInF("comm_join: inputs must lie in F_A");
  Element m = 0.5 * (x + y);
  std::vector<cvec> cols;
  for (const Element* e : {&x, &y}) {
    cols.push_back(e->coeffs());
    for (int j = 0; j < alg->dim(); ++j) {
      cvec ej = cvec::Zero(alg->dim());
      ej[j] = 1.0;
      cols.push_back(alg->mul(e->coeffs(), ej));
    }
  }
  if (!spans_equal(principal_right_ideal(m).basis, orthonormal_span(cols), 1e-9))
    throw SpanMismatch("comm_join: midpoint ideal does not match xA + yA");
  return m;
}

Element support_join(const Element& x, const Element& y, const Tolerances& tol) {
  const AlgebraPtr alg = x.algebra();
  check_commutative(*alg);
  Element sx = support_idempotent(x, tol).s;
  Element sy = support_idempotent(y, tol).s;
  Element j = sx + sy - sx * sy;

  UnitalView v = ensure_unital(alg, tol);
  if (norm(j * j - j) > tol.idempotent_defect ||
      norm(j * sx - sx) > tol.idempotent_defect ||
      norm(j * sy - sy) > tol.idempotent_defect)
    throw Error("support_join: join invariants violated");
  if (norm_one_minus(v, j) > 1.0 + tol.cone)
    throw Error("support_join: join escaped F_A");

  if (norm_one_minus(v, x) <= 1.0 + tol.cone && norm_one_minus(v, y) <= 1.0 + tol.cone) {
    Element sm = support_idempotent(comm_join(x, y, tol), tol).s;
    if (norm(sm - j) > tol.route_agree)
      throw Error("support_join: join disagrees with the midpoint support");
  }
  return j;
}

}  // namespace banachlab
