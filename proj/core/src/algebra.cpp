#include "banachlab/algebra.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace banachlab {

namespace {

std::string fmt_idx(int i, int j) {
  std::ostringstream os;
  os << "(" << i << "," << j << ")";
  return os.str();
}

// Largest singular value by power iteration on M^H M.
double sv_max(const cmat& M, const Tolerances& tol) {
  if (M.size() == 0) return 0.0;
  const cmat B = M.adjoint() * M;
  if (B.norm() == 0.0) return 0.0;
  cvec v = cvec::Ones(B.rows());
  v.normalize();
  double prev = -1.0;
  for (int it = 0; it < tol.power_iter_cap; ++it) {
    cvec w = B * v;
    double lam = w.norm();
    if (lam == 0.0) return 0.0;
    v = w / lam;
    double s = std::sqrt(lam);
    if (prev >= 0.0 && std::abs(s - prev) <= tol.power_iter_rel * s) return s;
    prev = s;
  }
  throw PowerIterationStalled("power iteration for the l2 operator norm stalled");
}

double op_matnorm(const cmat& M, OpDomain d, const rvec& w, const Tolerances& tol) {
  const auto n = M.rows();
  auto weight = [&](Eigen::Index i) { return w.size() ? w[i] : 1.0; };
  switch (d) {
    case OpDomain::L1: {
      double best = 0.0;
      for (Eigen::Index j = 0; j < M.cols(); ++j) {
        double s = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) s += weight(i) * std::abs(M(i, j));
        best = std::max(best, s / weight(j));
      }
      return best;
    }
    case OpDomain::Linf: {
      double best = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        double s = 0.0;
        for (Eigen::Index j = 0; j < M.cols(); ++j) s += std::abs(M(i, j));
        best = std::max(best, s);
      }
      return best;
    }
    case OpDomain::L2:
      return sv_max(M, tol);
  }
  return 0.0;
}

}  // namespace

NormKind NormKind::l1_weighted(rvec w) {
  NormKind k;
  k.family = NormFamily::L1;
  k.weights = std::move(w);
  return k;
}

NormKind NormKind::opnorm(OpDomain d, std::vector<cmat> r, rvec w) {
  NormKind k;
  k.family = NormFamily::OpNorm;
  k.domain = d;
  k.rep = std::move(r);
  k.weights = std::move(w);
  return k;
}

NormKind NormKind::linf_sum(AlgebraPtr l, AlgebraPtr r) {
  NormKind k;
  k.family = NormFamily::LinfSum;
  k.left = std::move(l);
  k.right = std::move(r);
  return k;
}

NormKind NormKind::multiplier(AlgebraPtr b) {
  NormKind k;
  k.family = NormFamily::Multiplier;
  k.base = std::move(b);
  return k;
}

const cvec& AlgebraSpec::identity_coeffs() const {
  if (!identity_) throw Error("algebra '" + label_ + "' has no norm-one identity");
  return *identity_;
}

cmat AlgebraSpec::lmat(const cvec& a) const {
  cmat L = cmat::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    if (a[i] != cplx(0, 0)) L += a[i] * lbasis_[i];
  return L;
}

cmat AlgebraSpec::rmat(const cvec& b) const {
  // (x*b)_k = sum_{i,j} x_i b_j m_i(j,k); column i of R is mult_[i]^T b.
  cmat R(dim_, dim_);
  for (int i = 0; i < dim_; ++i) R.col(i) = mult_[i].transpose() * b;
  return R;
}

cvec AlgebraSpec::mul(const cvec& a, const cvec& b) const {
  cvec out = cvec::Zero(dim_);
  for (int i = 0; i < dim_; ++i)
    if (a[i] != cplx(0, 0)) out += a[i] * (lbasis_[i] * b);
  return out;
}

double AlgebraSpec::vec_norm(const cvec& x) const {
  if (x.size() != dim_) throw InconsistentDimensions("coefficient vector size mismatch");
  const Tolerances& tol = default_tols();
  switch (norm_.family) {
    case NormFamily::L1: {
      double s = 0.0;
      for (int i = 0; i < dim_; ++i)
        s += (norm_.weights.size() ? norm_.weights[i] : 1.0) * std::abs(x[i]);
      return s;
    }
    case NormFamily::OpNorm: {
      cmat M = cmat::Zero(norm_.rep[0].rows(), norm_.rep[0].cols());
      for (int i = 0; i < dim_; ++i)
        if (x[i] != cplx(0, 0)) M += x[i] * norm_.rep[i];
      return op_matnorm(M, norm_.domain, norm_.weights, tol);
    }
    case NormFamily::LinfSum: {
      const int dl = norm_.left->dim();
      return std::max(norm_.left->vec_norm(x.head(dl)),
                      norm_.right->vec_norm(x.tail(dim_ - dl)));
    }
    case NormFamily::Multiplier: {
      const AlgebraSpec& base = *norm_.base;
      const int d = base.dim();
      const cvec a = x.head(d);
      const cplx t = x[d];
      if (base.is_unital())
        return base.vec_norm(a + t * base.identity_coeffs());
      switch (base.norm_kind().family) {
        case NormFamily::L1: {
          double best = 0.0;
          for (int j = 0; j < d; ++j) {
            cvec ej = cvec::Zero(d);
            ej[j] = 1.0;
            double wj = base.norm_kind().weights.size() ? base.norm_kind().weights[j] : 1.0;
            best = std::max(best, base.vec_norm(base.mul(a, ej) + t * ej) / wj);
          }
          return best;
        }
        case NormFamily::OpNorm: {
          cmat M = cmat::Zero(base.norm_kind().rep[0].rows(),
                              base.norm_kind().rep[0].cols());
          for (int i = 0; i < d; ++i)
            if (a[i] != cplx(0, 0)) M += a[i] * base.norm_kind().rep[i];
          M += t * cmat::Identity(M.rows(), M.cols());
          return op_matnorm(M, base.norm_kind().domain, base.norm_kind().weights, tol);
        }
        default:
          throw UnsupportedNormKind(
              "multiplier norm over this base norm is not implemented");
      }
    }
  }
  throw UnsupportedNormKind("unknown norm family");
}

Element AlgebraSpec::element(cvec coeffs) const {
  if (coeffs.size() != dim_) throw InconsistentDimensions("element size mismatch");
  return Element(shared_from_this(), std::move(coeffs));
}

Element AlgebraSpec::basis(int i) const {
  cvec e = cvec::Zero(dim_);
  e[i] = 1.0;
  return element(std::move(e));
}

Element AlgebraSpec::zero() const { return element(cvec::Zero(dim_)); }

Element AlgebraSpec::one() const { return element(identity_coeffs()); }

Element::Element(AlgebraPtr alg, cvec coeffs)
    : alg_(std::move(alg)), coeffs_(std::move(coeffs)) {
  if (!alg_) throw Error("element without algebra");
  if (coeffs_.size() != alg_->dim())
    throw InconsistentDimensions("element size mismatch");
}

static void require_same(const Element& a, const Element& b) {
  if (a.algebra() != b.algebra())
    throw AlgebraMismatch("elements belong to different algebras");
}

Element Element::operator+(const Element& o) const {
  require_same(*this, o);
  return Element(alg_, coeffs_ + o.coeffs_);
}

Element Element::operator-(const Element& o) const {
  require_same(*this, o);
  return Element(alg_, coeffs_ - o.coeffs_);
}

Element Element::operator-() const { return Element(alg_, -coeffs_); }

Element Element::operator*(const Element& o) const {
  require_same(*this, o);
  return Element(alg_, alg_->mul(coeffs_, o.coeffs_));
}

Element operator*(cplx s, const Element& a) {
  return Element(a.algebra(), s * a.coeffs());
}

Element operator*(double s, const Element& a) { return cplx(s, 0) * a; }

double norm(const Element& a) { return a.algebra()->vec_norm(a.coeffs()); }

Element multiply(const Element& a, const Element& b) { return a * b; }

AlgebraPtr build_algebra(int dim, const std::vector<cmat>& mult, NormKind norm,
                         std::optional<cvec> identity_hint, std::string label,
                         const Tolerances& tol) {
  if (dim <= 0 || dim > 64)
    throw InconsistentDimensions("dimension must be in 1..64");
  if (static_cast<int>(mult.size()) != dim)
    throw InconsistentDimensions("structure tensor has wrong outer size");
  for (const auto& m : mult)
    if (m.rows() != dim || m.cols() != dim)
      throw InconsistentDimensions("structure tensor slice has wrong shape");
  switch (norm.family) {
    case NormFamily::L1:
      if (norm.weights.size() && norm.weights.size() != dim)
        throw InconsistentDimensions("L1 weight vector has wrong size");
      if (norm.weights.size() && norm.weights.minCoeff() <= 0.0)
        throw InconsistentDimensions("L1 weights must be positive");
      break;
    case NormFamily::OpNorm:
      if (static_cast<int>(norm.rep.size()) != dim)
        throw InconsistentDimensions("representation has wrong number of matrices");
      break;
    case NormFamily::LinfSum:
      if (!norm.left || !norm.right || norm.left->dim() + norm.right->dim() != dim)
        throw InconsistentDimensions("linf_sum blocks do not add up");
      break;
    case NormFamily::Multiplier:
      if (!norm.base || norm.base->dim() + 1 != dim)
        throw InconsistentDimensions("multiplier base has wrong dimension");
      break;
  }

  auto spec = std::shared_ptr<AlgebraSpec>(new AlgebraSpec());
  spec->dim_ = dim;
  spec->mult_ = mult;
  spec->lbasis_.resize(dim);
  for (int i = 0; i < dim; ++i) spec->lbasis_[i] = mult[i].transpose();
  spec->norm_ = std::move(norm);
  spec->label_ = std::move(label);

  // Associativity on all basis triples.
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const cvec eij = mult[i].row(j).transpose();
      for (int k = 0; k < dim; ++k) {
        cvec lhs = cvec::Zero(dim);
        for (int l = 0; l < dim; ++l)
          if (eij[l] != cplx(0, 0)) lhs += eij[l] * mult[l].row(k).transpose();
        const cvec rhs = spec->lbasis_[i] * mult[j].row(k).transpose();
        if ((lhs - rhs).cwiseAbs().maxCoeff() > tol.structure)
          throw NotAssociative("associativity fails at basis triple " + fmt_idx(i, j) +
                               "," + std::to_string(k) + " in '" + spec->label_ + "'");
      }
    }

  // If the norm is an operator norm, the representation must be a
  // homomorphism for the same structure constants.
  if (spec->norm_.family == NormFamily::OpNorm) {
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        cmat want = cmat::Zero(spec->norm_.rep[0].rows(), spec->norm_.rep[0].cols());
        for (int k = 0; k < dim; ++k)
          if (mult[i](j, k) != cplx(0, 0)) want += mult[i](j, k) * spec->norm_.rep[k];
        if ((spec->norm_.rep[i] * spec->norm_.rep[j] - want).cwiseAbs().maxCoeff() >
            tol.structure)
          throw NotSubmultiplicative("operator representation is not multiplicative at " +
                                     fmt_idx(i, j));
      }
  }

  // Submultiplicativity: all basis pairs plus seeded random unit-ball pairs.
  {
    std::mt19937_64 rng(0x5EED ^ static_cast<unsigned long long>(dim));
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto rand_unit = [&]() {
      cvec v(dim);
      for (int i = 0; i < dim; ++i) v[i] = cplx(gauss(rng), gauss(rng));
      double n = spec->vec_norm(v);
      if (n == 0.0) v[0] = 1.0, n = spec->vec_norm(v);
      return cvec(v / n);
    };
    auto check_pair = [&](const cvec& a, const cvec& b, const char* what) {
      double lhs = spec->vec_norm(spec->mul(a, b));
      double rhs = spec->vec_norm(a) * spec->vec_norm(b);
      if (lhs > rhs + tol.submult_slack * (1.0 + rhs))
        throw NotSubmultiplicative(std::string("norm is not submultiplicative (") +
                                   what + ") in '" + spec->label_ + "'");
    };
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        cvec ei = cvec::Zero(dim), ej = cvec::Zero(dim);
        ei[i] = 1.0;
        ej[j] = 1.0;
        check_pair(ei, ej, "basis pair");
      }
    for (int s = 0; s < 50; ++s) check_pair(rand_unit(), rand_unit(), "sampled pair");
  }

  // Identity: honour the hint, otherwise search.  A discovered identity whose
  // norm is not 1 leaves the algebra non-unital for the purposes of the
  // real-positivity calculus.
  cvec u;
  bool have_u = false;
  if (identity_hint) {
    u = *identity_hint;
    have_u = true;
  } else {
    // Solve u * e_j = e_j and e_j * u = e_j for all j in the least-squares sense.
    cmat A(2 * dim * dim, dim);
    cvec b(2 * dim * dim);
    for (int j = 0; j < dim; ++j) {
      cvec ej = cvec::Zero(dim);
      ej[j] = 1.0;
      A.middleRows(j * dim, dim) = spec->rmat(ej);       // u * e_j
      A.middleRows((dim + j) * dim, dim) = spec->lbasis_[j];  // e_j * u
      b.segment(j * dim, dim) = ej;
      b.segment((dim + j) * dim, dim) = ej;
    }
    cvec cand = A.colPivHouseholderQr().solve(b);
    if ((A * cand - b).cwiseAbs().maxCoeff() < 1e-10) {
      u = cand;
      have_u = true;
    }
  }
  if (have_u) {
    for (int j = 0; j < dim; ++j) {
      cvec ej = cvec::Zero(dim);
      ej[j] = 1.0;
      if ((spec->mul(u, ej) - ej).cwiseAbs().maxCoeff() > 1e-10 ||
          (spec->mul(ej, u) - ej).cwiseAbs().maxCoeff() > 1e-10) {
        if (identity_hint)
          throw InconsistentDimensions("identity hint is not an identity");
        have_u = false;
        break;
      }
    }
  }
  if (have_u) {
    double nu = spec->vec_norm(u);
    if (std::abs(nu - 1.0) <= tol.identity_norm) {
      spec->identity_ = u;
    } else if (identity_hint) {
      throw NotSubmultiplicative("identity hint does not have norm one");
    }
    // else: identity exists but has norm != 1; treat the algebra as
    // non-unital so the multiplier unitization supplies the unit.
  }
  return spec;
}

// ---------------------------------------------------------------------------
// Unitization.

Element Unitization::embed(const Element& a) const {
  if (a.algebra() != base) throw AlgebraMismatch("embed: wrong base algebra");
  cvec x = cvec::Zero(full->dim());
  x.head(base->dim()) = a.coeffs();
  return full->element(std::move(x));
}

Element Unitization::adjoin(const Element& a, cplx t) const {
  cvec x = cvec::Zero(full->dim());
  x.head(base->dim()) = a.coeffs();
  x[base->dim()] = t;
  return full->element(std::move(x));
}

Element Unitization::scalar(cplx t) const {
  cvec x = cvec::Zero(full->dim());
  x[base->dim()] = t;
  return full->element(std::move(x));
}

cplx Unitization::scalar_part(const Element& x) const {
  return x.coeffs()[base->dim()];
}

Element Unitization::algebra_part(const Element& x) const {
  return base->element(x.coeffs().head(base->dim()));
}

double multiplier_norm(const Element& a) {
  const AlgebraSpec& alg = *a.algebra();
  const NormKind& nk = alg.norm_kind();
  switch (nk.family) {
    case NormFamily::L1: {
      double best = 0.0;
      for (int j = 0; j < alg.dim(); ++j) {
        cvec ej = cvec::Zero(alg.dim());
        ej[j] = 1.0;
        double wj = nk.weights.size() ? nk.weights[j] : 1.0;
        best = std::max(best, alg.vec_norm(alg.mul(a.coeffs(), ej)) / wj);
      }
      return best;
    }
    case NormFamily::OpNorm:
      return norm(a);  // the norm is already an operator norm via rep
    case NormFamily::LinfSum: {
      const int dl = nk.left->dim();
      Element l = nk.left->element(a.coeffs().head(dl));
      Element r = nk.right->element(a.coeffs().tail(alg.dim() - dl));
      return std::max(multiplier_norm(l), multiplier_norm(r));
    }
    default:
      throw UnsupportedNormKind("multiplier norm not available for this norm kind");
  }
}

Unitization unitize(AlgebraPtr a, const Tolerances& tol) {
  const int d = a->dim();
  // The multiplier norm only extends the norm of A isometrically when the
  // left regular representation is isometric; check it on the basis.
  if (!a->is_unital()) {
    for (int i = 0; i < d; ++i) {
      Element ei = a->basis(i);
      if (std::abs(multiplier_norm(ei) - norm(ei)) > 1e-9 * (1.0 + norm(ei)))
        throw NotIsometricRegularRep(
            "left regular representation is not isometric; multiplier "
            "unitization would not extend the norm");
    }
  }

  std::vector<cmat> mult(d + 1, cmat::Zero(d + 1, d + 1));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) mult[i](j, k) = a->mult(i)(j, k);
  for (int i = 0; i < d; ++i) {
    mult[i](d, i) = 1.0;  // e_i * 1 = e_i
    mult[d](i, i) = 1.0;  // 1 * e_i = e_i
  }
  mult[d](d, d) = 1.0;

  cvec unit = cvec::Zero(d + 1);
  unit[d] = 1.0;
  Unitization u;
  u.base = a;
  u.full = build_algebra(d + 1, mult, NormKind::multiplier(a), unit,
                         a->label() + "^1", tol);
  return u;
}

UnitalView ensure_unital(AlgebraPtr a, const Tolerances& tol) {
  UnitalView v;
  if (a->is_unital()) {
    v.ambient = a;
  } else {
    v.unit = unitize(a, tol);
    v.ambient = v.unit->full;
  }
  return v;
}

Element UnitalView::to_ambient(const Element& a) const {
  if (!unit) {
    if (a.algebra() != ambient) throw AlgebraMismatch("element not in ambient algebra");
    return a;
  }
  if (a.algebra() == ambient) return a;
  return unit->embed(a);
}

Element UnitalView::one() const { return ambient->one(); }

Element scalar_in(const UnitalView& v, cplx t) { return t * v.one(); }

double norm_one_minus(const UnitalView& v, const Element& a) {
  return norm(v.one() - v.to_ambient(a));
}

// ---------------------------------------------------------------------------
// Inversion, resolvents, exponentials.

Element invert(const Element& a, const Tolerances& tol) {
  const AlgebraSpec& alg = *a.algebra();
  if (!alg.is_unital())
    throw Error("invert requires a unital algebra; embed into the unitization first");
  cmat L = alg.lmat(a.coeffs());
  Eigen::PartialPivLU<cmat> lu(L);
  if (!(lu.rcond() > tol.rank_rel))
    throw Singular("element is singular (rcond below threshold)");
  cvec y = lu.solve(alg.identity_coeffs());
  Element inv = alg.element(y);
  Element e1 = a * inv - alg.one();
  Element e2 = inv * a - alg.one();
  double scale = 1.0 + norm(a) * norm(inv);
  if (norm(e1) > tol.invert_verify * scale || norm(e2) > tol.invert_verify * scale)
    throw Singular("inverse verification failed");
  return inv;
}

Element resolvent(const Element& a, cplx lambda, bool verified_accretive,
                  const Tolerances& tol) {
  UnitalView v = ensure_unital(a.algebra(), tol);
  Element x = v.to_ambient(a);
  Element r = invert(lambda * v.one() + x, tol);
  if (verified_accretive && lambda.imag() == 0.0 && lambda.real() > 0.0) {
    if (norm(r) > 1.0 / lambda.real() + 1e-9)
      throw NormTooLarge("resolvent of an accretive element exceeded 1/t");
  }
  return r;
}

Element exp_scaled(const Element& a, double t, const Tolerances& tol) {
  UnitalView v = ensure_unital(a.algebra(), tol);
  Element x = t * v.to_ambient(a);
  double nx = norm(x);
  int s = 0;
  while (nx > 0.5) {
    nx /= 2.0;
    ++s;
  }
  Element y = v.one();
  Element term = v.one();
  Element xs = std::pow(0.5, s) * x;
  for (int k = 1; k < 80; ++k) {
    term = (1.0 / k) * (term * xs);
    y = y + term;
    if (norm(term) < 1e-18 * (1.0 + norm(y))) break;
  }
  for (int i = 0; i < s; ++i) y = y * y;
  return y;
}

// ---------------------------------------------------------------------------
// linf direct sums.

AlgebraPtr linf_sum_algebra(AlgebraPtr left, AlgebraPtr right, std::string label) {
  const int dl = left->dim(), dr = right->dim(), d = dl + dr;
  std::vector<cmat> mult(d, cmat::Zero(d, d));
  for (int i = 0; i < dl; ++i)
    for (int j = 0; j < dl; ++j)
      for (int k = 0; k < dl; ++k) mult[i](j, k) = left->mult(i)(j, k);
  for (int i = 0; i < dr; ++i)
    for (int j = 0; j < dr; ++j)
      for (int k = 0; k < dr; ++k) mult[dl + i](dl + j, dl + k) = right->mult(i)(j, k);
  std::optional<cvec> unit;
  if (left->is_unital() && right->is_unital()) {
    cvec u = cvec::Zero(d);
    u.head(dl) = left->identity_coeffs();
    u.tail(dr) = right->identity_coeffs();
    unit = u;
  }
  if (label.empty()) label = left->label() + " (+)inf " + right->label();
  return build_algebra(d, mult, NormKind::linf_sum(left, right), unit,
                       std::move(label));
}

}  // namespace banachlab
