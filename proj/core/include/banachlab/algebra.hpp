#pragma once

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "banachlab/config.hpp"
#include "banachlab/errors.hpp"

namespace banachlab {

using cplx = std::complex<double>;
using cvec = Eigen::VectorXcd;
using cmat = Eigen::MatrixXcd;
using rvec = Eigen::VectorXd;

class AlgebraSpec;
using AlgebraPtr = std::shared_ptr<const AlgebraSpec>;

enum class NormFamily { L1, OpNorm, LinfSum, Multiplier };
enum class OpDomain { L1, Linf, L2 };

// Which norm a finite-dimensional algebra carries.  One tagged record rather
// than a class hierarchy: there are only four cases and they share plumbing.
struct NormKind {
  NormFamily family = NormFamily::L1;

  // L1: optional positive weights (empty means all ones).
  rvec weights;

  // OpNorm: the algebra acts on C^m through `rep` (one matrix per basis
  // element); the norm is the operator norm on the chosen domain.  `rep`
  // must itself be an algebra homomorphism; this is checked at build time.
  OpDomain domain = OpDomain::L1;
  std::vector<cmat> rep;

  // LinfSum: the coordinates split into a left and right block, each carrying
  // its own algebra; the norm is the max of the two block norms.
  AlgebraPtr left, right;

  // Multiplier: norm of a multiplier unitization over `base`.
  AlgebraPtr base;

  static NormKind l1() { return {}; }
  static NormKind l1_weighted(rvec w);
  static NormKind opnorm(OpDomain d, std::vector<cmat> r, rvec w = {});
  static NormKind linf_sum(AlgebraPtr l, AlgebraPtr r);
  static NormKind multiplier(AlgebraPtr b);
};

class Element;

// A finite-dimensional complex algebra with a fixed basis, its structure
// constants, and a computable Banach-algebra norm.
class AlgebraSpec : public std::enable_shared_from_this<AlgebraSpec> {
 public:
  int dim() const { return dim_; }
  const std::string& label() const { return label_; }
  const NormKind& norm_kind() const { return norm_; }
  bool is_unital() const { return identity_.has_value(); }
  const cvec& identity_coeffs() const;

  // Structure tensor: mult(i)(j,k) is the e_k coefficient of e_i * e_j.
  const cmat& mult(int i) const { return mult_[i]; }

  // Left/right regular representation of a coefficient vector.
  cmat lmat(const cvec& a) const;
  cmat rmat(const cvec& b) const;
  cvec mul(const cvec& a, const cvec& b) const;
  double vec_norm(const cvec& x) const;

  Element element(cvec coeffs) const;
  Element basis(int i) const;
  Element zero() const;
  Element one() const;  // throws if not unital

  friend AlgebraPtr build_algebra(int, const std::vector<cmat>&, NormKind,
                                  std::optional<cvec>, std::string,
                                  const Tolerances&);
  friend AlgebraPtr linf_sum_algebra(AlgebraPtr, AlgebraPtr, std::string);

 private:
  AlgebraSpec() = default;
  int dim_ = 0;
  std::vector<cmat> mult_;
  std::vector<cmat> lbasis_;  // lbasis_[i] * x == coeffs of e_i * x
  NormKind norm_;
  std::optional<cvec> identity_;
  std::string label_;
};

class Element {
 public:
  Element() = default;
  Element(AlgebraPtr alg, cvec coeffs);

  const AlgebraPtr& algebra() const { return alg_; }
  const cvec& coeffs() const { return coeffs_; }
  int dim() const { return static_cast<int>(coeffs_.size()); }

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator-() const;
  Element operator*(const Element& o) const;  // algebra product
  friend Element operator*(cplx s, const Element& a);
  friend Element operator*(double s, const Element& a);

  bool same_algebra(const Element& o) const { return alg_ == o.alg_; }

 private:
  AlgebraPtr alg_;
  cvec coeffs_;
};

// Validates the structure tensor (associativity, dimensions), the norm
// (submultiplicative on basis pairs plus seeded random samples, identity of
// norm one if present) and returns an immutable spec.  If `identity_hint` is
// absent an identity is searched for; a discovered identity whose norm is not
// 1 leaves the algebra marked non-unital (the multiplier unitization is then
// the way to talk about expressions involving 1).
AlgebraPtr build_algebra(int dim, const std::vector<cmat>& mult, NormKind norm,
                         std::optional<cvec> identity_hint = std::nullopt,
                         std::string label = "",
                         const Tolerances& tol = default_tols());

double norm(const Element& a);
Element multiply(const Element& a, const Element& b);

// Multiplier unitization A^1.  Requires the left regular representation of A
// to be isometric (checked on the basis); the adjoined identity is the last
// coordinate.  For an already-unital A the norm of a + t*1 equals the norm of
// a + t*u in A, so embedding is transparent.
struct Unitization {
  AlgebraPtr base;
  AlgebraPtr full;
  Element embed(const Element& a) const;
  Element adjoin(const Element& a, cplx t) const;
  Element scalar(cplx t) const;
  cplx scalar_part(const Element& x) const;
  Element algebra_part(const Element& x) const;  // strips the last coordinate
};

Unitization unitize(AlgebraPtr a, const Tolerances& tol = default_tols());

// Unital ambient view: the algebra itself when unital, its multiplier
// unitization otherwise.  Most of the calculus is phrased inside this view.
struct UnitalView {
  AlgebraPtr ambient;
  std::optional<Unitization> unit;  // engaged iff the base was not unital
  Element to_ambient(const Element& a) const;
  Element one() const;
};

UnitalView ensure_unital(AlgebraPtr a, const Tolerances& tol = default_tols());

Element invert(const Element& a, const Tolerances& tol = default_tols());

// (lambda * 1 + a)^{-1} in the unital ambient of a.  When the caller vouches
// that a is accretive and lambda = t > 0 the classical bound
// norm((t+a)^{-1}) <= 1/t is asserted.
Element resolvent(const Element& a, cplx lambda, bool verified_accretive = false,
                  const Tolerances& tol = default_tols());

// exp(t*a) by scaling and squaring, relative accuracy ~1e-10.
Element exp_scaled(const Element& a, double t,
                   const Tolerances& tol = default_tols());

// The linf direct sum B (+) C with blockwise product and max norm.
AlgebraPtr linf_sum_algebra(AlgebraPtr left, AlgebraPtr right,
                            std::string label = "");

// Operator norm of the element as a left multiplier (used by tests and by
// the unitization checks).
double multiplier_norm(const Element& a);

// Small helpers shared across modules.
Element scalar_in(const UnitalView& v, cplx t);
double norm_one_minus(const UnitalView& v, const Element& a_ambient);

}  // namespace banachlab
