#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "banachlab/algebra.hpp"
#include "banachlab/gallery.hpp"
#include "banachlab/random.hpp"

using namespace banachlab;

namespace {

// Oracle: discrete Fourier characters of the cyclic convolution algebra.
// chi_j(e_k) = omega^{jk} diagonalizes l1(Z_n); inversion goes through the
// pointwise inverse of the character values.
cvec dft_values(const cvec& x, int n) {
  cvec v = cvec::Zero(n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      v[j] += x[k] * std::polar(1.0, 2.0 * M_PI * j * k / n);
  return v;
}

cvec idft_coeffs(const cvec& v, int n) {
  cvec x = cvec::Zero(n);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      x[k] += v[j] * std::polar(1.0, -2.0 * M_PI * j * k / n) / double(n);
  return x;
}

}  // namespace

TEST_CASE("oracle: DFT diagonalizes cyclic convolution") {
  AlgebraPtr A = gallery::l1_cyclic(5);
  std::mt19937_64 rng(0x5EED);
  for (int trial = 0; trial < 10; ++trial) {
    Element a = random_ball(A, 1.0, rng), b = random_ball(A, 1.0, rng);
    cvec lhs = dft_values((a * b).coeffs(), 5);
    cvec rhs = dft_values(a.coeffs(), 5).cwiseProduct(dft_values(b.coeffs(), 5));
    CHECK((lhs - rhs).norm() < 1e-12);
  }
}

TEST_CASE("structure validation") {
  SUBCASE("non-associative tensor is rejected") {
    // left-zero-ish table: (e0 e1) e0 = 0 but e0 (e1 e0) = e0
    std::vector<cmat> mult(2, cmat::Zero(2, 2));
    mult[0](0, 0) = 1;  // e0 e0 = e0
    mult[1](1, 1) = 1;  // e1 e1 = e1
    mult[1](0, 0) = 1;  // e1 e0 = e0
    CHECK_THROWS_AS(build_algebra(2, mult, NormKind::l1()), NotAssociative);
  }
  SUBCASE("bad weights break submultiplicativity") {
    std::vector<cmat> mult(2, cmat::Zero(2, 2));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) mult[i](j, (i + j) % 2) = 1.0;
    rvec w(2);
    w << 1.0, 0.1;  // norm(e1)^2 = 0.01 < 1 = norm(e1 e1)
    CHECK_THROWS_AS(build_algebra(2, mult, NormKind::l1_weighted(w)),
                    NotSubmultiplicative);
  }
  SUBCASE("identity discovery") {
    CHECK(gallery::l1_cyclic(3)->is_unital());
    CHECK(gallery::lower_triangular2()->is_unital());
    // pointwise identity (1,1,1) has l1 norm 3: treated as non-unital
    CHECK_FALSE(gallery::pointwise_l1(3)->is_unital());
  }
  SUBCASE("wrong identity hint is rejected") {
    std::vector<cmat> mult(2, cmat::Zero(2, 2));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) mult[i](j, (i + j) % 2) = 1.0;
    cvec bad(2);
    bad << 0.0, 1.0;
    CHECK_THROWS(build_algebra(2, mult, NormKind::l1(), bad));
  }
}

TEST_CASE("norms") {
  SUBCASE("l1") {
    AlgebraPtr A = gallery::l1_cyclic(3);
    cvec x(3);
    x << cplx(3, 4), cplx(0, -2), cplx(1, 0);
    CHECK(A->vec_norm(x) == doctest::Approx(5 + 2 + 1));
  }
  SUBCASE("operator norm, l1 domain, equals max column sum") {
    AlgebraPtr A = gallery::lower_triangular2();
    cvec x(3);
    x << cplx(1, 0), cplx(-2, 0), cplx(0.5, 0);  // [[1,0],[-2,0.5]]
    CHECK(norm(A->element(x)) == doctest::Approx(3.0));
  }
  SUBCASE("linf sum takes the max of block norms") {
    AlgebraPtr S = linf_sum_algebra(gallery::l1_cyclic(2), gallery::scalars());
    cvec x(3);
    x << cplx(0.5, 0), cplx(0.25, 0), cplx(2, 0);
    CHECK(norm(S->element(x)) == doctest::Approx(2.0));
    CHECK(S->is_unital());
    CHECK(norm(S->one()) == doctest::Approx(1.0));
  }
}

TEST_CASE("multiplier unitization") {
  SUBCASE("pointwise l1: norm of a + t 1 is the max coordinate modulus") {
    AlgebraPtr A = gallery::pointwise_l1(3);
    Unitization U = unitize(A);
    cvec a(3);
    a << cplx(1, 0), cplx(0.5, 0), cplx(0, 0);
    Element x = U.adjoin(A->element(a), cplx(-0.25, 0.0));
    CHECK(norm(x) == doctest::Approx(0.75));  // max |a_j - 0.25|
    CHECK(U.full->is_unital());
    CHECK(norm(U.full->one()) == doctest::Approx(1.0));
  }
  SUBCASE("unital base embeds isometrically and transparently") {
    AlgebraPtr A = gallery::l1_cyclic(2);
    Unitization U = unitize(A);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
      Element a = random_ball(A, 2.0, rng);
      CHECK(norm(U.embed(a)) == doctest::Approx(norm(a)));
      Element ap1 = U.adjoin(a, 0.7);
      CHECK(norm(ap1) ==
            doctest::Approx(norm(a + 0.7 * A->one())));
    }
  }
  SUBCASE("zero-product algebra has no isometric regular representation") {
    std::vector<cmat> mult(1, cmat::Zero(1, 1));
    AlgebraPtr A = build_algebra(1, mult, NormKind::l1());
    CHECK_THROWS_AS(unitize(A), NotIsometricRegularRep);
  }
}

TEST_CASE("inversion against the Fourier oracle") {
  AlgebraPtr A = gallery::l1_cyclic(4);
  cvec x(4);
  x << cplx(1, 0), cplx(-0.5, 0.1), cplx(0, 0), cplx(0.1, 0);
  cvec vals = dft_values(x, 4);
  cvec expect = idft_coeffs(vals.cwiseInverse(), 4);
  Element inv = invert(A->element(x));
  CHECK((inv.coeffs() - expect).norm() < 1e-10);
  CHECK(norm(inv * A->element(x) - A->one()) < 1e-10);
  CHECK_THROWS_AS(invert(A->basis(1) - A->basis(1)), Singular);
}

TEST_CASE("resolvent bound for accretive elements") {
  AlgebraPtr A = gallery::l1_semigroup4();
  std::mt19937_64 rng(0x5EED);
  for (int i = 0; i < 10; ++i) {
    Element x = random_in_F(A, 0.9, rng);
    for (double t : {0.1, 1.0, 10.0}) {
      Element r = resolvent(x, t, /*verified_accretive=*/true);
      CHECK(norm(r) <= 1.0 / t + 1e-9);
      CHECK(norm(r * (x + t * A->one()) - A->one()) < 1e-9);
    }
  }
}

TEST_CASE("exp_scaled matches the scalar exponential") {
  AlgebraPtr C = gallery::scalars();
  cvec z(1);
  z << cplx(0.3, -1.2);
  Element e = exp_scaled(C->element(z), 0.7);
  CHECK(std::abs(e.coeffs()[0] - std::exp(0.7 * z[0])) < 1e-10);
}
