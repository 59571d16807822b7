#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "banachlab/gallery.hpp"
#include "banachlab/io.hpp"
#include "banachlab/numrange.hpp"
#include "banachlab/random.hpp"
#include "banachlab/svg.hpp"

using namespace banachlab;

TEST_CASE("gallery passes and is deterministic") {
  gallery::GalleryReport r1 = gallery::run_gallery();
  gallery::GalleryReport r2 = gallery::run_gallery();
  CHECK(r1.all_pass);
  CHECK(gallery::report_json(r1) == gallery::report_json(r2));
  REQUIRE(r1.cases.size() == 4);
  CHECK(r1.cases[0].claims.size() == 5);  // ex1
  CHECK(r1.cases[1].claims.size() == 4);  // ex2
  for (const auto& cs : r1.cases)
    for (const auto& c : cs.claims) {
      INFO(c.id);
      CHECK(c.pass);
      if (c.tolerance > 0.0) CHECK(c.margin >= 10.0 * c.tolerance);
    }
}

TEST_CASE("gallery filter") {
  gallery::GalleryReport r = gallery::run_gallery("ex7");
  REQUIRE(r.cases.size() == 1);
  CHECK(r.cases[0].id == "ex7");
}

TEST_CASE("algebra JSON roundtrip") {
  std::string path = "roundtrip_alg.json";
  for (AlgebraPtr A : {gallery::l1_cyclic(3), gallery::lower_triangular2()}) {
    save_algebra(A, path);
    AlgebraPtr B = load_algebra(path);
    REQUIRE(B->dim() == A->dim());
    CHECK(B->is_unital() == A->is_unital());
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 10; ++trial) {
      Element x = random_ball(A, 1.0, rng), y = random_ball(A, 1.0, rng);
      Element xb = B->element(x.coeffs()), yb = B->element(y.coeffs());
      CHECK(norm(x) == doctest::Approx(norm(xb)).epsilon(1e-12));
      CHECK(((x * y).coeffs() - (xb * yb).coeffs()).norm() < 1e-12);
    }
  }
  std::remove(path.c_str());
}

TEST_CASE("coefficient parsing") {
  cvec v = parse_coeffs("[[0.5, -1], 2, 0]", 3);
  CHECK(v[0] == cplx(0.5, -1.0));
  CHECK(v[1] == cplx(2.0, 0.0));
  CHECK_THROWS_AS(parse_coeffs("[1, 2]", 3), IoError);
  CHECK_THROWS_AS(parse_coeffs("not json", 2), IoError);
}

TEST_CASE("plot emission") {
  AlgebraPtr A = gallery::l1_cyclic(2);
  Element p = 0.5 * (A->one() + A->basis(1));
  NumericalRangeEstimate est = numrange_outer(p);
  numrange_inner(est, p);
  std::string path = "plot_test.svg";
  emit_plot(est, path, "test");
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  std::string svg = ss.str();
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("<polygon") != std::string::npos);
  CHECK(svg.find("<circle") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("deterministic float formatting") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-2.0) == "-2");
  CHECK(format_double(1e-9) == "1e-09");
}
