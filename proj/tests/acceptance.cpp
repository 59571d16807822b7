// Acceptance suite: one line per criterion, nonzero exit if any fails.
// All quantities are desk-scale (dims <= 16) and deterministic (seed 0x5EED).

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "banachlab/gallery.hpp"
#include "banachlab/ideals.hpp"
#include "banachlab/io.hpp"
#include "banachlab/mideals.hpp"
#include "banachlab/numrange.hpp"
#include "banachlab/random.hpp"
#include "banachlab/roots.hpp"

using namespace banachlab;

namespace {

const double kPi = 3.14159265358979323846;

struct Outcome {
  bool pass = true;
  std::string detail;
};

Element power_int(const Element& r, int n) {
  Element out = r;
  for (int i = 1; i < n; ++i) out = out * r;
  return out;
}

// 1. Root identity: (x^{1/n})^n = x for random x in the F cone.
Outcome criterion1() {
  std::mt19937_64 rng(0x5EED);
  std::vector<AlgebraPtr> algs = {gallery::l1_cyclic(2), gallery::l1_cyclic(3),
                                  gallery::l1_cyclic(5), gallery::l1_cyclic(8),
                                  gallery::l1_semigroup4()};
  double worst_series = 0.0, worst_quad = 0.0;
  for (const AlgebraPtr& A : algs)
    for (int trial = 0; trial < 20; ++trial) {
      Element x = random_in_F(A, 0.9, rng);
      for (int n : {2, 3, 5}) {
        Element rs = power_series(x, 1.0 / n).value;
        Element rq = power_balakrishnan(x, 1.0 / n).value;
        worst_series = std::max(worst_series, norm(power_int(rs, n) - x));
        worst_quad = std::max(worst_quad, norm(power_int(rq, n) - x));
      }
    }
  Outcome o;
  o.pass = worst_series <= 1e-7 && worst_quad <= 1e-5;
  o.detail = "100 samples, n in {2,3,5}: worst series defect " +
             format_double(worst_series) + " (<=1e-7), worst quadrature defect " +
             format_double(worst_quad) + " (<=1e-5)";
  return o;
}

// 2. Quadrature norm bound for fractional powers of accretive elements.
Outcome criterion2() {
  std::mt19937_64 rng(0x5EED);
  std::vector<AlgebraPtr> algs = {gallery::l1_cyclic(5), gallery::l1_semigroup4(),
                                  gallery::lower_triangular2(),
                                  gallery::truncated_conv(8)};
  int violations = 0, checks = 0;
  double min_slack = 1e9;
  for (const AlgebraPtr& A : algs)
    for (int trial = 0; trial < 50; ++trial) {
      Element x = random_in_F(A, 0.95, rng);
      double nx = norm(x);
      if (nx > 1.0) x = (1.0 / nx) * x;  // accretive, norm <= 1
      for (double a : {0.1, 0.25, 0.5, 0.75, 0.9}) {
        double bound = 2.0 * std::sin(a * kPi) / (kPi * a * (1.0 - a)) *
                           std::pow(norm(x), a) +
                       1e-6;
        double got = norm(power_balakrishnan(x, a).value);
        ++checks;
        if (got > bound) ++violations;
        min_slack = std::min(min_slack, bound - got);
      }
    }
  Outcome o;
  o.pass = violations == 0;
  o.detail = std::to_string(checks) + " checks, " + std::to_string(violations) +
             " violations, smallest slack " + format_double(min_slack);
  return o;
}

// 3. Root-defect decay along n = 2, 4, ..., 256.
Outcome criterion3() {
  std::mt19937_64 rng(0x5EED);
  std::vector<int> ns = {2, 4, 8, 16, 32, 64, 128, 256};
  std::vector<double> batch_max(ns.size(), 0.0);
  for (AlgebraPtr A : {gallery::l1_cyclic(4), gallery::l1_semigroup4()})
    for (int trial = 0; trial < 25; ++trial) {
      Element x = random_in_F(A, 0.95, rng);
      RootDefectProfile prof = root_defect_profile(x, ns);
      for (size_t i = 0; i < ns.size(); ++i)
        batch_max[i] = std::max(batch_max[i], prof.defects[i]);
    }
  bool monotone = true;
  for (size_t i = 1; i < ns.size(); ++i)
    if (batch_max[i] > batch_max[i - 1] + 1e-9) monotone = false;
  Outcome o;
  o.pass = monotone && batch_max.back() < 0.05;
  o.detail = "batch max defect at n=2: " + format_double(batch_max.front()) +
             ", at n=256: " + format_double(batch_max.back()) +
             (monotone ? ", nonincreasing" : ", NOT monotone");
  return o;
}

// 4. Commuting-power Lipschitz inequality with the derived constant.
Outcome criterion4() {
  std::mt19937_64 rng(0x5EED);
  std::vector<AlgebraPtr> algs = {gallery::l1_cyclic(4),
                                  gallery::truncated_conv(6),
                                  gallery::l1_semigroup4()};
  int violations = 0, checks = 0;
  const double alphas[3] = {0.3, 0.5, 0.7};
  for (size_t ai = 0; ai < algs.size(); ++ai)
    for (int trial = 0; trial < 34 && checks < 100; ++trial) {
      const AlgebraPtr& A = algs[ai];
      Element a = random_in_F(A, 0.9, rng);
      Element b = random_in_F(A, 0.9, rng);
      Element c = random_ball(A, 1.0, rng);
      LipschitzCheck chk =
          commuting_power_lipschitz_check(a, b, c, alphas[checks % 3]);
      ++checks;
      if (!chk.ok) ++violations;
    }
  Outcome o;
  o.pass = violations == 0 && checks == 100;
  o.detail = std::to_string(checks) + " commuting accretive triples, " +
             std::to_string(violations) + " violations";
  return o;
}

// 5. Regression gallery with stated margins.
Outcome criterion5() {
  gallery::GalleryReport rep = gallery::run_gallery();
  int weak = 0, failed = 0, claims = 0;
  for (const auto& cs : rep.cases)
    for (const auto& c : cs.claims) {
      ++claims;
      if (!c.pass) ++failed;
      if (c.tolerance > 0.0 && c.margin < 10.0 * c.tolerance) ++weak;
    }
  Outcome o;
  o.pass = rep.all_pass && weak == 0 && failed == 0;
  o.detail = std::to_string(claims) + " claims across " +
             std::to_string(rep.cases.size()) + " cases, " +
             std::to_string(failed) + " failures, " + std::to_string(weak) +
             " below the 10x margin rule";
  return o;
}

// 6. Equivalence report all-true on 100 random accretive elements.
Outcome criterion6() {
  std::mt19937_64 rng(0x5EED);
  std::vector<Element> samples;
  for (AlgebraPtr A :
       {gallery::l1_cyclic(2), gallery::l1_cyclic(3), gallery::l1_cyclic(5),
        gallery::l1_semigroup4(), gallery::truncated_conv(8),
        gallery::lower_triangular2()})
    for (int trial = 0; trial < 14; ++trial)
      samples.push_back(random_in_F(A, 0.9, rng));
  // singular accretive elements: idempotents and their products with
  // nearby invertibles (accepted only when verifiably accretive)
  {
    AlgebraPtr Z = gallery::l1_cyclic(2);
    Element p = 0.5 * (Z->one() + Z->basis(1));
    AlgebraPtr S = gallery::l1_semigroup4();
    Element sp = S->one() - S->basis(1), sq = S->one() - S->basis(2);
    AlgebraPtr T = gallery::lower_triangular2();
    // Note: sp*sq is NOT accretive here (norm(1 - t sp sq) grows like 1+2t),
    // so the singular seed between the two idempotents is their midpoint.
    std::vector<Element> seeds = {p, sp, sq, 0.5 * (sp + sq), T->basis(0), T->basis(2)};
    for (const Element& s : seeds) samples.push_back(s);
    while (samples.size() < 100) {
      for (const Element& s : {p, sp, sq}) {
        Element cand = s * random_in_F(s.algebra(), 0.4, rng);
        if (min_re_abscissa(cand) >= 0.0) samples.push_back(cand);
        if (samples.size() >= 100) break;
      }
    }
  }
  int bad = 0, gap_bad = 0;
  for (const Element& x : samples) {
    WsReport w = ws_equivalences_report(x);
    if (!w.all_ok) ++bad;
    if (w.rank_xA < x.dim() && w.spectral_gap < 1e-6) ++gap_bad;
  }
  Outcome o;
  o.pass = bad == 0 && gap_bad == 0 && samples.size() >= 100;
  o.detail = std::to_string(samples.size()) + " accretive samples, " +
             std::to_string(bad) + " report failures, " +
             std::to_string(gap_bad) + " spectral-gap failures";
  return o;
}

// 7. Factorization instances plus the mandatory pool-exhaustion case.
Outcome criterion7() {
  std::mt19937_64 rng(0x5EED);
  const double eps = 0.1;
  int instances = 0, bad = 0;
  auto run_one = [&](const std::vector<Element>& targets,
                     const std::vector<Element>& pool, const AlgebraPtr& A) {
    ++instances;
    try {
      CohenResult r = cohen_factorize(targets, pool, eps);
      UnitalView v = ensure_unital(A);
      if (norm_one_minus(v, r.z) > 1.0 + 1e-8) ++bad;
      for (size_t i = 0; i < targets.size(); ++i) {
        if (r.trace.residuals[i] > 1e-9) ++bad;
        if (r.trace.factor_dist[i] > 2.0 * eps) ++bad;
      }
    } catch (const Error&) {
      ++bad;
    }
  };

  {
    AlgebraPtr A = gallery::l1_cyclic(3);
    for (int i = 0; i < 5; ++i)
      run_one({random_ball(A, 0.8, rng)}, {A->one()}, A);
  }
  {
    AlgebraPtr A = gallery::l1_semigroup4();
    Element p = A->one() - A->basis(1), q = A->one() - A->basis(2);
    for (int i = 0; i < 4; ++i)
      run_one({p * random_ball(A, 0.4, rng)}, {p}, A);
    for (int i = 0; i < 4; ++i)
      run_one({q * random_ball(A, 0.4, rng), q * random_ball(A, 0.4, rng)},
              {q}, A);
  }
  {
    AlgebraPtr Z = gallery::l1_cyclic(2);
    Element p = 0.5 * (Z->one() + Z->basis(1));
    for (int i = 0; i < 3; ++i)
      run_one({p * random_ball(Z, 0.5, rng)}, {p}, Z);
  }
  {
    AlgebraPtr T = gallery::lower_triangular2();
    for (int i = 0; i < 2; ++i)
      run_one({T->basis(2) * random_ball(T, 0.5, rng)}, {T->basis(2)}, T);
    for (int i = 0; i < 2; ++i)
      run_one({0.4 * T->basis(0)}, {T->basis(0)}, T);
  }
  bool exhausted = false;
  {
    AlgebraPtr T = gallery::lower_triangular2();
    try {
      cohen_factorize({T->basis(0)},
                      {T->basis(0) + T->basis(1), T->basis(0) - T->basis(1)},
                      eps);
    } catch (const PoolExhausted&) {
      exhausted = true;
    }
  }
  Outcome o;
  o.pass = instances == 20 && bad == 0 && exhausted;
  o.detail = std::to_string(instances) + " instances, " + std::to_string(bad) +
             " invariant failures; corner-ideal case " +
             (exhausted ? "raised PoolExhausted" : "DID NOT raise");
  return o;
}

// 8. Outer-body convergence to the disk for the convolution idempotent.
Outcome criterion8() {
  AlgebraPtr A = gallery::l1_cyclic(2);
  Element p = 0.5 * (A->one() + A->basis(1));
  auto gap = [&](int rings, int angles) {
    NumericalRangeEstimate est = numrange_outer(p, rings, angles);
    double g = 0.0;
    for (int k = 0; k < 360; ++k) {
      double hd = 0.5 + 0.5 * std::cos(est.outer.theta(k));
      g = std::max(g, std::abs(est.outer.h[k] - hd));
    }
    return g;
  };
  double coarse = gap(8, 16), fine = gap(32, 64);
  Outcome o;
  o.pass = coarse <= 0.02 && fine <= 0.005;
  o.detail = "Hausdorff gap to B(1/2,1/2): default grid " +
             format_double(coarse) + " (<=0.02), refined " +
             format_double(fine) + " (<=0.005)";
  return o;
}

// 9. Norm-preserving lifts at interior points, both routes.
Outcome criterion9() {
  std::mt19937_64 rng(0x5EED);
  std::vector<std::pair<AlgebraPtr, MIdealIdeal>> sums;
  {
    auto s1 = linf_sum(gallery::scalars(), gallery::l1_cyclic(2));
    auto s2 = linf_sum(gallery::l1_cyclic(2), gallery::l1_semigroup4());
    sums.push_back(s1);
    sums.push_back(s2);
  }
  int done = 0, bad = 0, attempts = 0;
  double worst_gap = 0.0, worst_agree = 0.0;
  while (done < 50 && attempts < 400) {
    ++attempts;
    auto& [A, J] = sums[attempts % sums.size()];
    Element x = random_ball(A, 1.5, rng);
    if (J.qnorm(x) < 0.2) continue;
    NumericalRangeEstimate body = quotient_numrange(x, J);
    if (body.outer.min_width() < 0.1) continue;
    cplx alpha = support_centroid(body.outer);
    try {
      LiftTrace tr = cssw_lift_traced(x, J, alpha, LiftMode::Iterative);
      Element v0 = cssw_lift(x, J, alpha, LiftMode::ClosedForm);
      ++done;
      double ngap = std::abs(norm(v0) - J.qnorm(x));
      worst_gap = std::max(worst_gap, ngap);
      if (ngap > 1e-8) ++bad;
      if (J.qnorm(v0 - x) > 1e-12) ++bad;  // coset match, coefficient level
      for (double sl : tr.containment_slack)
        if (sl < -1e-6) ++bad;
      double agree = norm(v0 - tr.v);
      worst_agree = std::max(worst_agree, agree);
      if (agree > 1e-7) ++bad;
    } catch (const AlphaNotInterior&) {
      continue;
    }
  }
  Outcome o;
  o.pass = done == 50 && bad == 0;
  o.detail = std::to_string(done) + " lifts, " + std::to_string(bad) +
             " check failures; worst norm gap " + format_double(worst_gap) +
             ", worst route disagreement " + format_double(worst_agree);
  return o;
}

// 10. Real-positive lifts stay accretive, quotient-exact, norm-preserving.
Outcome criterion10() {
  std::mt19937_64 rng(0x5EED);
  auto [A, J] = linf_sum(gallery::scalars(), gallery::l1_cyclic(2));
  AlgebraPtr C = gallery::l1_cyclic(2);
  int bad = 0;
  double worst_abs = 0.0;
  for (int trial = 0; trial < 30; ++trial) {
    std::normal_distribution<double> g;
    Element xc = random_in_F(C, 0.9, rng);  // accretive right block
    cvec c(3);
    c << cplx(g(rng), g(rng)), xc.coeffs()[0], xc.coeffs()[1];
    Element x = A->element(c);
    Element v = real_positive_lift(x, J);
    double mr = min_re_abscissa(v);
    worst_abs = std::min(worst_abs, mr);
    if (mr < -1e-6) ++bad;
    if (J.qnorm(v - x) > 1e-12) ++bad;
    if (std::abs(norm(v) - J.qnorm(x)) > 1e-6) ++bad;
  }
  Outcome o;
  o.pass = bad == 0;
  o.detail = "30 lifts, " + std::to_string(bad) +
             " failures; worst lift abscissa " + format_double(worst_abs);
  return o;
}

// 11. Commutative join calculus on random F-cone pairs.
Outcome criterion11() {
  std::mt19937_64 rng(0x5EED);
  std::vector<AlgebraPtr> algs = {gallery::l1_semigroup4(),
                                  gallery::l1_cyclic(4),
                                  gallery::truncated_conv(6)};
  int bad = 0, count = 0;
  for (const AlgebraPtr& A : algs)
    for (int trial = 0; trial < 34 && count < 100; ++trial) {
      ++count;
      Element x = random_in_F(A, 0.95, rng), y = random_in_F(A, 0.95, rng);
      try {
        comm_join(x, y);  // verifies the span equality internally
        Element s = support_join(x, y);
        Element sx = support_idempotent(x).s;
        if (norm(s * s - s) > 1e-7) ++bad;
        if (norm(s * sx - sx) > 1e-7) ++bad;
        if (norm(A->one() - s) > 1.0 + 1e-8) ++bad;
      } catch (const Error&) {
        ++bad;
      }
    }
  Outcome o;
  o.pass = bad == 0 && count == 100;
  o.detail = std::to_string(count) + " pairs, " + std::to_string(bad) +
             " join/support failures";
  return o;
}

// 12. Unital decomposition of the open unit ball into half-F differences.
Outcome criterion12() {
  std::mt19937_64 rng(0x5EED);
  std::vector<AlgebraPtr> algs = {gallery::l1_cyclic(6),
                                  gallery::l1_semigroup4(),
                                  gallery::lower_triangular2()};
  int bad = 0, count = 0;
  for (const AlgebraPtr& A : algs)
    for (int trial = 0; trial < 34 && count < 100; ++trial) {
      ++count;
      Element x = random_ball(A, 0.98, rng);
      auto [a, b] = decompose_unital(x);
      if (norm(a - b - x) > 1e-12) ++bad;
      if (norm(A->one() - 2.0 * a) > 1.0 + 1e-10) ++bad;
      if (norm(A->one() - 2.0 * b) > 1.0 + 1e-10) ++bad;
    }
  Outcome o;
  o.pass = bad == 0 && count == 100;
  o.detail = std::to_string(count) + " decompositions, " +
             std::to_string(bad) + " failures";
  return o;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    std::function<Outcome()> fn;
  };
  const Entry entries[] = {
      {"root identity suite", criterion1},
      {"fractional power norm bound", criterion2},
      {"root-defect decay", criterion3},
      {"commuting-power Lipschitz", criterion4},
      {"regression gallery with margins", criterion5},
      {"closed-ideal equivalences", criterion6},
      {"factorization instances", criterion7},
      {"outer-body convergence", criterion8},
      {"norm-preserving interior lifts", criterion9},
      {"real-positive lifts", criterion10},
      {"commutative join calculus", criterion11},
      {"unital ball decomposition", criterion12},
  };
  int failures = 0;
  int idx = 0;
  for (const Entry& e : entries) {
    ++idx;
    Outcome o;
    try {
      o = e.fn();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    if (!o.pass) ++failures;
    std::printf("[%s] criterion %2d: %s — %s\n", o.pass ? "PASS" : "FAIL", idx,
                e.name, o.detail.c_str());
  }
  if (failures)
    std::printf("%d of 12 acceptance criteria FAILED\n", failures);
  else
    std::printf("all 12 acceptance criteria pass\n");
  return failures == 0 ? 0 : 1;
}
