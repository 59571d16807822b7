#include "banachlab/numrange.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace banachlab {

namespace {
constexpr double kPi = std::numbers::pi;
}

double OuterBody::theta(int k) const { return 2.0 * kPi * k / directions; }

double OuterBody::min_re() const {
  if (directions % 2 != 0) throw Error("outer body needs an even direction count");
  return -h[directions / 2];
}

double OuterBody::width(int k) const {
  return h[k] + h[(k + directions / 2) % directions];
}

double OuterBody::min_width() const {
  double w = width(0);
  for (int k = 1; k < directions / 2; ++k) w = std::min(w, width(k));
  return w;
}

double OuterBody::max_width() const {
  double w = width(0);
  for (int k = 1; k < directions / 2; ++k) w = std::max(w, width(k));
  return w;
}

OuterBody williams_outer_fn(const std::function<double(cplx)>& dist, cplx center,
                            double radius, int rings, int ring_angles,
                            int directions) {
  OuterBody body;
  body.directions = directions;
  body.center = center;
  body.radius = radius;
  body.rings = rings;
  body.ring_angles = ring_angles;

  std::vector<cplx> grid;
  std::vector<double> gdist;
  grid.push_back(center);
  if (radius > 0.0) {
    for (int i = 1; i <= rings; ++i) {
      double r = radius * i / rings;
      for (int j = 0; j < ring_angles; ++j) {
        double psi = 2.0 * kPi * j / ring_angles;
        grid.push_back(center + cplx(r * std::cos(psi), r * std::sin(psi)));
      }
    }
  }
  gdist.reserve(grid.size());
  for (const cplx& lam : grid) gdist.push_back(dist(lam));

  body.h.resize(directions);
  for (int k = 0; k < directions; ++k) {
    double th = 2.0 * kPi * k / directions;
    cplx u(std::cos(th), std::sin(th));
    double best = std::numeric_limits<double>::infinity();
    for (size_t g = 0; g < grid.size(); ++g) {
      double v = (grid[g] * std::conj(u)).real() + gdist[g];
      best = std::min(best, v);
    }
    body.h[k] = best;
  }
  return body;
}

std::vector<cplx> support_vertices(const OuterBody& body) {
  std::vector<cplx> out;
  const int n = body.directions;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    double t0 = body.theta(k), t1 = body.theta((k + 1) % n);
    double det = std::sin(t1 - t0);
    if (std::abs(det) < 1e-12) continue;
    double h0 = body.h[k], h1 = body.h[(k + 1) % n];
    double x = (h0 * std::sin(t1) - h1 * std::sin(t0)) / det;
    double y = (h1 * std::cos(t0) - h0 * std::cos(t1)) / det;
    out.emplace_back(x, y);
  }
  return out;
}

cplx support_centroid(const OuterBody& body) {
  auto v = support_vertices(body);
  cplx s = 0.0;
  for (const cplx& p : v) s += p;
  return v.empty() ? body.center : s / static_cast<double>(v.size());
}

NumericalRangeEstimate numrange_outer(const Element& a, int rings, int ring_angles,
                                      int directions, const Tolerances& tol) {
  UnitalView v = ensure_unital(a.algebra(), tol);
  Element x = v.to_ambient(a);
  Element one = v.one();

  // Translation-equivariant base point: Euclidean projection of x onto the
  // identity direction.  This keeps numrange(x + t*1) an exact translate.
  const cvec& u = one.coeffs();
  cplx c = u.dot(x.coeffs()) / u.dot(u).real();
  double radius = 3.0 * norm(x - c * one);

  auto dist = [&](cplx lam) { return norm(x - lam * one); };
  NumericalRangeEstimate est;
  est.outer = williams_outer_fn(dist, c, radius, rings, ring_angles, directions);
  return est;
}

// ---------------------------------------------------------------------------
// State families.

namespace {

bool l1_family_info(const AlgebraSpec& alg, int* unit_index) {
  if (alg.norm_kind().family != NormFamily::L1 || !alg.is_unital()) return false;
  const cvec& u = alg.identity_coeffs();
  int idx = -1;
  for (int i = 0; i < alg.dim(); ++i) {
    if (std::abs(u[i]) > 1e-14) {
      if (idx >= 0 || std::abs(u[i] - cplx(1, 0)) > 1e-12) return false;
      idx = i;
    }
  }
  if (idx < 0) return false;
  *unit_index = idx;
  return true;
}

void sample_states_impl(const AlgebraSpec& alg, int n_random, std::mt19937_64& rng,
                        std::vector<cvec>& out) {
  int unit_index = -1;
  if (l1_family_info(alg, &unit_index)) {
    const int d = alg.dim();
    auto w = [&](int j) {
      return alg.norm_kind().weights.size() ? alg.norm_kind().weights[j] : 1.0;
    };
    std::vector<int> freev;
    for (int i = 0; i < d; ++i)
      if (i != unit_index) freev.push_back(i);
    const int m = static_cast<int>(freev.size());
    // Deterministic extreme states: all fourth-root-of-unity corners when the
    // enumeration stays small.
    if (m > 0 && std::pow(4.0, m) <= 256.0) {
      static const cplx roots[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
      int total = 1;
      for (int i = 0; i < m; ++i) total *= 4;
      for (int code = 0; code < total; ++code) {
        cvec f = cvec::Zero(d);
        f[unit_index] = 1.0;
        int c = code;
        for (int i = 0; i < m; ++i) {
          f[freev[i]] = roots[c % 4] / w(freev[i]);
          c /= 4;
        }
        out.push_back(f);
      }
    }
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int s = 0; s < n_random; ++s) {
      cvec f = cvec::Zero(d);
      f[unit_index] = 1.0;
      for (int i = 0; i < m; ++i) {
        double ang = 2.0 * kPi * unif(rng);
        double r = (s % 2 == 0) ? 1.0 : unif(rng);  // extreme and interior mix
        f[freev[i]] = std::polar(r, ang) / w(freev[i]);
      }
      out.push_back(f);
    }
    return;
  }
  if (alg.norm_kind().family == NormFamily::LinfSum) {
    const AlgebraPtr& L = alg.norm_kind().left;
    const AlgebraPtr& R = alg.norm_kind().right;
    std::vector<cvec> ls, rs;
    sample_states_impl(*L, std::max(8, n_random / 8), rng, ls);
    sample_states_impl(*R, std::max(8, n_random / 8), rng, rs);
    const int dl = L->dim(), d = alg.dim();
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    auto combine = [&](const cvec& fl, const cvec& fr, double t) {
      cvec f = cvec::Zero(d);
      f.head(dl) = t * fl;
      f.tail(d - dl) = (1.0 - t) * fr;
      out.push_back(f);
    };
    // Pure block states first (t = 0, 1), then mixes.
    for (size_t i = 0; i < ls.size() && i < 64; ++i) combine(ls[i], rs[i % rs.size()], 1.0);
    for (size_t i = 0; i < rs.size() && i < 64; ++i) combine(ls[i % ls.size()], rs[i], 0.0);
    for (int s = 0; s < n_random; ++s) {
      double t = (s % 4 == 0) ? 0.5 : unif(rng);
      combine(ls[rng() % ls.size()], rs[rng() % rs.size()], t);
    }
    return;
  }
  throw UnsupportedStateFamily("no closed-form state family for algebra '" +
                               alg.label() + "'");
}

}  // namespace

bool has_state_family(const AlgebraPtr& alg) {
  int idx;
  if (l1_family_info(*alg, &idx)) return true;
  if (alg->norm_kind().family == NormFamily::LinfSum)
    return has_state_family(alg->norm_kind().left) &&
           has_state_family(alg->norm_kind().right);
  return false;
}

std::vector<cvec> sample_states(const AlgebraPtr& alg, int n_random,
                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<cvec> out;
  sample_states_impl(*alg, n_random, rng, out);
  return out;
}

void numrange_inner(NumericalRangeEstimate& est, const Element& a, int n_random,
                    std::uint64_t seed) {
  const AlgebraPtr& alg = a.algebra();
  if (!alg->is_unital())
    throw UnsupportedStateFamily("inner estimates need a unital algebra");
  auto states = sample_states(alg, n_random, seed);
  est.inner.clear();
  est.inner.reserve(states.size());
  for (const cvec& f : states) est.inner.push_back((f.transpose() * a.coeffs())(0));
  est.has_inner = true;

  // Inner points must respect every outer half-plane; a violation would be a
  // library bug, not a data problem.
  double gap = 0.0;
  for (int k = 0; k < est.outer.directions; ++k) {
    double th = est.outer.theta(k);
    cplx u(std::cos(th), std::sin(th));
    double hin = -std::numeric_limits<double>::infinity();
    for (const cplx& p : est.inner) {
      double s = (p * std::conj(u)).real();
      hin = std::max(hin, s);
      if (s > est.outer.h[k] + 1e-9)
        throw Error("sampled state escaped the outer body");
    }
    gap = std::max(gap, est.outer.h[k] - hin);
  }
  est.hausdorff_gap = gap;
}

// ---------------------------------------------------------------------------
// Abscissa and cone membership.

double abscissa_from_norm(const std::function<double(double)>& g, double* err_out,
                          const Tolerances& tol) {
  constexpr int kLo = 4, kHi = 24;
  std::vector<double> d;
  for (int k = kLo; k <= kHi; ++k) {
    double t = std::ldexp(1.0, -k);
    d.push_back((g(t) - 1.0) / t);
  }
  // One Richardson level for the one-sided derivative (error ~ c*t).
  std::vector<double> r(d.size() - 1);
  for (size_t i = 0; i + 1 < d.size(); ++i) r[i] = 2.0 * d[i + 1] - d[i];
  double best = r.back(), err = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i + 1 < r.size(); ++i) {
    double diff = std::abs(r[i + 1] - r[i]);
    if (diff <= err) {
      err = diff;
      best = r[i + 1];
    }
  }
  if (err_out) *err_out = err;
  if (err > tol.abscissa)
    throw NonConvergent("abscissa extrapolation stalled above tolerance");
  return -best;
}

double min_re_abscissa(const Element& a, double* err_out, const Tolerances& tol) {
  UnitalView v = ensure_unital(a.algebra(), tol);
  Element x = v.to_ambient(a);
  Element one = v.one();
  auto g = [&](double t) { return norm(one - t * x); };
  return abscissa_from_norm(g, err_out, tol);
}

ConeReport cone_report(const Element& a, const Tolerances& tol) {
  UnitalView v = ensure_unital(a.algebra(), tol);
  Element x = v.to_ambient(a);
  Element one = v.one();
  ConeReport rep;
  rep.norm_one_minus = norm(one - x);
  rep.norm_one_minus_two = norm(one - 2.0 * x);
  rep.in_F = rep.norm_one_minus <= 1.0 + tol.cone;
  rep.in_half_F = rep.norm_one_minus_two <= 1.0 + tol.cone;
  rep.min_re = min_re_abscissa(a, &rep.min_re_err, tol);
  rep.accretive = rep.min_re >= -tol.cone;
  double na = norm(x);
  double margin = std::numeric_limits<double>::infinity();
  for (int j = -8; j <= 8; ++j) {
    double t = std::ldexp(1.0, j);
    margin = std::min(margin, 1.0 + t * t * na * na - norm(one - t * x));
  }
  rep.t_sweep_margin = margin;
  return rep;
}

bool preceq(const Element& a, const Element& b, const Tolerances& tol) {
  return min_re_abscissa(b - a, nullptr, tol) >= -tol.cone;
}

std::pair<Element, Element> decompose_unital(const Element& x,
                                             const Tolerances& tol) {
  const AlgebraPtr& alg = x.algebra();
  if (!alg->is_unital())
    throw Error("decompose_unital needs a unital algebra");
  if (norm(x) >= 1.0)
    throw NormTooLarge("decompose_unital requires norm(x) < 1");
  Element one = alg->one();
  Element a = 0.5 * (one + x);
  Element b = 0.5 * (one - x);
  (void)tol;
  return {a, b};
}

}  // namespace banachlab
