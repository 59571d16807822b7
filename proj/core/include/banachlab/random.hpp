#pragma once

#include <random>

#include "banachlab/algebra.hpp"

namespace banachlab {

// Gaussian direction, uniform radius in [0, radius].
inline Element random_ball(const AlgebraPtr& alg, double radius,
                           std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  cvec v(alg->dim());
  for (int i = 0; i < alg->dim(); ++i) v[i] = cplx(gauss(rng), gauss(rng));
  double n = alg->vec_norm(v);
  if (n == 0.0) return alg->zero();
  return alg->element(v * (radius * unif(rng) / n));
}

// 1 - y with norm(y) <= depth; lands strictly inside F_A for depth < 1.
inline Element random_in_F(const AlgebraPtr& alg, double depth,
                           std::mt19937_64& rng) {
  if (!alg->is_unital()) throw Error("random_in_F needs a unital algebra");
  return alg->one() - random_ball(alg, depth, rng);
}

}  // namespace banachlab
