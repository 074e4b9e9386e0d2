// Copyright 2026 The qutrit-witnesses Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "qutrit/qutrit.hpp"
#include "test_util.hpp"

namespace qutrit {
namespace {

// Smallest p in [0, 1] with λ_min(spa_mix(W, p)) ≥ 0, by bisection.
double bisect_critical_p(const ComplexMatrix &w) {
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    (min_eigenvalue(spa_mix(w, mid)) >= 0.0 ? hi : lo) = mid;
  }
  return hi;
}

TEST(SpaMix, Endpoints) {
  const ComplexMatrix w = witness_matrix({1, 1, 0}).matrix;
  EXPECT_EQ(spa_mix(w, 0.0), w);
  EXPECT_LE(frobenius_distance(spa_mix(w, 1.0), ComplexMatrix::identity(9) * cplx(1.0 / 9)), 1e-16);
  EXPECT_NEAR(spa_mix(w, 0.37).trace().real(), 1.0, 1e-15);
}

TEST(SpaMix, RejectsBadInput) {
  const ComplexMatrix w = witness_matrix({1, 1, 0}).matrix;
  EXPECT_THROW(spa_mix(w, -0.1), std::invalid_argument);
  EXPECT_THROW(spa_mix(w, 1.1), std::invalid_argument);
  EXPECT_THROW(spa_mix(ComplexMatrix::identity(9), 0.5), std::invalid_argument);
}

TEST(CriticalP, NamedPoints) {
  EXPECT_NEAR(critical_p({0, 1, 1}), 0.75, 1e-15);
  EXPECT_NEAR(critical_p({1, 1, 0}), 0.6, 1e-15);
  EXPECT_EQ(critical_p({2, 0, 0}), 0.0);
  EXPECT_THROW(critical_p({1, 1, 1}), std::invalid_argument);
}

TEST(CriticalP, MatchesBisectionAndSpectrum) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const MapParams p = testing::random_slice_point(rng);
    if (p.a >= 2.0 - 1e-9)
      continue;
    const ComplexMatrix w = witness_matrix(p).matrix;
    EXPECT_NEAR(critical_p(p), bisect_critical_p(w), 1e-9) << p;
    EXPECT_NEAR(critical_p(p), critical_p_spectral(w), 1e-12) << p;
    EXPECT_NEAR(min_eigenvalue(w), (p.a - 2.0) / 6.0, 1e-12) << p;
  }
}

TEST(SpaRegion, Lines) {
  EXPECT_TRUE(spa_region(1, 1));
  EXPECT_TRUE(spa_region(1.0 / 3, 1.0 / 3));
  EXPECT_FALSE(spa_region(0, 0));
  EXPECT_TRUE(spa_region(1, 0)); // on the line 2c + b = 1
  EXPECT_FALSE(spa_region(0.5, 0.0));
  EXPECT_TRUE(spa_region(0.4, 0.3));
}

TEST(SpaStateDisplay, MatchesMix) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const MapParams p = testing::random_slice_point(rng);
    if (p.a >= 2.0 - 1e-9)
      continue;
    const ComplexMatrix mixed = spa_mix(witness_matrix(p), critical_p(p));
    EXPECT_LE(frobenius_distance(spa_state_display(p), mixed), 1e-12) << p;
    EXPECT_GE(min_eigenvalue(mixed), -1e-12);
  }
}

TEST(SpaState, DecompositionInsideRegion) {
  std::mt19937_64 rng(3);
  int certified = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const MapParams p = testing::random_slice_point(rng);
    if (p.a >= 2.0 - 1e-9)
      continue;
    const SpaResult r = spa_state(p);
    EXPECT_EQ(r.separable_certified, spa_region(p.b, p.c));
    if (!r.separable_certified) {
      EXPECT_FALSE(r.components.has_value());
      continue;
    }
    ++certified;
    const SpaComponents &c = *r.components;
    EXPECT_LE(frobenius_distance(c.sum(), r.state.matrix), 1e-10) << p;
    for (const BipartiteState *s : {&c.sigma12, &c.sigma13, &c.sigma23, &c.sigma_d}) {
      EXPECT_TRUE(is_psd(s->matrix)) << p;
      EXPECT_TRUE(is_ppt(*s)) << p;
    }
  }
  EXPECT_GT(certified, 10);
}

TEST(SpaState, SigmaDiagVanishesAtOneThird) {
  const SpaResult r = spa_state({4.0 / 3, 1.0 / 3, 1.0 / 3});
  ASSERT_TRUE(r.components.has_value());
  EXPECT_LE(r.components->sigma_d.matrix.max_abs(), 1e-15);
}

TEST(SpaState, ReductionWitness) {
  const SpaResult r = spa_state({0, 1, 1});
  EXPECT_NEAR(r.p_star, 0.75, 1e-15);
  EXPECT_TRUE(r.separable_certified);
  EXPECT_NEAR(r.components->scale, 1.0 / 24, 1e-16);
}

TEST(SpaState, RejectsCompletelyPositiveCorner) {
  EXPECT_THROW(spa_state({2, 0, 0}), std::invalid_argument);
}

} // namespace
} // namespace qutrit
