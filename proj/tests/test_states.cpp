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

#include <numbers>

#include "qutrit/qutrit.hpp"
#include "test_util.hpp"

namespace qutrit {
namespace {

using std::numbers::pi;

TEST(RhoEps, PsdAndPpt) {
  for (double eps : {0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0}) {
    const BipartiteState s = rho_eps(eps);
    EXPECT_FALSE(s.normalized);
    EXPECT_TRUE(is_psd(s.matrix)) << eps;
    EXPECT_TRUE(is_ppt(s)) << eps;
  }
}

TEST(RhoEps, Trace) {
  for (double eps : {0.3, 1.0, 4.0})
    EXPECT_NEAR(rho_eps(eps).matrix.trace().real(), 3 + 3 * eps + 3 / eps, 1e-12);
}

TEST(RhoEps, WrapAroundIndices) {
  // ε sits on |12>, |23>, |31>; 1/ε on |13>, |21>, |32>.
  const ComplexMatrix m = rho_eps(2.0).matrix;
  for (std::size_t k : {1u, 5u, 6u})
    EXPECT_EQ(m(k, k), cplx(2.0));
  for (std::size_t k : {2u, 3u, 7u})
    EXPECT_EQ(m(k, k), cplx(0.5));
}

TEST(RhoEps, RejectsNonPositive) {
  EXPECT_THROW(rho_eps(0.0), std::invalid_argument);
  EXPECT_THROW(rho_eps(-1.0), std::invalid_argument);
}

TEST(IsPpt, Examples) {
  EXPECT_TRUE(is_ppt(rho_eps(0.5)));
  EXPECT_FALSE(is_ppt(max_entangled_projector()));
  const ComplexVector v = kron(basis_ket(3, 0), basis_ket(3, 1));
  EXPECT_TRUE(is_ppt({outer(v, v), true}));
}

TEST(MaxEntangledProjector, Properties) {
  const ComplexMatrix m = max_entangled_projector().matrix;
  EXPECT_EQ(numerical_rank(m), 1u);
  EXPECT_NEAR(m.trace().real(), 1.0, 1e-15);
  EXPECT_LE(frobenius_distance(m * m, m), 1e-15);
  // Partial transpose is SWAP / 3.
  EXPECT_NEAR(min_eigenvalue(partial_transpose(m)), -1.0 / 3, 1e-12);
}

TEST(DetectionValue, ReductionMapNeverDetects) {
  for (double eps : {0.1, 0.5, 1.0, 3.0})
    EXPECT_NEAR(detection_value({0, 1, 1}, eps), (eps - 1) * (eps - 1) / (2 * eps), 1e-14);
}

TEST(DetectionValue, ChoiMapAtHalf) {
  EXPECT_NEAR(detection_value({1, 1, 0}, 0.5), -0.25, 1e-15);
  EXPECT_NEAR(trace_pair(rho_eps(0.5).matrix, witness_matrix({1, 1, 0}).matrix).real(), -0.25, 1e-14);
}

TEST(DetectionValue, CenterHasDoubleRoot) {
  for (double eps : {0.2, 1.0, 7.0})
    EXPECT_GE(detection_value({2.0 / 3, 2.0 / 3, 2.0 / 3}, eps), -1e-15);
  EXPECT_NEAR(detection_value({2.0 / 3, 2.0 / 3, 2.0 / 3}, 1.0), 0.0, 1e-15);
}

TEST(DetectionValue, MatchesNumericTrace) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.05, 10.0);
  for (int trial = 0; trial < 30; ++trial) {
    // Off-slice triples too: the closed form holds for any (a, b, c).
    const MapParams p = trial % 2 ? testing::random_slice_point(rng) : MapParams{u(rng) / 4, u(rng) / 4, u(rng) / 4};
    const double eps = u(rng);
    const double numeric = trace_pair(rho_eps(eps).matrix, witness_matrix(p).matrix).real();
    EXPECT_NEAR(detection_value(p, eps), numeric, 1e-12 * std::max(1.0, std::abs(numeric)));
  }
}

TEST(DetectionValue, TildeWitnessIsBlind) {
  // Each ket group of rho_eps meets a, b, c once on the W~ diagonal, so
  // Tr(rho_eps W~) = (a+b+c)(1 + eps + 1/eps)/6 - 1 = (eps - 1)^2 / (3 eps) on the slice.
  for (int k = 0; k < 20; ++k) {
    const MapParams p = improper_coeffs(RotationAngle(2 * pi * k / 20.0));
    const double eps = 0.1 + 0.5 * k;
    const double tr = trace_pair(rho_eps(eps).matrix, witness_tilde_matrix(p).matrix).real();
    EXPECT_NEAR(tr, (eps - 1) * (eps - 1) / (3 * eps), 1e-12);
    EXPECT_GE(tr, 0.0);
  }
  EXPECT_NEAR(trace_pair(rho_eps(1.0).matrix, witness_tilde_matrix({1, 1, 0}).matrix).real(), 0.0, 1e-15);
}

TEST(DetectsRhoFamily, Intervals) {
  const auto choi = detects_rho_family({1, 1, 0});
  ASSERT_TRUE(choi.has_value());
  EXPECT_NEAR(choi->lo, 0.0, 1e-15);
  EXPECT_NEAR(choi->hi, 1.0, 1e-15);

  EXPECT_FALSE(detects_rho_family({0, 1, 1}).has_value());

  // b = 0 degenerates to the linear -ε + 1 < 0.
  const auto dual_choi = detects_rho_family({1, 0, 1});
  ASSERT_TRUE(dual_choi.has_value());
  EXPECT_NEAR(dual_choi->lo, 1.0, 1e-15);
  EXPECT_TRUE(std::isinf(dual_choi->hi));
}

TEST(DetectsRhoFamily, IntervalIsExactlyTheNegativeSet) {
  // Sign scan of the closed form as the oracle.
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 30; ++trial) {
    const MapParams p = testing::random_slice_point(rng);
    const auto iv = detects_rho_family(p);
    for (int k = 1; k < 400; ++k) {
      const double eps = std::exp(-6.0 + 12.0 * k / 400.0);
      const double v = detection_value(p, eps);
      if (std::abs(v) < 1e-9)
        continue;
      EXPECT_EQ(v < 0, iv && iv->contains(eps)) << p << " eps=" << eps;
    }
  }
}

TEST(DetectsRhoFamily, NonEmptyIffBDiffersFromC) {
  for (int i = 0; i <= 40; ++i)
    for (int j = 0; j <= 40; ++j) {
      const double b = 0.05 * i, c = 0.05 * j;
      if (b + c > 2.0 + 1e-12)
        continue;
      const MapParams p{std::max(0.0, 2.0 - b - c), b, c};
      EXPECT_EQ(detects_rho_family(p).has_value(), i != j) << p;
      const MapClass cls = classify(p);
      if (cls.positivity == Positivity::PositiveNotCP) {
        EXPECT_EQ(detects_rho_family(p).has_value(), cls.decomposability == Decomposability::Indecomposable);
      }
    }
}

TEST(SigmaPair, PsdPptAndSupport) {
  for (auto [i, j] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
    const BipartiteState s = sigma_pair(i, j);
    EXPECT_TRUE(is_psd(s.matrix));
    EXPECT_TRUE(is_ppt(s));
    EXPECT_EQ(numerical_rank(s.matrix), 3u);
    // Supported inside span{|i>,|j>} ⊗ span{|i>,|j>}.
    ComplexMatrix proj_local(3);
    proj_local(i - 1, i - 1) = 1.0;
    proj_local(j - 1, j - 1) = 1.0;
    const ComplexMatrix proj = kron(proj_local, proj_local);
    EXPECT_EQ(numerical_rank(proj), 4u);
    EXPECT_LE(frobenius_distance(proj * s.matrix * proj, s.matrix), 1e-15);
  }
  EXPECT_THROW(sigma_pair(1, 1), std::invalid_argument);
  EXPECT_THROW(sigma_pair(0, 2), std::invalid_argument);
}

TEST(SigmaDiag, Values) {
  const ComplexMatrix red = sigma_diag({0, 1, 1}).matrix;
  for (std::size_t k : {1u, 2u, 3u, 5u, 6u, 7u})
    EXPECT_DOUBLE_EQ(red(k, k).real(), 2.0);
  EXPECT_TRUE(is_psd(red));

  EXPECT_LE(sigma_diag({4.0 / 3, 1.0 / 3, 1.0 / 3}).matrix.max_abs(), 1e-15);

  EXPECT_TRUE(is_psd(sigma_diag({1, 0.2, 0.8}).matrix));  // 2b+c = 1.2, 2c+b = 1.8
  EXPECT_FALSE(is_psd(sigma_diag({1.4, 0.1, 0.5}).matrix)); // 2b+c = 0.7
}

} // namespace
} // namespace qutrit
