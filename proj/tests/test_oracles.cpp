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

SeeSawConfig quick(int restarts = 40) {
  SeeSawConfig cfg;
  cfg.restarts = restarts;
  return cfg;
}

TEST(SeeSawConfig, Validation) {
  EXPECT_NO_THROW(SeeSawConfig{}.validate());
  SeeSawConfig bad;
  bad.restarts = 0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
  bad = {};
  bad.tol = 0.0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(MinProductExpectation, Identity) {
  const auto r = min_product_expectation(ComplexMatrix::identity(9), quick());
  EXPECT_NEAR(r.value, 1.0, 1e-12);
}

TEST(MinProductExpectation, NegatedMaxEntangledProjector) {
  const auto r = min_product_expectation(-max_entangled_projector_matrix(), quick());
  EXPECT_NEAR(r.value, -1.0 / 3, 1e-9);
  EXPECT_NEAR(norm(r.psi), 1.0, 1e-12);
  EXPECT_NEAR(norm(r.phi), 1.0, 1e-12);
}

TEST(MinProductExpectation, ChoiWitnessHasZeros) {
  const auto r = min_product_expectation(witness_matrix({1, 1, 0}).matrix, quick());
  EXPECT_NEAR(r.value, 0.0, 1e-9);
}

TEST(MinProductExpectation, ValueIsTheExpectation) {
  const ComplexMatrix w = witness_matrix({0.5, 0.1, 0.1}).matrix;
  const auto r = min_product_expectation(w, quick());
  EXPECT_NEAR(r.value, product_expectation(w, r.psi, r.phi), 1e-14);
  const ComplexVector v = r.product();
  EXPECT_NEAR(std::abs(inner(v, w * std::span<const cplx>(v)).imag()), 0.0, 1e-12);
}

TEST(SeeSaw, MonotoneDescent) {
  std::mt19937_64 rng(1);
  const ComplexMatrix w = witness_matrix({0.5, 0.1, 0.1}).matrix;
  for (int trial = 0; trial < 30; ++trial) {
    const auto tr = seesaw_descent(w, detail::haar_unit_vector(rng), detail::haar_unit_vector(rng), 500, 1e-11);
    for (std::size_t k = 1; k < tr.values.size(); ++k)
      EXPECT_LE(tr.values[k], tr.values[k - 1] + 1e-13);
  }
}

TEST(SeeSaw, SeedReproducibility) {
  std::mt19937_64 rng(5);
  const ComplexMatrix w = testing::random_hermitian(rng, 9);
  const auto r1 = min_product_expectation(w, quick(20));
  const auto r2 = min_product_expectation(w, quick(20));
  EXPECT_EQ(r1.value, r2.value);
  EXPECT_EQ(r1.psi, r2.psi);
  EXPECT_EQ(r1.phi, r2.phi);
}

TEST(SeeSaw, RejectsNonHermitian) {
  ComplexMatrix m = ComplexMatrix::identity(9);
  m(0, 1) = 1.0;
  EXPECT_THROW(min_product_expectation(m, quick(1)), std::invalid_argument);
}

TEST(IsBlockPositive, Examples) {
  EXPECT_TRUE(is_block_positive(witness_matrix({0, 1, 1}).matrix, quick()));
  EXPECT_FALSE(is_block_positive(witness_matrix({0.5, 0.1, 0.1}).matrix, quick()));
  EXPECT_TRUE(is_block_positive(ComplexMatrix::identity(9), quick(5)));
}

TEST(IsCpChoi, Examples) {
  EXPECT_TRUE(is_cp_choi(circulant_map({2, 0, 0})));
  EXPECT_FALSE(is_cp_choi(circulant_map({1, 1, 0})));
  EXPECT_TRUE(is_cp_choi(LinearMap3::identity()));
}

TEST(SpanRank, Trivial) {
  const ProductVectorPair one{basis_ket(3, 0), basis_ket(3, 1), 0.0};
  EXPECT_EQ(span_rank({one}), 1u);
  std::vector<ProductVectorPair> canon;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      canon.push_back({basis_ket(3, i), basis_ket(3, j), 0.0});
  EXPECT_EQ(span_rank(canon), 9u);
  EXPECT_EQ(span_rank({}), 0u);
  // Duplicates do not add rank.
  canon.push_back(canon.front());
  EXPECT_EQ(span_rank(canon), 9u);
}

TEST(ZeroProductVectors, IdentityHasNone) {
  EXPECT_TRUE(zero_product_vectors(ComplexMatrix::identity(9), quick(10)).empty());
}

TEST(ZeroProductVectors, InvariantsAndDedup) {
  const auto zeros = zero_product_vectors(witness_matrix({0, 1, 1}).matrix, quick(60));
  ASSERT_FALSE(zeros.empty());
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    EXPECT_LE(std::abs(zeros[i].value), 1e-9);
    EXPECT_NEAR(norm(zeros[i].psi), 1.0, 1e-12);
    EXPECT_NEAR(norm(zeros[i].phi), 1.0, 1e-12);
    for (std::size_t j = 0; j < i; ++j) {
      const ComplexVector u = zeros[i].product(), v = zeros[j].product();
      EXPECT_GT(1.0 - std::abs(inner(u, v)), 1e-6);
    }
  }
}

TEST(IndecomposabilityCertificate, Examples) {
  const auto choi = indecomposability_certificate({1, 1, 0});
  ASSERT_TRUE(choi.has_value());
  EXPECT_NEAR(choi->eps, 0.5, 1e-15);
  EXPECT_NEAR(choi->value, -0.25, 1e-15);
  EXPECT_TRUE(choi->ppt);

  EXPECT_FALSE(indecomposability_certificate({0, 1, 1}).has_value());

  const auto other = indecomposability_certificate({0.7, 0.9, 0.4});
  ASSERT_TRUE(other.has_value());
  EXPECT_LT(other->value, 0.0);

  const auto unbounded = indecomposability_certificate({1, 0, 1});
  ASSERT_TRUE(unbounded.has_value());
  EXPECT_NEAR(unbounded->eps, 2.0, 1e-15);
  EXPECT_LT(unbounded->value, 0.0);
}

TEST(IndecomposabilityCertificate, EveryAsymmetricSlicePoint) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const MapParams p = testing::random_slice_point(rng);
    const auto cert = indecomposability_certificate(p);
    ASSERT_TRUE(cert.has_value()) << p;
    EXPECT_LT(trace_pair(rho_eps(cert->eps).matrix, witness_matrix(p).matrix).real(), 0.0) << p;
    EXPECT_TRUE(cert->ppt);
  }
}

} // namespace
} // namespace qutrit
