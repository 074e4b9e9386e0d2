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

#pragma once

/* oracles.hpp
 * Numerical checks that do not go through the closed forms:
 *
 *  - see-saw minimisation of <ψ⊗φ|W|ψ⊗φ> over product vectors (block
 *    positivity, i.e. positivity of the underlying map),
 *  - complete positivity through PSD-ness of the Choi matrix,
 *  - collection of zero-expectation product vectors and their span rank,
 *  - an explicit PPT state with negative expectation (indecomposability).
 *
 * The see-saw gives an upper bound on the true minimum. Everything is
 * sequential and driven by a single seeded engine, so a given seed
 * reproduces results exactly on one platform.
 */

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "linalg.hpp"
#include "maps.hpp"
#include "states.hpp"
#include "witnesses.hpp"

namespace qutrit {

struct ProductVectorPair {
  ComplexVector psi; ///< unit vector on the first factor
  ComplexVector phi; ///< unit vector on the second factor
  double value = 0.0;

  ComplexVector product() const { return kron(psi, phi); }
};

struct SeeSawConfig {
  int restarts = 200;
  int max_iters = 500;
  double tol = 1e-11;
  std::uint64_t rng_seed = 20260415;

  void validate() const {
    if (restarts <= 0 || max_iters <= 0 || !(tol > 0.0))
      throw std::invalid_argument("SeeSawConfig: counts and tol must be positive");
  }
};

/// Estimated-minimum threshold below which a witness counts as not block-positive.
inline constexpr double kBlockPositivityTol = 1e-7;

/// <ψ⊗φ|W|ψ⊗φ>, real part.
inline double product_expectation(const ComplexMatrix &w, std::span<const cplx> psi,
                                  std::span<const cplx> phi) {
  const ComplexVector v = kron(psi, phi);
  return inner(v, w * std::span<const cplx>(v)).real();
}

namespace detail {

// A(φ)_{ik} = Σ_{jl} conj(φ_j) W_{(ij),(kl)} φ_l
inline ComplexMatrix contract_second(const ComplexMatrix &w, std::span<const cplx> phi) {
  ComplexMatrix a(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) {
      cplx s{};
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t l = 0; l < 3; ++l)
          s += std::conj(phi[j]) * w(3 * i + j, 3 * k + l) * phi[l];
      a(i, k) = s;
    }
  return a;
}

// B(ψ)_{jl} = Σ_{ik} conj(ψ_i) W_{(ij),(kl)} ψ_k
inline ComplexMatrix contract_first(const ComplexMatrix &w, std::span<const cplx> psi) {
  ComplexMatrix b(3);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t l = 0; l < 3; ++l) {
      cplx s{};
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t k = 0; k < 3; ++k)
          s += std::conj(psi[i]) * w(3 * i + j, 3 * k + l) * psi[k];
      b(j, l) = s;
    }
  return b;
}

// Contractions of a Hermitian W are Hermitian up to roundoff.
inline ComplexMatrix hermitize(const ComplexMatrix &m) { return (m + m.adjoint()) * cplx(0.5); }

inline ComplexVector haar_unit_vector(std::mt19937_64 &rng, std::size_t dim = 3) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector v(dim);
  for (auto &x : v) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    x = {re, im};
  }
  const double nv = norm(v);
  for (auto &x : v)
    x /= nv;
  return v;
}

} // namespace detail

struct SeeSawTrace {
  ProductVectorPair result;
  std::vector<double> values; ///< objective after each half-step, starting value first
};

/// One see-saw descent from (ψ0, φ0): alternately replace ψ (then φ) by the
/// lowest eigenvector of the contracted 3x3 operator. Stops when a full
/// iteration improves the objective by less than `tol`.
inline SeeSawTrace seesaw_descent(const ComplexMatrix &w, ComplexVector psi, ComplexVector phi,
                                  int max_iters, double tol) {
  SeeSawTrace trace;
  trace.values.push_back(product_expectation(w, psi, phi));
  double prev = trace.values.back();
  for (int it = 0; it < max_iters; ++it) {
    const auto ea = hermitian_eigen(detail::hermitize(detail::contract_second(w, phi)));
    psi = ea.eigenvector(0);
    trace.values.push_back(ea.min());
    const auto eb = hermitian_eigen(detail::hermitize(detail::contract_first(w, psi)));
    phi = eb.eigenvector(0);
    trace.values.push_back(eb.min());
    if (prev - eb.min() < tol)
      break;
    prev = eb.min();
  }
  const double value = product_expectation(w, psi, phi);
  trace.result = {std::move(psi), std::move(phi), value};
  return trace;
}

/// Runs cfg.restarts descents from Haar-random starts and calls
/// `visit(const ProductVectorPair&)` on each limit, in restart order.
template <class Visitor>
void for_each_seesaw_limit(const ComplexMatrix &w, const SeeSawConfig &cfg, Visitor &&visit) {
  cfg.validate();
  if (w.dim() != 9 || !is_hermitian(w, 1e-10))
    throw std::invalid_argument("see-saw: expected a 9x9 Hermitian operator");
  std::mt19937_64 rng(cfg.rng_seed);
  for (int r = 0; r < cfg.restarts; ++r) {
    ComplexVector psi0 = detail::haar_unit_vector(rng);
    ComplexVector phi0 = detail::haar_unit_vector(rng);
    visit(seesaw_descent(w, std::move(psi0), std::move(phi0), cfg.max_iters, cfg.tol).result);
  }
}

/// Best see-saw limit over all restarts (an upper bound on min <ψ⊗φ|W|ψ⊗φ>).
inline ProductVectorPair min_product_expectation(const ComplexMatrix &w, const SeeSawConfig &cfg = {}) {
  std::optional<ProductVectorPair> best;
  for_each_seesaw_limit(w, cfg, [&](const ProductVectorPair &pv) {
    if (!best || pv.value < best->value)
      best = pv;
  });
  return *best;
}

inline bool is_block_positive(const ComplexMatrix &w, const SeeSawConfig &cfg = {}) {
  return min_product_expectation(w, cfg).value >= -kBlockPositivityTol;
}

/// Choi criterion: CP iff the Choi matrix is PSD.
inline bool is_cp_choi(const LinearMap3 &map, double tol = kPsdTol) {
  return is_psd(choi_matrix(map), tol);
}

/// Distinct see-saw limits with |value| ≤ zero_tol. Two limits are the same if
/// 1 - |<u, v>| ≤ dedup_tol for the normalized products u, v.
inline std::vector<ProductVectorPair> zero_product_vectors(const ComplexMatrix &w,
                                                           const SeeSawConfig &cfg = {},
                                                           double dedup_tol = 1e-6,
                                                           double zero_tol = 1e-9) {
  std::vector<ProductVectorPair> found;
  std::vector<ComplexVector> products;
  for_each_seesaw_limit(w, cfg, [&](const ProductVectorPair &pv) {
    if (std::abs(pv.value) > zero_tol)
      return;
    ComplexVector u = pv.product();
    const double nu = norm(u);
    for (auto &x : u)
      x /= nu;
    for (const auto &v : products)
      if (1.0 - std::abs(inner(u, v)) <= dedup_tol)
        return;
    products.push_back(std::move(u));
    found.push_back(pv);
  });
  return found;
}

/// Dimension of span{ψ⊗φ}: eigenvalues of the 9x9 frame operator Σ|v><v|
/// (same non-zero spectrum as the Gram matrix) above tol * largest.
inline std::size_t span_rank(const std::vector<ProductVectorPair> &pairs, double tol = 1e-8) {
  if (pairs.empty())
    return 0;
  const std::size_t dim = pairs.front().psi.size() * pairs.front().phi.size();
  ComplexMatrix frame(dim);
  for (const auto &pv : pairs) {
    const ComplexVector v = pv.product();
    frame += outer(v, v);
  }
  return numerical_rank(frame, tol);
}

struct IndecomposabilityCertificate {
  double eps = 0.0;
  double value = 0.0;  ///< Tr(ρ_ε W[a,b,c]) < 0
  EpsInterval interval;
  bool ppt = false;    ///< ρ_ε passed the PPT check
};

/// PPT state ρ_ε with a negative expectation on W[a,b,c]. ε is the midpoint
/// of the detection interval; for (lo, ∞) it is 2 lo (1 when lo = 0).
inline std::optional<IndecomposabilityCertificate> indecomposability_certificate(const MapParams &p) {
  const auto interval = detects_rho_family(p);
  if (!interval)
    return std::nullopt;
  double eps;
  if (interval->bounded())
    eps = 0.5 * (interval->lo + interval->hi);
  else
    eps = interval->lo > 0.0 ? 2.0 * interval->lo : 1.0;
  const double value = detection_value(p, eps);
  if (!(value < 0.0))
    return std::nullopt;
  return IndecomposabilityCertificate{eps, value, *interval, is_ppt(rho_eps(eps))};
}

} // namespace qutrit
