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

/* witnesses.hpp
 * Two-qutrit witnesses built from the map families:
 *
 *   W[a,b,c]    standard (circulant diagonal a,b,c / c,a,b / b,c,a)
 *   W~[a,b,c]   tilde    (diagonal a,b,c / b,c,a / c,a,b)
 *   W_U[a,b,c]  (U ⊗ I) W (U ⊗ I)^†, U swapping |2> and |3>
 *
 * together with the P + Q^Γ certificate showing every W~ is decomposable and
 * the convex mixing of witnesses over rotation angles.
 */

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <tuple>
#include <vector>

#include "linalg.hpp"
#include "maps.hpp"

namespace qutrit {

enum class WitnessKind { Standard, Tilde, UConjugated, Mixed };

inline std::string_view to_string(WitnessKind k) {
  switch (k) {
  case WitnessKind::Standard:
    return "standard";
  case WitnessKind::Tilde:
    return "tilde";
  case WitnessKind::UConjugated:
    return "u";
  case WitnessKind::Mixed:
    return "mixed";
  }
  return "?";
}

struct WitnessMatrix {
  ComplexMatrix matrix;
  std::optional<MapParams> params; ///< empty for mixtures
  WitnessKind kind = WitnessKind::Standard;
};

namespace detail {
inline constexpr std::array<std::size_t, 3> kDiagonalKets{0, 4, 8}; // |11>, |22>, |33>
inline constexpr std::array<std::size_t, 3> kUKets{0, 5, 7};        // |11>, |23>, |32>
} // namespace detail

/// Entrywise 9x9 display of the witness of the given kind, prefactor
/// 1 / (3(a+b+c)) (= 1/6 on the slice). Works for any field type, so the CLI
/// can instantiate it with Rational to emit exact entries.
template <class T>
DenseMatrix<T> witness_display(WitnessKind kind, T a, T b, T c) {
  if (kind == WitnessKind::Mixed)
    throw std::invalid_argument("witness_display: mixtures have no display");
  const T pref = T(1) / (T(3) * (a + b + c));
  const std::array<T, 9> diag = kind == WitnessKind::Standard
                                    ? std::array<T, 9>{a, b, c, c, a, b, b, c, a}
                                    : std::array<T, 9>{a, b, c, b, c, a, c, a, b};
  const auto &kets = kind == WitnessKind::UConjugated ? detail::kUKets : detail::kDiagonalKets;
  DenseMatrix<T> w(9);
  for (std::size_t i = 0; i < 9; ++i)
    w(i, i) = pref * diag[i];
  for (std::size_t i : kets)
    for (std::size_t j : kets)
      if (i != j)
        w(i, j) = -pref;
  return w;
}

inline ComplexMatrix max_entangled_projector_matrix() {
  ComplexMatrix m(9);
  for (std::size_t i : detail::kDiagonalKets)
    for (std::size_t j : detail::kDiagonalKets)
      m(i, j) = 1.0 / 3.0;
  return m;
}

/// Choi-Jamiolkowski operator of `map` with the map on the first tensor factor:
///   W = 1/3 sum_{ij} Φ(|i><j|) ⊗ |i><j|.
/// With |ij> -> 3i + j this reproduces the displayed witnesses entrywise; the
/// mirrored (id ⊗ Φ) convention would swap b and c.
template <class Map>
ComplexMatrix choi_matrix(const Map &map) {
  ComplexMatrix w(9);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const ComplexMatrix image = map(matrix_unit(3, i, j));
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l)
          w(3 * k + i, 3 * l + j) += image(k, l) / 3.0;
    }
  return w;
}

inline WitnessMatrix choi_witness(const LinearMap3 &map) {
  const WitnessKind kind = map.kind() == MapKind::Improper ? WitnessKind::Tilde : WitnessKind::Standard;
  return {choi_matrix(map), std::nullopt, kind};
}

inline WitnessMatrix witness_matrix(const MapParams &p) {
  p.validate();
  return {to_complex(witness_display<double>(WitnessKind::Standard, p.a, p.b, p.c)), p,
          WitnessKind::Standard};
}

inline WitnessMatrix witness_tilde_matrix(const MapParams &p) {
  p.require_slice();
  return {to_complex(witness_display<double>(WitnessKind::Tilde, p.a, p.b, p.c)), p,
          WitnessKind::Tilde};
}

/// Swap of |2> and |3>.
inline ComplexMatrix permutation_unitary() {
  return ComplexMatrix{1, 0, 0, 0, 0, 1, 0, 1, 0};
}

inline WitnessMatrix witness_u(const MapParams &p) {
  p.require_slice();
  const ComplexMatrix local = kron(permutation_unitary(), ComplexMatrix::identity(3));
  return {local * witness_matrix(p).matrix * local.adjoint(), p, WitnessKind::UConjugated};
}

/// Decomposability of the witness as far as the closed forms decide it.
inline Decomposability witness_decomposability(const WitnessMatrix &w) {
  if (w.kind == WitnessKind::Mixed || !w.params)
    return Decomposability::Unknown;
  if (w.kind == WitnessKind::Tilde)
    return Decomposability::Decomposable;
  const MapClass cls = classify(*w.params);
  return cls.positive() ? cls.decomposability : Decomposability::Unknown;
}

// ---------------------------------------------------------------------------
// Decomposability certificate for W~

struct DecompositionCertificate {
  ComplexMatrix P;
  ComplexMatrix Q;
  double scale = 6.0; ///< P + Q^Γ = scale * W~
  MapParams params;
  /// Ellipse endpoints and weight when params is an interior point.
  std::optional<std::array<MapParams, 2>> chord;
  double lambda = 1.0;

  ComplexMatrix reconstruction() const { return P + partial_transpose(Q); }
};

/// Principal submatrix on the given rows/columns.
inline ComplexMatrix principal_submatrix(const ComplexMatrix &m, std::span<const std::size_t> idx) {
  ComplexMatrix out(idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c)
      out(r, c) = m(idx[r], idx[c]);
  return out;
}

/// The (P, Q) pair evaluated at (a, b, c). PSD when (a, b, c) is in the
/// ellipse disk; both are affine in the parameters.
inline std::pair<ComplexMatrix, ComplexMatrix> tilde_certificate_blocks(const MapParams &p) {
  const double a = p.a, b = p.b, c = p.c;
  ComplexMatrix P(9), Q(9);
  const std::array<std::array<double, 3>, 3> sub{
      {{a, b - 1, c - 1}, {b - 1, c, a - 1}, {c - 1, a - 1, b}}};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t s = 0; s < 3; ++s)
      P(detail::kDiagonalKets[r], detail::kDiagonalKets[s]) = sub[r][s];

  // 2x2 blocks on (|12>,|21>), (|13>,|31>), (|23>,|32>) with weights b, c, a.
  auto block = [&Q](std::size_t i, std::size_t j, double w) {
    Q(i, i) = w;
    Q(j, j) = w;
    Q(i, j) = -w;
    Q(j, i) = -w;
  };
  block(1, 3, b);
  block(2, 6, c);
  block(5, 7, a);
  return {P, Q};
}

inline double ellipse_disk_margin(const MapParams &p) { return 1.0 - ellipse_form(p.b, p.c); }

/// P + Q^Γ = 6 W~[a,b,c] with P, Q ≥ 0, for (a, b, c) on the slice with
/// bc ≥ (1 - a)^2. Interior points are the convex combination of the two
/// ellipse points sharing y = b - c.
inline DecompositionCertificate decompose_tilde(const MapParams &p, double tol = 1e-10) {
  p.require_slice();
  if (ellipse_disk_margin(p) < -tol)
    throw std::invalid_argument("decompose_tilde: parameters lie outside the ellipse bc ≥ (1-a)^2");

  DecompositionCertificate cert;
  cert.params = p;
  const double y = p.b - p.c;
  const double x = p.b + p.c;
  const double half_width = (2.0 / 3.0) * std::sqrt(std::max(0.0, 1.0 - 0.75 * y * y));
  const double x_lo = 4.0 / 3.0 - half_width, x_hi = 4.0 / 3.0 + half_width;

  if (std::abs(ellipse_disk_margin(p)) <= tol || half_width <= tol) {
    std::tie(cert.P, cert.Q) = tilde_certificate_blocks(p);
    return cert;
  }

  auto endpoint = [y](double xe) { return MapParams{2.0 - xe, (xe + y) / 2.0, (xe - y) / 2.0}; };
  const MapParams hi = endpoint(x_hi), lo = endpoint(x_lo);
  const double lambda = std::clamp((x - x_lo) / (x_hi - x_lo), 0.0, 1.0);
  const auto [p_hi, q_hi] = tilde_certificate_blocks(hi);
  const auto [p_lo, q_lo] = tilde_certificate_blocks(lo);
  cert.P = p_hi * cplx(lambda) + p_lo * cplx(1.0 - lambda);
  cert.Q = q_hi * cplx(lambda) + q_lo * cplx(1.0 - lambda);
  cert.chord = std::array<MapParams, 2>{hi, lo};
  cert.lambda = lambda;
  return cert;
}

// ---------------------------------------------------------------------------
// Mixtures over rotation angles

struct WeightedAngle {
  double alpha = 0.0; ///< radians
  double weight = 0.0;
};

/// Discrete version of (1/2π) ∫ (p(α) W[α] + p~(α) W~[α]) dα: the caller
/// supplies quadrature atoms, weights must be non-negative and sum to 1.
inline WitnessMatrix mix_witnesses(std::span<const WeightedAngle> standard,
                                   std::span<const WeightedAngle> tilde) {
  double total = 0.0;
  for (const auto *list : {&standard, &tilde})
    for (const auto &atom : *list) {
      if (!(atom.weight >= 0.0) || !std::isfinite(atom.alpha))
        throw std::invalid_argument("mix_witnesses: weights must be non-negative");
      total += atom.weight;
    }
  if (std::abs(total - 1.0) > 1e-10)
    throw std::invalid_argument("mix_witnesses: weights must sum to 1");

  ComplexMatrix acc(9);
  for (const auto &atom : standard)
    acc += witness_matrix(so2_coeffs(RotationAngle(atom.alpha))).matrix * cplx(atom.weight);
  for (const auto &atom : tilde)
    acc += witness_tilde_matrix(improper_coeffs(RotationAngle(atom.alpha))).matrix * cplx(atom.weight);
  return {acc, std::nullopt, WitnessKind::Mixed};
}

} // namespace qutrit
