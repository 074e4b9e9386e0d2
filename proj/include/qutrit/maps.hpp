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

/* maps.hpp
 * The two families of unital maps on M_3(C)
 *
 *   Phi[a,b,c]  = N (D[a,b,c]  - id),   N = 1 / (a + b + c)
 *   Phi~[a,b,c] = N (D~[a,b,c] - id),
 *
 * where D and D~ send X to a diagonal matrix built from the diagonal of X
 * (circulant pattern for D, the "improper" pattern for D~). Also here: the
 * positivity / decomposability classifier, the a + b + c = 2 slice and its
 * boundary ellipse, and the rotation construction Phi_R that reproduces both
 * families from O(2).
 */

#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gellmann.hpp"
#include "linalg.hpp"

namespace qutrit {

/// Tolerance used when deciding whether a triple lies on a + b + c = 2.
inline constexpr double kSliceTol = 1e-10;

struct MapParams {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  double sum() const noexcept { return a + b + c; }
  bool on_slice(double tol = kSliceTol) const noexcept { return std::abs(sum() - 2.0) <= tol; }

  /// Throws unless a, b, c ≥ 0, finite, and a + b + c > 0.
  void validate() const {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c))
      throw std::invalid_argument("MapParams: non-finite parameter");
    if (a < 0.0 || b < 0.0 || c < 0.0)
      throw std::invalid_argument("MapParams: parameters must be non-negative");
    if (!(sum() > 0.0))
      throw std::invalid_argument("MapParams: a + b + c must be positive");
  }
  void require_slice(double tol = kSliceTol) const {
    validate();
    if (!on_slice(tol))
      throw std::invalid_argument("MapParams: expected a + b + c = 2");
  }
};

inline std::ostream &operator<<(std::ostream &os, const MapParams &p) {
  return os << "(" << p.a << ", " << p.b << ", " << p.c << ")";
}

/// Max-norm distance between two triples.
inline double param_distance(const MapParams &x, const MapParams &y) {
  return std::max({std::abs(x.a - y.a), std::abs(x.b - y.b), std::abs(x.c - y.c)});
}

inline double n_abc(const MapParams &p) {
  if (!(p.sum() > 0.0))
    throw std::invalid_argument("n_abc: a + b + c must be positive");
  return 1.0 / p.sum();
}

namespace detail {
inline void require_qutrit(const ComplexMatrix &x, const char *what) {
  if (x.dim() != 3)
    throw std::invalid_argument(std::string(what) + ": expected a 3x3 matrix");
}

// Row k of the diagonal action: D(X)_kk = sum_i row[k][i] * x_ii.
using DiagonalPattern = std::array<std::array<double, 3>, 3>;

inline DiagonalPattern circulant_pattern(const MapParams &p) {
  return {{{p.a + 1, p.b, p.c}, {p.c, p.a + 1, p.b}, {p.b, p.c, p.a + 1}}};
}
inline DiagonalPattern improper_pattern(const MapParams &p) {
  return {{{p.a + 1, p.b, p.c}, {p.b, p.c + 1, p.a}, {p.c, p.a, p.b + 1}}};
}

inline ComplexMatrix apply_pattern(const DiagonalPattern &rows, const ComplexMatrix &x) {
  ComplexMatrix out(3);
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t i = 0; i < 3; ++i)
      out(k, k) += rows[k][i] * x(i, i);
  return out;
}
} // namespace detail

inline ComplexMatrix apply_D(const MapParams &p, const ComplexMatrix &x) {
  detail::require_qutrit(x, "apply_D");
  return detail::apply_pattern(detail::circulant_pattern(p), x);
}

inline ComplexMatrix apply_D_tilde(const MapParams &p, const ComplexMatrix &x) {
  detail::require_qutrit(x, "apply_D_tilde");
  return detail::apply_pattern(detail::improper_pattern(p), x);
}

inline ComplexMatrix apply_phi(const MapParams &p, const ComplexMatrix &x) {
  return (apply_D(p, x) - x) * cplx(n_abc(p));
}

inline ComplexMatrix apply_phi_tilde(const MapParams &p, const ComplexMatrix &x) {
  return (apply_D_tilde(p, x) - x) * cplx(n_abc(p));
}

// ---------------------------------------------------------------------------
// Classification

enum class Positivity { NotPositive, PositiveNotCP, CompletelyPositive };
enum class Decomposability { Decomposable, Indecomposable, Unknown };

struct MapClass {
  Positivity positivity = Positivity::NotPositive;
  Decomposability decomposability = Decomposability::Unknown;

  bool positive() const noexcept { return positivity != Positivity::NotPositive; }
  bool operator==(const MapClass &) const = default;
};

inline std::string_view to_string(Positivity p) {
  switch (p) {
  case Positivity::NotPositive:
    return "NotPositive";
  case Positivity::PositiveNotCP:
    return "PositiveNotCP";
  case Positivity::CompletelyPositive:
    return "CompletelyPositive";
  }
  return "?";
}

inline std::string_view to_string(Decomposability d) {
  switch (d) {
  case Decomposability::Decomposable:
    return "Decomposable";
  case Decomposability::Indecomposable:
    return "Indecomposable";
  case Decomposability::Unknown:
    return "Unknown";
  }
  return "?";
}

/// Positivity and decomposability of Phi[a,b,c] for any valid triple.
///
///   a ≥ 2                                  -> CompletelyPositive (decomposable)
///   a < 2, a + b + c ≥ 2,
///     and bc ≥ (1 - a)^2 whenever a ≤ 1    -> PositiveNotCP
///   otherwise                              -> NotPositive
///
/// A positive map is Indecomposable iff bc < (2 - a)^2 / 4. `tol` relaxes each
/// comparison in the direction that absorbs roundoff for points computed on a
/// boundary (e.g. from a rotation angle).
inline MapClass classify(const MapParams &p, double tol = 1e-12) {
  p.validate();
  if (p.a >= 2.0 - tol)
    return {Positivity::CompletelyPositive, Decomposability::Decomposable};

  const bool sum_ok = p.sum() >= 2.0 - tol;
  const bool ellipse_ok = p.a > 1.0 || p.b * p.c >= (1.0 - p.a) * (1.0 - p.a) - tol;
  if (!(sum_ok && ellipse_ok))
    return {Positivity::NotPositive, Decomposability::Unknown};

  const double bound = (2.0 - p.a) * (2.0 - p.a) / 4.0;
  return {Positivity::PositiveNotCP, p.b * p.c < bound - tol ? Decomposability::Indecomposable
                                                              : Decomposability::Decomposable};
}

// ---------------------------------------------------------------------------
// The a + b + c = 2 slice

/// Phi[b, c] := Phi[2 - b - c, b, c].
inline MapParams slice_params(double b, double c) {
  if (!(b >= 0.0 && c >= 0.0) || b + c > 2.0)
    throw std::invalid_argument("slice_params: need b, c ≥ 0 and b + c ≤ 2");
  return {2.0 - b - c, b, c};
}

/// True iff |bc - (1 - a)^2| ≤ tol; requires a slice point.
inline bool on_ellipse(const MapParams &p, double tol = 1e-10) {
  if (!p.on_slice(std::max(tol, kSliceTol)))
    throw std::invalid_argument("on_ellipse: expected a + b + c = 2");
  return std::abs(p.b * p.c - (1.0 - p.a) * (1.0 - p.a)) <= tol;
}

/// Left-hand side of 9/4 (x - 4/3)^2 + 3/4 y^2 = 1 with x = b + c, y = b - c.
inline double ellipse_form(double b, double c) {
  const double x = b + c, y = b - c;
  return 2.25 * (x - 4.0 / 3.0) * (x - 4.0 / 3.0) + 0.75 * y * y;
}

/// Parameters of the dual map: (a, b, c) -> (a, c, b).
inline MapParams dual(const MapParams &p) { return {p.a, p.c, p.b}; }

// ---------------------------------------------------------------------------
// Rotation parameterizations

/// Angle in radians reduced to [0, 2π).
class RotationAngle {
public:
  explicit RotationAngle(double radians) {
    if (!std::isfinite(radians))
      throw std::invalid_argument("RotationAngle: non-finite angle");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = std::fmod(radians, two_pi);
    if (r < 0.0)
      r += two_pi;
    if (r >= two_pi)
      r = 0.0;
    value_ = r;
  }
  static RotationAngle degrees(double deg) { return RotationAngle(deg * std::numbers::pi / 180.0); }

  double radians() const noexcept { return value_; }

private:
  double value_ = 0.0;
};

/// Coefficients of the proper-rotation family; always on the ellipse.
inline MapParams so2_coeffs(RotationAngle angle) {
  const double t = angle.radians();
  const double co = std::cos(t), si = std::sin(t);
  const double h = std::numbers::sqrt3 / 2.0;
  return {2.0 / 3.0 * (1.0 + co), 2.0 / 3.0 * (1.0 - 0.5 * co - h * si),
          2.0 / 3.0 * (1.0 - 0.5 * co + h * si)};
}

/// Coefficients of the improper-rotation family.
inline MapParams improper_coeffs(RotationAngle angle) {
  const double t = angle.radians();
  const double co = std::cos(t), si = std::sin(t);
  const double h = std::numbers::sqrt3 / 2.0;
  return {2.0 / 3.0 * (1.0 + 0.5 * co + h * si), 2.0 / 3.0 * (1.0 - co),
          2.0 / 3.0 * (1.0 + 0.5 * co - h * si)};
}

/// T(α) ∈ SO(2).
inline RealMatrix proper_rotation(RotationAngle angle) {
  const double co = std::cos(angle.radians()), si = std::sin(angle.radians());
  return RealMatrix{co, -si, si, co};
}

/// T~(α), the reflection component of O(2).
inline RealMatrix improper_rotation(RotationAngle angle) {
  const double co = std::cos(angle.radians()), si = std::sin(angle.radians());
  return RealMatrix{co, si, si, -co};
}

inline double orthogonality_defect(const RealMatrix &r) {
  return frobenius_distance(r.transpose() * r, RealMatrix::identity(r.dim()));
}

/// R = diag(T, -I_6), acting on (d_1, d_2 | u.., v..).
inline RealMatrix rotation_block(const RealMatrix &t) {
  if (t.dim() != 2)
    throw std::invalid_argument("rotation_block: T must be 2x2");
  if (orthogonality_defect(t) > 1e-10)
    throw std::invalid_argument("rotation_block: T is not orthogonal");
  RealMatrix r(8);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      r(i, j) = t(i, j);
  for (std::size_t i = 2; i < 8; ++i)
    r(i, i) = -1.0;
  return r;
}

inline const OrthonormalBasis &qutrit_basis() {
  static const OrthonormalBasis basis = build_gellmann(3);
  return basis;
}

// ---------------------------------------------------------------------------
// Linear maps on M_3(C)

enum class MapKind { Circulant, Improper, RotationGeneral, Other };

inline std::string_view to_string(MapKind k) {
  switch (k) {
  case MapKind::Circulant:
    return "circulant";
  case MapKind::Improper:
    return "improper";
  case MapKind::RotationGeneral:
    return "rotation-general";
  case MapKind::Other:
    return "other";
  }
  return "?";
}

/// Hermiticity-preserving linear map on M_3(C), stored as its real 9x9
/// matrix S_{αβ} = Tr(f_α Φ(f_β)) in the Gell-Mann basis.
class LinearMap3 {
public:
  LinearMap3(RealMatrix superop, MapKind kind) : superop_(std::move(superop)), kind_(kind) {
    if (superop_.dim() != 9)
      throw std::invalid_argument("LinearMap3: superoperator must be 9x9");
  }

  /// Tabulates `f` on the basis. Throws if `f` does not preserve Hermiticity.
  template <class F>
  static LinearMap3 from_function(F &&f, MapKind kind = MapKind::Other) {
    const auto &basis = qutrit_basis();
    RealMatrix s(9);
    for (std::size_t beta = 0; beta < 9; ++beta) {
      const ComplexMatrix image = f(basis[beta]);
      for (std::size_t alpha = 0; alpha < 9; ++alpha) {
        const cplx v = trace_pair(basis[alpha], image);
        if (std::abs(v.imag()) > 1e-10 * std::max(1.0, std::abs(v)))
          throw std::invalid_argument("LinearMap3: map does not preserve Hermiticity");
        s(alpha, beta) = v.real();
      }
    }
    return LinearMap3(std::move(s), kind);
  }

  static LinearMap3 identity() { return LinearMap3(RealMatrix::identity(9), MapKind::Other); }

  ComplexMatrix operator()(const ComplexMatrix &x) const {
    detail::require_qutrit(x, "LinearMap3");
    const auto &basis = qutrit_basis();
    const ComplexVector in = basis.coefficients(x);
    ComplexVector out(9);
    for (std::size_t alpha = 0; alpha < 9; ++alpha)
      for (std::size_t beta = 0; beta < 9; ++beta)
        out[alpha] += superop_(alpha, beta) * in[beta];
    return basis.synthesize(out);
  }

  /// Map dual under the Hilbert-Schmidt pairing: the transpose superoperator.
  LinearMap3 adjoint() const { return LinearMap3(superop_.transpose(), kind_); }

  const RealMatrix &superoperator() const noexcept { return superop_; }
  MapKind kind() const noexcept { return kind_; }

private:
  RealMatrix superop_;
  MapKind kind_;
};

/// Frobenius distance between superoperators.
inline double map_distance(const LinearMap3 &x, const LinearMap3 &y) {
  return frobenius_distance(x.superoperator(), y.superoperator());
}

inline LinearMap3 circulant_map(const MapParams &p) {
  p.validate();
  return LinearMap3::from_function([&](const ComplexMatrix &x) { return apply_phi(p, x); },
                                   MapKind::Circulant);
}

inline LinearMap3 improper_map(const MapParams &p) {
  p.validate();
  return LinearMap3::from_function([&](const ComplexMatrix &x) { return apply_phi_tilde(p, x); },
                                   MapKind::Improper);
}

/// Phi_R(X) = I Tr X / n + 1/(n-1) sum_{k,l ≥ 1} f_k R_kl Tr(f_l X), any n.
inline ComplexMatrix apply_rotation_map(const RealMatrix &r, const OrthonormalBasis &basis,
                                        const ComplexMatrix &x) {
  const std::size_t n = basis.n;
  if (r.dim() + 1 != basis.size())
    throw std::invalid_argument("apply_rotation_map: R must be (n^2-1)x(n^2-1)");
  if (x.dim() != n)
    throw std::invalid_argument("apply_rotation_map: operand dimension mismatch");
  if (orthogonality_defect(r) > 1e-10)
    throw std::invalid_argument("apply_rotation_map: R is not orthogonal");

  const ComplexVector coeff = basis.coefficients(x);
  ComplexMatrix out = ComplexMatrix::identity(n) * (x.trace() / double(n));
  const double w = 1.0 / double(n - 1);
  for (std::size_t k = 1; k < basis.size(); ++k) {
    cplx s{};
    for (std::size_t l = 1; l < basis.size(); ++l)
      s += r(k - 1, l - 1) * coeff[l];
    if (s != cplx(0))
      out += basis[k] * (w * s);
  }
  return out;
}

/// Phi_R on M_3(C) as a LinearMap3.
inline LinearMap3 phi_from_rotation(const RealMatrix &r, const OrthonormalBasis &basis) {
  if (basis.n != 3)
    throw std::invalid_argument("phi_from_rotation: LinearMap3 needs a qutrit basis");
  if (r.dim() != 8 || orthogonality_defect(r) > 1e-10)
    throw std::invalid_argument("phi_from_rotation: R must be an 8x8 orthogonal matrix");
  return LinearMap3::from_function(
      [&](const ComplexMatrix &x) { return apply_rotation_map(r, basis, x); },
      MapKind::RotationGeneral);
}

enum class StochasticKind { Circulant, Improper };

/// Doubly stochastic matrix N * pattern carried by N D (circulant) or N D~ (improper).
inline RealMatrix stochastic_matrix(const MapParams &p, StochasticKind kind) {
  p.validate();
  if (kind == StochasticKind::Improper && !p.on_slice())
    throw std::invalid_argument("stochastic_matrix: improper kind requires a + b + c = 2");
  const double n = n_abc(p);
  if (kind == StochasticKind::Circulant)
    return RealMatrix{p.a, p.b, p.c, p.c, p.a, p.b, p.b, p.c, p.a} * n;
  return RealMatrix{p.a, p.b, p.c, p.b, p.c, p.a, p.c, p.a, p.b} * n;
}

} // namespace qutrit
