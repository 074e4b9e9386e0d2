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

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "linalg.hpp"
#include "maps.hpp"
#include "witnesses.hpp"

namespace qutrit {

struct BipartiteState {
  ComplexMatrix matrix;
  bool normalized = true;
};

namespace detail {
// |i, j> with 0-based, mod-3 indices.
inline constexpr std::size_t ket(std::size_t i, std::size_t j) { return 3 * (i % 3) + (j % 3); }
} // namespace detail

/// Unnormalized PPT family
///   ρ_ε = Σ|ii><jj| + ε Σ|i,i+1><i,i+1| + 1/ε Σ|i,i+2><i,i+2|
/// with i+1, i+2 wrapping within {1,2,3}.
inline BipartiteState rho_eps(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps))
    throw std::invalid_argument("rho_eps: ε must be positive and finite");
  ComplexMatrix m(9);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j)
      m(detail::ket(i, i), detail::ket(j, j)) = 1.0;
    m(detail::ket(i, i + 1), detail::ket(i, i + 1)) = eps;
    m(detail::ket(i, i + 2), detail::ket(i, i + 2)) = 1.0 / eps;
  }
  return {m, false};
}

inline bool is_ppt(const BipartiteState &s, double tol = kPsdTol) {
  return is_psd(partial_transpose(s.matrix), tol);
}

inline BipartiteState max_entangled_projector() { return {max_entangled_projector_matrix(), true}; }

/// Closed form of Tr(ρ_ε W[a,b,c]) = N/ε (b ε^2 + (a - 2) ε + c).
inline double detection_value(const MapParams &p, double eps) {
  if (!(eps > 0.0))
    throw std::invalid_argument("detection_value: ε must be positive");
  return n_abc(p) / eps * (p.b * eps * eps + (p.a - 2.0) * eps + p.c);
}

/// Open interval (lo, hi) of ε > 0; hi may be +infinity.
struct EpsInterval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double eps) const noexcept { return eps > lo && eps < hi; }
  bool bounded() const noexcept { return std::isfinite(hi); }
};

/// Where Tr(ρ_ε W[a,b,c]) < 0, if anywhere. The quadratic b ε^2 + (a-2) ε + c
/// degenerates to a linear function of ε when b = 0; that case is solved
/// directly instead of through the discriminant.
inline std::optional<EpsInterval> detects_rho_family(const MapParams &p, double tol = 1e-12) {
  p.validate();
  const double lin = p.a - 2.0;
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (p.b <= tol) {
    // lin * ε + c < 0
    if (lin >= -tol)
      return std::nullopt;
    return EpsInterval{std::max(0.0, p.c / -lin), inf};
  }
  const double disc = lin * lin - 4.0 * p.b * p.c;
  if (disc <= tol)
    return std::nullopt;
  const double sq = std::sqrt(disc);
  // Stable roots of b ε^2 + lin ε + c.
  const double qq = -0.5 * (lin + (lin >= 0 ? sq : -sq));
  double r1 = qq / p.b;
  double r2 = qq != 0.0 ? p.c / qq : 0.0;
  if (r1 > r2)
    std::swap(r1, r2);
  if (r2 <= 0.0)
    return std::nullopt;
  return EpsInterval{std::max(0.0, r1), r2};
}

/// σ_ij for 1-based i ≠ j:
///   |ij><ij| + |ji><ji| + |ii><ii| + |jj><jj| - |ii><jj| - |jj><ii|.
inline BipartiteState sigma_pair(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3 || i == j)
    throw std::invalid_argument("sigma_pair: need distinct indices in {1,2,3}");
  const std::size_t x = std::size_t(i - 1), y = std::size_t(j - 1);
  ComplexMatrix m(9);
  m(detail::ket(x, y), detail::ket(x, y)) = 1.0;
  m(detail::ket(y, x), detail::ket(y, x)) = 1.0;
  m(detail::ket(x, x), detail::ket(x, x)) = 1.0;
  m(detail::ket(y, y), detail::ket(y, y)) = 1.0;
  m(detail::ket(x, x), detail::ket(y, y)) = -1.0;
  m(detail::ket(y, y), detail::ket(x, x)) = -1.0;
  return {m, false};
}

/// σ_d = Σ_i (2b+c-1)|i,i+1><i,i+1| + (2c+b-1)|i,i+2><i,i+2|. Negative
/// entries are kept; the caller decides what a non-PSD σ_d means.
inline BipartiteState sigma_diag(const MapParams &p) {
  p.require_slice();
  ComplexMatrix m(9);
  for (std::size_t i = 0; i < 3; ++i) {
    m(detail::ket(i, i + 1), detail::ket(i, i + 1)) = 2.0 * p.b + p.c - 1.0;
    m(detail::ket(i, i + 2), detail::ket(i, i + 2)) = 2.0 * p.c + p.b - 1.0;
  }
  return {m, false};
}

} // namespace qutrit
