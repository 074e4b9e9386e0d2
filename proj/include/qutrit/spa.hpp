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

/* spa.hpp
 * Structural physical approximation W(p) = (1 - p) W + p I / 9 of a unit-trace
 * witness, its critical weight p*, and the separable decomposition of W(p*)
 * for the standard family on the slice.
 */

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "linalg.hpp"
#include "maps.hpp"
#include "states.hpp"
#include "witnesses.hpp"

namespace qutrit {

inline ComplexMatrix spa_mix(const ComplexMatrix &w, double p) {
  if (w.dim() != 9)
    throw std::invalid_argument("spa_mix: expected a 9x9 witness");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("spa_mix: p must lie in [0, 1]");
  if (std::abs(w.trace() - cplx(1.0)) > 1e-10)
    throw std::invalid_argument("spa_mix: witness must have unit trace");
  return w * cplx(1.0 - p) + ComplexMatrix::identity(9) * cplx(p / 9.0);
}

inline ComplexMatrix spa_mix(const WitnessMatrix &w, double p) { return spa_mix(w.matrix, p); }

/// p* = 3(2 - a) / (2 + 3(2 - a)) on the slice; 0 once a ≥ 2.
inline double critical_p(const MapParams &p) {
  p.require_slice();
  if (p.a >= 2.0)
    return 0.0;
  const double g = 3.0 * (2.0 - p.a);
  return g / (2.0 + g);
}

/// p* for any unit-trace Hermitian W from its smallest eigenvalue:
/// p* = 9|λ_min| / (1 + 9|λ_min|), or 0 if W ≥ 0 already.
inline double critical_p_spectral(const ComplexMatrix &w) {
  const double lmin = min_eigenvalue(w);
  if (lmin >= 0.0)
    return 0.0;
  return 9.0 * -lmin / (1.0 + 9.0 * -lmin);
}

inline bool spa_region(double b, double c, double tol = 1e-12) {
  return 2.0 * b + c >= 1.0 - tol && 2.0 * c + b >= 1.0 - tol;
}

/// 1 / (3 [2 + 3(2 - a)])
inline double spa_scale(const MapParams &p) { return 1.0 / (3.0 * (2.0 + 3.0 * (2.0 - p.a))); }

/// Closed-form W(p*): scale * (Σ_i 2|ii><ii| + (2b+c)|i,i+1><..| + (2c+b)|i,i+2><..|
///                              - Σ_{i≠j} |ii><jj|).
inline ComplexMatrix spa_state_display(const MapParams &p) {
  p.require_slice();
  ComplexMatrix m(9);
  for (std::size_t i = 0; i < 3; ++i) {
    m(detail::ket(i, i), detail::ket(i, i)) = 2.0;
    m(detail::ket(i, i + 1), detail::ket(i, i + 1)) = 2.0 * p.b + p.c;
    m(detail::ket(i, i + 2), detail::ket(i, i + 2)) = 2.0 * p.c + p.b;
    for (std::size_t j = 0; j < 3; ++j)
      if (i != j)
        m(detail::ket(i, i), detail::ket(j, j)) = -1.0;
  }
  return m * cplx(spa_scale(p));
}

struct SpaComponents {
  BipartiteState sigma12, sigma13, sigma23, sigma_d;
  double scale = 0.0;

  ComplexMatrix sum() const {
    return (sigma12.matrix + sigma13.matrix + sigma23.matrix + sigma_d.matrix) * cplx(scale);
  }
};

struct SpaResult {
  double p_star = 0.0;
  BipartiteState state;
  bool separable_certified = false;
  std::optional<SpaComponents> components;
};

/// SPA of W[a,b,c] at p*. Inside 2b + c ≥ 1, 2c + b ≥ 1 the state splits into
/// σ_12 + σ_13 + σ_23 (PPT, supported on 2⊗2 blocks) plus the diagonal σ_d.
/// Outside that region separable_certified is false and no components are set.
inline SpaResult spa_state(const MapParams &p) {
  p.require_slice();
  if (p.a >= 2.0)
    throw std::invalid_argument("spa_state: a < 2 required");
  SpaResult res;
  res.p_star = critical_p(p);
  res.state = {spa_mix(witness_matrix(p), res.p_star), true};
  if (spa_region(p.b, p.c)) {
    res.components = SpaComponents{sigma_pair(1, 2), sigma_pair(1, 3), sigma_pair(2, 3), sigma_diag(p),
                                   spa_scale(p)};
    res.separable_certified = true;
  }
  return res;
}

} // namespace qutrit
