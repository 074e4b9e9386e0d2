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
#include <random>

#include "qutrit/qutrit.hpp"

namespace qutrit::testing {

inline ComplexMatrix random_matrix(std::mt19937_64 &rng, std::size_t n) {
  std::normal_distribution<double> g;
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = {g(rng), g(rng)};
  return m;
}

inline ComplexMatrix random_hermitian(std::mt19937_64 &rng, std::size_t n) {
  const ComplexMatrix m = random_matrix(rng, n);
  return (m + m.adjoint()) * cplx(0.5);
}

/// Uniform point of the slice simplex b, c ≥ 0, b + c ≤ 2.
inline MapParams random_slice_point(std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> u(0.0, 2.0);
  for (;;) {
    const double b = u(rng), c = u(rng);
    if (b + c <= 2.0)
      return slice_params(b, c);
  }
}

/// Uniform point strictly inside the ellipse disk bc ≥ (1 - a)^2.
inline MapParams random_disk_point(std::mt19937_64 &rng) {
  for (;;) {
    const MapParams p = random_slice_point(rng);
    if (ellipse_form(p.b, p.c) < 1.0 - 1e-6)
      return p;
  }
}

} // namespace qutrit::testing
