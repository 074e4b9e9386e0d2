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
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "linalg.hpp"

namespace qutrit {

/// Orthonormal Hermitian basis of M_n(C) with elements[0] = I_n / sqrt(n).
struct OrthonormalBasis {
  std::size_t n = 0;
  std::vector<ComplexMatrix> elements;

  std::size_t size() const noexcept { return elements.size(); }
  const ComplexMatrix &operator[](std::size_t k) const { return elements[k]; }

  /// Coefficients Tr(f_k X); complex unless X is Hermitian.
  ComplexVector coefficients(const ComplexMatrix &x) const {
    ComplexVector out(elements.size());
    for (std::size_t k = 0; k < elements.size(); ++k)
      out[k] = trace_pair(elements[k], x);
    return out;
  }

  ComplexMatrix synthesize(std::span<const cplx> coeffs) const {
    ComplexMatrix out(n);
    for (std::size_t k = 0; k < elements.size(); ++k)
      out += elements[k] * coeffs[k];
    return out;
  }
};

/// Generalized Gell-Mann basis, ordered
///   f_0, d_1..d_{n-1}, u_{12}, u_{13}, ..., u_{(n-1)n}, v_{12}, ..., v_{(n-1)n}
/// with (k, l) pairs in lexicographic order. The rotation construction in
/// maps.hpp relies on the diagonal generators coming right after f_0.
inline OrthonormalBasis build_gellmann(std::size_t n) {
  if (n < 2)
    throw std::invalid_argument("build_gellmann: n must be at least 2");

  OrthonormalBasis basis{n, {}};
  basis.elements.reserve(n * n);
  basis.elements.push_back(ComplexMatrix::identity(n) * cplx(1.0 / std::sqrt(double(n))));

  for (std::size_t l = 1; l < n; ++l) {
    ComplexMatrix d(n);
    for (std::size_t k = 0; k < l; ++k)
      d(k, k) = 1.0;
    d(l, l) = -double(l);
    basis.elements.push_back(d * cplx(1.0 / std::sqrt(double(l * (l + 1)))));
  }

  const double r = 1.0 / std::sqrt(2.0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l) {
      ComplexMatrix u(n);
      u(k, l) = r;
      u(l, k) = r;
      basis.elements.push_back(std::move(u));
    }
  const cplx mi(0.0, -r);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l) {
      ComplexMatrix v(n);
      v(k, l) = mi;
      v(l, k) = -mi;
      basis.elements.push_back(std::move(v));
    }
  return basis;
}

/// G_kl = Tr(f_k f_l); the identity for an orthonormal basis.
inline ComplexMatrix gram_matrix(const OrthonormalBasis &basis) {
  ComplexMatrix g(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t l = 0; l < basis.size(); ++l)
      g(k, l) = trace_pair(basis[k], basis[l]);
  return g;
}

} // namespace qutrit
