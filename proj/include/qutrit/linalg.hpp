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

/* linalg.hpp
 * Small dense matrix kernel used throughout the library. Matrices are square,
 * stored row-major, and sized at runtime; every operator the library deals
 * with is at most 9x9, so nothing here tries to be clever about blocking or
 * vectorisation.
 *
 * Bipartite index convention: |ij> (i on the first factor, j on the second,
 * both 0-based) lives at flat index i * dB + j.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace qutrit {

using cplx = std::complex<double>;

/// Default absolute tolerance on the smallest eigenvalue for PSD tests.
inline constexpr double kPsdTol = 1e-9;

namespace detail {
template <class T>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};

template <class T>
T conj_if(const T &x) {
  if constexpr (is_complex<T>::value)
    return std::conj(x);
  else
    return x;
}
} // namespace detail

/// Square dense matrix with runtime dimension.
template <class Scalar>
class DenseMatrix {
public:
  using value_type = Scalar;

  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
    if (dim == 0)
      throw std::invalid_argument("DenseMatrix: dimension must be positive");
  }
  /// Row-major initializer; the entry count must be a perfect square.
  DenseMatrix(std::initializer_list<Scalar> rowMajor) : data_(rowMajor) {
    auto d = static_cast<std::size_t>(std::llround(std::sqrt(double(data_.size()))));
    if (d == 0 || d * d != data_.size())
      throw std::invalid_argument("DenseMatrix: initializer is not square");
    dim_ = d;
  }

  static DenseMatrix identity(std::size_t dim) {
    DenseMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
      m(i, i) = Scalar(1);
    return m;
  }
  static DenseMatrix zeros(std::size_t dim) { return DenseMatrix(dim); }
  static DenseMatrix diagonal(std::span<const Scalar> d) {
    DenseMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
      m(i, i) = d[i];
    return m;
  }
  static DenseMatrix diagonal(std::initializer_list<Scalar> d) {
    return diagonal(std::span<const Scalar>(d.begin(), d.size()));
  }

  std::size_t dim() const noexcept { return dim_; }

  Scalar &operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Scalar &operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  std::span<const Scalar> data() const noexcept { return data_; }

  DenseMatrix &operator+=(const DenseMatrix &o) {
    require_same(o, "operator+=");
    for (std::size_t k = 0; k < data_.size(); ++k)
      data_[k] += o.data_[k];
    return *this;
  }
  DenseMatrix &operator-=(const DenseMatrix &o) {
    require_same(o, "operator-=");
    for (std::size_t k = 0; k < data_.size(); ++k)
      data_[k] -= o.data_[k];
    return *this;
  }
  DenseMatrix &operator*=(Scalar s) {
    for (auto &x : data_)
      x *= s;
    return *this;
  }

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix &b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix &b) { return a -= b; }
  friend DenseMatrix operator-(DenseMatrix a) { return a *= Scalar(-1); }
  friend DenseMatrix operator*(DenseMatrix a, Scalar s) { return a *= s; }
  friend DenseMatrix operator*(Scalar s, DenseMatrix a) { return a *= s; }

  friend DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b) {
    a.require_same(b, "operator*");
    const std::size_t n = a.dim_;
    DenseMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar aik = a(i, k);
        if (aik == Scalar(0))
          continue;
        for (std::size_t j = 0; j < n; ++j)
          out(i, j) += aik * b(k, j);
      }
    return out;
  }

  std::vector<Scalar> operator*(std::span<const Scalar> v) const {
    if (v.size() != dim_)
      throw std::invalid_argument("DenseMatrix: vector size mismatch");
    std::vector<Scalar> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        out[i] += (*this)(i, j) * v[j];
    return out;
  }

  DenseMatrix adjoint() const {
    DenseMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        out(j, i) = detail::conj_if((*this)(i, j));
    return out;
  }
  DenseMatrix transpose() const {
    DenseMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        out(j, i) = (*this)(i, j);
    return out;
  }

  Scalar trace() const {
    Scalar t{};
    for (std::size_t i = 0; i < dim_; ++i)
      t += (*this)(i, i);
    return t;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto &x : data_)
      s += std::norm(x);
    return std::sqrt(s);
  }

  /// Largest absolute entry.
  double max_abs() const {
    double m = 0.0;
    for (const auto &x : data_)
      m = std::max(m, double(std::abs(x)));
    return m;
  }

  bool operator==(const DenseMatrix &) const = default;

private:
  void require_same(const DenseMatrix &o, const char *what) const {
    if (o.dim_ != dim_)
      throw std::invalid_argument(std::string("DenseMatrix::") + what + ": dimension mismatch");
  }

  std::size_t dim_ = 0;
  std::vector<Scalar> data_;
};

using ComplexMatrix = DenseMatrix<cplx>;
using RealMatrix = DenseMatrix<double>;
using ComplexVector = std::vector<cplx>;

inline ComplexMatrix to_complex(const RealMatrix &m) {
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      out(i, j) = m(i, j);
  return out;
}

/// ‖A - B‖_F
template <class S>
double frobenius_distance(const DenseMatrix<S> &a, const DenseMatrix<S> &b) {
  return (a - b).frobenius_norm();
}

/// Kronecker product, row index (iA, iB) -> iA * dim(B) + iB.
template <class S>
DenseMatrix<S> kron(const DenseMatrix<S> &a, const DenseMatrix<S> &b) {
  const std::size_t m = a.dim(), n = b.dim();
  DenseMatrix<S> out(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) {
      const S aik = a(i, k);
      if (aik == S(0))
        continue;
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l)
          out(i * n + j, k * n + l) = aik * b(j, l);
    }
  return out;
}

inline ComplexVector kron(std::span<const cplx> u, std::span<const cplx> v) {
  ComplexVector out(u.size() * v.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      out[i * v.size() + j] = u[i] * v[j];
  return out;
}

/// |v><w|
inline ComplexMatrix outer(std::span<const cplx> v, std::span<const cplx> w) {
  if (v.size() != w.size())
    throw std::invalid_argument("outer: size mismatch");
  ComplexMatrix m(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < w.size(); ++j)
      m(i, j) = v[i] * std::conj(w[j]);
  return m;
}

/// <v|w>
inline cplx inner(std::span<const cplx> v, std::span<const cplx> w) {
  if (v.size() != w.size())
    throw std::invalid_argument("inner: size mismatch");
  cplx s{};
  for (std::size_t i = 0; i < v.size(); ++i)
    s += std::conj(v[i]) * w[i];
  return s;
}

inline double norm(std::span<const cplx> v) { return std::sqrt(std::abs(inner(v, v))); }

/// Computational basis vector |k> in C^dim.
inline ComplexVector basis_ket(std::size_t dim, std::size_t k) {
  ComplexVector v(dim);
  v.at(k) = 1.0;
  return v;
}

/// |k><l| in M_dim.
inline ComplexMatrix matrix_unit(std::size_t dim, std::size_t k, std::size_t l) {
  ComplexMatrix m(dim);
  m(k, l) = 1.0;
  return m;
}

enum class Subsystem { First, Second };

/// Partial transpose of a (dA*dB)-dimensional operator.
/// For Subsystem::Second, <ij|M^Γ|kl> = <il|M|kj>.
inline ComplexMatrix partial_transpose(const ComplexMatrix &m, Subsystem which = Subsystem::Second,
                                       std::size_t dA = 3, std::size_t dB = 3) {
  if (m.dim() != dA * dB)
    throw std::invalid_argument("partial_transpose: expected dimension " +
                                std::to_string(dA * dB) + ", got " + std::to_string(m.dim()));
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < dA; ++i)
    for (std::size_t j = 0; j < dB; ++j)
      for (std::size_t k = 0; k < dA; ++k)
        for (std::size_t l = 0; l < dB; ++l) {
          const cplx v = which == Subsystem::Second ? m(i * dB + l, k * dB + j)
                                                    : m(k * dB + j, i * dB + l);
          out(i * dB + j, k * dB + l) = v;
        }
  return out;
}

inline double hermiticity_defect(const ComplexMatrix &h) {
  return frobenius_distance(h, h.adjoint());
}

inline bool is_hermitian(const ComplexMatrix &h, double tol = 1e-12) {
  return hermiticity_defect(h) <= tol * std::max(1.0, h.frobenius_norm());
}

/// Tr(AB)
template <class S>
S trace_pair(const DenseMatrix<S> &a, const DenseMatrix<S> &b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("trace_pair: dimension mismatch");
  S t{};
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k)
      t += a(i, k) * b(k, i);
  return t;
}

struct HermitianEigenResult {
  std::vector<double> eigenvalues; ///< ascending
  ComplexMatrix eigenvectors;      ///< column k pairs with eigenvalues[k]

  ComplexVector eigenvector(std::size_t k) const {
    ComplexVector v(eigenvectors.dim());
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] = eigenvectors(i, k);
    return v;
  }
  double min() const { return eigenvalues.front(); }
  double max() const { return eigenvalues.back(); }
};

/// Cyclic complex Jacobi. Each rotation is a phase fix on column q followed by
/// a real Givens rotation; sweeps continue until the off-diagonal Frobenius
/// norm drops below 1e-13 (relative to ‖H‖_F, absolute for tiny H).
inline HermitianEigenResult hermitian_eigen(const ComplexMatrix &h, double tol = 1e-10) {
  if (h.dim() == 0)
    throw std::invalid_argument("hermitian_eigen: empty matrix");
  const double scale = h.frobenius_norm();
  if (hermiticity_defect(h) > tol * scale)
    throw std::invalid_argument("hermitian_eigen: matrix is not Hermitian");

  const std::size_t n = h.dim();
  ComplexMatrix a = h;
  for (std::size_t i = 0; i < n; ++i)
    a(i, i) = a(i, i).real();
  ComplexMatrix v = ComplexMatrix::identity(n);

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j)
          s += std::norm(a(i, j));
    return std::sqrt(s);
  };

  const double threshold = 1e-13 * std::max(scale, 1e-30);
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && off_norm() > threshold; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx hpq = a(p, q);
        const double mag = std::abs(hpq);
        if (mag == 0.0)
          continue;
        const cplx phase = hpq / mag; // e^{iφ}
        const double app = a(p, p).real(), aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // U = diag(1, e^{-iφ}) * [[c, s], [-s, c]] on the (p, q) plane.
        const cplx upp = c, upq = s;
        const cplx uqp = -s * std::conj(phase), uqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) { // A <- A U
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) { // A <- U^† A
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) { // V <- V U
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
      }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  HermitianEigenResult res{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    res.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i)
      res.eigenvectors(i, k) = v(i, order[k]);
  }
  return res;
}

inline double min_eigenvalue(const ComplexMatrix &h) { return hermitian_eigen(h).min(); }

/// True iff the smallest eigenvalue is ≥ -tol.
inline bool is_psd(const ComplexMatrix &h, double tol = kPsdTol) {
  return hermitian_eigen(h).min() >= -tol;
}

/// Number of eigenvalues above rel_tol * (largest |eigenvalue|).
inline std::size_t numerical_rank(const ComplexMatrix &h, double rel_tol = 1e-8) {
  const auto eig = hermitian_eigen(h);
  double top = 0.0;
  for (double e : eig.eigenvalues)
    top = std::max(top, std::abs(e));
  if (top == 0.0)
    return 0;
  return static_cast<std::size_t>(std::count_if(eig.eigenvalues.begin(), eig.eigenvalues.end(),
                                                [&](double e) { return e > rel_tol * top; }));
}

} // namespace qutrit
