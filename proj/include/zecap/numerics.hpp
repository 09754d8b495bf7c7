// Copyright 2026 The zecap Authors
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

// Dense linear algebra used throughout the library: a small row-major matrix
// template, self-adjoint wrappers, a cyclic Jacobi eigensolver working on real
// symmetric and complex Hermitian input alike, Gram factorisation,
// Cholesky and least-squares solves.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "zecap/error.hpp"

namespace zecap {

using Complex = std::complex<double>;
using RealVector = std::vector<double>;
using ComplexVector = std::vector<Complex>;

template <class T>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};

template <class T>
inline T conj_of(const T& v) {
  if constexpr (is_complex<T>::value) {
    return std::conj(v);
  } else {
    return v;
  }
}

template <class T>
inline double real_of(const T& v) {
  if constexpr (is_complex<T>::value) {
    return v.real();
  } else {
    return v;
  }
}

template <class T>
inline bool is_finite_value(const T& v) {
  if constexpr (is_complex<T>::value) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  } else {
    return std::isfinite(v);
  }
}

template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  static Matrix diagonal(std::span<const T> d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  const std::vector<T>& data() const noexcept { return data_; }
  std::vector<T>& data() noexcept { return data_; }

  Matrix adjoint() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = conj_of((*this)(r, c));
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  T trace() const {
    T t{};
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (const T& v : data_) m = std::max(m, std::abs(v));
    return m;
  }

  double frobenius() const {
    double s = 0.0;
    for (const T& v : data_) s += std::norm(v);
    return std::sqrt(s);
  }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(T s) {
    for (T& v : data_) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, T s) { return a *= s; }
  friend Matrix operator*(T s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T aik = a(i, k);
        if (aik == T{}) continue;
        const T* brow = b.data_.data() + k * b.cols_;
        T* orow = out.data_.data() + i * out.cols_;
        for (std::size_t j = 0; j < b.cols_; ++j) orow[j] += aik * brow[j];
      }
    }
    return out;
  }

  friend std::vector<T> operator*(const Matrix& a, std::span<const T> v) {
    std::vector<T> out(a.rows_, T{});
    for (std::size_t i = 0; i < a.rows_; ++i) {
      T s{};
      for (std::size_t j = 0; j < a.cols_; ++j) s += a(i, j) * v[j];
      out[i] = s;
    }
    return out;
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<Complex>;

template <class T>
inline std::vector<T> matvec(const Matrix<T>& a, const std::vector<T>& v) {
  return a * std::span<const T>(v);
}

/// Outer product |a><b|.
template <class T>
inline Matrix<T> outer(std::span<const T> a, std::span<const T> b) {
  Matrix<T> m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * conj_of(b[j]);
  return m;
}

/// <a|b>, conjugate-linear in the first argument.
template <class T>
inline T inner(std::span<const T> a, std::span<const T> b) {
  T s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += conj_of(a[i]) * b[i];
  return s;
}

template <class T>
inline Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const T aij = a(i, j);
      if (aij == T{}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

inline ComplexMatrix to_complex(const RealMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.data().size(); ++i) out.data()[i] = m.data()[i];
  return out;
}

/// Re Tr(A^dagger B): the real inner product on matrices.
template <class T>
inline double frobenius_inner(const Matrix<T>& a, const Matrix<T>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i)
    s += real_of(conj_of(a.data()[i]) * b.data()[i]);
  return s;
}

// ---------------------------------------------------------------------------
// Self-adjoint matrices

/// A square matrix equal to its own adjoint, entry for entry. Construction
/// rejects anything else; use `hermitize` to average away roundoff first.
template <class T>
class SelfAdjoint {
 public:
  SelfAdjoint() = default;

  explicit SelfAdjoint(Matrix<T> m) : m_(std::move(m)) {
    if (!m_.square()) throw Error(Errc::InvalidInput, "self-adjoint matrix must be square");
    for (std::size_t i = 0; i < m_.rows(); ++i)
      for (std::size_t j = i; j < m_.cols(); ++j)
        if (m_(i, j) != conj_of(m_(j, i)))
          throw Error(Errc::InvalidInput, "matrix is not self-adjoint at (" + std::to_string(i) +
                                              "," + std::to_string(j) + ")");
  }

  static SelfAdjoint zero(std::size_t n) { return SelfAdjoint(Matrix<T>(n, n)); }
  static SelfAdjoint identity(std::size_t n) { return SelfAdjoint(Matrix<T>::identity(n)); }

  std::size_t size() const noexcept { return m_.rows(); }
  const T& operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  const Matrix<T>& matrix() const noexcept { return m_; }
  double max_abs() const { return m_.max_abs(); }
  double trace() const { return real_of(m_.trace()); }

 private:
  Matrix<T> m_;
};

using SymmetricMatrix = SelfAdjoint<double>;
using HermitianMatrix = SelfAdjoint<Complex>;

/// (M + M^dagger) / 2, which is exactly self-adjoint in floating point.
template <class T>
inline SelfAdjoint<T> hermitize(const Matrix<T>& m) {
  if (!m.square()) throw Error(Errc::InvalidInput, "hermitize: matrix must be square");
  Matrix<T> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = (m(i, j) + conj_of(m(j, i))) * 0.5;
  return SelfAdjoint<T>(std::move(out));
}

// ---------------------------------------------------------------------------
// Eigendecomposition

template <class T>
struct EigenDecomposition {
  RealVector values;   // ascending
  Matrix<T> vectors;   // column k belongs to values[k]
};

/// Cyclic Jacobi. Complex input is handled with phase-adjusted plane
/// rotations so no real embedding or pair deduplication is needed.
template <class T>
EigenDecomposition<T> eig(const SelfAdjoint<T>& input) {
  const std::size_t n = input.size();
  if (n == 0) throw Error(Errc::InvalidInput, "eig: empty matrix");
  Matrix<T> a = input.matrix();
  for (const T& v : a.data())
    if (!is_finite_value(v)) throw Error(Errc::InvalidInput, "eig: non-finite entry");
  Matrix<T> v = Matrix<T>::identity(n);

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0, diag = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      diag += real_of(a(p, p)) * real_of(a(p, p));
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    }
    if (off == 0.0 || off <= 1e-31 * (diag + 2.0 * off)) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        const double app = real_of(a(p, p));
        const double aqq = real_of(a(q, q));
        // Past the first sweeps, drop entries below the diagonal's resolution.
        if (sweep > 4 && std::abs(app) + 100.0 * mag == std::abs(app) &&
            std::abs(aqq) + 100.0 * mag == std::abs(aqq)) {
          a(p, q) = T{};
          a(q, p) = T{};
          continue;
        }
        const T phase = a(p, q) / mag;
        const T cphase = conj_of(phase);
        const double theta = (aqq - app) / (2.0 * mag);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const T akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * cphase * akq;
          a(k, q) = s * akp + c * cphase * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const T apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * apk + c * phase * aqk;
        }
        a(p, p) = T{app - t * mag};
        a(q, q) = T{aqq + t * mag};
        a(p, q) = T{};
        a(q, p) = T{};
        for (std::size_t k = 0; k < n; ++k) {
          const T vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * cphase * vkq;
          v(k, q) = s * vkp + c * cphase * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return real_of(a(i, i)) < real_of(a(j, j)); });
  EigenDecomposition<T> out{RealVector(n), Matrix<T>(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = real_of(a(order[k], order[k]));
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

template <class T>
double min_eigenvalue(const SelfAdjoint<T>& m) {
  return eig(m).values.front();
}

template <class T>
double max_eigenvalue(const SelfAdjoint<T>& m) {
  return eig(m).values.back();
}

/// True iff the smallest eigenvalue is >= -tol.
template <class T>
bool is_psd(const SelfAdjoint<T>& m, double tol) {
  if (tol < 0.0) throw Error(Errc::InvalidInput, "is_psd: negative tolerance");
  return min_eigenvalue(m) >= -tol;
}

/// Default PSD tolerance: 1e-9 scaled by the max-norm.
template <class T>
double default_psd_tolerance(const SelfAdjoint<T>& m) {
  return 1e-9 * std::max(1.0, m.max_abs());
}

template <class T>
bool is_psd(const SelfAdjoint<T>& m) {
  return is_psd(m, default_psd_tolerance(m));
}

// ---------------------------------------------------------------------------
// Factorisations and solves

/// Lower Cholesky factor of a symmetric positive definite matrix, or nullopt.
inline std::optional<RealMatrix> cholesky(const RealMatrix& a) {
  const std::size_t n = a.rows();
  RealMatrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = a(j, j);
    const auto lj = l.row(j);
    for (std::size_t k = 0; k < j; ++k) d -= lj[k] * lj[k];
    if (!(d > 0.0) || !std::isfinite(d)) return std::nullopt;
    const double djj = std::sqrt(d);
    l(j, j) = djj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = a(i, j);
      const auto li = l.row(i);
      for (std::size_t k = 0; k < j; ++k) s -= li[k] * lj[k];
      l(i, j) = s / djj;
    }
  }
  return l;
}

/// Solves L L^T x = b given the lower factor.
inline RealVector cholesky_solve(const RealMatrix& l, RealVector b) {
  const std::size_t n = l.rows();
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * b[k];
    b[i] = s / l(i, i);
  }
  for (std::size_t ii = n; ii-- > 0;) {
    double s = b[ii];
    for (std::size_t k = ii + 1; k < n; ++k) s -= l(k, ii) * b[k];
    b[ii] = s / l(ii, ii);
  }
  return b;
}

/// Inverse of an SPD matrix from its Cholesky factor.
inline RealMatrix cholesky_inverse(const RealMatrix& l) {
  const std::size_t n = l.rows();
  RealMatrix inv(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    RealVector e(n, 0.0);
    e[c] = 1.0;
    const RealVector x = cholesky_solve(l, std::move(e));
    for (std::size_t r = 0; r < n; ++r) inv(r, c) = x[r];
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double avg = 0.5 * (inv(i, j) + inv(j, i));
      inv(i, j) = avg;
      inv(j, i) = avg;
    }
  return inv;
}

/// Vectors x_i with <x_i|x_j> = M[i][j]; dimension = number of eigenvalues
/// above rank_tol. Eigenvalues below -psd_tol raise NotPSD.
inline std::vector<RealVector> gram_factor(const SymmetricMatrix& m, double rank_tol, double psd_tol) {
  const auto dec = eig(m);
  const std::size_t n = m.size();
  if (dec.values.front() < -psd_tol)
    throw Error(Errc::NotPSD, "gram_factor: eigenvalue " + std::to_string(dec.values.front()),
                dec.values.front());
  std::vector<std::size_t> kept;
  for (std::size_t k = n; k-- > 0;)
    if (dec.values[k] > rank_tol) kept.push_back(k);
  std::vector<RealVector> xs(n, RealVector(kept.size(), 0.0));
  for (std::size_t c = 0; c < kept.size(); ++c) {
    const double scale = std::sqrt(dec.values[kept[c]]);
    for (std::size_t i = 0; i < n; ++i) xs[i][c] = dec.vectors(i, kept[c]) * scale;
  }
  return xs;
}

inline std::vector<RealVector> gram_factor(const SymmetricMatrix& m, double rank_tol) {
  return gram_factor(m, rank_tol, rank_tol);
}

struct LinearSolution {
  RealVector x;
  double residual = 0.0;  // ||Ax - b||_2
  std::size_t rank = 0;
};

/// Least-squares solve by Householder QR with column pivoting. Square or
/// overdetermined systems; a residual above `tol * max(1, ||b||)` raises
/// NoSolution with the residual attached.
inline LinearSolution solve_linear(const RealMatrix& a_in, const RealVector& b_in, double tol = 1e-9) {
  const std::size_t m = a_in.rows(), n = a_in.cols();
  if (b_in.size() != m) throw Error(Errc::InvalidInput, "solve_linear: dimension mismatch");
  if (m < n) throw Error(Errc::InvalidInput, "solve_linear: underdetermined system");
  for (double v : a_in.data())
    if (!std::isfinite(v)) throw Error(Errc::InvalidInput, "solve_linear: non-finite entry");
  for (double v : b_in)
    if (!std::isfinite(v)) throw Error(Errc::InvalidInput, "solve_linear: non-finite rhs");

  RealMatrix a = a_in;
  RealVector b = b_in;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  RealVector colnorm(n, 0.0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) colnorm[j] += a(i, j) * a(i, j);
  const double scale = std::max(1.0, a.max_abs());

  std::size_t rank = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = k;
    for (std::size_t j = k + 1; j < n; ++j)
      if (colnorm[j] > colnorm[best]) best = j;
    if (best != k) {
      for (std::size_t i = 0; i < m; ++i) std::swap(a(i, k), a(i, best));
      std::swap(colnorm[k], colnorm[best]);
      std::swap(perm[k], perm[best]);
    }
    double norm = 0.0;
    for (std::size_t i = k; i < m; ++i) norm += a(i, k) * a(i, k);
    norm = std::sqrt(norm);
    if (norm <= 1e-12 * scale) break;
    ++rank;
    const double alpha = a(k, k) > 0 ? -norm : norm;
    RealVector v(m - k);
    for (std::size_t i = k; i < m; ++i) v[i - k] = a(i, k);
    v[0] -= alpha;
    double vnorm2 = 0.0;
    for (double x : v) vnorm2 += x * x;
    if (vnorm2 > 0.0) {
      for (std::size_t j = k; j < n; ++j) {
        double dot = 0.0;
        for (std::size_t i = k; i < m; ++i) dot += v[i - k] * a(i, j);
        const double f = 2.0 * dot / vnorm2;
        for (std::size_t i = k; i < m; ++i) a(i, j) -= f * v[i - k];
      }
      double dot = 0.0;
      for (std::size_t i = k; i < m; ++i) dot += v[i - k] * b[i];
      const double f = 2.0 * dot / vnorm2;
      for (std::size_t i = k; i < m; ++i) b[i] -= f * v[i - k];
    }
    for (std::size_t j = k + 1; j < n; ++j) {
      colnorm[j] = 0.0;
      for (std::size_t i = k + 1; i < m; ++i) colnorm[j] += a(i, j) * a(i, j);
    }
  }

  RealVector z(n, 0.0);
  for (std::size_t ii = rank; ii-- > 0;) {
    double s = b[ii];
    for (std::size_t j = ii + 1; j < rank; ++j) s -= a(ii, j) * z[j];
    z[ii] = s / a(ii, ii);
  }
  LinearSolution out;
  out.x.assign(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) out.x[perm[j]] = z[j];
  out.rank = rank;

  double res = 0.0, bnorm = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    double r = -b_in[i];
    for (std::size_t j = 0; j < n; ++j) r += a_in(i, j) * out.x[j];
    res += r * r;
    bnorm += b_in[i] * b_in[i];
  }
  out.residual = std::sqrt(res);
  if (out.residual > tol * std::max(1.0, std::sqrt(bnorm)))
    throw Error(Errc::NoSolution, "solve_linear: inconsistent system, residual " +
                                      std::to_string(out.residual),
                out.residual);
  return out;
}

}  // namespace zecap
