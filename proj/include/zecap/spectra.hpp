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

// Circulant spectra, the circulant orthonormal representation with its
// diagonal shift unitary, and Gram-based representations of general graphs.

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "zecap/error.hpp"
#include "zecap/graph.hpp"
#include "zecap/numerics.hpp"

namespace zecap {

struct CirculantSpectrum {
  int n = 0;
  RealVector lambdas;  // lambda_k = sum_{j in C} exp(2 pi i jk / n)
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  int min_multiplicity = 0;
  double imaginary_residue = 0.0;  // largest |Im| seen before discarding

  /// Indices k with lambda_k within `tol` of lambda_min.
  std::vector<int> argmin(double tol = 1e-8) const {
    std::vector<int> out;
    for (int k = 0; k < n; ++k)
      if (std::abs(lambdas[k] - lambda_min) <= tol) out.push_back(k);
    return out;
  }
};

inline Complex unit_root(Int num, Int n) {
  // Reduce first so the angle stays small and exact multiples of pi/2 land cleanly.
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(mod(num, n)) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

/// l - l_min, snapped to zero inside the multiplicity cluster so that square
/// roots of it do not amplify rounding.
inline double gap_above_min(double l, double l_min, double tol = 1e-8) {
  const double g = l - l_min;
  return g <= tol ? 0.0 : g;
}

inline CirculantSpectrum circulant_spectrum(const ConnectionSet& c) {
  CirculantSpectrum s;
  s.n = static_cast<int>(c.modulus());
  s.lambdas.resize(s.n);
  for (int k = 0; k < s.n; ++k) {
    Complex sum = 0.0;
    for (Int j : c.elements()) sum += unit_root(j * k, s.n);
    s.imaginary_residue = std::max(s.imaginary_residue, std::abs(sum.imag()));
    s.lambdas[k] = sum.real();
  }
  s.lambda_min = *std::min_element(s.lambdas.begin(), s.lambdas.end());
  s.lambda_max = *std::max_element(s.lambdas.begin(), s.lambdas.end());
  s.min_multiplicity = static_cast<int>(s.argmin().size());
  return s;
}

inline CirculantSpectrum circulant_spectrum(Int n, std::vector<Int> c) { return circulant_spectrum(ConnectionSet(n, std::move(c))); }

/// U = diag(1, w, w^2, ...) with w = exp(-2 pi i / n), optionally restricted
/// to a subset of coordinates.
class DFTUnitary {
 public:
  explicit DFTUnitary(int n) : n_(n) {
    coords_.resize(n);
    for (int j = 0; j < n; ++j) coords_[j] = j;
  }
  DFTUnitary(int n, std::vector<int> coords) : n_(n), coords_(std::move(coords)) {}

  int order() const noexcept { return n_; }
  std::size_t dim() const noexcept { return coords_.size(); }
  const std::vector<int>& coordinates() const noexcept { return coords_; }

  /// Diagonal of U^k.
  ComplexVector phases(Int k = 1) const {
    ComplexVector out(coords_.size());
    for (std::size_t a = 0; a < coords_.size(); ++a) out[a] = unit_root(-k * coords_[a], n_);
    return out;
  }

  ComplexMatrix power(Int k) const {
    const auto ph = phases(k);
    return ComplexMatrix::diagonal(std::span<const Complex>(ph));
  }

  ComplexVector apply(Int k, const ComplexVector& v) const {
    const auto ph = phases(k);
    ComplexVector out(v.size());
    for (std::size_t a = 0; a < v.size(); ++a) out[a] = ph[a] * v[a];
    return out;
  }

  /// U^k M U^{-k}.
  ComplexMatrix conjugate(Int k, const ComplexMatrix& m) const {
    const auto ph = phases(k);
    ComplexMatrix out = m;
    for (std::size_t a = 0; a < m.rows(); ++a)
      for (std::size_t b = 0; b < m.cols(); ++b) out(a, b) = ph[a] * m(a, b) * std::conj(ph[b]);
    return out;
  }

 private:
  int n_;
  std::vector<int> coords_;
};

/// Rank-one orthonormal representation: unit vectors u_k and a handle c.
struct OrthonormalRep {
  std::vector<ComplexVector> vectors;
  ComplexVector handle;
  double eta = 0.0;

  std::size_t size() const noexcept { return vectors.size(); }
  std::size_t dim() const noexcept { return handle.size(); }

  HermitianMatrix projector(std::size_t k) const {
    const auto& u = vectors[k];
    return hermitize(outer<Complex>(u, u));
  }
  HermitianMatrix handle_projector() const { return hermitize(outer<Complex>(handle, handle)); }
};

inline ComplexVector basis_vector(std::size_t d, std::size_t i) {
  ComplexVector e(d, 0.0);
  e[i] = 1.0;
  return e;
}

/// u_0[j] = sqrt((l_j - l_min)/(l_max - l_min)) / sqrt(eta), u_k = U^k u_0,
/// c = e_0. With `compress`, coordinates where l_j = l_min are dropped.
inline OrthonormalRep theorem1_representation(const ConnectionSet& c, bool compress = false) {
  if (c.size() == 0) throw Error(Errc::DegenerateGraph, "empty connection set has no negative eigenvalue");
  const auto spec = circulant_spectrum(c);
  const int n = spec.n;
  const double span = spec.lambda_max - spec.lambda_min;
  const double eta = -n * spec.lambda_min / span;

  std::vector<int> coords;
  for (int j = 0; j < n; ++j)
    if (!compress || spec.lambdas[j] - spec.lambda_min > 1e-8) coords.push_back(j);
  const DFTUnitary u(n, coords);

  ComplexVector u0(coords.size());
  for (std::size_t a = 0; a < coords.size(); ++a) {
    const double w = gap_above_min(spec.lambdas[coords[a]], spec.lambda_min) / span;
    u0[a] = std::sqrt(w / eta);
  }
  OrthonormalRep rep;
  rep.eta = eta;
  rep.handle = basis_vector(coords.size(), 0);  // coordinate 0 is never dropped: l_0 = l_max
  rep.vectors.reserve(n);
  for (int k = 0; k < n; ++k) rep.vectors.push_back(u.apply(k, u0));
  return rep;
}

inline OrthonormalRep theorem1_representation(Int n, std::vector<Int> c, bool compress = false) {
  return theorem1_representation(ConnectionSet(n, std::move(c)), compress);
}

/// max over pairs of |<u_k|u_{k+m}> - delta_{m,0} - A_{k,k+m}/(-l_min)|.
inline double theorem1_identity_residual(const ConnectionSet& c, const OrthonormalRep& rep) {
  const auto spec = circulant_spectrum(c);
  const int n = spec.n;
  double worst = 0.0;
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      const Complex ip = inner<Complex>(rep.vectors[k], rep.vectors[l]);
      const double expected = (k == l ? 1.0 : 0.0) + (c.contains(l - k) ? 1.0 / -spec.lambda_min : 0.0);
      worst = std::max(worst, std::abs(ip - expected));
    }
  return worst;
}

/// max_k 1/|<c|u_k>|^2 for the stored handle.
inline double representation_value(const OrthonormalRep& rep) {
  double worst = 0.0;
  for (const auto& u : rep.vectors) {
    const double overlap = std::norm(inner<Complex>(rep.handle, u));
    if (overlap <= 1e-300) throw Error(Errc::InfiniteValue, "handle is orthogonal to a representation vector");
    worst = std::max(worst, 1.0 / overlap);
  }
  return worst;
}

struct RepCheck {
  double norm_error = 0.0;         // max | ||u_k|| - 1 |
  double nonedge_overlap = 0.0;    // max |<u_i|u_j>| over non-edges i != j
  double handle_norm_error = 0.0;
  double handle_deficit = 0.0;     // max(0, 1/eta - |<c|u_k>|^2)
  bool ok(double tol = 1e-9) const {
    return norm_error <= tol && nonedge_overlap <= tol && handle_norm_error <= tol && handle_deficit <= tol;
  }
};

inline RepCheck check_orthonormal_rep(const Graph& g, const OrthonormalRep& rep) {
  if (static_cast<int>(rep.size()) != g.order()) throw Error(Errc::InvalidInput, "rep size differs from graph order");
  RepCheck out;
  for (const auto& u : rep.vectors) {
    if (u.size() != rep.dim()) throw Error(Errc::InvalidInput, "rep vectors differ in dimension");
    out.norm_error = std::max(out.norm_error, std::abs(std::sqrt(std::real(inner<Complex>(u, u))) - 1.0));
    out.handle_deficit =
        std::max(out.handle_deficit, 1.0 / rep.eta - std::norm(inner<Complex>(rep.handle, u)));
  }
  out.handle_norm_error = std::abs(std::sqrt(std::real(inner<Complex>(rep.handle, rep.handle))) - 1.0);
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (!g.adjacent(i, j))
        out.nonedge_overlap = std::max(out.nonedge_overlap, std::abs(inner<Complex>(rep.vectors[i], rep.vectors[j])));
  return out;
}

/// True iff A is 1 on the diagonal and on every non-edge.
inline bool is_lovasz_matrix(const Graph& g, const SymmetricMatrix& a) {
  if (static_cast<int>(a.size()) != g.order()) return false;
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < g.order(); ++j)
      if ((i == j || !g.adjacent(i, j)) && a(i, j) != 1.0) return false;
  return true;
}

/// u_k = (c + x_k)/sqrt(theta) with x_k from a Gram factor of theta I - A,
/// shifted one coordinate so that c = e_0 is orthogonal to every x_k.
inline OrthonormalRep general_representation(const Graph& g, const SymmetricMatrix& a, double theta,
                                             double rank_tol = 1e-8, double psd_tol = 1e-6) {
  if (!is_lovasz_matrix(g, a)) throw Error(Errc::NotALovaszMatrix, "matrix is not 1 on the diagonal and non-edges");
  const double lmax = max_eigenvalue(a);
  if (std::abs(lmax - theta) > 1e-6 * std::max(1.0, theta))
    throw Error(Errc::InconsistentInput, "theta differs from lambda_max(A) = " + std::to_string(lmax), lmax - theta);
  const std::size_t n = a.size();
  RealMatrix shifted(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) shifted(i, j) = (i == j ? theta : 0.0) - a(i, j);
  const auto xs = gram_factor(SymmetricMatrix(shifted), rank_tol, psd_tol);

  OrthonormalRep rep;
  rep.eta = theta;
  const std::size_t d = 1 + (xs.empty() ? 0 : xs.front().size());
  rep.handle = basis_vector(d, 0);
  const double scale = 1.0 / std::sqrt(theta);
  for (const auto& x : xs) {
    ComplexVector u(d, 0.0);
    u[0] = scale;
    for (std::size_t t = 0; t < x.size(); ++t) u[t + 1] = scale * x[t];
    rep.vectors.push_back(std::move(u));
  }
  return rep;
}

}  // namespace zecap
