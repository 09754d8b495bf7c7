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

// Choi-matrix tests for bipartite quantum non-signalling correlations.
// Tensor factors are ordered A_i' (x) A_o (x) B_i' (x) B_o.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "zecap/error.hpp"
#include "zecap/numerics.hpp"

namespace zecap {

struct ChoiMatrix {
  std::size_t a_in = 1, a_out = 1, b_in = 1, b_out = 1;
  HermitianMatrix omega;

  std::size_t total() const { return a_in * a_out * b_in * b_out; }
  std::array<std::size_t, 4> dims() const { return {a_in, a_out, b_in, b_out}; }
};

/// Partial trace of m over the factors with keep[f] == false.
inline ComplexMatrix partial_trace(const ComplexMatrix& m, const std::vector<std::size_t>& dims, const std::vector<bool>& keep) {
  const std::size_t f = dims.size();
  std::size_t total = 1, kept = 1;
  for (std::size_t i = 0; i < f; ++i) {
    total *= dims[i];
    if (keep[i]) kept *= dims[i];
  }
  if (m.rows() != total || m.cols() != total) throw Error(Errc::InvalidInput, "partial_trace: dimension mismatch");
  ComplexMatrix out(kept, kept);
  std::vector<std::size_t> ri(f), ci(f);
  // Iterate over all (row, col) pairs whose traced indices agree.
  for (std::size_t r = 0; r < total; ++r) {
    std::size_t x = r;
    for (std::size_t i = f; i-- > 0;) {
      ri[i] = x % dims[i];
      x /= dims[i];
    }
    for (std::size_t c = 0; c < total; ++c) {
      std::size_t y = c;
      bool agree = true;
      for (std::size_t i = f; i-- > 0;) {
        ci[i] = y % dims[i];
        y /= dims[i];
        if (!keep[i] && ci[i] != ri[i]) agree = false;
      }
      if (!agree) continue;
      std::size_t rk = 0, ck = 0;
      for (std::size_t i = 0; i < f; ++i)
        if (keep[i]) {
          rk = rk * dims[i] + ri[i];
          ck = ck * dims[i] + ci[i];
        }
      out(rk, ck) += m(r, c);
    }
  }
  return out;
}

/// Generalised Gell-Mann matrices: a traceless Hermitian basis of size d^2 - 1.
inline std::vector<ComplexMatrix> gell_mann_basis(std::size_t d) {
  std::vector<ComplexMatrix> out;
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = j + 1; k < d; ++k) {
      ComplexMatrix s(d, d), a(d, d);
      s(j, k) = s(k, j) = 1.0;
      a(j, k) = Complex(0.0, -1.0);
      a(k, j) = Complex(0.0, 1.0);
      out.push_back(std::move(s));
      out.push_back(std::move(a));
    }
  for (std::size_t l = 1; l < d; ++l) {
    ComplexMatrix g(d, d);
    const double scale = std::sqrt(2.0 / static_cast<double>(l * (l + 1)));
    for (std::size_t j = 0; j < l; ++j) g(j, j) = scale;
    g(l, l) = -scale * static_cast<double>(l);
    out.push_back(std::move(g));
  }
  return out;
}

struct NonsignallingReport {
  double psd = 0.0;           // max(0, -lambda_min(Omega))
  double trace_output = 0.0;  // || Tr_{A_o B_o} Omega - I ||_max
  double a_to_b = 0.0;        // max over X of || Tr_{A_o A_i'}(Omega (X^T (x) I)) ||_max
  double b_to_a = 0.0;        // same with the roles of A and B exchanged
  double tol = 0.0;
  bool psd_ok() const { return psd <= tol; }
  bool trace_ok() const { return trace_output <= tol; }
  bool a_to_b_ok() const { return a_to_b <= tol; }
  bool b_to_a_ok() const { return b_to_a <= tol; }
  bool ok() const { return psd_ok() && trace_ok() && a_to_b_ok() && b_to_a_ok(); }
};

inline NonsignallingReport check_nonsignalling(const ChoiMatrix& choi, double tol) {
  if (choi.omega.size() != choi.total()) throw Error(Errc::InvalidInput, "Choi matrix size differs from the product of dimensions");
  const std::vector<std::size_t> dims{choi.a_in, choi.a_out, choi.b_in, choi.b_out};
  const ComplexMatrix& om = choi.omega.matrix();
  NonsignallingReport out;
  out.tol = tol;
  out.psd = std::max(0.0, -min_eigenvalue(choi.omega));

  const ComplexMatrix inputs = partial_trace(om, dims, {true, false, true, false});
  out.trace_output = (inputs - ComplexMatrix::identity(choi.a_in * choi.b_in)).max_abs();

  // X^T on one input factor, identity elsewhere.
  auto lifted = [&](const ComplexMatrix& x, bool on_a) {
    const ComplexMatrix xt = x.transpose();
    const ComplexMatrix ia = ComplexMatrix::identity(choi.a_out);
    const ComplexMatrix ib = ComplexMatrix::identity(choi.b_in * choi.b_out);
    if (on_a) return kron(kron(xt, ia), ib);
    const ComplexMatrix left = ComplexMatrix::identity(choi.a_in * choi.a_out);
    return kron(kron(left, xt), ComplexMatrix::identity(choi.b_out));
  };
  for (const auto& x : gell_mann_basis(choi.a_in)) {
    const ComplexMatrix r = partial_trace(om * lifted(x, true), dims, {false, false, true, true});
    out.a_to_b = std::max(out.a_to_b, r.max_abs());
  }
  for (const auto& y : gell_mann_basis(choi.b_in)) {
    const ComplexMatrix r = partial_trace(om * lifted(y, false), dims, {true, true, false, false});
    out.b_to_a = std::max(out.b_to_a, r.max_abs());
  }
  return out;
}

/// Omega = sum |a><a'| (x) |b><b'| (x) Pi(|a><a'| (x) |b><b'|), reordered to
/// A_i' A_o B_i' B_o. `pi(a, a', b, b')` returns a matrix on A_o (x) B_o.
inline ChoiMatrix choi_from_map(std::size_t a_in, std::size_t a_out, std::size_t b_in, std::size_t b_out,
                                const std::function<ComplexMatrix(std::size_t, std::size_t, std::size_t, std::size_t)>& pi) {
  ChoiMatrix out{a_in, a_out, b_in, b_out, HermitianMatrix::zero(a_in * a_out * b_in * b_out)};
  ComplexMatrix om(out.total(), out.total());
  auto index = [&](std::size_t ai, std::size_t ao, std::size_t bi, std::size_t bo) {
    return ((ai * a_out + ao) * b_in + bi) * b_out + bo;
  };
  for (std::size_t a = 0; a < a_in; ++a)
    for (std::size_t a2 = 0; a2 < a_in; ++a2)
      for (std::size_t b = 0; b < b_in; ++b)
        for (std::size_t b2 = 0; b2 < b_in; ++b2) {
          const ComplexMatrix img = pi(a, a2, b, b2);
          if (img.rows() != a_out * b_out) throw Error(Errc::InvalidInput, "map output has the wrong dimension");
          for (std::size_t ao = 0; ao < a_out; ++ao)
            for (std::size_t bo = 0; bo < b_out; ++bo)
              for (std::size_t ao2 = 0; ao2 < a_out; ++ao2)
                for (std::size_t bo2 = 0; bo2 < b_out; ++bo2)
                  om(index(a, ao, b, bo), index(a2, ao2, b2, bo2)) += img(ao * b_out + bo, ao2 * b_out + bo2);
        }
  out.omega = hermitize(om);
  return out;
}

/// Discards both inputs and outputs |0><0| (x) |0><0|.
inline ChoiMatrix product_channel_choi(std::size_t d) {
  ComplexMatrix fixed(d * d, d * d);
  fixed(0, 0) = 1.0;
  return choi_from_map(d, d, d, d, [&](std::size_t a, std::size_t a2, std::size_t b, std::size_t b2) {
    return (a == a2 && b == b2) ? fixed : ComplexMatrix(d * d, d * d);
  });
}

/// Sends Alice's input to Bob's output, Alice receives |0><0|, Bob's input is
/// discarded. Signals from A to B.
inline ChoiMatrix identity_channel_choi(std::size_t d) {
  return choi_from_map(d, d, d, d, [&](std::size_t a, std::size_t a2, std::size_t b, std::size_t b2) {
    ComplexMatrix out(d * d, d * d);
    if (b == b2) out(0 * d + a, 0 * d + a2) = 1.0;
    return out;
  });
}

/// Ignores both inputs and prepares the maximally entangled state on A_o B_o.
inline ChoiMatrix shared_entanglement_choi(std::size_t d) {
  ComplexMatrix phi(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) phi(i * d + i, j * d + j) = 1.0 / static_cast<double>(d);
  return choi_from_map(d, d, d, d, [&](std::size_t a, std::size_t a2, std::size_t b, std::size_t b2) {
    return (a == a2 && b == b2) ? phi : ComplexMatrix(d * d, d * d);
  });
}

}  // namespace zecap
