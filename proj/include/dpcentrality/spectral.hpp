// Copyright 2026 The dpcentrality Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "dpcentrality/error.hpp"
#include "dpcentrality/graph.hpp"

namespace dpc {

/// Dense symmetric matrix, row-major, full storage.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  /// Takes n*n row-major entries; throws InvalidParams unless the data is
  /// finite and exactly symmetric.
  SymMatrix(std::size_t n, std::vector<double> data)
      : n_(n), data_(std::move(data)) {
    if (data_.size() != n * n) {
      throw Error(ErrorCode::kInvalidParams, "matrix data size != n*n");
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double x = (*this)(i, j);
        if (!std::isfinite(x)) {
          throw Error(ErrorCode::kInvalidParams, "non-finite matrix entry");
        }
        if (x != (*this)(j, i)) {
          throw Error(ErrorCode::kInvalidParams, "matrix is not symmetric");
        }
      }
    }
  }

  std::size_t order() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * n_ + j];
  }
  // Writes both (i, j) and (j, i).
  void set(std::size_t i, std::size_t j, double x) {
    data_[i * n_ + j] = x;
    data_[j * n_ + i] = x;
  }
  void add_to_diagonal(double c) {
    for (std::size_t i = 0; i < n_; ++i) data_[i * n_ + i] += c;
  }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * n_, n_};
  }

  double trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }
  double frobenius_norm() const {
    double s = 0.0;
    for (double x : data_) s += x * x;
    return std::sqrt(s);
  }
  // Maximum absolute row sum.
  double inf_norm() const {
    double best = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      double s = 0.0;
      for (double x : row(i)) s += std::abs(x);
      best = std::max(best, s);
    }
    return best;
  }

  void multiply(std::span<const double> x, std::span<double> y) const {
    for (std::size_t i = 0; i < n_; ++i) {
      const auto r = row(i);
      y[i] = std::inner_product(r.begin(), r.end(), x.begin(), 0.0);
    }
  }

 private:
  friend std::vector<double>& raw_storage(SymMatrix&);
  std::size_t n_ = 0;
  std::vector<double> data_;
};

inline std::vector<double>& raw_storage(SymMatrix& m) { return m.data_; }

enum class SpectrumSource { kGeneral, kAdjacency, kLaplacian };

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  SpectrumSource source = SpectrumSource::kGeneral;

  std::size_t size() const noexcept { return eigenvalues.size(); }
  double largest() const { return eigenvalues.back(); }
};

struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;  // unit 2-norm, positive component sum
};

struct EigenOptions {
  double tol = 1e-10;  // relative to the Frobenius norm
  int max_sweeps = 100;
  std::size_t max_order = 5000;
};

struct PowerOptions {
  double tol = 1e-12;  // max-norm change between iterates
  std::size_t max_iter = 100000;
};

inline SymMatrix adjacency_matrix(const WeightedGraph& g) {
  SymMatrix a(g.num_vertices());
  for (const auto& e : g.edges()) a.set(e.u, e.v, e.weight);
  return a;
}

/// L = X - W with X the diagonal of weighted degrees.
inline SymMatrix laplacian_matrix(const WeightedGraph& g) {
  SymMatrix l(g.num_vertices());
  for (const auto& e : g.edges()) l.set(e.u, e.v, -e.weight);
  for (Vertex i = 0; i < g.num_vertices(); ++i) {
    l.set(i, i, g.weighted_degree(i));
  }
  return l;
}

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
/// Iterates until the off-diagonal Frobenius mass is at most
/// tol * ||M||_F, which bounds every eigenvalue error by the same amount.
inline Spectrum eigen_spectrum(const SymMatrix& m,
                               const EigenOptions& opts = {},
                               SpectrumSource source = SpectrumSource::kGeneral) {
  const std::size_t n = m.order();
  if (n > opts.max_order) {
    throw Error(ErrorCode::kSizeLimitExceeded,
                "order " + std::to_string(n) + " exceeds limit " +
                    std::to_string(opts.max_order));
  }
  SymMatrix work = m;
  auto& a = raw_storage(work);
  const double scale = m.frobenius_norm();
  const double target = opts.tol * scale;

  auto off_diagonal_norm = [&] {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) s += a[p * n + q] * a[p * n + q];
    }
    return std::sqrt(2.0 * s);
  };

  bool converged = false;
  for (int sweep = 0; sweep <= opts.max_sweeps; ++sweep) {
    if (off_diagonal_norm() <= target) {
      converged = true;
      break;
    }
    if (sweep == opts.max_sweeps) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double phi = (aqq - app) / (2.0 * apq);
        double t = 1.0 / (std::abs(phi) + std::sqrt(phi * phi + 1.0));
        if (phi < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        double* row_p = &a[p * n];
        double* row_q = &a[q * n];
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double g = row_p[r];
          const double h = row_q[r];
          const double new_p = g - s * (h + g * tau);
          const double new_q = h + s * (g - h * tau);
          row_p[r] = new_p;
          row_q[r] = new_q;
          a[r * n + q] = new_q;
        }
      }
      // Column p is not read while p is fixed; mirror row p once.
      for (std::size_t r = 0; r < n; ++r) a[r * n + p] = a[p * n + r];
    }
  }
  if (!converged) {
    throw Error(ErrorCode::kNoConvergence,
                "Jacobi did not converge in " +
                    std::to_string(opts.max_sweeps) + " sweeps");
  }
  Spectrum out;
  out.source = source;
  out.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.eigenvalues[i] = a[i * n + i];
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  return out;
}

inline Spectrum adjacency_spectrum(const WeightedGraph& g,
                                   const EigenOptions& opts = {}) {
  return eigen_spectrum(adjacency_matrix(g), opts, SpectrumSource::kAdjacency);
}

inline Spectrum laplacian_spectrum(const WeightedGraph& g,
                                   const EigenOptions& opts = {}) {
  return eigen_spectrum(laplacian_matrix(g), opts, SpectrumSource::kLaplacian);
}

/// Flips `v` so its components sum to a positive value.
inline void orient_positive(std::span<double> v) {
  const double sum = std::accumulate(v.begin(), v.end(), 0.0);
  if (sum < 0.0) {
    for (double& x : v) x = -x;
  }
}

/// Dominant eigenpair of a symmetric operator by power iteration on
/// (A + shift*I). `apply(x, y)` must write A*x into y. With shift at least
/// the spectral radius, the shifted spectrum is non-negative and the top
/// eigenvalue dominates even when A has a +/- symmetric spectrum.
/// `start` seeds the iteration; empty means the uniform vector.
template <class ApplyFn>
EigenPair power_iteration(std::size_t n, ApplyFn&& apply, double shift,
                          const PowerOptions& opts = {},
                          std::span<const double> start = {}) {
  if (n == 0) throw Error(ErrorCode::kTooSmall, "empty operator");
  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  if (start.size() == n) {
    v.assign(start.begin(), start.end());
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (!(norm > 0.0)) throw Error(ErrorCode::kInvalidParams, "zero start");
    for (double& x : v) x /= norm;
  }
  std::vector<double> y(n);
  for (std::size_t iter = 0; iter < opts.max_iter; ++iter) {
    apply(std::span<const double>(v), std::span<double>(y));
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] += shift * v[i];
      norm += y[i] * y[i];
    }
    norm = std::sqrt(norm);
    if (!(norm > 0.0)) {
      throw Error(ErrorCode::kNoConvergence, "iterate collapsed to zero");
    }
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] /= norm;
      change = std::max(change, std::abs(y[i] - v[i]));
    }
    v.swap(y);
    if (change <= opts.tol) {
      apply(std::span<const double>(v), std::span<double>(y));
      EigenPair out;
      out.value = std::inner_product(v.begin(), v.end(), y.begin(), 0.0);
      orient_positive(v);
      out.vector = std::move(v);
      return out;
    }
  }
  throw Error(ErrorCode::kNoConvergence,
              "power iteration did not converge in " +
                  std::to_string(opts.max_iter) + " iterations");
}

/// Dominant eigenpair of a non-negative irreducible symmetric matrix,
/// shifted by its infinity norm.
inline EigenPair principal_eigenpair(const SymMatrix& m,
                                     const PowerOptions& opts = {}) {
  return power_iteration(
      m.order(),
      [&m](std::span<const double> x, std::span<double> y) { m.multiply(x, y); },
      m.inf_norm(), opts);
}

/// lambda_n - lambda_{n-1}.
inline double spectral_gap(const Spectrum& s) {
  if (s.size() < 2) {
    throw Error(ErrorCode::kTooSmall, "spectral gap needs n >= 2");
  }
  const auto& ev = s.eigenvalues;
  return ev[ev.size() - 1] - ev[ev.size() - 2];
}

/// Sum of squared Laplacian eigenvalues, computed as ||L||_F^2.
inline double laplace_energy(const WeightedGraph& g) {
  double energy = 0.0;
  for (Vertex i = 0; i < g.num_vertices(); ++i) {
    const double d = g.weighted_degree(i);
    energy += d * d;
  }
  for (double w : g.weights()) energy += 2.0 * w * w;
  return energy;
}

}  // namespace dpc
