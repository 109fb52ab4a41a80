#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "docsim/error.hpp"
#include "docsim/rng.hpp"

namespace docsim {

template <typename Scalar>
using DynamicMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using DynamicVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Rank-k factorization A ~ U diag(s) V^T with U, V column-orthonormal and s nonincreasing.
template <typename Scalar>
struct TruncatedSvd {
  DynamicMatrix<Scalar> U;
  DynamicVector<Scalar> singular_values;
  DynamicMatrix<Scalar> V;
  /// Largest Ritz residual ||A^T u - s v|| among the returned triplets, relative to s_max.
  Scalar residual = 0;
  /// Bidiagonalization steps taken.
  std::size_t iterations = 0;
};

struct SvdOptions {
  double tol = 1e-10;
  /// 0 selects 10 * min(rows, cols).
  std::size_t max_iter = 0;
  std::uint64_t seed = 0x5EED;
};

/// Full SVD of a small square matrix by one-sided (Hestenes) Jacobi rotations.
/// Returns B = X diag(s) Y^T with s sorted nonincreasing; X is completed to an
/// orthonormal basis where singular values vanish.
template <typename Scalar>
struct SmallSvd {
  DynamicMatrix<Scalar> X;
  DynamicVector<Scalar> s;
  DynamicMatrix<Scalar> Y;
};

template <typename Derived>
SmallSvd<typename Derived::Scalar> jacobi_svd(const Eigen::MatrixBase<Derived>& B,
                                              int max_sweeps = 80) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index p = B.cols();
  DynamicMatrix<Scalar> W = B;
  DynamicMatrix<Scalar> Y = DynamicMatrix<Scalar>::Identity(p, p);
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool rotated = false;
    for (Eigen::Index i = 0; i + 1 < p; ++i) {
      for (Eigen::Index j = i + 1; j < p; ++j) {
        const Scalar alpha = W.col(i).squaredNorm();
        const Scalar beta = W.col(j).squaredNorm();
        const Scalar gamma = W.col(i).dot(W.col(j));
        if (gamma == Scalar(0) || std::abs(gamma) <= eps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const Scalar zeta = (beta - alpha) / (Scalar(2) * gamma);
        const Scalar t = (zeta >= 0 ? Scalar(1) : Scalar(-1)) / (std::abs(zeta) + std::sqrt(Scalar(1) + zeta * zeta));
        const Scalar c = Scalar(1) / std::sqrt(Scalar(1) + t * t);
        const Scalar s = c * t;
        for (Eigen::Index r = 0; r < p; ++r) {
          const Scalar wi = W(r, i);
          const Scalar wj = W(r, j);
          W(r, i) = c * wi - s * wj;
          W(r, j) = s * wi + c * wj;
          const Scalar yi = Y(r, i);
          const Scalar yj = Y(r, j);
          Y(r, i) = c * yi - s * yj;
          Y(r, j) = s * yi + c * yj;
        }
      }
    }
    if (!rotated) break;
  }

  DynamicVector<Scalar> norms(p);
  for (Eigen::Index i = 0; i < p; ++i) norms(i) = W.col(i).norm();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(p));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return norms(a) > norms(b); });

  SmallSvd<Scalar> out;
  out.X.resize(p, p);
  out.Y.resize(p, p);
  out.s.resize(p);
  const Scalar smax = p > 0 ? norms(order.front()) : Scalar(0);
  const Scalar floor = smax * eps * static_cast<Scalar>(p);
  Eigen::Index filled = 0;
  for (; filled < p; ++filled) {
    const Eigen::Index src = order[static_cast<std::size_t>(filled)];
    out.s(filled) = norms(src);
    out.Y.col(filled) = Y.col(src);
    if (norms(src) <= floor || norms(src) == Scalar(0)) break;
    out.X.col(filled) = W.col(src) / norms(src);
  }
  // Remaining singular values are negligible: keep them but complete X with
  // unit vectors orthogonal to the columns found so far.
  for (Eigen::Index k = filled; k < p; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    out.s(k) = norms(src);
    out.Y.col(k) = Y.col(src);
  }
  Eigen::Index basis = 0;
  for (Eigen::Index k = filled; k < p; ++k) {
    while (true) {
      DynamicVector<Scalar> e = DynamicVector<Scalar>::Unit(p, basis++);
      for (int pass = 0; pass < 2; ++pass) {
        e -= out.X.leftCols(k) * (out.X.leftCols(k).transpose() * e);
      }
      const Scalar n = e.norm();
      if (n > Scalar(0.5)) {
        out.X.col(k) = e / n;
        break;
      }
    }
  }
  return out;
}

namespace detail {

template <typename Scalar>
DynamicVector<Scalar> random_unit(Eigen::Index n, Lcg64& rng, const DynamicMatrix<Scalar>& basis,
                                  Eigen::Index used) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    DynamicVector<Scalar> v(n);
    for (Eigen::Index i = 0; i < n; ++i) v(i) = static_cast<Scalar>(2.0 * rng.uniform() - 1.0);
    for (int pass = 0; pass < 2; ++pass) {
      if (used > 0) v -= basis.leftCols(used) * (basis.leftCols(used).transpose() * v);
    }
    const Scalar norm = v.norm();
    if (norm > Scalar(1e-3)) return v / norm;
  }
  throw std::runtime_error("truncated_svd: could not draw a vector outside the current basis");
}

// Golub-Kahan-Lanczos bidiagonalization with full reorthogonalization.
// `apply` maps R^n -> R^m and `apply_t` its transpose, n <= m.
template <typename Scalar, typename Apply, typename ApplyT>
TruncatedSvd<Scalar> lanczos_svd(Eigen::Index m, Eigen::Index n, Scalar norm_estimate, Apply apply,
                                 ApplyT apply_t, Eigen::Index k, const SvdOptions& opts) {
  const std::size_t max_iter = opts.max_iter ? opts.max_iter : 10 * static_cast<std::size_t>(n);
  const Scalar tol = static_cast<Scalar>(opts.tol);
  const Scalar breakdown = norm_estimate * std::numeric_limits<Scalar>::epsilon() *
                           std::sqrt(static_cast<Scalar>(m + n));
  Lcg64 rng(opts.seed);

  DynamicMatrix<Scalar> U(m, n);
  DynamicMatrix<Scalar> V(n, n);
  std::vector<Scalar> alpha;
  std::vector<Scalar> beta;
  bool restarted = false;

  V.col(0) = random_unit<Scalar>(n, rng, V, 0);
  const Eigen::Index first_check = std::min<Eigen::Index>(n, std::max<Eigen::Index>(2 * k, k + 10));
  Eigen::Index next_check = first_check;
  Scalar last_residual = std::numeric_limits<Scalar>::infinity();

  const auto extract = [&](Eigen::Index p, Scalar& residual) {
    DynamicMatrix<Scalar> B = DynamicMatrix<Scalar>::Zero(p, p);
    for (Eigen::Index i = 0; i < p; ++i) {
      B(i, i) = alpha[static_cast<std::size_t>(i)];
      if (i + 1 < p) B(i, i + 1) = beta[static_cast<std::size_t>(i)];
    }
    auto small = jacobi_svd(B);
    const Scalar tail = p < n && static_cast<std::size_t>(p) <= beta.size() ? std::abs(beta[static_cast<std::size_t>(p - 1)]) : Scalar(0);
    const Scalar smax = small.s.size() ? small.s(0) : Scalar(0);
    residual = 0;
    for (Eigen::Index i = 0; i < k; ++i) {
      const Scalar r = tail * std::abs(small.X(p - 1, i));
      residual = std::max(residual, smax > 0 ? r / smax : r);
    }
    return small;
  };

  const auto assemble = [&](Eigen::Index p, const SmallSvd<Scalar>& small, Scalar residual) {
    TruncatedSvd<Scalar> out;
    out.U = U.leftCols(p) * small.X.leftCols(k);
    out.V = V.leftCols(p) * small.Y.leftCols(k);
    out.singular_values = small.s.head(k);
    out.residual = residual;
    out.iterations = static_cast<std::size_t>(p);
    return out;
  };

  for (Eigen::Index j = 0; j < n; ++j) {
    if (static_cast<std::size_t>(j) >= max_iter) {
      if (!restarted && j >= k) {
        Scalar residual = 0;
        auto small = extract(j, residual);
        last_residual = residual;
        if (residual <= tol) return assemble(j, small, residual);
      }
      throw ConvergenceError("truncated_svd did not converge within " + std::to_string(max_iter) + " iterations",
                             static_cast<double>(last_residual));
    }
    DynamicVector<Scalar> z = apply(V.col(j));
    if (j > 0) z -= beta[static_cast<std::size_t>(j - 1)] * U.col(j - 1);
    for (int pass = 0; pass < 2; ++pass) {
      if (j > 0) z -= U.leftCols(j) * (U.leftCols(j).transpose() * z);
    }
    Scalar a = z.norm();
    if (a <= breakdown) {
      U.col(j) = random_unit<Scalar>(m, rng, U, j);
      a = 0;
      restarted = true;
    } else {
      U.col(j) = z / a;
    }
    alpha.push_back(a);

    if (j + 1 == n) break;

    DynamicVector<Scalar> w = apply_t(U.col(j)) - a * V.col(j);
    for (int pass = 0; pass < 2; ++pass) w -= V.leftCols(j + 1) * (V.leftCols(j + 1).transpose() * w);
    Scalar b = w.norm();
    if (b <= breakdown) {
      V.col(j + 1) = random_unit<Scalar>(n, rng, V, j + 1);
      b = 0;
      restarted = true;
    } else {
      V.col(j + 1) = w / b;
    }
    beta.push_back(b);

    const Eigen::Index p = j + 1;
    // After an invariant subspace is hit, missing multiplicities can hide in the
    // unexplored complement, so only the exhaustive run is trusted.
    if (!restarted && p >= next_check) {
      Scalar residual = 0;
      auto small = extract(p, residual);
      last_residual = residual;
      if (residual <= tol) return assemble(p, small, residual);
      next_check = p + std::max<Eigen::Index>(5, p / 8);
    }
  }

  Scalar residual = 0;
  auto small = extract(n, residual);
  return assemble(n, small, residual);
}

}  // namespace detail

/// Top-k singular triplets of a dense or sparse Eigen matrix.
///
/// Runs Golub-Kahan-Lanczos bidiagonalization from a seeded start vector, with
/// full reorthogonalization, and stops once every wanted Ritz triplet has
/// residual <= tol * s_max. Throws ConvergenceError if max_iter steps are not
/// enough and std::invalid_argument unless 1 <= k <= min(rows, cols).
template <typename MatrixType>
TruncatedSvd<typename MatrixType::Scalar> truncated_svd(const MatrixType& A, Eigen::Index k,
                                                        const SvdOptions& opts = {}) {
  using Scalar = typename MatrixType::Scalar;
  const Eigen::Index rows = A.rows();
  const Eigen::Index cols = A.cols();
  if (k < 1 || k > std::min(rows, cols)) {
    throw std::invalid_argument("truncated_svd: rank must lie in [1, min(rows, cols)]");
  }
  const Scalar norm = A.norm();
  if (norm == Scalar(0)) {
    TruncatedSvd<Scalar> out;
    out.U = DynamicMatrix<Scalar>::Identity(rows, k);
    out.V = DynamicMatrix<Scalar>::Identity(cols, k);
    out.singular_values = DynamicVector<Scalar>::Zero(k);
    return out;
  }
  if (cols <= rows) {
    return detail::lanczos_svd<Scalar>(
        rows, cols, norm, [&](const auto& v) -> DynamicVector<Scalar> { return A * v; },
        [&](const auto& u) -> DynamicVector<Scalar> { return A.transpose() * u; }, k, opts);
  }
  auto t = detail::lanczos_svd<Scalar>(
      cols, rows, norm, [&](const auto& v) -> DynamicVector<Scalar> { return A.transpose() * v; },
      [&](const auto& u) -> DynamicVector<Scalar> { return A * u; }, k, opts);
  std::swap(t.U, t.V);
  return t;
}

}  // namespace docsim
