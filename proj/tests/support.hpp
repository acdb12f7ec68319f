#pragma once

#include <span>
#include <vector>

#include "riccati/linalg.hpp"
#include "riccati/random.hpp"

namespace riccati::testing {

inline std::span<const double> span_of(const RealVector& v) {
  return {v.data(), static_cast<std::size_t>(v.size())};
}

inline Matrix diag(std::initializer_list<double> values) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(values.size()), static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double v : values) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

/// U diag(values) U* with U drawn from `rng`.
inline Matrix hermitian_with_spectrum(SplitMix64& rng, const std::vector<double>& values) {
  const auto n = static_cast<Eigen::Index>(values.size());
  const Matrix u = random_unitary(rng, n);
  RealVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = values[static_cast<std::size_t>(i)];
  Matrix m = u * v.cast<cplx>().asDiagonal() * u.adjoint();
  return 0.5 * (m + m.adjoint());
}

inline Matrix random_hermitian(SplitMix64& rng, Eigen::Index n) {
  const Matrix g = gaussian_matrix(rng, n, n);
  return 0.5 * (g + g.adjoint());
}

/// Largest singular value by power iteration on M*M.
inline double power_iteration_norm(const Matrix& m, int iterations = 2000) {
  Vector v = Vector::Ones(m.cols());
  double sigma2 = 0.0;
  for (int k = 0; k < iterations; ++k) {
    Vector w = m.adjoint() * (m * v);
    const double nw = w.norm();
    if (nw == 0.0) return 0.0;
    sigma2 = nw / v.norm();
    v = w / nw;
  }
  return std::sqrt(sigma2);
}

}  // namespace riccati::testing
