#include "riccati/random.hpp"

#include <cmath>
#include <numbers>

namespace riccati {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double SplitMix64::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double SplitMix64::normal() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

cplx SplitMix64::complex_normal() {
  const double re = normal();
  const double im = normal();
  return cplx(re, im) / std::numbers::sqrt2;
}

Matrix gaussian_matrix(SplitMix64& rng, Eigen::Index rows, Eigen::Index cols) {
  Matrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = rng.complex_normal();
  }
  return m;
}

Matrix random_unitary(SplitMix64& rng, Eigen::Index n) {
  Matrix q = gaussian_matrix(rng, n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index k = 0; k < j; ++k) {
        const cplx proj = q.col(k).dot(q.col(j));
        q.col(j) -= proj * q.col(k);
      }
    }
    q.col(j) /= q.col(j).norm();
  }
  return q;
}

}  // namespace riccati
