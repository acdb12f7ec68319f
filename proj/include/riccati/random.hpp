#pragma once

#include <cstdint>

#include "riccati/linalg.hpp"

namespace riccati {

/// SplitMix64 (Steele, Lea, Flood 2014). The full stream definition is in
/// README.md so other implementations can reproduce generated instances.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform on [0, 1) from the top 53 bits.
  double uniform();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);
  /// Standard normal, Box–Muller cosine branch; consumes two uniforms.
  double normal();
  /// (normal() + i normal()) / √2.
  cplx complex_normal();

 private:
  std::uint64_t state_;
};

/// rows x cols matrix of complex_normal() entries, filled column by column.
[[nodiscard]] Matrix gaussian_matrix(SplitMix64& rng, Eigen::Index rows, Eigen::Index cols);

/// Haar-like unitary: Gram–Schmidt (two passes) on a complex Gaussian matrix.
[[nodiscard]] Matrix random_unitary(SplitMix64& rng, Eigen::Index n);

}  // namespace riccati
