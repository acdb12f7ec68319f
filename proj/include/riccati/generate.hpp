#pragma once

#include <cstdint>
#include <string_view>

#include "riccati/block_operator.hpp"

namespace riccati {

enum class Placement { interior, subordinated, overlapping };

[[nodiscard]] std::string_view to_string(Placement p);
[[nodiscard]] Placement placement_from_string(std::string_view name);

/// Recipe for a random block problem with prescribed spectral structure.
struct GenSpec {
  std::uint64_t seed = 0;
  int n_a = 1;
  int n_c = 2;
  double alpha = -1.0;
  double beta = 1.0;
  double d_target = 0.5;
  double b_ratio = 0.5;
  Placement placement = Placement::interior;

  [[nodiscard]] double gap_length() const { return beta - alpha; }
  /// b_ratio · √(d_target · |Δ|).
  [[nodiscard]] double b_target() const;
};

/// Draws a problem from the SplitMix64 stream seeded with spec.seed.
///
/// interior:     σ(C) ⊂ ℝ∖(α, β) with both α and β eigenvalues;
///               σ(A) ⊂ [α + d, β − d] with one eigenvalue on that boundary,
///               so dist(σ(A), σ(C)) = d exactly; ‖B‖ = b_target().
/// subordinated: σ(C) ⊂ [β, β + |Δ|] with β an eigenvalue;
///               σ(A) ⊂ [α, β − d] with β − d an eigenvalue; ‖B‖ = b_target().
/// overlapping:  C as for interior. A graph solution is planted instead of
///               drawn: Λ has the interior spectrum, X is Gaussian with
///               ‖X‖ = b_ratio, Z = S^{-1}ΛS with S = (I + X*X)^{1/2},
///               B = (XZ − CX)* and A = Z − BX. σ(A) then typically spills
///               over σ(C) while σ(A + BX) = σ(Λ) stays in the gap.
///
/// Throws InfeasibleSpec when the recipe cannot be honoured.
[[nodiscard]] BlockProblem generate(const GenSpec& spec);

/// A = [0], B = (b/√2, b/√2), C = diag(−d, d).
[[nodiscard]] BlockProblem sharpness_example(double d, double b);

/// Exact solution of the sharpness example for the gap (−d, d):
/// X = (b/(√2 d), −b/(√2 d))ᵀ.
[[nodiscard]] Matrix sharpness_example_solution(double d, double b);

}  // namespace riccati
