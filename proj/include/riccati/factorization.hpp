#pragma once

#include <span>
#include <string>
#include <vector>

#include "riccati/solvers.hpp"

namespace riccati {

/// W(λ) = I − B(C − λI)^{-1}X.
[[nodiscard]] Matrix compute_W(const BlockProblem& p, const Matrix& x, cplx lambda);

/// The default 50-point sampling set for a finite gap: 25 equispaced interior
/// points α + k|Δ|/26 and 25 on the circle of radius |Δ| about the gap center,
/// dropping any point within tol_spec of σ(C).
[[nodiscard]] std::vector<cplx> factorization_grid(const BlockProblem& p, const SpectralGap& gap);

/// max over the grid of ‖M(λ) − W(λ)(λI − Z)‖ / (1 + ‖M(λ)‖).
[[nodiscard]] double verify_factorization(const BlockProblem& p, const RiccatiSolution& sol,
                                          std::span<const cplx> grid);

struct EnclosureBounds {
  double delta_minus = 0.0;
  double delta_plus = 0.0;
  double lower = 0.0;  // inf σ(A) − δ₋
  double upper = 0.0;  // sup σ(A) + δ₊
};

/// δ₋ = ‖B‖ tan(½ arctan(2‖B‖/(β − inf σ(A)))),
/// δ₊ = ‖B‖ tan(½ arctan(2‖B‖/(sup σ(A) − α))).
/// Throws HypothesisViolated unless σ(A) ⊂ Δ and ‖B‖ < √(d|Δ|).
[[nodiscard]] EnclosureBounds enclosure_bounds(const BlockProblem& p, const SpectralGap& gap);

struct SignConditionReport {
  bool ok = true;
  int left_samples = 0;
  int right_samples = 0;
  std::string note;

  explicit operator bool() const { return ok; }
};

/// M(λ) < 0 on (α, inf σ(A) − δ₋) and M(λ) > 0 on (sup σ(A) + δ₊, β), tested at
/// `samples` interior points of each interval. An empty interval passes with a note.
[[nodiscard]] SignConditionReport sign_conditions(const BlockProblem& p, const SpectralGap& gap,
                                                  const EnclosureBounds& bounds, int samples);

/// min σ_min(W(λ)) over `samples` equispaced points of [lower, upper],
/// skipping points within tol_spec of σ(C).
[[nodiscard]] double min_singular_W(const BlockProblem& p, const Matrix& x, double lower,
                                    double upper, int samples);

}  // namespace riccati
