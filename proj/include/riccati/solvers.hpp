#pragma once

#include <functional>
#include <span>
#include <string_view>

#include "riccati/block_operator.hpp"

namespace riccati {

enum class Method { spectral, contour, fixedpoint };

[[nodiscard]] std::string_view to_string(Method m);
/// Throws MalformedInput for unknown names.
[[nodiscard]] Method method_from_string(std::string_view name);

/// A solution X of X A − C X + X B X = B* with Z = A + BX and Ẑ = C − B*X*.
struct RiccatiSolution {
  Matrix X;
  Matrix Z;
  Matrix Zhat;
  double residual = 0.0;
  Method method = Method::spectral;
  /// Quadrature nodes (contour) or iterations (fixed point); 0 for spectral.
  int work = 0;
};

/// ‖XA − CX + XBX − B*‖.
[[nodiscard]] double residual(const BlockProblem& p, const Matrix& x);

/// (‖A‖ + ‖B‖ + ‖C‖)(1 + ‖X‖)², the scale residuals are measured against.
[[nodiscard]] double residual_scale(const BlockProblem& p, const Matrix& x);

[[nodiscard]] RiccatiSolution make_solution(const BlockProblem& p, Matrix x, Method method);

/// Graph of the spectral subspace of H for the eigenvalues accepted by
/// `select`. Throws WrongSubspaceDimension unless exactly n_A are selected,
/// NotAGraph when the subspace is not a graph over the first component.
[[nodiscard]] RiccatiSolution solve_spectral_selected(const BlockProblem& p,
                                                      const std::function<bool(double)>& select);

/// Spectral subspace of H for the open interval `gap`. Eigenvalues of H
/// within tol_spec of a finite endpoint raise WrongSubspaceDimension.
[[nodiscard]] RiccatiSolution solve_spectral(const BlockProblem& p, const SpectralGap& gap);

/// Circle for the contour representation of X: it encloses σ(Z) and leaves σ(C) outside.
struct Contour {
  cplx center;
  double radius = 0.0;
  int nodes = 16;
};

/// Center at the midpoint of the hull of σ(Z), radius = half-width of the
/// hull + dist(σ(Z), σ(C))/2. Throws SpectraTooClose if the spectra come
/// within 2 tol_spec, or if some eigenvalue of C would fall inside the circle.
[[nodiscard]] Contour build_contour(std::span<const double> z_spectrum,
                                    std::span<const double> c_spectrum);

/// X = −(1/2πi) ∮ (C − λ)^{-1} B* (Z − λ)^{-1} dλ along the clockwise circle,
/// by the trapezoidal rule with node doubling from contour.nodes up to 4096.
/// Throws QuadratureStall when successive estimates never agree to tol_quad.
[[nodiscard]] RiccatiSolution solve_contour(const BlockProblem& p, const Matrix& z,
                                            const Contour& contour);

/// X_{k+1} = solve_sylvester(A + B X_k, C, B*) from X_0 = 0.
/// Throws IterationDiverged when ‖X_k‖ > 1e6, after 500 iterations, or when
/// the limit is a solution outside the uniqueness class of `gap`.
[[nodiscard]] RiccatiSolution solve_fixedpoint(const BlockProblem& p, const SpectralGap& gap);

/// σ(A + BX) inside the gap and σ(C − B*X*) outside it, both up to tol_spec.
[[nodiscard]] bool uniqueness_class_check(const BlockProblem& p, const RiccatiSolution& sol,
                                          const SpectralGap& gap);

}  // namespace riccati
