#pragma once

#include "riccati/block_operator.hpp"

namespace riccati {

/// Orthogonal projection onto the graph {x ⊕ Xx}, in the closed form
/// [[(I+X*X)^{-1}, (I+X*X)^{-1}X*], [X(I+X*X)^{-1}, X(I+X*X)^{-1}X*]].
struct GraphProjection {
  Matrix Q;
  Matrix X;

  [[nodiscard]] Eigen::Index n_a() const { return X.cols(); }
  [[nodiscard]] Eigen::Index n_c() const { return X.rows(); }
  /// The X = 0 projection diag(I, 0) onto the first component.
  [[nodiscard]] Matrix P() const;
};

[[nodiscard]] GraphProjection graph_projection(const Matrix& x);

/// Norms of the operator angle Θ between the first component and the graph.
/// theta/sin/tan come from the spectrum of I − Q11 = sin²Θ; x_norm and
/// projection_distance are the independent values they must agree with
/// (‖tan Θ‖ = ‖X‖, ‖sin Θ‖ = ‖Q − P‖).
struct AngleReport {
  double theta_norm = 0.0;
  double sin_norm = 0.0;
  double tan_norm = 0.0;
  double x_norm = 0.0;
  double projection_distance = 0.0;
};

[[nodiscard]] AngleReport operator_angle(const GraphProjection& q);

/// V = [[I, −X*], [X, I]] block-diagonalizes H when X solves the Riccati equation.
struct Diagonalization {
  Matrix V;
  Matrix V_inv;
  Matrix Z;
  Matrix Zhat;
  Matrix S;       // (I + X*X)^{1/2}
  Matrix S_hat;   // (I + XX*)^{1/2}
  Matrix Lambda;  // S Z S^{-1}
  Matrix LambdaHat;
  double offdiag_norm = 0.0;  // max norm of the off-diagonal blocks of V^{-1} H V
};

/// V^{-1} = [[(I+X*X)^{-1}, (I+X*X)^{-1}X*], [−(I+XX*)^{-1}X, (I+XX*)^{-1}]].
[[nodiscard]] Matrix graph_frame_inverse(const Matrix& x);

/// Throws ResidualTooLarge if residual(p, X) > 1e-6 · residual_scale(p, X).
[[nodiscard]] Diagonalization block_diagonalize(const BlockProblem& p, const Matrix& x);

}  // namespace riccati
