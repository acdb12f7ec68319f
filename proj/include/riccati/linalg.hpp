#pragma once

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace riccati {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Spectral decomposition M = U diag(values) U* of a Hermitian matrix.
/// values are ascending; U is unitary.
struct EigDecomposition {
  RealVector values;
  Matrix vectors;

  [[nodiscard]] Eigen::Index dim() const { return values.size(); }
  /// U f(diag) U* for a scalar function applied to the eigenvalues.
  [[nodiscard]] Matrix apply(const std::function<cplx(double)>& f) const;
};

/// ‖M − M*‖_F ≤ tol.
[[nodiscard]] bool is_hermitian(const Matrix& m, double tol);

/// Cyclic Jacobi eigensolver. Sweep order is fixed (row-major over p < q),
/// so the result is reproducible bit for bit on a given platform.
/// Throws NonHermitianInput when ‖M − M*‖_F > tol_herm·(1 + ‖M‖_F).
[[nodiscard]] EigDecomposition hermitian_eig(const Matrix& m);

/// Largest singular value.
[[nodiscard]] double operator_norm(const Matrix& m);

/// Smallest singular value of a square matrix.
[[nodiscard]] double min_singular_value(const Matrix& m);

/// Eigenvalues of a general square matrix, sorted by real part then imaginary part.
[[nodiscard]] std::vector<cplx> eigenvalues(const Matrix& m);

/// Real parts of the eigenvalues of a matrix known to be similar to a
/// Hermitian one, ascending. Throws ComplexSpectrum if any imaginary part
/// exceeds `imag_tol`.
[[nodiscard]] RealVector real_spectrum(const Matrix& m, double imag_tol);

/// Solves X Z − C X = R for X with C Hermitian and Z arbitrary square.
/// C is diagonalized, Z is reduced to complex Schur form, and the
/// transformed equation is solved column by column.
/// Throws SpectraOverlap when min |z_i − c_j| ≤ tol_spec.
[[nodiscard]] Matrix solve_sylvester(const Matrix& z, const Matrix& c, const Matrix& r);

/// Principal square root of a positive semidefinite Hermitian matrix.
/// Eigenvalues in [−tol_eig, 0) are clamped to 0; anything below throws NotPSD.
[[nodiscard]] Matrix sqrt_psd(const Matrix& m);

/// Inverse of a square matrix via full-pivot LU. Callers check conditioning
/// themselves; non-square input throws DimensionMismatch.
[[nodiscard]] Matrix inverse(const Matrix& m);

[[nodiscard]] Matrix identity(Eigen::Index n);

}  // namespace riccati
