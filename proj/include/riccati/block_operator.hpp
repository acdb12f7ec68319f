#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "riccati/linalg.hpp"

namespace riccati {

/// The triple (A, B, C) of H = [[A, B], [B*, C]].
/// A and C are validated as Hermitian on construction and their
/// eigendecompositions are cached; the object is immutable afterwards.
class BlockProblem {
 public:
  BlockProblem(Matrix a, Matrix b, Matrix c);

  [[nodiscard]] const Matrix& A() const { return a_; }
  [[nodiscard]] const Matrix& B() const { return b_; }
  [[nodiscard]] const Matrix& C() const { return c_; }
  [[nodiscard]] Eigen::Index n_a() const { return a_.rows(); }
  [[nodiscard]] Eigen::Index n_c() const { return c_.rows(); }

  [[nodiscard]] const EigDecomposition& eig_A() const { return eig_a_; }
  [[nodiscard]] const EigDecomposition& eig_C() const { return eig_c_; }
  [[nodiscard]] double norm_B() const { return norm_b_; }

  /// (C − λI)^{-1}. Throws LambdaOnSpectrumOfC within tol_spec of σ(C).
  [[nodiscard]] Matrix resolvent_C(cplx lambda) const;

 private:
  Matrix a_;
  Matrix b_;
  Matrix c_;
  EigDecomposition eig_a_;
  EigDecomposition eig_c_;
  double norm_b_ = 0.0;
};

/// An open interval (alpha, beta) free of σ(C). Rays use ±infinity.
/// `d` is dist(σ(A), σ(C)) for the problem the gap was located in, or NaN
/// when the gap came straight from C alone.
struct SpectralGap {
  double alpha = -std::numeric_limits<double>::infinity();
  double beta = std::numeric_limits<double>::infinity();
  double d = std::numeric_limits<double>::quiet_NaN();

  [[nodiscard]] bool finite() const;
  [[nodiscard]] double length() const { return beta - alpha; }
  [[nodiscard]] double center() const;
  [[nodiscard]] bool contains(double x) const { return alpha < x && x < beta; }
  /// alpha + margin < x < beta − margin.
  [[nodiscard]] bool contains_strictly(double x, double margin) const;
};

[[nodiscard]] Matrix assemble_H(const BlockProblem& p);

/// Lower ray, the finite gaps between consecutive distinct eigenvalues of C
/// (eigenvalues closer than tol_spec are merged), then the upper ray.
[[nodiscard]] std::vector<SpectralGap> find_gaps(const Matrix& c);

/// Same, from an ascending eigenvalue list.
[[nodiscard]] std::vector<SpectralGap> find_gaps(std::span<const double> c_spectrum);

/// min |a_i − c_j| over real spectra.
[[nodiscard]] double dist_spectra(std::span<const double> a, std::span<const double> c);
[[nodiscard]] double dist_spectra(const Matrix& a, const Matrix& c);

/// The gap of C containing `point`, with d filled in.
/// Throws MalformedInput when `point` is (within tol_spec) an eigenvalue of C.
[[nodiscard]] SpectralGap locate_gap(const BlockProblem& p, double point);

/// The gap containing the midpoint of the hull of σ(A).
[[nodiscard]] SpectralGap default_gap(const BlockProblem& p);

/// gap.d if known, otherwise dist(σ(A), σ(C)).
[[nodiscard]] double gap_distance(const BlockProblem& p, const SpectralGap& gap);

/// σ(A) inside the open gap.
[[nodiscard]] bool spectrum_of_A_in_gap(const BlockProblem& p, const SpectralGap& gap);

/// σ(A) ⊂ Δ and ‖B‖ < √(d|Δ|): the existence hypothesis for a finite gap.
[[nodiscard]] bool existence_hypothesis(const BlockProblem& p, const SpectralGap& gap);

/// The existence hypothesis plus ‖B‖ < √(d(|Δ| − d)): the contraction hypothesis.
[[nodiscard]] bool contraction_hypothesis(const BlockProblem& p, const SpectralGap& gap);

struct HerglotzSample {
  cplx lambda;
  Matrix M;
};

/// M(λ) = λI − A + B(C − λI)^{-1}B*.
[[nodiscard]] HerglotzSample herglotz_M(const BlockProblem& p, cplx lambda);

/// (H − λI)^{-1} assembled from (C − λI)^{-1} and M(λ)^{-1}.
/// Throws LambdaOnSpectrum when λ is within tol_spec of σ(C) or σ(H).
[[nodiscard]] Matrix resolvent_H(const BlockProblem& p, cplx lambda);

/// True iff M(λ) is numerically singular: σ_min(M) < tol_spec·(1 + ‖M‖).
[[nodiscard]] bool is_singular(const HerglotzSample& s);

struct SpectrumIdentityReport {
  bool ok = true;
  std::size_t points = 0;
  std::vector<double> mismatches;  // grid points where the two tests disagree
  std::string message;

  explicit operator bool() const { return ok; }
};

/// Checks σ(H) ∩ ρ(C) = σ(M) ∩ ρ(C) on `grid` plus the eigenvalues of H
/// lying in the gap: M(λ) must be singular exactly where λ hits σ(H).
[[nodiscard]] SpectrumIdentityReport spectrum_identity_check(const BlockProblem& p,
                                                             const SpectralGap& gap,
                                                             std::span<const double> grid);

}  // namespace riccati
