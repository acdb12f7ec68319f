#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "riccati/factorization.hpp"
#include "riccati/solvers.hpp"

namespace riccati {

enum class Theorem {
  existence_1i,
  contraction_1ii,
  tan_theta_2,
  apriori_bound,
  tan_2theta_dk,
  squared_subordination,
};

inline constexpr Theorem kAllTheorems[] = {
    Theorem::existence_1i,  Theorem::contraction_1ii, Theorem::tan_theta_2,
    Theorem::apriori_bound, Theorem::tan_2theta_dk,   Theorem::squared_subordination,
};

[[nodiscard]] std::string_view to_string(Theorem t);

/// One theorem evaluated on one instance. The conclusion is the inequality
/// observed_value ≤ bound_value, so margin = bound_value − observed_value.
/// A failed conclusion is recorded, never thrown.
struct Certificate {
  Theorem theorem = Theorem::existence_1i;
  bool hypothesis_ok = false;
  bool conclusion_ok = false;
  double bound_value = 0.0;
  double observed_value = 0.0;
  double margin = 0.0;
  std::map<std::string, double> values;
  std::vector<std::string> notes;

  /// Hypothesis holds, the qualitative conclusions hold, margin ≥ −tol_cert.
  [[nodiscard]] bool passed() const;
};

/// Existence: under σ(A) ⊂ Δ and ‖B‖ < √(d|Δ|), the spectral solution
/// exists, is in the uniqueness class, and σ(H) ∩ Δ stays off the endpoints.
/// observed/bound are the residual and tol_res·scale.
[[nodiscard]] Certificate certify_existence(const BlockProblem& p, const SpectralGap& gap,
                                            const RiccatiSolution& sol);

/// Contraction: ‖X‖ ≤ tan(½ arctan(2‖AB + BC‖/(d(|Δ|−d) − ‖B‖²))) < 1,
/// with A and C shifted by the gap center before ‖AB + BC‖ is taken.
[[nodiscard]] Certificate certify_contraction(const BlockProblem& p, const SpectralGap& gap,
                                              const RiccatiSolution& sol);

/// ‖X‖ ≤ ‖B‖/δ with δ = dist(σ(Z), σ(C)). Throws DeltaNonpositive when δ ≤ tol_spec.
[[nodiscard]] Certificate certify_tan_theta(const BlockProblem& p, const RiccatiSolution& sol);

/// ‖X‖ ≤ ‖B‖/δ̃, δ̃ = min{inf σ(A) − α − δ₋, β − sup σ(A) − δ₊}.
/// Throws HypothesisViolated without the existence hypothesis.
[[nodiscard]] Certificate certify_apriori(const BlockProblem& p, const SpectralGap& gap,
                                          const RiccatiSolution& sol);

/// Subordinated case sup σ(A) < inf σ(C): the spectral subspace of H below the
/// midpoint of (sup σ(A), inf σ(C)) is the graph of X with
/// ‖X‖ ≤ tan(½ arctan(2‖B‖/d)) < 1. Throws NotSubordinated otherwise.
[[nodiscard]] Certificate certify_tan2theta(const BlockProblem& p);

/// (H − γ)² with γ the gap center, as a block problem:
/// Â = (A−γ)² + BB*, B̂ = (A−γ)B + B(C−γ), Ĉ = (C−γ)² + B*B.
[[nodiscard]] BlockProblem squared_problem(const BlockProblem& p, double gamma);

/// The squared problem and a certificate that its diagonal entries are
/// subordinated with dist(σ(Â), σ(Ĉ)) ≥ d(|Δ|−d) − ‖B‖² > 0 and
/// σ(Â) ⊂ [0, (|Δ|/2 − d)² + ‖B‖²]. Here observed_value is the predicted lower
/// bound and bound_value the measured distance. Throws HypothesisViolated
/// without the contraction hypothesis.
[[nodiscard]] std::pair<BlockProblem, Certificate> squared_shift(const BlockProblem& p,
                                                                 const SpectralGap& gap);

/// ½(sup σ(Z) + inf σ(Z)). Throws ComplexSpectrum if σ(Z) is not real.
[[nodiscard]] double gamma_center(const Matrix& z);

/// ‖(C − γ)^{-1}‖ and 1/(‖Λ − γ‖ + δ) at γ = gamma_center(Z).
struct CenteredResolvent {
  double gamma = 0.0;
  double resolvent_norm = 0.0;
  double predicted = 0.0;
};

[[nodiscard]] CenteredResolvent centered_resolvent(const BlockProblem& p, const RiccatiSolution& sol);

/// Every certificate that can be evaluated for `gap`, in the fixed order of
/// kAllTheorems. Inapplicable theorems appear with hypothesis_ok = false and
/// a note; `sol` may be empty when the spectral solve failed.
[[nodiscard]] std::vector<Certificate> certify_all(const BlockProblem& p, const SpectralGap& gap,
                                                   const std::optional<RiccatiSolution>& sol);

}  // namespace riccati
