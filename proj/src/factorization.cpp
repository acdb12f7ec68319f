#include "riccati/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "riccati/errors.hpp"
#include "riccati/tolerances.hpp"

namespace riccati {

namespace {

double dist_to_c(const BlockProblem& p, cplx lambda) {
  double best = std::numeric_limits<double>::infinity();
  const auto& c = p.eig_C().values;
  for (Eigen::Index i = 0; i < c.size(); ++i) best = std::min(best, std::abs(lambda - c(i)));
  return best;
}

}  // namespace

Matrix compute_W(const BlockProblem& p, const Matrix& x, cplx lambda) {
  return identity(p.n_a()) - p.B() * p.resolvent_C(lambda) * x;
}

std::vector<cplx> factorization_grid(const BlockProblem& p, const SpectralGap& gap) {
  if (!gap.finite()) fail(ErrorCode::MalformedInput, "factorization grid needs a finite gap");
  constexpr int kPerPart = 25;
  std::vector<cplx> grid;
  grid.reserve(2 * kPerPart);
  for (int k = 1; k <= kPerPart; ++k) {
    const cplx lambda = gap.alpha + gap.length() * k / (kPerPart + 1);
    if (dist_to_c(p, lambda) > tol::spec) grid.push_back(lambda);
  }
  const double r = gap.length();
  for (int k = 0; k < kPerPart; ++k) {
    const cplx lambda = gap.center() + r * std::polar(1.0, 2.0 * std::numbers::pi * k / kPerPart);
    if (dist_to_c(p, lambda) > tol::spec) grid.push_back(lambda);
  }
  return grid;
}

double verify_factorization(const BlockProblem& p, const RiccatiSolution& sol,
                            std::span<const cplx> grid) {
  double worst = 0.0;
  for (const cplx lambda : grid) {
    const auto m = herglotz_M(p, lambda);
    Matrix pencil = -sol.Z;
    pencil.diagonal().array() += lambda;
    const Matrix rhs = compute_W(p, sol.X, lambda) * pencil;
    worst = std::max(worst, operator_norm(m.M - rhs) / (1.0 + operator_norm(m.M)));
  }
  return worst;
}

EnclosureBounds enclosure_bounds(const BlockProblem& p, const SpectralGap& gap) {
  if (!existence_hypothesis(p, gap)) {
    std::ostringstream os;
    os << "need sigma(A) in (" << gap.alpha << ", " << gap.beta << ") and ||B|| = " << p.norm_B()
       << " < sqrt(d|Delta|)";
    fail(ErrorCode::HypothesisViolated, os.str());
  }
  const auto& a = p.eig_A().values;
  const double inf_a = a(0);
  const double sup_a = a(a.size() - 1);
  const double nb = p.norm_B();

  EnclosureBounds out;
  out.delta_minus = nb * std::tan(0.5 * std::atan(2.0 * nb / (gap.beta - inf_a)));
  out.delta_plus = nb * std::tan(0.5 * std::atan(2.0 * nb / (sup_a - gap.alpha)));
  out.lower = inf_a - out.delta_minus;
  out.upper = sup_a + out.delta_plus;
  return out;
}

SignConditionReport sign_conditions(const BlockProblem& p, const SpectralGap& gap,
                                    const EnclosureBounds& bounds, int samples) {
  if (!existence_hypothesis(p, gap)) fail(ErrorCode::HypothesisViolated, "sign conditions need the existence hypothesis");
  SignConditionReport report;

  const auto scan = [&](double lo, double hi, bool want_negative, int& count) {
    if (!(hi > lo)) {
      report.note += want_negative ? "left interval empty; " : "right interval empty; ";
      return;
    }
    for (int k = 1; k <= samples; ++k) {
      const double lambda = lo + (hi - lo) * k / (samples + 1);
      if (dist_to_c(p, lambda) <= tol::spec) continue;
      const auto m = herglotz_M(p, lambda);
      const auto e = hermitian_eig(0.5 * (m.M + m.M.adjoint()));
      ++count;
      const bool good = want_negative ? e.values(e.dim() - 1) < 0.0 : e.values(0) > 0.0;
      if (!good) {
        report.ok = false;
        std::ostringstream os;
        os << "sign violated at lambda = " << lambda << "; ";
        report.note += os.str();
      }
    }
  };
  scan(gap.alpha, bounds.lower, true, report.left_samples);
  scan(bounds.upper, gap.beta, false, report.right_samples);
  return report;
}

double min_singular_W(const BlockProblem& p, const Matrix& x, double lower, double upper,
                      int samples) {
  double worst = std::numeric_limits<double>::infinity();
  for (int k = 0; k < samples; ++k) {
    const double lambda = samples == 1 ? lower : lower + (upper - lower) * k / (samples - 1);
    if (dist_to_c(p, lambda) <= tol::spec) continue;
    worst = std::min(worst, min_singular_value(compute_W(p, x, lambda)));
  }
  return worst;
}

}  // namespace riccati
