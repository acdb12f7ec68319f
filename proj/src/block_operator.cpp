#include "riccati/block_operator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "riccati/errors.hpp"
#include "riccati/tolerances.hpp"

namespace riccati {

namespace {

std::span<const double> as_span(const RealVector& v) {
  return {v.data(), static_cast<std::size_t>(v.size())};
}

double dist_to_spectrum(cplx lambda, std::span<const double> spectrum) {
  double best = std::numeric_limits<double>::infinity();
  for (double s : spectrum) best = std::min(best, std::abs(lambda - s));
  return best;
}

}  // namespace

BlockProblem::BlockProblem(Matrix a, Matrix b, Matrix c)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_.rows() < 1 || c_.rows() < 1 || a_.rows() != a_.cols() || c_.rows() != c_.cols() ||
      b_.rows() != a_.rows() || b_.cols() != c_.rows()) {
    std::ostringstream os;
    os << "A is " << a_.rows() << "x" << a_.cols() << ", B is " << b_.rows() << "x" << b_.cols()
       << ", C is " << c_.rows() << "x" << c_.cols();
    fail(ErrorCode::DimensionMismatch, os.str());
  }
  if (!b_.allFinite()) fail(ErrorCode::MalformedInput, "B has non-finite entries");
  eig_a_ = hermitian_eig(a_);
  eig_c_ = hermitian_eig(c_);
  norm_b_ = operator_norm(b_);
}

Matrix BlockProblem::resolvent_C(cplx lambda) const {
  const double dist = dist_to_spectrum(lambda, as_span(eig_c_.values));
  if (!(dist > tol::spec)) {
    std::ostringstream os;
    os << "lambda = " << lambda << " lies within " << dist << " of sigma(C)";
    fail(ErrorCode::LambdaOnSpectrumOfC, os.str());
  }
  return eig_c_.apply([lambda](double c) { return 1.0 / (c - lambda); });
}

bool SpectralGap::finite() const { return std::isfinite(alpha) && std::isfinite(beta); }

double SpectralGap::center() const {
  if (finite()) return 0.5 * (alpha + beta);
  return std::numeric_limits<double>::quiet_NaN();
}

bool SpectralGap::contains_strictly(double x, double margin) const {
  return alpha + margin < x && x < beta - margin;
}

Matrix assemble_H(const BlockProblem& p) {
  const auto na = p.n_a();
  const auto nc = p.n_c();
  Matrix h(na + nc, na + nc);
  h.topLeftCorner(na, na) = p.A();
  h.topRightCorner(na, nc) = p.B();
  h.bottomLeftCorner(nc, na) = p.B().adjoint();
  h.bottomRightCorner(nc, nc) = p.C();
  return h;
}

std::vector<SpectralGap> find_gaps(std::span<const double> c) {
  std::vector<SpectralGap> gaps;
  if (c.empty()) {
    gaps.push_back(SpectralGap{});
    return gaps;
  }
  const double inf = std::numeric_limits<double>::infinity();
  gaps.push_back(SpectralGap{-inf, c.front()});
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] - c[i - 1] > tol::spec) gaps.push_back(SpectralGap{c[i - 1], c[i]});
  }
  gaps.push_back(SpectralGap{c.back(), inf});
  return gaps;
}

std::vector<SpectralGap> find_gaps(const Matrix& c) {
  const auto e = hermitian_eig(c);
  return find_gaps(as_span(e.values));
}

double dist_spectra(std::span<const double> a, std::span<const double> c) {
  double best = std::numeric_limits<double>::infinity();
  for (double x : a) {
    for (double y : c) best = std::min(best, std::abs(x - y));
  }
  return best;
}

double dist_spectra(const Matrix& a, const Matrix& c) {
  const auto ea = hermitian_eig(a);
  const auto ec = hermitian_eig(c);
  return dist_spectra(as_span(ea.values), as_span(ec.values));
}

SpectralGap locate_gap(const BlockProblem& p, double point) {
  const auto cspec = as_span(p.eig_C().values);
  if (!std::isfinite(point) || dist_to_spectrum(point, cspec) <= tol::spec) {
    std::ostringstream os;
    os << "gap point " << point << " is not in the resolvent set of C";
    fail(ErrorCode::MalformedInput, os.str());
  }
  for (auto gap : find_gaps(cspec)) {
    if (gap.contains(point)) {
      gap.d = dist_spectra(as_span(p.eig_A().values), cspec);
      return gap;
    }
  }
  fail(ErrorCode::MalformedInput, "no gap of C contains the requested point");
}

SpectralGap default_gap(const BlockProblem& p) {
  const auto& a = p.eig_A().values;
  return locate_gap(p, 0.5 * (a(0) + a(a.size() - 1)));
}

double gap_distance(const BlockProblem& p, const SpectralGap& gap) {
  if (std::isfinite(gap.d)) return gap.d;
  return dist_spectra(as_span(p.eig_A().values), as_span(p.eig_C().values));
}

bool spectrum_of_A_in_gap(const BlockProblem& p, const SpectralGap& gap) {
  const auto& a = p.eig_A().values;
  return gap.contains(a(0)) && gap.contains(a(a.size() - 1));
}

namespace {

// A norm within rounding of its threshold sits on the boundary, not below it.
bool strictly_below(double value, double threshold) {
  return value < threshold - tol::cert * (1.0 + threshold);
}

}  // namespace

bool existence_hypothesis(const BlockProblem& p, const SpectralGap& gap) {
  if (!gap.finite() || !spectrum_of_A_in_gap(p, gap)) return false;
  return strictly_below(p.norm_B(), std::sqrt(gap_distance(p, gap) * gap.length()));
}

bool contraction_hypothesis(const BlockProblem& p, const SpectralGap& gap) {
  if (!existence_hypothesis(p, gap)) return false;
  const double d = gap_distance(p, gap);
  return strictly_below(p.norm_B(), std::sqrt(d * (gap.length() - d)));
}

HerglotzSample herglotz_M(const BlockProblem& p, cplx lambda) {
  const Matrix rc = p.resolvent_C(lambda);
  Matrix m = -p.A() + p.B() * rc * p.B().adjoint();
  m.diagonal().array() += lambda;
  return {lambda, std::move(m)};
}

bool is_singular(const HerglotzSample& s) {
  return min_singular_value(s.M) < tol::spec * (1.0 + operator_norm(s.M));
}

Matrix resolvent_H(const BlockProblem& p, cplx lambda) {
  const Matrix rc = p.resolvent_C(lambda);
  const auto sample = herglotz_M(p, lambda);
  if (is_singular(sample)) {
    std::ostringstream os;
    os << "lambda = " << lambda << " is numerically in sigma(H)";
    fail(ErrorCode::LambdaOnSpectrum, os.str());
  }
  const auto na = p.n_a();
  const auto nc = p.n_c();
  const Matrix minv = sample.M.partialPivLu().inverse();

  Matrix left(na + nc, na);
  left.topRows(na) = identity(na);
  left.bottomRows(nc) = -rc * p.B().adjoint();
  Matrix right(na, na + nc);
  right.leftCols(na) = identity(na);
  right.rightCols(nc) = -p.B() * rc;

  Matrix out = -left * minv * right;
  out.bottomRightCorner(nc, nc) += rc;
  return out;
}

SpectrumIdentityReport spectrum_identity_check(const BlockProblem& p, const SpectralGap& gap,
                                               std::span<const double> grid) {
  const auto eh = hermitian_eig(assemble_H(p));
  const auto hspec = as_span(eh.values);
  const auto cspec = as_span(p.eig_C().values);

  std::vector<double> points(grid.begin(), grid.end());
  const double width = gap.finite() ? gap.length() : 1.0;
  for (double mu : hspec) {
    if (!gap.contains(mu)) continue;
    points.push_back(mu);
    points.push_back(mu - 1e-4 * width);
    points.push_back(mu + 1e-4 * width);
  }

  SpectrumIdentityReport report;
  for (double lambda : points) {
    if (!gap.contains(lambda) || dist_to_spectrum(lambda, cspec) <= tol::spec) continue;
    const auto sample = herglotz_M(p, lambda);
    const double smin = min_singular_value(sample.M);
    const double threshold = tol::spec * (1.0 + operator_norm(sample.M));
    const double dist = dist_to_spectrum(lambda, hspec);
    ++report.points;
    // σ_min(M(λ)) ≥ dist(λ, σ(H)), so points farther than the threshold must be
    // regular; points within tol_spec of σ(H) must be singular. The band in
    // between is not decidable at this precision and is skipped.
    const bool must_be_singular = dist < tol::spec;
    const bool must_be_regular = dist >= threshold;
    const bool singular = smin < threshold;
    if ((must_be_singular && !singular) || (must_be_regular && singular)) {
      report.ok = false;
      report.mismatches.push_back(lambda);
    }
  }
  if (!report.ok) {
    std::ostringstream os;
    os << report.mismatches.size() << " of " << report.points << " points disagree";
    report.message = os.str();
  }
  return report;
}

}  // namespace riccati
