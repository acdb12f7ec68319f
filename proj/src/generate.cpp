#include "riccati/generate.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "riccati/errors.hpp"
#include "riccati/random.hpp"

namespace riccati {

namespace {

Matrix conjugate(const Matrix& u, const std::vector<double>& values) {
  RealVector v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Eigen::Index>(i)) = values[i];
  Matrix m = u * v.cast<cplx>().asDiagonal() * u.adjoint();
  return 0.5 * (m + m.adjoint());
}

// Eigenvalues outside (α, β), the first two pinned at α and β.
std::vector<double> gap_spectrum(SplitMix64& rng, const GenSpec& s) {
  std::vector<double> c{s.alpha, s.beta};
  const double len = s.gap_length();
  for (int k = 2; k < s.n_c; ++k) {
    const bool below = rng.uniform() < 0.5;
    const double u = rng.uniform();
    c.push_back(below ? s.alpha - len * u : s.beta + len * u);
  }
  return c;
}

// n values in [lo, hi] with the first one on the boundary picked by a coin flip.
std::vector<double> pinned_interval(SplitMix64& rng, int n, double lo, double hi, bool coin) {
  std::vector<double> a;
  const bool at_lo = coin ? rng.uniform() < 0.5 : false;
  a.push_back(at_lo ? lo : hi);
  for (int k = 1; k < n; ++k) a.push_back(rng.uniform(lo, hi));
  return a;
}

Matrix scaled_coupling(SplitMix64& rng, Eigen::Index rows, Eigen::Index cols, double norm) {
  Matrix b = gaussian_matrix(rng, rows, cols);
  if (norm == 0.0) return Matrix::Zero(rows, cols);
  return b * (norm / operator_norm(b));
}

void validate(const GenSpec& s) {
  std::ostringstream os;
  if (s.n_a < 1 || s.n_c < 1) os << "dimensions must be positive; ";
  if (!(s.alpha < s.beta) || !std::isfinite(s.alpha) || !std::isfinite(s.beta)) os << "need finite alpha < beta; ";
  if (!(s.d_target > 0.0) || s.d_target > 0.5 * s.gap_length()) os << "need 0 < d_target <= (beta-alpha)/2; ";
  if (!(s.b_ratio >= 0.0) || !std::isfinite(s.b_ratio)) os << "need b_ratio >= 0; ";
  if (s.placement != Placement::subordinated && s.n_c < 2) os << "a finite gap needs n_C >= 2; ";
  if (!os.str().empty()) fail(ErrorCode::InfeasibleSpec, os.str());
}

}  // namespace

std::string_view to_string(Placement p) {
  switch (p) {
    case Placement::interior: return "interior";
    case Placement::subordinated: return "subordinated";
    case Placement::overlapping: return "overlapping";
  }
  return "unknown";
}

Placement placement_from_string(std::string_view name) {
  if (name == "interior") return Placement::interior;
  if (name == "subordinated") return Placement::subordinated;
  if (name == "overlapping") return Placement::overlapping;
  fail(ErrorCode::MalformedInput, "unknown placement '" + std::string(name) + "'");
}

double GenSpec::b_target() const { return b_ratio * std::sqrt(d_target * gap_length()); }

BlockProblem generate(const GenSpec& s) {
  validate(s);
  SplitMix64 rng(s.seed);
  const double d = s.d_target;

  switch (s.placement) {
    case Placement::interior: {
      const auto c = gap_spectrum(rng, s);
      const auto a = pinned_interval(rng, s.n_a, s.alpha + d, s.beta - d, true);
      const Matrix uc = random_unitary(rng, s.n_c);
      const Matrix ua = random_unitary(rng, s.n_a);
      Matrix b = scaled_coupling(rng, s.n_a, s.n_c, s.b_target());
      return BlockProblem(conjugate(ua, a), std::move(b), conjugate(uc, c));
    }
    case Placement::subordinated: {
      std::vector<double> c{s.beta};
      for (int k = 1; k < s.n_c; ++k) c.push_back(s.beta + s.gap_length() * rng.uniform());
      const auto a = pinned_interval(rng, s.n_a, s.alpha, s.beta - d, false);
      const Matrix uc = random_unitary(rng, s.n_c);
      const Matrix ua = random_unitary(rng, s.n_a);
      Matrix b = scaled_coupling(rng, s.n_a, s.n_c, s.b_target());
      return BlockProblem(conjugate(ua, a), std::move(b), conjugate(uc, c));
    }
    case Placement::overlapping: {
      const auto c = gap_spectrum(rng, s);
      const auto lam = pinned_interval(rng, s.n_a, s.alpha + d, s.beta - d, true);
      const Matrix uc = random_unitary(rng, s.n_c);
      const Matrix ua = random_unitary(rng, s.n_a);
      const Matrix x = scaled_coupling(rng, s.n_c, s.n_a, s.b_ratio);
      const Matrix cm = conjugate(uc, c);
      const Matrix big_lambda = conjugate(ua, lam);
      const Matrix sq = sqrt_psd(identity(s.n_a) + x.adjoint() * x);
      const Matrix z = inverse(sq) * big_lambda * sq;
      Matrix b = (x * z - cm * x).adjoint();
      Matrix a = z - b * x;
      a = 0.5 * (a + a.adjoint());
      return BlockProblem(std::move(a), std::move(b), cm);
    }
  }
  fail(ErrorCode::InfeasibleSpec, "unknown placement");
}

BlockProblem sharpness_example(double d, double b) {
  if (!(d > 0.0) || !std::isfinite(b)) fail(ErrorCode::InfeasibleSpec, "sharpness example needs d > 0");
  Matrix a = Matrix::Zero(1, 1);
  Matrix bm(1, 2);
  bm << b / std::numbers::sqrt2, b / std::numbers::sqrt2;
  Matrix c = Matrix::Zero(2, 2);
  c(0, 0) = -d;
  c(1, 1) = d;
  return BlockProblem(std::move(a), std::move(bm), std::move(c));
}

Matrix sharpness_example_solution(double d, double b) {
  Matrix x(2, 1);
  const double v = b / (std::numbers::sqrt2 * d);
  x << v, -v;
  return x;
}

}  // namespace riccati
