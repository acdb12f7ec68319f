#include <cmath>
#include <numbers>

#include "doctest.h"
#include "instances.hpp"
#include "riccati/errors.hpp"
#include "riccati/factorization.hpp"
#include "riccati/sweep.hpp"
#include "support.hpp"

using namespace riccati;
using namespace riccati::testing;

TEST_CASE("compute_W closed forms") {
  const BlockProblem p = sharpness_example(1.0, 0.5);
  const Matrix x = sharpness_example_solution(1.0, 0.5);
  CHECK((compute_W(p, Matrix::Zero(2, 1), 0.3) - identity(1)).norm() == 0.0);
  // B C^{-1} X = (b/√2)(−1)(b/√2) + (b/√2)(1)(−b/√2) = −b².
  CHECK(std::abs(compute_W(p, x, 0.0)(0, 0) - 1.25) < 1e-15);
  try {
    (void)compute_W(p, x, 1.0);
    FAIL("expected LambdaOnSpectrumOfC");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LambdaOnSpectrumOfC);
  }
}

TEST_CASE("W - I obeys the submultiplicative bound") {
  for (const GenSpec& s : slice(theorem1_family(), 0, 20)) {
    const SweepInstance in = instantiate(s);
    const RiccatiSolution sol = solve_spectral(in.problem, in.gap);
    const cplx lambda(in.gap.center(), 3.0 * in.gap.length());
    const auto& c = in.problem.eig_C().values;
    double dist = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < c.size(); ++i) dist = std::min(dist, std::abs(lambda - c(i)));
    const Matrix w = compute_W(in.problem, sol.X, lambda);
    CHECK(operator_norm(w - identity(w.rows())) <= in.problem.norm_B() * operator_norm(sol.X) / dist + 1e-14);
  }
}

TEST_CASE("factorization M = W(lambda I - Z)") {
  {
    SplitMix64 rng(3);
    const BlockProblem p(hermitian_with_spectrum(rng, {0.0, 0.2}), Matrix::Zero(2, 2), diag({-1.0, 1.0}));
    const SpectralGap gap = locate_gap(p, 0.0);
    const RiccatiSolution sol = solve_spectral(p, gap);
    CHECK(verify_factorization(p, sol, factorization_grid(p, gap)) < 1e-15);
  }
  {
    const BlockProblem p = sharpness_example(1.0, 0.5);
    const RiccatiSolution sol = solve_spectral(p, locate_gap(p, 0.0));
    std::vector<cplx> circle;
    for (int k = 0; k < 20; ++k) circle.push_back(0.5 * std::polar(1.0, 2.0 * std::numbers::pi * k / 20.0));
    CHECK(verify_factorization(p, sol, circle) < 1e-11);
  }
  for (const GenSpec& s : slice(theorem1_family(), 0, 40)) {
    const SweepInstance in = instantiate(s);
    const RiccatiSolution sol = solve_spectral(in.problem, in.gap);
    const auto grid = factorization_grid(in.problem, in.gap);
    CHECK(grid.size() == 50);
    CHECK(verify_factorization(in.problem, sol, grid) < 1e-9);
  }
}

TEST_CASE("enclosure bounds") {
  const BlockProblem p = sharpness_example(1.0, 0.5);
  const EnclosureBounds e = enclosure_bounds(p, locate_gap(p, 0.0));
  CHECK(e.delta_minus == doctest::Approx(0.5 * std::tan(std::numbers::pi / 8.0)).epsilon(1e-14));
  CHECK(e.delta_plus == doctest::Approx(e.delta_minus).epsilon(1e-14));

  const BlockProblem z(diag({-0.1, 0.3}), Matrix::Zero(2, 2), diag({-1.0, 1.0}));
  const EnclosureBounds ez = enclosure_bounds(z, locate_gap(z, 0.0));
  CHECK(ez.delta_minus == 0.0);
  CHECK(ez.delta_plus == 0.0);
  CHECK(ez.lower == doctest::Approx(-0.1));
  CHECK(ez.upper == doctest::Approx(0.3));

  const BlockProblem strong = sharpness_example(1.0, 1.5);
  try {
    (void)enclosure_bounds(strong, locate_gap(strong, 0.0));
    FAIL("expected HypothesisViolated");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::HypothesisViolated);
  }

  for (const GenSpec& s : slice(theorem1_family(), 0, 40)) {
    const SweepInstance in = instantiate(s);
    const EnclosureBounds b = enclosure_bounds(in.problem, in.gap);
    const auto& a = in.problem.eig_A().values;
    CHECK(b.delta_minus < a(0) - in.gap.alpha);
    CHECK(b.delta_plus < in.gap.beta - a(a.size() - 1));
    const RealVector zs = real_spectrum(solve_spectral(in.problem, in.gap).Z, 1e-8);
    for (double v : zs) {
      CHECK(v >= b.lower - 1e-10);
      CHECK(v <= b.upper + 1e-10);
    }
  }
}

TEST_CASE("sign conditions of M at the enclosure edges") {
  const BlockProblem p = sharpness_example(1.0, 0.5);
  CHECK(herglotz_M(p, -0.9).M(0, 0).real() < 0.0);
  CHECK(herglotz_M(p, 0.9).M(0, 0).real() > 0.0);
  const SpectralGap gap = locate_gap(p, 0.0);
  CHECK(sign_conditions(p, gap, enclosure_bounds(p, gap), 25).ok);

  const BlockProblem z(diag({-0.4, 0.1}), Matrix::Zero(2, 2), diag({-1.0, 1.0}));
  const SpectralGap zg = locate_gap(z, 0.0);
  const auto report = sign_conditions(z, zg, enclosure_bounds(z, zg), 25);
  CHECK(report.ok);
  CHECK(report.left_samples == 25);

  for (const GenSpec& s : slice(theorem1_family(), 0, 40)) {
    const SweepInstance in = instantiate(s);
    CHECK(sign_conditions(in.problem, in.gap, enclosure_bounds(in.problem, in.gap), 25).ok);
  }
}

TEST_CASE("W stays invertible on the enclosure interval") {
  for (const GenSpec& s : slice(theorem1_family(), 0, 40)) {
    const SweepInstance in = instantiate(s);
    const RiccatiSolution sol = solve_spectral(in.problem, in.gap);
    const EnclosureBounds b = enclosure_bounds(in.problem, in.gap);
    CHECK(min_singular_W(in.problem, sol.X, b.lower, b.upper, 32) > 1e-8);
  }
}
