#include <cmath>
#include <numbers>

#include "doctest.h"
#include "instances.hpp"
#include "riccati/errors.hpp"
#include "riccati/generate.hpp"
#include "riccati/solvers.hpp"
#include "riccati/sweep.hpp"
#include "riccati/tolerances.hpp"
#include "support.hpp"

using namespace riccati;
using namespace riccati::testing;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::MalformedInput;
}

RiccatiSolution contour_from_spectral(const BlockProblem& p, const RiccatiSolution& s) {
  const RealVector zs = real_spectrum(s.Z, 1e-8);
  return solve_contour(p, s.Z, build_contour(span_of(zs), span_of(p.eig_C().values)));
}

}  // namespace

TEST_CASE("sharpness instance: spectral solution is the exact graph") {
  for (double d : {0.5, 1.0, 2.0}) {
    for (double b : {0.1, 0.5, 1.0, 1.2}) {
      const BlockProblem p = sharpness_example(d, b);
      const RiccatiSolution s = solve_spectral(p, locate_gap(p, 0.0));
      const Matrix exact = sharpness_example_solution(d, b);
      CHECK(operator_norm(s.X - exact) <= 1e-12 * operator_norm(exact));
      CHECK(std::abs(operator_norm(s.X) - b / d) <= 1e-12 * b / d);
      CHECK(s.residual < 1e-13);
      CHECK(std::abs(s.Z(0, 0)) < 1e-13);
    }
  }
}

TEST_CASE("residual closed forms") {
  const BlockProblem p = sharpness_example(1.0, 0.5);
  CHECK(residual(p, sharpness_example_solution(1.0, 0.5)) < 1e-13);
  CHECK(residual(p, Matrix::Zero(2, 1)) == doctest::Approx(0.5));
  CHECK(code_of([&] { (void)residual(p, Matrix::Zero(1, 2)); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("residual grows linearly under small perturbations") {
  SplitMix64 rng(31);
  const BlockProblem p = generate(theorem1_family()[3]);
  const RiccatiSolution s = solve_spectral(p, locate_gap(p, 0.5 * (theorem1_family()[3].alpha + theorem1_family()[3].beta)));
  const Matrix e = gaussian_matrix(rng, p.n_c(), p.n_a());
  const double r1 = residual(p, s.X + 1e-5 * e);
  const double r2 = residual(p, s.X + 2e-5 * e);
  CHECK(r2 / r1 == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("zero coupling gives the zero solution") {
  SplitMix64 rng(12);
  const BlockProblem p(hermitian_with_spectrum(rng, {-0.2, 0.1, 0.4}), Matrix::Zero(3, 4),
                       hermitian_with_spectrum(rng, {-1.0, 1.0, 2.0, -3.0}));
  const SpectralGap gap = default_gap(p);
  const RiccatiSolution s = solve_spectral(p, gap);
  CHECK(s.X.norm() < 1e-14);
  CHECK(uniqueness_class_check(p, s, gap));
  CHECK(contour_from_spectral(p, s).X.norm() < 1e-14);
  const RiccatiSolution f = solve_fixedpoint(p, gap);
  CHECK(f.work == 1);
  CHECK(f.X.norm() == 0.0);
}

TEST_CASE("spectral solve needs exactly n_A eigenvalues in the gap") {
  // Two eigenvalues of A in (−1, 1) but a 1-dimensional A block cannot hold them.
  const BlockProblem p(diag({0.0, 3.0}), Matrix::Zero(2, 2), diag({-1.0, 1.0}));
  CHECK(code_of([&] { (void)solve_spectral(p, locate_gap(p, 0.0)); }) == ErrorCode::WrongSubspaceDimension);
  CHECK(code_of([&] { (void)solve_spectral_selected(p, [](double) { return true; }); }) ==
        ErrorCode::WrongSubspaceDimension);
}

TEST_CASE("spectral solve reports subspaces that are not graphs") {
  // H = diag(5, 0): the eigenvector of 0 lies entirely in the C component.
  const BlockProblem p(diag({5.0}), Matrix::Zero(1, 1), diag({0.0}));
  CHECK(code_of([&] { (void)solve_spectral_selected(p, [](double mu) { return mu < 1.0; }); }) ==
        ErrorCode::NotAGraph);
}

TEST_CASE("build_contour geometry") {
  const std::vector<double> c{-1.0, 1.0};
  const std::vector<double> z0{0.0};
  const Contour a = build_contour(z0, c);
  CHECK(a.center.real() == doctest::Approx(0.0));
  CHECK(a.radius == doctest::Approx(0.5));
  for (double ce : c) CHECK(std::abs(ce - a.center) > a.radius);

  const std::vector<double> z1{0.1, 0.3};
  const Contour b = build_contour(z1, c);
  CHECK(b.center.real() == doctest::Approx(0.2));
  CHECK(b.radius == doctest::Approx(0.45));

  const std::vector<double> bad{1.0 - 1e-9};
  CHECK(code_of([&] { (void)build_contour(bad, c); }) == ErrorCode::SpectraTooClose);
}

TEST_CASE("contour quadrature on the sharpness instance") {
  for (double b : {0.1, 0.5, 1.2}) {
    const BlockProblem p = sharpness_example(1.0, b);
    const std::vector<double> z{0.0}, c{-1.0, 1.0};
    const RiccatiSolution s = solve_contour(p, Matrix::Zero(1, 1), build_contour(z, c));
    CHECK(operator_norm(s.X - sharpness_example_solution(1.0, b)) < 1e-10);
  }
  const BlockProblem zero(diag({0.0}), Matrix::Zero(1, 2), diag({-1.0, 1.0}));
  const std::vector<double> z{0.0}, c{-1.0, 1.0};
  CHECK(solve_contour(zero, Matrix::Zero(1, 1), build_contour(z, c)).X.norm() == 0.0);
}

TEST_CASE("fixed point on the sharpness instance") {
  const BlockProblem p = sharpness_example(1.0, 0.5);
  const RiccatiSolution f = solve_fixedpoint(p, locate_gap(p, 0.0));
  CHECK(operator_norm(f.X - solve_spectral(p, locate_gap(p, 0.0)).X) < 1e-9);

  const BlockProblem strong = sharpness_example(1.0, 1.2);
  try {
    const RiccatiSolution g = solve_fixedpoint(strong, locate_gap(strong, 0.0));
    CHECK(operator_norm(g.X) == doctest::Approx(1.2).epsilon(1e-9));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IterationDiverged);
  }
}

TEST_CASE("cross-method agreement on random interior instances") {
  for (const GenSpec& s : slice(theorem1_family(), 0, 60)) {
    const SweepInstance in = instantiate(s);
    const RiccatiSolution sp = solve_spectral(in.problem, in.gap);
    CHECK(sp.residual <= tol::res * residual_scale(in.problem, sp.X));
    CHECK(uniqueness_class_check(in.problem, sp, in.gap));
    CHECK(operator_norm(contour_from_spectral(in.problem, sp).X - sp.X) < 1e-8);
    try {
      const RiccatiSolution f = solve_fixedpoint(in.problem, in.gap);
      CHECK(operator_norm(f.X - sp.X) < 1e-7);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::IterationDiverged);
    }
  }
}

TEST_CASE("uniqueness class on the sharpness and zero-coupling instances") {
  const BlockProblem p = sharpness_example(1.0, 0.5);
  const SpectralGap gap = locate_gap(p, 0.0);
  const RiccatiSolution s = solve_spectral(p, gap);
  CHECK(uniqueness_class_check(p, s, gap));
  // The other graph solution built from σ(H) ∩ (1, ∞) is not in the class.
  const RiccatiSolution other = solve_spectral_selected(p, [](double mu) { return mu > 0.5; });
  CHECK(other.residual < 1e-12);
  CHECK_FALSE(uniqueness_class_check(p, other, gap));
}
