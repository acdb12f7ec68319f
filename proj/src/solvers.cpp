#include "riccati/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "riccati/errors.hpp"
#include "riccati/tolerances.hpp"

namespace riccati {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::spectral: return "spectral";
    case Method::contour: return "contour";
    case Method::fixedpoint: return "fixedpoint";
  }
  return "unknown";
}

Method method_from_string(std::string_view name) {
  if (name == "spectral") return Method::spectral;
  if (name == "contour") return Method::contour;
  if (name == "fixedpoint") return Method::fixedpoint;
  fail(ErrorCode::MalformedInput, "unknown method '" + std::string(name) + "'");
}

double residual(const BlockProblem& p, const Matrix& x) {
  if (x.rows() != p.n_c() || x.cols() != p.n_a()) {
    fail(ErrorCode::DimensionMismatch, "X must be n_C x n_A");
  }
  const Matrix r = x * p.A() - p.C() * x + x * p.B() * x - p.B().adjoint();
  return operator_norm(r);
}

double residual_scale(const BlockProblem& p, const Matrix& x) {
  const double nx = operator_norm(x);
  return (operator_norm(p.A()) + p.norm_B() + operator_norm(p.C())) * (1.0 + nx) * (1.0 + nx);
}

RiccatiSolution make_solution(const BlockProblem& p, Matrix x, Method method) {
  RiccatiSolution sol;
  sol.residual = residual(p, x);
  sol.Z = p.A() + p.B() * x;
  sol.Zhat = p.C() - p.B().adjoint() * x.adjoint();
  sol.X = std::move(x);
  sol.method = method;
  return sol;
}

RiccatiSolution solve_spectral_selected(const BlockProblem& p,
                                        const std::function<bool(double)>& select) {
  const auto eh = hermitian_eig(assemble_H(p));
  std::vector<Eigen::Index> chosen;
  for (Eigen::Index i = 0; i < eh.dim(); ++i) {
    if (select(eh.values(i))) chosen.push_back(i);
  }
  const auto na = p.n_a();
  const auto nc = p.n_c();
  if (static_cast<Eigen::Index>(chosen.size()) != na) {
    std::ostringstream os;
    os << chosen.size() << " eigenvalues of H selected, expected n_A = " << na;
    fail(ErrorCode::WrongSubspaceDimension, os.str());
  }

  Matrix u(na + nc, na);
  for (Eigen::Index k = 0; k < na; ++k) u.col(k) = eh.vectors.col(chosen[static_cast<std::size_t>(k)]);
  const Matrix u1 = u.topRows(na);
  const Matrix u2 = u.bottomRows(nc);

  // Q11 = U1 U1*, so σ_min(Q11) = σ_min(U1)². X = Q21 Q11^{-1} = U2 U1^{-1},
  // which avoids squaring the condition number.
  const double smin = min_singular_value(u1);
  if (smin * smin < tol::spec) {
    std::ostringstream os;
    os << "sigma_min(Q11) = " << smin * smin;
    fail(ErrorCode::NotAGraph, os.str());
  }
  Matrix x = u1.transpose().fullPivLu().solve(u2.transpose()).transpose();
  return make_solution(p, std::move(x), Method::spectral);
}

RiccatiSolution solve_spectral(const BlockProblem& p, const SpectralGap& gap) {
  // Eigenvalues of H within tol_spec of an endpoint are counted with σ(C),
  // to which the endpoints belong.
  return solve_spectral_selected(p, [&gap](double mu) { return gap.contains_strictly(mu, tol::spec); });
}

Contour build_contour(std::span<const double> z_spectrum, std::span<const double> c_spectrum) {
  if (z_spectrum.empty()) fail(ErrorCode::DimensionMismatch, "empty spectrum of Z");
  const double sep = dist_spectra(z_spectrum, c_spectrum);
  if (!(sep > 2.0 * tol::spec)) {
    std::ostringstream os;
    os << "dist(sigma(Z), sigma(C)) = " << sep;
    fail(ErrorCode::SpectraTooClose, os.str());
  }
  const auto [lo, hi] = std::minmax_element(z_spectrum.begin(), z_spectrum.end());
  Contour contour;
  contour.center = 0.5 * (*lo + *hi);
  contour.radius = 0.5 * (*hi - *lo) + 0.5 * sep;
  contour.nodes = tol::quad_min_nodes;
  for (double c : c_spectrum) {
    if (std::abs(c - contour.center) - contour.radius <= tol::spec) {
      std::ostringstream os;
      os << "eigenvalue " << c << " of C is not outside the circle";
      fail(ErrorCode::SpectraTooClose, os.str());
    }
  }
  return contour;
}

namespace {

// Sum of r e^{iθ_k} (C − λ_k)^{-1} B* (Z − λ_k)^{-1} over the nodes
// k = first, first + stride, ... of an N-point equispaced circle.
Matrix trapezoid_partial(const BlockProblem& p, const Matrix& ub, const Matrix& z,
                         const Contour& contour, int n, int first, int stride) {
  const auto& ec = p.eig_C();
  const auto na = p.n_a();
  Matrix acc = Matrix::Zero(p.n_c(), na);
  for (int k = first; k < n; k += stride) {
    const double theta = 2.0 * std::numbers::pi * k / n;
    const cplx w = contour.radius * std::polar(1.0, theta);
    const cplx lambda = contour.center + w;
    Matrix zl = z;
    zl.diagonal().array() -= lambda;
    const Matrix zinv = zl.partialPivLu().inverse();
    Matrix scaled = ub;
    for (Eigen::Index i = 0; i < scaled.rows(); ++i) scaled.row(i) /= (ec.values(i) - lambda);
    acc += w * (ec.vectors * scaled * zinv);
  }
  return acc;
}

}  // namespace

RiccatiSolution solve_contour(const BlockProblem& p, const Matrix& z, const Contour& contour) {
  if (z.rows() != p.n_a() || z.cols() != p.n_a()) fail(ErrorCode::DimensionMismatch, "Z must be n_A x n_A");
  if (!(contour.radius > 0.0) || contour.nodes < tol::quad_min_nodes || contour.nodes % 2 != 0) {
    fail(ErrorCode::MalformedInput, "contour needs radius > 0 and an even node count >= 16");
  }
  for (const cplx ev : eigenvalues(z)) {
    if (contour.radius - std::abs(ev - contour.center) <= tol::spec) {
      fail(ErrorCode::SpectraTooClose, "an eigenvalue of Z is not inside the contour");
    }
  }
  for (Eigen::Index i = 0; i < p.eig_C().dim(); ++i) {
    if (std::abs(p.eig_C().values(i) - contour.center) - contour.radius <= tol::spec) {
      fail(ErrorCode::SpectraTooClose, "an eigenvalue of C is not outside the contour");
    }
  }

  const Matrix ub = p.eig_C().vectors.adjoint() * p.B().adjoint();
  int n = contour.nodes;
  Matrix sum = trapezoid_partial(p, ub, z, contour, n, 0, 1);
  Matrix x = sum / static_cast<double>(n);
  while (n < tol::quad_max_nodes) {
    // Doubling keeps the old nodes; only the odd ones of the finer grid are new.
    sum += trapezoid_partial(p, ub, z, contour, 2 * n, 1, 2);
    n *= 2;
    Matrix next = sum / static_cast<double>(n);
    const double change = operator_norm(next - x);
    x = std::move(next);
    if (change < tol::quad * (1.0 + operator_norm(x))) {
      auto sol = make_solution(p, std::move(x), Method::contour);
      sol.work = n;
      return sol;
    }
  }
  std::ostringstream os;
  os << "no convergence with " << n << " nodes";
  fail(ErrorCode::QuadratureStall, os.str());
}

RiccatiSolution solve_fixedpoint(const BlockProblem& p, const SpectralGap& gap) {
  const Matrix bstar = p.B().adjoint();
  Matrix x = Matrix::Zero(p.n_c(), p.n_a());
  for (int k = 1; k <= tol::fix_max_iter; ++k) {
    const Matrix z = p.A() + p.B() * x;
    Matrix next = solve_sylvester(z, p.C(), bstar);
    const double xnorm = operator_norm(x);
    const double change = operator_norm(next - x);
    x = std::move(next);
    if (!x.allFinite() || operator_norm(x) > tol::fix_blowup) {
      fail(ErrorCode::IterationDiverged, "iterate norm exceeded 1e6 at step " + std::to_string(k));
    }
    if (change <= tol::fix * (1.0 + xnorm)) {
      auto sol = make_solution(p, std::move(x), Method::fixedpoint);
      sol.work = k;
      if (!uniqueness_class_check(p, sol, gap)) {
        fail(ErrorCode::IterationDiverged, "iteration settled at step " + std::to_string(k) +
                                               " on a solution whose spectrum of A + BX leaves the gap");
      }
      return sol;
    }
  }
  fail(ErrorCode::IterationDiverged, "no convergence within 500 iterations");
}

bool uniqueness_class_check(const BlockProblem& p, const RiccatiSolution& sol,
                            const SpectralGap& gap) {
  (void)p;
  const double zt = tol::spec * (1.0 + operator_norm(sol.Z));
  for (const cplx ev : eigenvalues(sol.Z)) {
    if (std::abs(ev.imag()) > zt || !gap.contains_strictly(ev.real(), tol::spec)) return false;
  }
  for (const cplx ev : eigenvalues(sol.Zhat)) {
    if (gap.contains_strictly(ev.real(), tol::spec)) return false;
  }
  return true;
}

}  // namespace riccati
