#include "riccati/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "riccati/errors.hpp"
#include "riccati/tolerances.hpp"

namespace riccati {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm2(const Matrix& a) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return s;
}

// One complex Jacobi rotation annihilating a(p, q).
// The phase e = a_pq/|a_pq| is absorbed into column q first, which turns the
// 2x2 block real symmetric; the usual real rotation then finishes the job.
void rotate(Matrix& a, Matrix& v, Eigen::Index p, Eigen::Index q) {
  const cplx apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const cplx phase = apq / mag;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * mag);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  // G acts on columns (p, q): [[c, s], [-s conj(e), c conj(e)]].
  const cplx g_pp = c;
  const cplx g_pq = s;
  const cplx g_qp = -s * std::conj(phase);
  const cplx g_qq = c * std::conj(phase);

  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    const cplx akp = a(k, p);
    const cplx akq = a(k, q);
    a(k, p) = akp * g_pp + akq * g_qp;
    a(k, q) = akp * g_pq + akq * g_qq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const cplx apk = a(p, k);
    const cplx aqk = a(q, k);
    a(p, k) = std::conj(g_pp) * apk + std::conj(g_qp) * aqk;
    a(q, k) = std::conj(g_pq) * apk + std::conj(g_qq) * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (Eigen::Index k = 0; k < n; ++k) {
    const cplx vkp = v(k, p);
    const cplx vkq = v(k, q);
    v(k, p) = vkp * g_pp + vkq * g_qp;
    v(k, q) = vkp * g_pq + vkq * g_qq;
  }
}

}  // namespace

Matrix EigDecomposition::apply(const std::function<cplx(double)>& f) const {
  Vector fv(values.size());
  for (Eigen::Index i = 0; i < values.size(); ++i) fv(i) = f(values(i));
  return vectors * fv.asDiagonal() * vectors.adjoint();
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).norm() <= tol;
}

EigDecomposition hermitian_eig(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    fail(ErrorCode::DimensionMismatch, "hermitian_eig needs a non-empty square matrix");
  }
  const double scale = m.norm();
  if (!m.allFinite() || !is_hermitian(m, tol::herm(scale))) {
    std::ostringstream os;
    os << "asymmetry " << (m - m.adjoint()).norm() << " exceeds " << tol::herm(scale);
    fail(ErrorCode::NonHermitianInput, os.str());
  }

  const Eigen::Index n = m.rows();
  Matrix a = 0.5 * (m + m.adjoint());
  Matrix v = Matrix::Identity(n, n);
  const double eps = std::numeric_limits<double>::epsilon();
  const double stop = eps * eps * std::max(a.squaredNorm(), std::numeric_limits<double>::min());

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm2(a) <= stop) break;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        // Skip entries already negligible against both diagonal neighbours.
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        const double dpq = std::abs(a(p, p).real()) + std::abs(a(q, q).real());
        if (sweep > 3 && dpq + 100.0 * mag == dpq) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        rotate(a, v, p, q);
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i).real() < a(j, j).real(); });

  EigDecomposition out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto src = order[static_cast<std::size_t>(k)];
    out.values(k) = a(src, src).real();
    out.vectors.col(k) = v.col(src);
  }
  return out;
}

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double min_singular_value(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& s = svd.singularValues();
  return s(s.size() - 1);
}

std::vector<cplx> eigenvalues(const Matrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "eigenvalues of non-square matrix");
  Eigen::ComplexEigenSolver<Matrix> solver(m, false);
  if (solver.info() != Eigen::Success) fail(ErrorCode::ComplexSpectrum, "eigenvalue iteration failed");
  std::vector<cplx> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + m.rows());
  std::sort(ev.begin(), ev.end(), [](cplx x, cplx y) {
    return x.real() < y.real() || (x.real() == y.real() && x.imag() < y.imag());
  });
  return ev;
}

RealVector real_spectrum(const Matrix& m, double imag_tol) {
  const auto ev = eigenvalues(m);
  RealVector out(static_cast<Eigen::Index>(ev.size()));
  for (std::size_t i = 0; i < ev.size(); ++i) {
    if (std::abs(ev[i].imag()) > imag_tol) {
      std::ostringstream os;
      os << "eigenvalue " << ev[i] << " has imaginary part above " << imag_tol;
      fail(ErrorCode::ComplexSpectrum, os.str());
    }
    out(static_cast<Eigen::Index>(i)) = ev[i].real();
  }
  std::sort(out.data(), out.data() + out.size());
  return out;
}

Matrix solve_sylvester(const Matrix& z, const Matrix& c, const Matrix& r) {
  if (z.rows() != z.cols() || c.rows() != c.cols() || r.rows() != c.rows() || r.cols() != z.rows()) {
    fail(ErrorCode::DimensionMismatch, "solve_sylvester: X Z - C X = R needs R of size dim C x dim Z");
  }
  const auto ceig = hermitian_eig(c);
  Eigen::ComplexSchur<Matrix> schur(z);
  if (schur.info() != Eigen::Success) fail(ErrorCode::SpectraOverlap, "Schur reduction of Z failed");
  const Matrix& t = schur.matrixT();
  const Matrix& q = schur.matrixU();

  const Eigen::Index nc = c.rows();
  const Eigen::Index nz = z.rows();
  double sep = std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 0; j < nz; ++j) {
    for (Eigen::Index i = 0; i < nc; ++i) sep = std::min(sep, std::abs(t(j, j) - ceig.values(i)));
  }
  if (!(sep > tol::spec)) {
    std::ostringstream os;
    os << "spectra of Z and C are " << sep << " apart";
    fail(ErrorCode::SpectraOverlap, os.str());
  }

  const Matrix f = ceig.vectors.adjoint() * r * q;
  Matrix w = Matrix::Zero(nc, nz);
  for (Eigen::Index j = 0; j < nz; ++j) {
    Vector rhs = f.col(j);
    for (Eigen::Index k = 0; k < j; ++k) rhs -= w.col(k) * t(k, j);
    for (Eigen::Index i = 0; i < nc; ++i) w(i, j) = rhs(i) / (t(j, j) - ceig.values(i));
  }
  return ceig.vectors * w * q.adjoint();
}

Matrix sqrt_psd(const Matrix& m) {
  const auto e = hermitian_eig(m);
  const double floor = -tol::eig(operator_norm(m));
  if (e.values(0) < floor) {
    std::ostringstream os;
    os << "smallest eigenvalue " << e.values(0) << " below " << floor;
    fail(ErrorCode::NotPSD, os.str());
  }
  Matrix s = e.apply([](double x) { return cplx(std::sqrt(std::max(x, 0.0)), 0.0); });
  return 0.5 * (s + s.adjoint());
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  return m.fullPivLu().inverse();
}

Matrix identity(Eigen::Index n) { return Matrix::Identity(n, n); }

}  // namespace riccati
