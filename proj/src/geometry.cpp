#include "riccati/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "riccati/errors.hpp"
#include "riccati/solvers.hpp"

namespace riccati {

namespace {

// (I + M)^{-1} for Hermitian PSD M via its eigendecomposition.
Matrix inverse_shifted(const Matrix& m) {
  const auto e = hermitian_eig(m);
  return e.apply([](double s) { return cplx(1.0 / (1.0 + std::max(s, 0.0)), 0.0); });
}

}  // namespace

Matrix GraphProjection::P() const {
  const auto na = n_a();
  const auto n = na + n_c();
  Matrix p = Matrix::Zero(n, n);
  p.topLeftCorner(na, na) = identity(na);
  return p;
}

GraphProjection graph_projection(const Matrix& x) {
  const auto na = x.cols();
  const auto nc = x.rows();
  const Matrix q11 = inverse_shifted(x.adjoint() * x);
  const Matrix q21 = x * q11;
  GraphProjection out;
  out.X = x;
  out.Q.resize(na + nc, na + nc);
  out.Q.topLeftCorner(na, na) = q11;
  out.Q.bottomLeftCorner(nc, na) = q21;
  out.Q.topRightCorner(na, nc) = q21.adjoint();
  out.Q.bottomRightCorner(nc, nc) = q21 * x.adjoint();
  return out;
}

AngleReport operator_angle(const GraphProjection& q) {
  const auto na = q.n_a();
  const auto nc = q.n_c();
  const Matrix q11 = q.Q.topLeftCorner(na, na);
  // I − Q11 = X* Q21 exactly; forming it this way avoids cancellation for small X.
  const Matrix sin2 = q.X.adjoint() * q.Q.bottomLeftCorner(nc, na);
  const auto es = hermitian_eig(0.5 * (sin2 + sin2.adjoint()));
  const auto ec = hermitian_eig(0.5 * (q11 + q11.adjoint()));
  const double s2 = std::clamp(es.values(es.dim() - 1), 0.0, 1.0);
  const double c2 = std::clamp(ec.values(0), 0.0, 1.0);

  AngleReport r;
  r.theta_norm = std::atan2(std::sqrt(s2), std::sqrt(c2));
  r.sin_norm = std::sin(r.theta_norm);
  r.tan_norm = std::tan(r.theta_norm);
  r.x_norm = operator_norm(q.X);
  r.projection_distance = operator_norm(q.Q - q.P());
  return r;
}

Matrix graph_frame_inverse(const Matrix& x) {
  const auto na = x.cols();
  const auto nc = x.rows();
  const Matrix ia = inverse_shifted(x.adjoint() * x);
  const Matrix ic = inverse_shifted(x * x.adjoint());
  Matrix v(na + nc, na + nc);
  v.topLeftCorner(na, na) = ia;
  v.topRightCorner(na, nc) = ia * x.adjoint();
  v.bottomLeftCorner(nc, na) = -ic * x;
  v.bottomRightCorner(nc, nc) = ic;
  return v;
}

Diagonalization block_diagonalize(const BlockProblem& p, const Matrix& x) {
  const double res = residual(p, x);
  const double limit = 1e-6 * residual_scale(p, x);
  if (res > limit) {
    std::ostringstream os;
    os << "residual " << res << " exceeds " << limit;
    fail(ErrorCode::ResidualTooLarge, os.str());
  }
  const auto na = p.n_a();
  const auto nc = p.n_c();

  Diagonalization out;
  out.V.resize(na + nc, na + nc);
  out.V.topLeftCorner(na, na) = identity(na);
  out.V.topRightCorner(na, nc) = -x.adjoint();
  out.V.bottomLeftCorner(nc, na) = x;
  out.V.bottomRightCorner(nc, nc) = identity(nc);
  out.V_inv = graph_frame_inverse(x);

  const Matrix d = out.V_inv * assemble_H(p) * out.V;
  out.offdiag_norm = std::max(operator_norm(d.topRightCorner(na, nc)), operator_norm(d.bottomLeftCorner(nc, na)));

  out.Z = p.A() + p.B() * x;
  out.Zhat = p.C() - p.B().adjoint() * x.adjoint();
  out.S = sqrt_psd(identity(na) + x.adjoint() * x);
  out.S_hat = sqrt_psd(identity(nc) + x * x.adjoint());
  out.Lambda = out.S * out.Z * inverse(out.S);
  out.LambdaHat = out.S_hat * out.Zhat * inverse(out.S_hat);
  return out;
}

}  // namespace riccati
