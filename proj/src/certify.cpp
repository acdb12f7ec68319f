#include "riccati/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "riccati/errors.hpp"
#include "riccati/geometry.hpp"
#include "riccati/tolerances.hpp"

namespace riccati {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::span<const double> as_span(const RealVector& v) {
  return {v.data(), static_cast<std::size_t>(v.size())};
}

void set_margin(Certificate& c) { c.margin = c.bound_value - c.observed_value; }

Certificate not_applicable(Theorem t, const std::string& why) {
  Certificate c;
  c.theorem = t;
  c.bound_value = kNaN;
  c.observed_value = kNaN;
  c.margin = kNaN;
  c.notes.push_back(why);
  return c;
}

// tan(½ arctan(num/den)) for den > 0; the limiting value 1 at den = 0; NaN below.
double half_angle_bound(double num, double den) {
  if (den < 0.0) return kNaN;
  return std::tan(0.5 * std::atan2(num, den));
}

Certificate tan2theta_impl(const BlockProblem& p, std::optional<RiccatiSolution>* out) {
  const auto& a = p.eig_A().values;
  const auto& c = p.eig_C().values;
  const double sup_a = a(a.size() - 1);
  const double inf_c = c(0);
  if (!(sup_a < inf_c - tol::spec)) {
    std::ostringstream os;
    os << "sup sigma(A) = " << sup_a << " is not below inf sigma(C) = " << inf_c;
    fail(ErrorCode::NotSubordinated, os.str());
  }
  const double cut = 0.5 * (sup_a + inf_c);
  auto sol = solve_spectral_selected(p, [cut](double mu) { return mu < cut; });

  const double d = inf_c - sup_a;
  Certificate cert;
  cert.theorem = Theorem::tan_2theta_dk;
  cert.hypothesis_ok = true;
  cert.bound_value = std::tan(0.5 * std::atan(2.0 * p.norm_B() / d));
  cert.observed_value = operator_norm(sol.X);
  set_margin(cert);
  cert.conclusion_ok = cert.observed_value < 1.0 && sol.residual <= tol::res * residual_scale(p, sol.X);
  cert.values["d"] = d;
  cert.values["b_norm"] = p.norm_B();
  cert.values["residual"] = sol.residual;
  if (out != nullptr) *out = std::move(sol);
  return cert;
}

}  // namespace

std::string_view to_string(Theorem t) {
  switch (t) {
    case Theorem::existence_1i: return "existence_1i";
    case Theorem::contraction_1ii: return "contraction_1ii";
    case Theorem::tan_theta_2: return "tan_theta_2";
    case Theorem::apriori_bound: return "apriori_bound";
    case Theorem::tan_2theta_dk: return "tan_2theta_dk";
    case Theorem::squared_subordination: return "squared_subordination";
  }
  return "unknown";
}

bool Certificate::passed() const {
  return hypothesis_ok && conclusion_ok && margin >= -tol::cert;
}

Certificate certify_existence(const BlockProblem& p, const SpectralGap& gap,
                              const RiccatiSolution& sol) {
  Certificate cert;
  cert.theorem = Theorem::existence_1i;
  if (!gap.finite()) {
    cert = not_applicable(Theorem::existence_1i, "gap is infinite");
    return cert;
  }
  const double d = gap_distance(p, gap);
  cert.hypothesis_ok = existence_hypothesis(p, gap);
  cert.values["d"] = d;
  cert.values["gap_length"] = gap.length();
  cert.values["b_norm"] = p.norm_B();
  cert.values["b_threshold"] = std::sqrt(d * gap.length());

  cert.observed_value = sol.residual;
  cert.bound_value = tol::res * residual_scale(p, sol.X);
  set_margin(cert);

  const bool unique = uniqueness_class_check(p, sol, gap);
  const auto eh = hermitian_eig(assemble_H(p));
  double endpoint_margin = std::numeric_limits<double>::infinity();
  int inside = 0;
  for (Eigen::Index i = 0; i < eh.dim(); ++i) {
    const double mu = eh.values(i);
    if (!gap.contains(mu)) continue;
    ++inside;
    endpoint_margin = std::min({endpoint_margin, mu - gap.alpha, gap.beta - mu});
  }
  const bool proper = inside == p.n_a() && endpoint_margin > tol::spec;
  cert.values["endpoint_margin"] = endpoint_margin;
  cert.conclusion_ok = unique && proper && sol.method == Method::spectral;
  if (!unique) cert.notes.push_back("solution outside the uniqueness class");
  if (!proper) cert.notes.push_back("sigma(H) in the gap is not a proper closed subset");
  return cert;
}

Certificate certify_contraction(const BlockProblem& p, const SpectralGap& gap,
                                const RiccatiSolution& sol) {
  if (!gap.finite()) return not_applicable(Theorem::contraction_1ii, "gap is infinite");
  Certificate cert;
  cert.theorem = Theorem::contraction_1ii;
  cert.hypothesis_ok = contraction_hypothesis(p, gap);

  const double d = gap_distance(p, gap);
  const double gamma = gap.center();
  Matrix a = p.A();
  a.diagonal().array() -= gamma;
  Matrix c = p.C();
  c.diagonal().array() -= gamma;
  const double mixed = operator_norm(a * p.B() + p.B() * c);
  const double nb = p.norm_B();
  const double den = d * (gap.length() - d) - nb * nb;

  cert.bound_value = half_angle_bound(2.0 * mixed, den);
  cert.observed_value = operator_norm(sol.X);
  set_margin(cert);
  cert.conclusion_ok = cert.observed_value < 1.0 && std::isfinite(cert.bound_value);
  cert.values["d"] = d;
  cert.values["gap_length"] = gap.length();
  cert.values["b_norm"] = nb;
  cert.values["b_threshold"] = std::sqrt(std::max(d * (gap.length() - d), 0.0));
  cert.values["shifted_ab_plus_bc"] = mixed;
  cert.values["gamma"] = gamma;
  if (!cert.hypothesis_ok) cert.notes.push_back("||B|| >= sqrt(d(|Delta|-d)) or sigma(A) not in the gap");
  return cert;
}

Certificate certify_tan_theta(const BlockProblem& p, const RiccatiSolution& sol) {
  const double ztol = tol::spec * (1.0 + operator_norm(sol.Z));
  const auto zspec = real_spectrum(sol.Z, ztol);
  const auto cspec = as_span(p.eig_C().values);
  const double delta = dist_spectra(as_span(zspec), cspec);
  if (!(delta > tol::spec)) {
    std::ostringstream os;
    os << "dist(sigma(Z), sigma(C)) = " << delta;
    fail(ErrorCode::DeltaNonpositive, os.str());
  }
  // σ(Z) must sit in a single gap of C: no eigenvalue of C inside its hull.
  const double lo = zspec(0);
  const double hi = zspec(zspec.size() - 1);
  const bool one_gap = std::none_of(cspec.begin(), cspec.end(), [&](double c) { return lo <= c && c <= hi; });

  Certificate cert;
  cert.theorem = Theorem::tan_theta_2;
  cert.hypothesis_ok = one_gap && sol.residual <= tol::res * residual_scale(p, sol.X);
  cert.conclusion_ok = true;
  cert.bound_value = p.norm_B() / delta;
  cert.observed_value = operator_norm(sol.X);
  set_margin(cert);
  cert.values["delta"] = delta;
  cert.values["b_norm"] = p.norm_B();
  cert.values["residual"] = sol.residual;
  if (!one_gap) cert.notes.push_back("sigma(Z) is not contained in one gap of C");
  return cert;
}

Certificate certify_apriori(const BlockProblem& p, const SpectralGap& gap,
                            const RiccatiSolution& sol) {
  const auto bounds = enclosure_bounds(p, gap);
  const auto& a = p.eig_A().values;
  const double dt = std::min(a(0) - gap.alpha - bounds.delta_minus,
                             gap.beta - a(a.size() - 1) - bounds.delta_plus);
  Certificate cert;
  cert.theorem = Theorem::apriori_bound;
  cert.hypothesis_ok = true;
  cert.conclusion_ok = dt > 0.0;
  cert.bound_value = dt > 0.0 ? p.norm_B() / dt : kNaN;
  cert.observed_value = operator_norm(sol.X);
  set_margin(cert);
  cert.values["delta_tilde"] = dt;
  cert.values["delta_minus"] = bounds.delta_minus;
  cert.values["delta_plus"] = bounds.delta_plus;
  return cert;
}

Certificate certify_tan2theta(const BlockProblem& p) { return tan2theta_impl(p, nullptr); }

BlockProblem squared_problem(const BlockProblem& p, double gamma) {
  Matrix a = p.A();
  a.diagonal().array() -= gamma;
  Matrix c = p.C();
  c.diagonal().array() -= gamma;
  const Matrix& b = p.B();
  Matrix ah = a * a + b * b.adjoint();
  Matrix bh = a * b + b * c;
  Matrix ch = c * c + b.adjoint() * b;
  ah = 0.5 * (ah + ah.adjoint());
  ch = 0.5 * (ch + ch.adjoint());
  return BlockProblem(std::move(ah), std::move(bh), std::move(ch));
}

std::pair<BlockProblem, Certificate> squared_shift(const BlockProblem& p, const SpectralGap& gap) {
  if (!contraction_hypothesis(p, gap)) {
    fail(ErrorCode::HypothesisViolated, "squared shift needs sigma(A) in the gap and ||B|| < sqrt(d(|Delta|-d))");
  }
  const double gamma = gap.center();
  BlockProblem sq = squared_problem(p, gamma);
  const double d = gap_distance(p, gap);
  const double nb = p.norm_B();
  const auto& ah = sq.eig_A().values;
  const auto& ch = sq.eig_C().values;

  Certificate cert;
  cert.theorem = Theorem::squared_subordination;
  cert.hypothesis_ok = true;
  cert.observed_value = d * (gap.length() - d) - nb * nb;
  cert.bound_value = dist_spectra(as_span(ah), as_span(ch));
  set_margin(cert);
  const double ceiling = std::pow(0.5 * gap.length() - d, 2) + nb * nb;
  const double sup_ah = ah(ah.size() - 1);
  const double inf_ch = ch(0);
  const bool subordinated = sup_ah < inf_ch;
  const bool a_window = ah(0) >= -tol::cert && sup_ah <= ceiling + tol::cert;
  cert.conclusion_ok = subordinated && a_window && cert.observed_value > 0.0;
  cert.values["gamma"] = gamma;
  cert.values["sup_sigma_A_hat"] = sup_ah;
  cert.values["inf_sigma_C_hat"] = inf_ch;
  cert.values["sigma_A_hat_ceiling"] = ceiling;
  if (!subordinated) cert.notes.push_back("sigma(A_hat) and sigma(C_hat) are not subordinated");
  if (!a_window) cert.notes.push_back("sigma(A_hat) leaves [0, (|Delta|/2-d)^2 + ||B||^2]");
  return {std::move(sq), std::move(cert)};
}

double gamma_center(const Matrix& z) {
  const auto spec = real_spectrum(z, tol::spec * (1.0 + operator_norm(z)));
  return 0.5 * (spec(0) + spec(spec.size() - 1));
}

CenteredResolvent centered_resolvent(const BlockProblem& p, const RiccatiSolution& sol) {
  CenteredResolvent out;
  out.gamma = gamma_center(sol.Z);
  const auto& c = p.eig_C().values;
  double dist = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < c.size(); ++i) dist = std::min(dist, std::abs(c(i) - out.gamma));
  out.resolvent_norm = 1.0 / dist;

  const auto diag = block_diagonalize(p, sol.X);
  Matrix centered = diag.Lambda;
  centered.diagonal().array() -= out.gamma;
  const auto zspec = real_spectrum(sol.Z, tol::spec * (1.0 + operator_norm(sol.Z)));
  const double delta = dist_spectra(as_span(zspec), as_span(c));
  out.predicted = 1.0 / (operator_norm(centered) + delta);
  return out;
}

std::vector<Certificate> certify_all(const BlockProblem& p, const SpectralGap& gap,
                                     const std::optional<RiccatiSolution>& sol) {
  std::vector<Certificate> out;
  const auto guarded = [&](Theorem t, auto&& body) {
    try {
      out.push_back(body());
    } catch (const Error& e) {
      out.push_back(not_applicable(t, e.what()));
    }
  };
  const std::string no_solution = "no spectral solution for this gap";

  guarded(Theorem::existence_1i, [&] {
    if (!sol) {
      auto c = not_applicable(Theorem::existence_1i, no_solution);
      if (gap.finite()) c.hypothesis_ok = existence_hypothesis(p, gap);
      return c;
    }
    return certify_existence(p, gap, *sol);
  });
  guarded(Theorem::contraction_1ii, [&] {
    if (!sol) return not_applicable(Theorem::contraction_1ii, no_solution);
    return certify_contraction(p, gap, *sol);
  });
  guarded(Theorem::tan_theta_2, [&] {
    if (!sol) return not_applicable(Theorem::tan_theta_2, no_solution);
    return certify_tan_theta(p, *sol);
  });
  guarded(Theorem::apriori_bound, [&] {
    if (!sol) return not_applicable(Theorem::apriori_bound, no_solution);
    return certify_apriori(p, gap, *sol);
  });
  guarded(Theorem::tan_2theta_dk, [&] {
    const auto& a = p.eig_A().values;
    const bool subordinated = a(a.size() - 1) < p.eig_C().values(0) - tol::spec;
    if (subordinated) return certify_tan2theta(p);
    if (!gap.finite()) return not_applicable(Theorem::tan_2theta_dk, "not subordinated and gap infinite");
    // Applied to (H − γ)², whose diagonal entries are subordinated under the
    // contraction hypothesis and whose low spectral subspace is again G(X).
    auto [sq, sub] = squared_shift(p, gap);
    std::optional<RiccatiSolution> squared_sol;
    auto cert = tan2theta_impl(sq, &squared_sol);
    cert.notes.push_back("evaluated on the squared problem (H - gamma)^2");
    if (sol && squared_sol) cert.values["x_difference"] = operator_norm(squared_sol->X - sol->X);
    return cert;
  });
  guarded(Theorem::squared_subordination, [&] { return squared_shift(p, gap).second; });
  return out;
}

}  // namespace riccati
