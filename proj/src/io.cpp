#include "riccati/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "riccati/errors.hpp"

namespace riccati {

namespace {

cplx entry_from_json(const json& e, const char* name) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
    return {e[0].get<double>(), e[1].get<double>()};
  fail(ErrorCode::MalformedInput, std::string("matrix ") + name + ": entries must be numbers or [re, im] pairs");
}

double endpoint_from_json(const json& e, double infinity) {
  if (e.is_null()) return infinity;
  if (e.is_number()) return e.get<double>();
  fail(ErrorCode::MalformedInput, "gap endpoints must be numbers or null");
}

}  // namespace

Matrix matrix_from_json(const json& j, const char* name) {
  if (!j.is_array() || j.empty()) fail(ErrorCode::MalformedInput, std::string("matrix ") + name + " must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array() || j[0].empty()) fail(ErrorCode::MalformedInput, std::string("matrix ") + name + ": rows must be non-empty arrays");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      fail(ErrorCode::MalformedInput, std::string("matrix ") + name + ": ragged rows");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = entry_from_json(row[static_cast<std::size_t>(c)], name);
  }
  return m;
}

json number_to_json(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

ProblemFile problem_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorCode::MalformedInput, "problem must be a JSON object");
  for (const char* key : {"A", "B", "C"})
    if (!j.contains(key)) fail(ErrorCode::MalformedInput, std::string("missing key \"") + key + "\"");
  ProblemFile out{BlockProblem(matrix_from_json(j["A"], "A"), matrix_from_json(j["B"], "B"),
                               matrix_from_json(j["C"], "C")),
                  std::nullopt};
  if (j.contains("gap") && !j["gap"].is_null()) {
    const json& g = j["gap"];
    if (!g.is_array() || g.size() != 2) fail(ErrorCode::MalformedInput, "\"gap\" must be [alpha, beta]");
    constexpr double inf = std::numeric_limits<double>::infinity();
    SpectralGap gap;
    gap.alpha = endpoint_from_json(g[0], -inf);
    gap.beta = endpoint_from_json(g[1], inf);
    if (!(gap.alpha < gap.beta)) fail(ErrorCode::MalformedInput, "\"gap\" needs alpha < beta");
    gap.d = gap_distance(out.problem, gap);
    out.gap = gap;
  }
  return out;
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::MalformedInput, "cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorCode::MalformedInput, "'" + path + "': " + e.what());
  }
  return problem_from_json(j);
}

json gap_to_json(const SpectralGap& gap) {
  return json::array({number_to_json(gap.alpha), number_to_json(gap.beta)});
}

json problem_to_json(const BlockProblem& p, const std::optional<SpectralGap>& gap) {
  json j;
  j["A"] = matrix_to_json(p.A());
  j["B"] = matrix_to_json(p.B());
  j["C"] = matrix_to_json(p.C());
  if (gap) j["gap"] = gap_to_json(*gap);
  return j;
}

json solution_to_json(const RiccatiSolution& sol) {
  json j;
  j["method"] = std::string(to_string(sol.method));
  j["X"] = matrix_to_json(sol.X);
  j["Z"] = matrix_to_json(sol.Z);
  j["Zhat"] = matrix_to_json(sol.Zhat);
  j["residual"] = number_to_json(sol.residual);
  j["x_norm"] = number_to_json(operator_norm(sol.X));
  j["work"] = sol.work;
  return j;
}

json certificate_to_json(const Certificate& cert) {
  json j;
  j["theorem"] = std::string(to_string(cert.theorem));
  j["passed"] = cert.passed();
  j["hypothesis_ok"] = cert.hypothesis_ok;
  j["conclusion_ok"] = cert.conclusion_ok;
  j["bound_value"] = number_to_json(cert.bound_value);
  j["observed_value"] = number_to_json(cert.observed_value);
  j["margin"] = number_to_json(cert.margin);
  json values = json::object();
  for (const auto& [k, v] : cert.values) values[k] = number_to_json(v);
  j["values"] = std::move(values);
  j["notes"] = cert.notes;
  return j;
}

GenSpec genspec_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorCode::MalformedInput, "generator spec must be an object");
  GenSpec s;
  try {
    s.seed = j.value("seed", std::uint64_t{0});
    s.n_a = j.value("n_A", 1);
    s.n_c = j.value("n_C", 2);
    if (j.contains("gap")) {
      const json& g = j["gap"];
      if (!g.is_array() || g.size() != 2) fail(ErrorCode::MalformedInput, "\"gap\" must be [alpha, beta]");
      s.alpha = g[0].get<double>();
      s.beta = g[1].get<double>();
    }
    s.d_target = j.value("d_target", s.d_target);
    s.b_ratio = j.value("b_ratio", s.b_ratio);
    s.placement = placement_from_string(j.value("placement", std::string("interior")));
  } catch (const json::exception& e) {
    fail(ErrorCode::MalformedInput, std::string("generator spec: ") + e.what());
  }
  return s;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace riccati
