#include "riccati/cli.hpp"

#include <fstream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "riccati/certify.hpp"
#include "riccati/errors.hpp"
#include "riccati/factorization.hpp"
#include "riccati/generate.hpp"
#include "riccati/io.hpp"
#include "riccati/sweep.hpp"
#include "riccati/tolerances.hpp"

namespace riccati {

namespace {

bool is_input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::MalformedInput:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::NonHermitianInput:
    case ErrorCode::InfeasibleSpec:
      return true;
    default:
      return false;
  }
}

SpectralGap resolve_gap(const ProblemFile& f, const std::optional<double>& point) {
  if (point) return locate_gap(f.problem, *point);
  if (f.gap) return *f.gap;
  return default_gap(f.problem);
}

RiccatiSolution solve_with(const BlockProblem& p, const SpectralGap& gap, Method m) {
  switch (m) {
    case Method::spectral:
      return solve_spectral(p, gap);
    case Method::fixedpoint:
      return solve_fixedpoint(p, gap);
    case Method::contour: {
      const RiccatiSolution s = solve_spectral(p, gap);
      const RealVector zs = real_spectrum(s.Z, tol::spec * (1.0 + operator_norm(s.Z)));
      const auto& c = p.eig_C().values;
      const auto contour = build_contour(std::span<const double>(zs.data(), static_cast<std::size_t>(zs.size())),
                                         std::span<const double>(c.data(), static_cast<std::size_t>(c.size())));
      return solve_contour(p, s.Z, contour);
    }
  }
  fail(ErrorCode::MalformedInput, "unknown method");
}

json factorize_report(const BlockProblem& p, const SpectralGap& gap) {
  const RiccatiSolution sol = solve_spectral(p, gap);
  const auto grid = factorization_grid(p, gap);
  json j;
  j["gap"] = gap_to_json(gap);
  j["d"] = number_to_json(gap.d);
  j["grid_points"] = grid.size();
  j["defect"] = number_to_json(verify_factorization(p, sol, grid));
  try {
    const EnclosureBounds e = enclosure_bounds(p, gap);
    j["enclosure"] = {{"delta_minus", number_to_json(e.delta_minus)},
                      {"delta_plus", number_to_json(e.delta_plus)},
                      {"lower", number_to_json(e.lower)},
                      {"upper", number_to_json(e.upper)}};
    const SignConditionReport s = sign_conditions(p, gap, e, 16);
    j["sign_conditions"] = {{"ok", s.ok},
                            {"left_samples", s.left_samples},
                            {"right_samples", s.right_samples},
                            {"note", s.note}};
    j["min_singular_W"] = number_to_json(min_singular_W(p, sol.X, e.lower, e.upper, 32));
  } catch (const Error& e) {
    j["enclosure"] = nullptr;
    j["enclosure_note"] = e.what();
  }
  return j;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dense lab for the operator Riccati equation XA - CX + XBX = B*"};
  app.require_subcommand(1);

  std::string problem_path;
  std::optional<double> gap_point;
  std::string method_name = "spectral";

  auto* solve = app.add_subcommand("solve", "Solve for the graph solution of a spectral gap");
  solve->add_option("problem", problem_path, "problem JSON file")->required();
  solve->add_option("--gap", gap_point, "any point of the gap of C to use");
  solve->add_option("--method", method_name, "spectral | contour | fixedpoint")
      ->check(CLI::IsMember({"spectral", "contour", "fixedpoint"}));

  auto* certify = app.add_subcommand("certify", "Evaluate every theorem certificate");
  certify->add_option("problem", problem_path, "problem JSON file")->required();
  certify->add_option("--gap", gap_point, "any point of the gap of C to use");

  auto* factorize = app.add_subcommand("factorize", "Factorization defect and spectral enclosure");
  factorize->add_option("problem", problem_path, "problem JSON file")->required();
  factorize->add_option("--gap", gap_point, "any point of the gap of C to use");

  double ex_d = 1.0;
  double ex_b = 0.5;
  auto* example = app.add_subcommand("example", "Emit the sharpness instance and its exact solution");
  example->add_option("--d", ex_d, "half gap length")->required();
  example->add_option("--b", ex_b, "coupling norm")->required();

  std::string spec_path;
  std::string out_path;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a sweep and write the CSV table");
  sweep_cmd->add_option("spec", spec_path, "sweep JSON file")->required();
  sweep_cmd->add_option("--out", out_path, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*solve) {
      const ProblemFile f = load_problem(problem_path);
      const SpectralGap gap = resolve_gap(f, gap_point);
      const RiccatiSolution sol = solve_with(f.problem, gap, method_from_string(method_name));
      json j = solution_to_json(sol);
      j["gap"] = gap_to_json(gap);
      out << dump(j);
    } else if (*certify) {
      const ProblemFile f = load_problem(problem_path);
      const SpectralGap gap = resolve_gap(f, gap_point);
      std::optional<RiccatiSolution> sol;
      try {
        sol = solve_spectral(f.problem, gap);
      } catch (const Error& e) {
        err << "spectral solve failed: " << e.what() << "\n";
      }
      json certs = json::array();
      for (const auto& c : certify_all(f.problem, gap, sol)) certs.push_back(certificate_to_json(c));
      json j;
      j["gap"] = gap_to_json(gap);
      j["certificates"] = std::move(certs);
      out << dump(j);
    } else if (*factorize) {
      const ProblemFile f = load_problem(problem_path);
      out << dump(factorize_report(f.problem, resolve_gap(f, gap_point)));
    } else if (*example) {
      const BlockProblem p = sharpness_example(ex_d, ex_b);
      const Matrix x = sharpness_example_solution(ex_d, ex_b);
      SpectralGap gap;
      gap.alpha = -ex_d;
      gap.beta = ex_d;
      json j = problem_to_json(p, gap);
      j["d"] = ex_d;
      j["b"] = ex_b;
      j["X"] = matrix_to_json(x);
      j["x_norm"] = number_to_json(operator_norm(x));
      j["residual"] = number_to_json(residual(p, x));
      out << dump(j);
    } else if (*sweep_cmd) {
      std::ifstream in(spec_path);
      if (!in) fail(ErrorCode::MalformedInput, "cannot open '" + spec_path + "'");
      json spec;
      try {
        spec = json::parse(in);
      } catch (const json::exception& e) {
        fail(ErrorCode::MalformedInput, "'" + spec_path + "': " + e.what());
      }
      const auto rows = sweep(sweep_entries_from_json(spec));
      std::ofstream csv(out_path, std::ios::binary);
      if (!csv) fail(ErrorCode::MalformedInput, "cannot write '" + out_path + "'");
      write_csv(csv, rows);
      out << "wrote " << rows.size() << " rows to " << out_path << "\n";
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? 1 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace riccati
