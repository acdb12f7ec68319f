#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "instances.hpp"
#include "riccati/cli.hpp"
#include "riccati/errors.hpp"
#include "riccati/generate.hpp"
#include "riccati/io.hpp"
#include "riccati/sweep.hpp"
#include "support.hpp"

using namespace riccati;
using namespace riccati::testing;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "riccati_lab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "riccati_harness_tests";
  fs::create_directories(dir);
  return dir / name;
}

void write_file(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("SplitMix64 reference stream") {
  // Known first outputs of the reference algorithm for seed 1234567.
  SplitMix64 rng(1234567);
  CHECK(rng.next() == 6457827717110365317ULL);
  CHECK(rng.next() == 3203168211198807973ULL);
  CHECK(rng.next() == 9817491932198370423ULL);
  SplitMix64 u(0);
  for (int k = 0; k < 1000; ++k) {
    const double x = u.uniform();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
}

TEST_CASE("generate honours the interior recipe") {
  GenSpec s;
  s.seed = 1;
  s.n_a = 1;
  s.n_c = 2;
  s.alpha = -1.0;
  s.beta = 1.0;
  s.d_target = 1.0;
  s.b_ratio = 0.3536;
  const BlockProblem p = generate(s);
  CHECK(std::abs(p.eig_A().values(0)) < 1e-15);
  CHECK(p.eig_C().values(0) == doctest::Approx(-1.0));
  CHECK(p.eig_C().values(1) == doctest::Approx(1.0));
  CHECK(p.norm_B() == doctest::Approx(0.3536 * std::sqrt(2.0)));

  s.b_ratio = 0.0;
  CHECK(generate(s).B().norm() == 0.0);

  for (const GenSpec& g : slice(theorem1_family(), 0, 100)) {
    const SweepInstance in = instantiate(g);
    CHECK(in.gap.alpha == doctest::Approx(g.alpha).epsilon(1e-12));
    CHECK(in.gap.beta == doctest::Approx(g.beta).epsilon(1e-12));
    CHECK(in.gap.d == doctest::Approx(g.d_target).epsilon(1e-10));
    CHECK(in.problem.norm_B() == doctest::Approx(g.b_target()).epsilon(1e-12));
    CHECK(existence_hypothesis(in.problem, in.gap));
  }
}

TEST_CASE("generate is bit-reproducible") {
  for (const GenSpec& g : {theorem1_family()[7], overlapping_family()[3], subordinated_family()[5]}) {
    const BlockProblem a = generate(g), b = generate(g);
    CHECK(a.A() == b.A());
    CHECK(a.B() == b.B());
    CHECK(a.C() == b.C());
  }
}

TEST_CASE("subordinated and overlapping placements") {
  for (const GenSpec& g : slice(subordinated_family(), 0, 50)) {
    const BlockProblem p = generate(g);
    const auto& a = p.eig_A().values;
    CHECK(a(a.size() - 1) == doctest::Approx(g.beta - g.d_target));
    CHECK(p.eig_C().values(0) == doctest::Approx(g.beta));
  }
  int overlapping = 0;
  for (const GenSpec& g : overlapping_family()) {
    const SweepInstance in = instantiate(g);
    const RiccatiSolution s = solve_spectral(in.problem, in.gap);
    CHECK(uniqueness_class_check(in.problem, s, in.gap));
    CHECK(operator_norm(s.X) == doctest::Approx(g.b_ratio).epsilon(1e-8));
    if (!spectrum_of_A_in_gap(in.problem, in.gap)) ++overlapping;
  }
  CHECK(overlapping > 0);
}

TEST_CASE("generate rejects infeasible recipes") {
  GenSpec s;
  for (auto mutate : std::vector<void (*)(GenSpec&)>{
           [](GenSpec& g) { g.d_target = 0.0; },
           [](GenSpec& g) { g.d_target = 1.5; },
           [](GenSpec& g) { g.b_ratio = -0.1; },
           [](GenSpec& g) { g.n_c = 1; },
           [](GenSpec& g) { g.beta = g.alpha; },
       }) {
    GenSpec bad = s;
    mutate(bad);
    try {
      (void)generate(bad);
      FAIL("expected InfeasibleSpec");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InfeasibleSpec);
    }
  }
}

TEST_CASE("problem JSON round trip") {
  const BlockProblem p = generate(theorem1_family()[0]);
  const json j = problem_to_json(p, std::nullopt);
  const ProblemFile back = problem_from_json(json::parse(dump(j)));
  CHECK(back.problem.A() == p.A());
  CHECK(back.problem.B() == p.B());
  CHECK(back.problem.C() == p.C());
  CHECK_FALSE(back.gap.has_value());

  const json plain = json::parse(R"({"A": [[0]], "B": [[0.5, [0.1, -0.2]]], "C": [[-1, 0], [0, 1]], "gap": [-1, null]})");
  const ProblemFile f = problem_from_json(plain);
  CHECK(f.problem.B()(0, 1) == cplx(0.1, -0.2));
  REQUIRE(f.gap.has_value());
  CHECK(std::isinf(f.gap->beta));
  CHECK(f.gap->d == doctest::Approx(1.0));

  for (const char* bad : {R"({"A": [[0]], "B": [[0, 0]]})", R"({"A": [[0], [1, 2]], "B": [[0]], "C": [[0]]})",
                          R"({"A": [["x"]], "B": [[0]], "C": [[1]]})", R"([1, 2])"}) {
    try {
      (void)problem_from_json(json::parse(bad));
      FAIL("expected MalformedInput");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::MalformedInput);
    }
  }
}

TEST_CASE("sweep keeps every row and maps the contraction frontier") {
  CHECK(sweep({}).empty());
  const json spec = json::parse(R"([{"example_family": {"d": 1, "b_start": 0, "b_stop": 1.5, "b_step": 0.05}}])");
  const auto entries = sweep_entries_from_json(spec);
  REQUIRE(entries.size() == 31);
  const auto rows = sweep(entries);
  REQUIRE(rows.size() == entries.size());
  double first_fail = -1.0, first_big = -1.0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const double b = std::get<SharpnessEntry>(entries[k]).b;
    for (const auto& c : rows[k].certificates) {
      if (c.theorem == Theorem::contraction_1ii && !c.passed() && first_fail < 0) first_fail = b;
      if (c.theorem == Theorem::existence_1i && b < std::sqrt(2.0) - 1e-9) CHECK(c.hypothesis_ok);
    }
    if (rows[k].x_norm >= 1.0 - 1e-12 && first_big < 0) first_big = b;
  }
  CHECK(first_fail == doctest::Approx(1.0));
  CHECK(first_big == doctest::Approx(1.0));

  const json mixed = json::parse(R"({"instances": [
      {"seed": 3, "n_A": 2, "n_C": 4, "gap": [-1, 1], "d_target": 0.2, "b_ratio": 0.5, "count": 20},
      {"seed": 3, "n_A": 2, "n_C": 1, "gap": [-1, 1], "d_target": 0.2, "b_ratio": 0.5},
      {"example": {"d": 1, "b": 0.5}}]})");
  const auto more = sweep(sweep_entries_from_json(mixed));
  REQUIRE(more.size() == 22);
  for (std::size_t k = 0; k < 20; ++k) CHECK(more[k].status.front() != "generate:InfeasibleSpec");
  CHECK(more[20].status.front() == "generate:InfeasibleSpec");
  CHECK(more[21].status.front() == "ok");
}

TEST_CASE("CSV layout") {
  const auto header = csv_header();
  REQUIRE(header.size() == 10 + 12 + 3);
  CHECK(header[0] == "seed");
  CHECK(header[9] == "x_norm");
  CHECK(header[10] == "existence_1i_pass");
  CHECK(header.back() == "status");
  std::ostringstream os;
  write_csv(os, sweep({SharpnessEntry{1.0, 0.5}}));
  std::istringstream lines(os.str());
  std::string head, row;
  std::getline(lines, head);
  std::getline(lines, row);
  CHECK(std::count(row.begin(), row.end(), ',') == static_cast<long>(header.size()) - 1);
  CHECK(row.rfind("0,1,2,-1,1,1,0.5,spectral,", 0) == 0);
}

TEST_CASE("cli example emits the exact solution") {
  const CliResult r = run_cli({"example", "--d", "1", "--b", "0.5"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["x_norm"].get<double>() == doctest::Approx(0.5));
  CHECK(j["X"][0][0][0].get<double>() == doctest::Approx(0.5 / std::sqrt(2.0)));
  CHECK(j["X"][1][0][0].get<double>() == doctest::Approx(-0.5 / std::sqrt(2.0)));
  CHECK(j["gap"][0].get<double>() == -1.0);
}

TEST_CASE("cli solve, certify and factorize") {
  const fs::path zero = scratch("zero.json");
  write_file(zero, R"({"A": [[0.2]], "B": [[0, 0]], "C": [[-1, 0], [0, 1]]})");
  const CliResult s = run_cli({"solve", zero.string(), "--gap", "0"});
  REQUIRE(s.code == 0);
  const json sj = json::parse(s.out);
  CHECK(sj["X"][0][0][0].get<double>() == 0.0);
  CHECK(sj["X"][1][0][0].get<double>() == 0.0);

  const fs::path gen = scratch("generated.json");
  write_file(gen, dump(problem_to_json(generate(contraction_family()[0]), std::nullopt)));
  for (const char* method : {"spectral", "contour", "fixedpoint"}) {
    const CliResult m = run_cli({"solve", gen.string(), "--method", method});
    CHECK(m.code == 0);
    CHECK(json::parse(m.out)["method"].get<std::string>() == method);
  }
  const GenSpec g = contraction_family()[0];
  const CliResult c = run_cli({"certify", gen.string(), "--gap", std::to_string(0.5 * (g.alpha + g.beta))});
  REQUIRE(c.code == 0);
  const json cj = json::parse(c.out);
  CHECK(cj["certificates"].size() == 6);
  for (const auto& cert : cj["certificates"])
    CHECK_MESSAGE(cert["passed"].get<bool>(), cert["theorem"].get<std::string>());

  const CliResult f = run_cli({"factorize", gen.string()});
  REQUIRE(f.code == 0);
  CHECK(json::parse(f.out)["defect"].get<double>() < 1e-9);
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli({"solve", scratch("does_not_exist.json").string()}).code == 1);
  const fs::path bad = scratch("bad.json");
  write_file(bad, "{not json");
  CHECK(run_cli({"solve", bad.string()}).code == 1);
  const fs::path skew = scratch("skew.json");
  write_file(skew, R"({"A": [[0, 1], [0, 0]], "B": [[0], [0]], "C": [[1]]})");
  CHECK(run_cli({"certify", skew.string()}).code == 1);
  const fs::path dims = scratch("dims.json");
  write_file(dims, R"({"A": [[0]], "B": [[0, 0, 0]], "C": [[1, 0], [0, 2]]})");
  CHECK(run_cli({"solve", dims.string()}).code == 1);
  const fs::path wrong = scratch("wrong.json");
  write_file(wrong, R"({"A": [[0, 0], [0, 3]], "B": [[0, 0], [0, 0]], "C": [[-1, 0], [0, 1]]})");
  const CliResult w = run_cli({"solve", wrong.string(), "--gap", "0"});
  CHECK(w.code == 2);
  CHECK(w.err.find("WrongSubspaceDimension") != std::string::npos);
  CHECK(run_cli({"frobnicate"}).code == 1);
  CHECK(run_cli({}).code == 1);
}

TEST_CASE("cli output is deterministic") {
  const fs::path gen = scratch("det.json");
  write_file(gen, dump(problem_to_json(generate(theorem1_family()[11]), std::nullopt)));
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"solve", gen.string(), "--method", "contour"},
        std::vector<std::string>{"certify", gen.string()}, std::vector<std::string>{"factorize", gen.string()},
        std::vector<std::string>{"example", "--d", "2", "--b", "1.2"}}) {
    const CliResult a = run_cli(args), b = run_cli(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
  const fs::path spec = scratch("sweep.json");
  write_file(spec, R"([{"seed": 5, "n_A": 2, "n_C": 3, "gap": [0, 2], "d_target": 0.4, "b_ratio": 0.7, "count": 4,
                       "placement": "overlapping"}, {"example": {"d": 1, "b": 1.2}}])");
  REQUIRE(run_cli({"sweep", spec.string(), "--out", scratch("a.csv").string()}).code == 0);
  REQUIRE(run_cli({"sweep", spec.string(), "--out", scratch("b.csv").string()}).code == 0);
  CHECK(read_file(scratch("a.csv")) == read_file(scratch("b.csv")));
  const std::string csv = read_file(scratch("a.csv"));
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
}
