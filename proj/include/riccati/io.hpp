#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "riccati/certify.hpp"
#include "riccati/generate.hpp"
#include "riccati/solvers.hpp"

namespace riccati {

using json = nlohmann::ordered_json;

/// Nested row arrays; each entry is [re, im] or a plain real number.
[[nodiscard]] Matrix matrix_from_json(const json& j, const char* name);
[[nodiscard]] json matrix_to_json(const Matrix& m);

/// Non-finite values become null.
[[nodiscard]] json number_to_json(double v);

struct ProblemFile {
  BlockProblem problem;
  std::optional<SpectralGap> gap;  // present when the file carries "gap"
};

/// Keys "A", "B", "C" and optional "gap": [alpha, beta] (null for ±∞).
[[nodiscard]] ProblemFile problem_from_json(const json& j);
[[nodiscard]] ProblemFile load_problem(const std::string& path);
[[nodiscard]] json problem_to_json(const BlockProblem& p, const std::optional<SpectralGap>& gap);

[[nodiscard]] json gap_to_json(const SpectralGap& gap);
[[nodiscard]] json solution_to_json(const RiccatiSolution& sol);
[[nodiscard]] json certificate_to_json(const Certificate& cert);

[[nodiscard]] GenSpec genspec_from_json(const json& j);

/// Serialises with a fixed layout so equal inputs give equal bytes.
[[nodiscard]] std::string dump(const json& j);

}  // namespace riccati
