#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "riccati/certify.hpp"
#include "riccati/generate.hpp"
#include "riccati/io.hpp"

namespace riccati {

struct SharpnessEntry {
  double d = 1.0;
  double b = 0.5;
};

using SweepEntry = std::variant<GenSpec, SharpnessEntry>;

struct SweepRow {
  std::uint64_t seed = 0;
  Eigen::Index n_a = 0;
  Eigen::Index n_c = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double d = 0.0;
  double b = 0.0;
  std::optional<Method> method;  // empty when no solver succeeded
  double residual = 0.0;
  double x_norm = 0.0;
  std::vector<Certificate> certificates;
  double contour_diff = 0.0;     // NaN when the contour solve failed
  double fixedpoint_diff = 0.0;  // NaN when the fixed point failed
  std::vector<std::string> status;
};

/// Expands a sweep file: a JSON array (or {"instances": [...]}) of entries
///   {"example": {"d": .., "b": ..}}
///   {"example_family": {"d": .., "b_start": .., "b_stop": .., "b_step": ..}}
///   generator spec object, optionally with "count": N for seeds seed..seed+N-1.
[[nodiscard]] std::vector<SweepEntry> sweep_entries_from_json(const json& j);

/// Problem and gap of an entry. Generated interior and overlapping
/// instances use the gap (alpha, beta); subordinated ones the gap holding σ(A).
struct SweepInstance {
  BlockProblem problem;
  SpectralGap gap;
  std::uint64_t seed = 0;
};
[[nodiscard]] SweepInstance instantiate(const SweepEntry& entry);

[[nodiscard]] SweepRow sweep_row(const SweepEntry& entry);
[[nodiscard]] std::vector<SweepRow> sweep(const std::vector<SweepEntry>& entries);

[[nodiscard]] std::vector<std::string> csv_header();
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace riccati
