#include "riccati/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "riccati/errors.hpp"
#include "riccati/tolerances.hpp"

namespace riccati {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string tag(const char* stage, const Error& e) {
  return std::string(stage) + ":" + std::string(to_string(e.code()));
}

double number(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number())
    fail(ErrorCode::MalformedInput, std::string("sweep entry needs numeric \"") + key + "\"");
  return j[key].get<double>();
}

}  // namespace

std::vector<SweepEntry> sweep_entries_from_json(const json& j) {
  const json* list = &j;
  if (j.is_object() && j.contains("instances")) list = &j["instances"];
  if (!list->is_array()) fail(ErrorCode::MalformedInput, "sweep file must be an array of entries");

  std::vector<SweepEntry> out;
  for (const json& e : *list) {
    if (!e.is_object()) fail(ErrorCode::MalformedInput, "sweep entries must be objects");
    if (e.contains("example")) {
      out.emplace_back(SharpnessEntry{number(e["example"], "d"), number(e["example"], "b")});
    } else if (e.contains("example_family")) {
      const json& f = e["example_family"];
      const double d = number(f, "d");
      const double start = number(f, "b_start");
      const double stop = number(f, "b_stop");
      const double step = number(f, "b_step");
      if (!(step > 0.0) || stop < start) fail(ErrorCode::MalformedInput, "example_family needs b_step > 0 and b_stop >= b_start");
      const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
      for (long k = 0; k < count; ++k) out.emplace_back(SharpnessEntry{d, start + static_cast<double>(k) * step});
    } else {
      const GenSpec base = genspec_from_json(e);
      const long count = e.value("count", 1L);
      if (count < 0) fail(ErrorCode::MalformedInput, "\"count\" must be non-negative");
      for (long k = 0; k < count; ++k) {
        GenSpec s = base;
        s.seed = base.seed + static_cast<std::uint64_t>(k);
        out.emplace_back(s);
      }
    }
  }
  return out;
}

SweepInstance instantiate(const SweepEntry& entry) {
  if (const auto* ex = std::get_if<SharpnessEntry>(&entry)) {
    BlockProblem p = sharpness_example(ex->d, ex->b);
    SpectralGap gap = locate_gap(p, 0.0);
    return {std::move(p), gap, 0};
  }
  const auto& s = std::get<GenSpec>(entry);
  BlockProblem p = generate(s);
  SpectralGap gap = s.placement == Placement::subordinated ? default_gap(p)
                                                           : locate_gap(p, 0.5 * (s.alpha + s.beta));
  return {std::move(p), gap, s.seed};
}

SweepRow sweep_row(const SweepEntry& entry) {
  SweepRow row;
  row.contour_diff = kNaN;
  row.fixedpoint_diff = kNaN;
  row.residual = kNaN;
  row.x_norm = kNaN;

  std::optional<SweepInstance> inst;
  try {
    inst = instantiate(entry);
  } catch (const Error& e) {
    row.status.push_back(tag("generate", e));
    if (const auto* s = std::get_if<GenSpec>(&entry)) {
      row.seed = s->seed;
      row.n_a = s->n_a;
      row.n_c = s->n_c;
      row.alpha = s->alpha;
      row.beta = s->beta;
      row.d = s->d_target;
      row.b = s->b_target();
    }
    return row;
  }
  const BlockProblem& p = inst->problem;
  const SpectralGap& gap = inst->gap;
  row.seed = inst->seed;
  row.n_a = p.n_a();
  row.n_c = p.n_c();
  row.alpha = gap.alpha;
  row.beta = gap.beta;
  row.d = gap.d;
  row.b = p.norm_B();

  std::optional<RiccatiSolution> spectral;
  try {
    spectral = solve_spectral(p, gap);
  } catch (const Error& e) {
    row.status.push_back(tag("spectral", e));
  }

  std::optional<RiccatiSolution> fixed;
  try {
    fixed = solve_fixedpoint(p, gap);
  } catch (const Error& e) {
    row.status.push_back(tag("fixedpoint", e));
  }

  if (spectral) {
    try {
      const RealVector zs = real_spectrum(spectral->Z, tol::spec * (1.0 + operator_norm(spectral->Z)));
      const auto contour = build_contour(std::span<const double>(zs.data(), static_cast<std::size_t>(zs.size())),
                                         std::span<const double>(p.eig_C().values.data(),
                                                                 static_cast<std::size_t>(p.eig_C().dim())));
      const RiccatiSolution c = solve_contour(p, spectral->Z, contour);
      row.contour_diff = operator_norm(c.X - spectral->X);
    } catch (const Error& e) {
      row.status.push_back(tag("contour", e));
    }
    if (fixed) row.fixedpoint_diff = operator_norm(fixed->X - spectral->X);
  }

  const std::optional<RiccatiSolution>& primary = spectral ? spectral : fixed;
  if (primary) {
    row.method = primary->method;
    row.residual = primary->residual;
    row.x_norm = operator_norm(primary->X);
  }
  row.certificates = certify_all(p, gap, spectral);
  if (row.status.empty()) row.status.emplace_back("ok");
  return row;
}

std::vector<SweepRow> sweep(const std::vector<SweepEntry>& entries) {
  std::vector<SweepRow> rows;
  rows.reserve(entries.size());
  for (const auto& e : entries) rows.push_back(sweep_row(e));
  return rows;
}

std::vector<std::string> csv_header() {
  std::vector<std::string> h{"seed", "n_A", "n_C", "alpha", "beta", "d", "b", "method", "residual", "x_norm"};
  for (Theorem t : kAllTheorems) {
    h.push_back(std::string(to_string(t)) + "_pass");
    h.push_back(std::string(to_string(t)) + "_margin");
  }
  h.insert(h.end(), {"contour_diff", "fixedpoint_diff", "status"});
  return h;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  const auto header = csv_header();
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << "\n";
  for (const SweepRow& r : rows) {
    out << r.seed << ',' << r.n_a << ',' << r.n_c << ',' << format_double(r.alpha) << ','
        << format_double(r.beta) << ',' << format_double(r.d) << ',' << format_double(r.b) << ','
        << (r.method ? std::string(to_string(*r.method)) : std::string("none")) << ','
        << format_double(r.residual) << ',' << format_double(r.x_norm);
    for (Theorem t : kAllTheorems) {
      const Certificate* cert = nullptr;
      for (const auto& c : r.certificates)
        if (c.theorem == t) cert = &c;
      if (cert)
        out << ',' << (cert->passed() ? 1 : 0) << ',' << format_double(cert->margin);
      else
        out << ",0,nan";
    }
    out << ',' << format_double(r.contour_diff) << ',' << format_double(r.fixedpoint_diff) << ',';
    for (std::size_t i = 0; i < r.status.size(); ++i) out << (i ? ";" : "") << r.status[i];
    out << "\n";
  }
}

}  // namespace riccati
