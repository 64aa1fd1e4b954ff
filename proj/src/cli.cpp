#include "ydilog/cli.hpp"

#include "ydilog/cluster.hpp"
#include "ydilog/identities.hpp"
#include "ydilog/qsolve.hpp"
#include "ydilog/report.hpp"
#include "ydilog/rootsys.hpp"
#include "ydilog/ydynamics.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>

namespace ydilog {

namespace {

// Thrown for inputs CLI11 accepts syntactically but the command cannot use.
class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::vector<std::string> types;
  bool all = false;
  std::string variant = "both";
  std::optional<int> level;
  std::optional<double> tolerance;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::vector<std::string> checks;
  std::string preset;
  std::string b_matrix;
  std::vector<std::size_t> sequence;
  std::string export_path;
};

std::vector<TypeLabel> all_labels() {
  std::vector<TypeLabel> out;
  for (int n = 1; n <= 8; ++n) out.push_back({Family::A, n});
  for (int n = 2; n <= 8; ++n) out.push_back({Family::B, n});
  for (int n = 2; n <= 8; ++n) out.push_back({Family::C, n});
  for (int n = 4; n <= 8; ++n) out.push_back({Family::D, n});
  for (int n = 6; n <= 8; ++n) out.push_back({Family::E, n});
  out.push_back({Family::F, 4});
  out.push_back({Family::G, 2});
  for (int n = 1; n <= 8; ++n) out.push_back({Family::T, n});
  return out;
}

std::vector<TypeLabel> selected_labels(const RunConfig& cfg) {
  if (cfg.all) return all_labels();
  if (cfg.types.empty()) throw UsageError("select instances with --type or --all");
  std::vector<TypeLabel> out;
  for (const auto& t : cfg.types) {
    try {
      out.push_back(TypeLabel::parse(t));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

std::vector<Variant> selected_variants(const RunConfig& cfg) {
  std::string v = cfg.variant;
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (v == "a") return {Variant::A};
  if (v == "aflat") return {Variant::AFlat};
  return {Variant::A, Variant::AFlat};
}

Format selected_format(const RunConfig& cfg) {
  if (cfg.format == "json") return Format::Json;
  if (cfg.format == "csv") return Format::Csv;
  return Format::Text;
}

bool has_check(const std::vector<std::string>& checks, const std::string& name) {
  return std::find(checks.begin(), checks.end(), name) != checks.end() ||
         std::find(checks.begin(), checks.end(), "all") != checks.end();
}

int finish(const std::vector<Record>& records, const RunConfig& cfg, std::ostream& out) {
  write_records(out, records, selected_format(cfg));
  const bool ok = std::all_of(records.begin(), records.end(), [](const Record& r) { return r.passed; });
  return ok ? kExitOk : kExitFailed;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto labels = selected_labels(cfg);
  const double tol = cfg.tolerance.value_or(kDefaultAcceptanceTolerance);
  std::vector<std::string> checks = cfg.checks;
  if (checks.empty()) checks = cfg.all ? std::vector<std::string>{"all"} : std::vector<std::string>{"cf"};
  const int level = cfg.level.value_or(2);
  if (level < 2) throw UsageError("--level must be at least 2");

  std::vector<Record> records;
  if (has_check(checks, "cf"))
    for (const auto& label : labels)
      for (Variant v : selected_variants(cfg)) records.push_back(to_record(verify_cf_identity(label, v, tol), "verify"));
  if (has_check(checks, "level"))
    for (const auto& label : labels)
      if (label.is_simply_laced()) records.push_back(to_record(verify_level_identity(label, level, tol), "verify"));
  if (has_check(checks, "folding"))
    for (const auto& label : labels)
      if (!label.is_simply_laced()) records.push_back(to_record(verify_folding(label, tol), "verify"));
  if (has_check(checks, "flat"))
    for (const auto& label : labels) records.push_back(to_record(verify_flat_specialization(label, tol), "verify"));
  if (records.empty()) throw UsageError("the selected checks do not apply to the selected types");
  return finish(records, cfg, out);
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  const auto labels = selected_labels(cfg);
  const double tol = cfg.tolerance.value_or(SolverConfig{}.tolerance);
  std::vector<Record> records;
  for (const auto& label : labels) {
    const RootSystem rs = build_root_system(label);
    if (cfg.level) {
      if (!label.is_simply_laced()) throw UsageError("--level needs a simply-laced type, got " + label.to_string());
      if (*cfg.level < 2) throw UsageError("--level must be at least 2");
      const YGrid grid = solve_constant_y(rs, *cfg.level);
      for (std::size_t i = 0; i < grid.nodes(); ++i)
        for (std::size_t m = 0; m < grid.levels(); ++m)
          records.push_back({fmt::format("{}/level{} Y[{},{}]", label.to_string(), *cfg.level, i + 1, m + 1), "solve",
                             grid(i, m), std::nullopt, grid.residual, grid.residual <= tol,
                             fmt::format("iterations={}", grid.iterations)});
      continue;
    }
    for (Variant v : selected_variants(cfg)) {
      const QSolution q = solve_q_system(rs, v);
      const YSolution y = solve_y_form(rs, v);
      const std::string base = label.to_string() + "/" + variant_name(v);
      for (std::size_t i = 0; i < q.q.size(); ++i)
        records.push_back({fmt::format("{} Q{}", base, i + 1), "solve", q.q[i], std::nullopt, q.residual,
                           q.residual <= tol, fmt::format("newton_steps={}", q.iterations)});
      for (std::size_t i = 0; i < y.y.size(); ++i)
        records.push_back({fmt::format("{} Y{}", base, i + 1), "solve", y.y[i], std::nullopt, y.residual,
                           y.residual <= tol, fmt::format("iterations={}", y.iterations)});
    }
  }
  return finish(records, cfg, out);
}

void write_trajectory(const std::string& path, const Trajectory& traj, Format format) {
  std::ofstream file(path);
  if (!file) throw UsageError("cannot open export file '" + path + "'");
  const auto rows = export_records(traj);
  if (format == Format::Json) {
    file << "[\n";
    for (std::size_t r = 0; r < rows.size(); ++r)
      file << fmt::format("  {{\"u\": {}, \"i\": {}, \"m\": {}, \"value\": {:.17g}}}{}\n", rows[r].u, rows[r].i + 1,
                          rows[r].m + 1, rows[r].value, r + 1 < rows.size() ? "," : "");
    file << "]\n";
  } else {
    file << "u,i,m,value\n";
    for (const auto& row : rows) file << fmt::format("{},{},{},{:.17g}\n", row.u, row.i + 1, row.m + 1, row.value);
  }
}

int cmd_dynamics(const RunConfig& cfg, std::ostream& out) {
  const auto labels = selected_labels(cfg);
  const int level = cfg.level.value_or(2);
  if (level < 2) throw UsageError("--level must be at least 2");
  const double tol = cfg.tolerance.value_or(1e-8);
  std::vector<Record> records;
  for (const auto& label : labels) {
    if (!label.is_simply_laced()) throw UsageError("dynamics needs a simply-laced type, got " + label.to_string());
    const RootSystem rs = build_root_system(label);
    std::mt19937_64 rng(cfg.seed);
    const Slice s0 = random_slice(rs.rank(), level, rng);
    const Slice s1 = random_slice(rs.rank(), level, rng);
    const int period = 2 * (*rs.coxeter + level);
    const Trajectory traj = evolve(rs, level, s0, s1, period + 1);
    if (!cfg.export_path.empty()) write_trajectory(cfg.export_path, traj, selected_format(cfg));

    const std::string base = fmt::format("{}/level{}", label.to_string(), level);
    const double deviation = check_periodicity(traj);
    records.push_back({base + " periodicity", "dynamics", deviation, Rational(0), deviation, deviation <= tol,
                       fmt::format("shift={} seed={}", period, cfg.seed)});
    const double sum = periodic_dilog_sum(traj);
    const Rational expected(2L * (level - 1) * label.rank * *rs.coxeter);
    const double gap = std::abs(sum - expected.to_double());
    records.push_back({base + " period-sum", "dynamics", sum, expected, gap, gap <= tol,
                       fmt::format("period={} seed={}", period, cfg.seed)});
  }
  return finish(records, cfg, out);
}

struct Preset {
  IntegerMatrix b;
  std::vector<std::size_t> sequence;  // 1-based
};

const std::map<std::string, Preset>& presets() {
  static const std::map<std::string, Preset> table{
      {"rank1", {IntegerMatrix{{0}}, {1, 1}}},
      {"pentagon", {IntegerMatrix{{0, 1}, {-1, 0}}, {1, 2, 1, 2, 1}}},
      {"a1xa1", {IntegerMatrix{{0, 0}, {0, 0}}, {1, 2, 1, 2}}},
  };
  return table;
}

int cmd_cluster(const RunConfig& cfg, std::ostream& out) {
  IntegerMatrix b;
  std::vector<std::size_t> sequence = cfg.sequence;
  std::string name = cfg.preset;
  if (!cfg.preset.empty()) {
    const auto it = presets().find(cfg.preset);
    if (it == presets().end()) throw UsageError("unknown preset '" + cfg.preset + "'");
    b = it->second.b;
    if (sequence.empty()) sequence = it->second.sequence;
  } else if (!cfg.b_matrix.empty()) {
    std::ifstream file(cfg.b_matrix);
    if (!file) throw UsageError("cannot open matrix file '" + cfg.b_matrix + "'");
    try {
      b = parse_integer_matrix(file);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (!b.is_skew_symmetric()) throw UsageError("exchange matrix in '" + cfg.b_matrix + "' is not skew-symmetric");
    name = cfg.b_matrix;
    if (sequence.empty()) throw UsageError("--b-matrix needs --sequence");
  } else {
    throw UsageError("select a cycle with --preset or --b-matrix");
  }
  std::vector<std::size_t> zero_based;
  for (std::size_t k : sequence) {
    if (k < 1 || k > b.size()) throw UsageError(fmt::format("sequence index {} out of range 1..{}", k, b.size()));
    zero_based.push_back(k - 1);
  }

  std::mt19937_64 rng(cfg.seed);
  const Slice y0 = random_slice(b.size(), 2, rng);
  const CycleReport report = run_mutation_cycle(b, zero_based, y0);
  const double tol = cfg.tolerance.value_or(1e-10);
  const double gap = std::abs(report.normalized_sum - report.n_minus);
  std::string signs;
  for (int s : report.signs) signs += s > 0 ? '+' : '-';
  std::vector<Record> records{{name, "cluster", report.normalized_sum, Rational(report.n_minus), gap,
                               report.is_periodic && gap <= tol,
                               fmt::format("p={} n_minus={} periodic={} signs={}", report.period, report.n_minus,
                                           report.is_periodic ? "yes" : "no", signs)}};
  return finish(records, cfg, out);
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--tol", cfg.tolerance, "Acceptance tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}, CLI::ignore_case))
      ->transform(CLI::IsMember({"text", "json", "csv"}, CLI::ignore_case));
}

void add_types(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--type", cfg.types, "Type labels such as A7, E8, T3 (comma separated)")->delimiter(',');
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Y-system and dilogarithm identity verification", "yverify"};
  app.require_subcommand(1);
  RunConfig cfg;
  const auto variants = CLI::IsMember({"a", "aflat", "both"}, CLI::ignore_case);

  auto* verify = app.add_subcommand("verify", "Check dilogarithm identities against exact rational targets");
  add_types(verify, cfg);
  verify->add_flag("--all", cfg.all, "All families, ranks 1..8 where defined, every check");
  verify->add_option("--variant", cfg.variant, "a, aflat or both")->check(variants);
  verify->add_option("--level", cfg.level, "Level for the level identity (default 2)");
  verify->add_option("--check", cfg.checks, "cf, level, folding, flat or all")
      ->delimiter(',')
      ->check(CLI::IsMember({"cf", "level", "folding", "flat", "all"}));
  add_common(verify, cfg);

  auto* solve = app.add_subcommand("solve", "Print solutions of the Q-system, Y-form or level-l system");
  add_types(solve, cfg);
  solve->add_option("--variant", cfg.variant, "a, aflat or both")->check(variants);
  solve->add_option("--level", cfg.level, "Solve the level-l constant Y-system instead");
  add_common(solve, cfg);

  auto* dynamics = app.add_subcommand("dynamics", "Evolve the Y-system from random slices");
  add_types(dynamics, cfg);
  dynamics->add_option("--level", cfg.level, "Level l (default 2)");
  dynamics->add_option("--seed", cfg.seed, "PRNG seed (default 0)");
  dynamics->add_option("--export", cfg.export_path, "Write the trajectory (u, i, m, value) to this file");
  add_common(dynamics, cfg);

  auto* cluster = app.add_subcommand("cluster", "Run a mutation cycle and check its dilogarithm identity");
  cluster->add_option("--preset", cfg.preset, "rank1, pentagon or a1xa1");
  cluster->add_option("--b-matrix", cfg.b_matrix, "Exchange matrix file: one row per line");
  cluster->add_option("--sequence", cfg.sequence, "1-based mutation sequence, comma separated")->delimiter(',');
  cluster->add_option("--seed", cfg.seed, "PRNG seed for y0 (default 0)");
  add_common(cluster, cfg);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (solve->parsed()) return cmd_solve(cfg, out);
    if (dynamics->parsed()) return cmd_dynamics(cfg, out);
    return cmd_cluster(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SolverError& e) {
    err << "solver failure: " << e.what() << '\n';
    return kExitFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
}

}  // namespace ydilog
