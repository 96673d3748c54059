#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sorpoisson/grid.hpp"
#include "sorpoisson/kernels.hpp"
#include "sorpoisson/solver.hpp"
#include "sorpoisson/stencil.hpp"

namespace sorp {

/// Default omega step of the sweeps; written to every output as metadata.
inline constexpr double kDefaultOmegaStep = 0.005;

struct OmegaRange {
  double start = 1.0;
  double stop = 1.99;
  double step = kDefaultOmegaStep;
};

struct ExperimentConfig {
  int nx = 10;
  int ny = 30;
  BoundarySet bcs;
  Scheme scheme = Scheme::Central2;
  SorVariant variant = SorVariant::PointSor;
  OmegaRange omega;
  double tolerance = kDefaultTolerance;
  long max_iterations = 1'000'000;
  std::string out;  // empty: standard output
  std::string plot_script;
  unsigned jobs = 1;
  KernelIsa isa = KernelIsa::Auto;

  /// Throws InvalidArgument unless the omega range lies in (0, 2) with step > 0.
  void validate() const;
  std::vector<double> omegas() const;
};

struct SweepRecord {
  double omega = 0.0;
  long iterations = 0;
  double final_norm = 0.0;
  bool converged = false;

  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

Scheme parse_scheme(std::string_view text);
SorVariant parse_variant(std::string_view text);
/// "dirichlet", "neumann" or "robin:a,b".
EdgeCondition parse_edge(std::string_view text);

/// 17 significant digits, printf %g style.
std::string format_number(double value);

/// One solve per omega, run on up to config.jobs threads; records are ordered by omega.
std::vector<SweepRecord> run_sweep(const ExperimentConfig& config);

/// Index of the converged record with the fewest iterations (first on ties).
std::optional<std::size_t> sweep_argmin(const std::vector<SweepRecord>& records);

inline constexpr std::string_view kCsvHeader = "omega,iterations,final_norm,converged";

void write_csv(std::ostream& os, const std::vector<SweepRecord>& records);
/// Skips lines starting with '#' and the header. Throws Io on malformed rows.
std::vector<SweepRecord> read_csv(std::istream& is);

void write_plot_script(std::ostream& os, const std::string& csv_path, const ExperimentConfig& config);

std::string describe(const ExperimentConfig& config);

// Subcommands. Each writes its report to `os` and throws sorp::Error on failure.
void cmd_sweep(const ExperimentConfig& config, std::ostream& os);
void cmd_predict(const ExperimentConfig& config, std::ostream& os);
void cmd_oracle(const ExperimentConfig& config, std::ostream& os);

struct RobinRootsRequest {
  double a = 1.0;
  double b = 0.0;
  double c = 1.0;
  double d = 0.0;
  int n_cells = 30;
};

void cmd_robin_roots(const RobinRootsRequest& request, std::ostream& os);

}  // namespace sorp
