#include "sorpoisson/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "sorpoisson/error.hpp"
#include "sorpoisson/omega.hpp"
#include "sorpoisson/oracle.hpp"
#include "sorpoisson/robin.hpp"

namespace sorp {

namespace {

std::string lower(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view text, const char* what) {
  text = trim(text);
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw Error(ErrorKind::InvalidArgument,
                std::string("cannot parse ") + what + " from '" + std::string(text) + "'");
  }
  return v;
}

long parse_long(std::string_view text, const char* what) {
  text = trim(text);
  long v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorKind::InvalidArgument,
                std::string("cannot parse ") + what + " from '" + std::string(text) + "'");
  }
  return v;
}

// Writes to the configured file or to the fallback stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
      os_ = &file_;
    }
  }
  std::ostream& stream() { return *os_; }
  bool to_file() const { return file_.is_open(); }
  void close(const std::string& path) {
    if (!file_.is_open()) return;
    file_.close();
    if (!file_) throw Error(ErrorKind::Io, "write to '" + path + "' failed");
  }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

void print_prediction(std::ostream& os, const PredictionReport& rep) {
  os << "kx: " << to_string(rep.x.mode) << " (" << to_string(rep.x.source) << ")\n";
  os << "ky: " << to_string(rep.y.mode) << " (" << to_string(rep.y.source) << ")\n";
  if (rep.r) os << "r: " << format_number(*rep.r) << '\n';
  if (rep.hoc) {
    const HocConstants& k = *rep.hoc;
    os << "c1: " << format_number(k.c1) << '\n';
    os << "delta: " << format_number(k.delta_kk) << '\n';
    os << "k1: " << format_number(k.k1) << '\n';
    os << "k2: " << format_number(k.k2) << '\n';
    os << "A: " << format_number(k.A) << '\n';
    os << "B: " << format_number(k.B) << '\n';
    os << "D: " << format_number(k.D) << '\n';
    os << "R: " << format_number(k.R) << '\n';
  }
  if (rep.omega_first_order) os << "omega_first_order: " << format_number(*rep.omega_first_order) << '\n';
  if (rep.omega_quartic) os << "omega_quartic_min: " << format_number(*rep.omega_quartic) << '\n';
  os << "omega_opt: " << format_number(rep.prediction.omega_opt) << '\n';
  if (rep.prediction.predicted_spectral_radius) {
    os << "spectral_radius: " << format_number(*rep.prediction.predicted_spectral_radius)
       << (rep.prediction.radius_approximate ? " (expansion)" : "") << '\n';
  }
}

}  // namespace

void ExperimentConfig::validate() const {
  make_grid(nx, ny);
  const OmegaRange& w = omega;
  if (!(w.step > 0.0)) throw Error(ErrorKind::InvalidArgument, "omega step must be positive");
  if (!(w.start > 0.0 && w.stop < 2.0 && w.start <= w.stop)) {
    throw Error(ErrorKind::InvalidArgument, "omega range must satisfy 0 < start <= stop < 2");
  }
  if (!(tolerance > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  if (max_iterations < 1) throw Error(ErrorKind::InvalidArgument, "max iterations must be >= 1");
  if (jobs < 1) throw Error(ErrorKind::InvalidArgument, "jobs must be >= 1");
}

std::vector<double> ExperimentConfig::omegas() const {
  auto values = omega_range(omega.start, omega.stop, omega.step);
  // Half-step rounding in the count may overshoot stop by a hair.
  while (!values.empty() && values.back() >= 2.0) values.pop_back();
  return values;
}

Scheme parse_scheme(std::string_view text) {
  const std::string s = lower(trim(text));
  if (s == "central2") return Scheme::Central2;
  if (s == "hoc") return Scheme::Hoc;
  throw Error(ErrorKind::InvalidArgument, "unknown scheme '" + std::string(text) + "'");
}

SorVariant parse_variant(std::string_view text) {
  const std::string s = lower(trim(text));
  if (s == "point") return SorVariant::PointSor;
  if (s == "line") return SorVariant::LineSor;
  throw Error(ErrorKind::InvalidArgument, "unknown variant '" + std::string(text) + "'");
}

EdgeCondition parse_edge(std::string_view text) {
  const std::string s = lower(trim(text));
  if (s == "dirichlet") return EdgeCondition::dirichlet();
  if (s == "neumann") return EdgeCondition::neumann();
  if (s.rfind("robin:", 0) == 0) {
    const std::string_view args = std::string_view(s).substr(6);
    const auto comma = args.find(',');
    if (comma == std::string_view::npos) {
      throw Error(ErrorKind::InvalidBoundary, "robin edge needs 'robin:a,b', got '" + s + "'");
    }
    const double a = parse_double(args.substr(0, comma), "robin coefficient a");
    const double b = parse_double(args.substr(comma + 1), "robin coefficient b");
    return EdgeCondition::robin(a, b);
  }
  throw Error(ErrorKind::InvalidBoundary,
              "unknown edge '" + std::string(text) + "' (dirichlet | neumann | robin:a,b)");
}

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

std::vector<SweepRecord> run_sweep(const ExperimentConfig& config) {
  config.validate();
  const GridSpec grid = make_grid(config.nx, config.ny);
  if (!config.bcs.solvable()) {
    throw Error(ErrorKind::NonSolvable, "all edges are Neumann: the problem has no unique solution");
  }
  const std::vector<double> omegas = config.omegas();
  std::vector<SweepRecord> records(omegas.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      SorSweeper sweeper(grid, config.bcs, config.scheme, config.isa);
      for (std::size_t k = next++; k < omegas.size(); k = next++) {
        SolverConfig sc;
        sc.scheme = config.scheme;
        sc.variant = config.variant;
        sc.omega = omegas[k];
        sc.tolerance = config.tolerance;
        sc.max_iterations = config.max_iterations;
        sc.isa = config.isa;
        Field field = initial_guess(grid, config.bcs);
        const SolveReport rep = solve(field, sweeper, sc);
        records[k] = {omegas[k], rep.iterations, rep.final_norm, rep.converged};
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = omegas.size();
    }
  };

  const unsigned threads = std::min<std::size_t>(config.jobs, std::max<std::size_t>(omegas.size(), 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

std::optional<std::size_t> sweep_argmin(const std::vector<SweepRecord>& records) {
  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < records.size(); ++k) {
    if (!records[k].converged) continue;
    if (!best || records[k].iterations < records[*best].iterations) best = k;
  }
  return best;
}

void write_csv(std::ostream& os, const std::vector<SweepRecord>& records) {
  os << kCsvHeader << '\n';
  for (const SweepRecord& r : records) {
    os << format_number(r.omega) << ',' << r.iterations << ',' << format_number(r.final_norm) << ','
       << (r.converged ? 1 : 0) << '\n';
  }
}

std::vector<SweepRecord> read_csv(std::istream& is) {
  std::vector<SweepRecord> out;
  std::string line;
  long line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const std::string_view view = trim(line);
    if (view.empty() || view.front() == '#' || view == kCsvHeader) continue;
    std::vector<std::string_view> cols;
    std::size_t pos = 0;
    while (true) {
      const auto comma = view.find(',', pos);
      cols.push_back(view.substr(pos, comma - pos));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (cols.size() != 4) {
      throw Error(ErrorKind::Io, "line " + std::to_string(line_no) + ": expected 4 columns");
    }
    try {
      SweepRecord r;
      r.omega = parse_double(cols[0], "omega");
      r.iterations = parse_long(cols[1], "iterations");
      r.final_norm = parse_double(cols[2], "final_norm");
      const long flag = parse_long(cols[3], "converged");
      if (flag != 0 && flag != 1) throw Error(ErrorKind::InvalidArgument, "converged must be 0 or 1");
      r.converged = flag == 1;
      out.push_back(r);
    } catch (const Error& e) {
      throw Error(ErrorKind::Io, "line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

void write_plot_script(std::ostream& os, const std::string& csv_path, const ExperimentConfig& config) {
  os << "# gnuplot script for " << describe(config) << '\n';
  os << "set datafile separator ','\n";
  os << "set datafile commentschars '#'\n";
  os << "set key autotitle columnhead\n";
  os << "set xlabel 'omega'\n";
  os << "set ylabel 'iterations'\n";
  os << "set grid\n";
  os << "plot '" << csv_path << "' using 1:($4 == 1 ? $2 : 1/0) with linespoints title 'converged'\n";
}

std::string describe(const ExperimentConfig& c) {
  std::ostringstream s;
  s << "nx=" << c.nx << " ny=" << c.ny << " scheme=" << to_string(c.scheme)
    << " variant=" << to_string(c.variant) << " left=" << to_string(c.bcs.left)
    << " right=" << to_string(c.bcs.right) << " bottom=" << to_string(c.bcs.bottom)
    << " top=" << to_string(c.bcs.top);
  return s.str();
}

void cmd_sweep(const ExperimentConfig& config, std::ostream& os) {
  const std::vector<SweepRecord> records = run_sweep(config);

  std::vector<std::string> summary;
  if (const auto best = sweep_argmin(records)) {
    summary.push_back("# argmin_omega=" + format_number(records[*best].omega) +
                      " iterations=" + std::to_string(records[*best].iterations));
  } else {
    summary.push_back("# argmin_omega=none (no omega converged)");
  }
  try {
    const OmegaPrediction p = predict(make_grid(config.nx, config.ny), config.bcs, config.scheme, config.variant);
    summary.push_back("# predicted_omega=" + format_number(p.omega_opt));
  } catch (const Error& e) {
    summary.push_back(std::string("# predicted_omega=unavailable (") + e.what() + ")");
  }

  Sink sink(config.out, os);
  std::ostream& out = sink.stream();
  out << "# sweep " << describe(config) << '\n';
  out << "# omega_start=" << format_number(config.omega.start)
      << " omega_stop=" << format_number(config.omega.stop)
      << " omega_step=" << format_number(config.omega.step) << " tol=" << format_number(config.tolerance)
      << " max_iters=" << config.max_iterations << '\n';
  write_csv(out, records);
  for (const auto& line : summary) out << line << '\n';
  const bool echo = sink.to_file();
  sink.close(config.out);
  if (echo) {
    for (const auto& line : summary) os << line << '\n';
  }

  if (!config.plot_script.empty()) {
    std::ofstream script(config.plot_script);
    if (!script) throw Error(ErrorKind::Io, "cannot open '" + config.plot_script + "' for writing");
    write_plot_script(script, config.out.empty() ? "-" : config.out, config);
  }
}

void cmd_predict(const ExperimentConfig& config, std::ostream& os) {
  const GridSpec grid = make_grid(config.nx, config.ny);
  const PredictionReport rep = predict_detailed(grid, config.bcs, config.scheme, config.variant);
  Sink sink(config.out, os);
  std::ostream& out = sink.stream();
  out << "# predict " << describe(config) << '\n';
  out << "beta: " << format_number(grid.beta) << '\n';
  print_prediction(out, rep);
  sink.close(config.out);
}

void cmd_oracle(const ExperimentConfig& config, std::ostream& os) {
  config.validate();
  const GridSpec grid = make_grid(config.nx, config.ny);
  const std::vector<double> omegas = config.omegas();
  const OmegaScan scan = brute_force_omega(grid, config.bcs, config.scheme, config.variant, omegas);

  Sink sink(config.out, os);
  std::ostream& out = sink.stream();
  out << "# oracle " << describe(config) << '\n';
  out << "# omega_step=" << format_number(config.omega.step) << '\n';
  out << "omega,spectral_radius\n";
  for (std::size_t k = 0; k < scan.omegas.size(); ++k) {
    out << format_number(scan.omegas[k]) << ',' << format_number(scan.radii[k]) << '\n';
  }
  out << "# omega_star=" << format_number(scan.omega_star) << " rho_star=" << format_number(scan.rho_star) << '\n';
  try {
    const PredictionReport rep = predict_detailed(grid, config.bcs, config.scheme, config.variant);
    const double w = rep.prediction.omega_opt;
    const double rho =
        spectral_radius(build_sweep_matrix(grid, config.bcs, config.scheme, config.variant, w));
    out << "# formula_omega=" << format_number(w) << " radius_at_formula=" << format_number(rho)
        << " difference=" << format_number(scan.omega_star - w) << '\n';
    if (rep.prediction.predicted_spectral_radius) {
      out << "# predicted_radius=" << format_number(*rep.prediction.predicted_spectral_radius) << '\n';
    }
    if (rep.omega_first_order) {
      const double w1 = *rep.omega_first_order;
      const double rho1 =
          spectral_radius(build_sweep_matrix(grid, config.bcs, config.scheme, config.variant, w1));
      out << "# first_order_omega=" << format_number(w1) << " radius_at_first_order=" << format_number(rho1)
          << '\n';
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::TooManyUnknowns || e.kind() == ErrorKind::EigenFailure) throw;
    out << "# formula_omega=unavailable (" << e.what() << ")\n";
  }
  sink.close(config.out);
}

void cmd_robin_roots(const RobinRootsRequest& req, std::ostream& os) {
  const EdgeCondition low = EdgeCondition::robin(req.a, req.b);
  const EdgeCondition high = EdgeCondition::robin(req.c, req.d);
  const RobinPair pair{req.a, req.b, req.c, req.d, req.n_cells};
  const double det = pair.det();
  os << "a: " << format_number(req.a) << '\n';
  os << "b: " << format_number(req.b) << '\n';
  os << "c: " << format_number(req.c) << '\n';
  os << "d: " << format_number(req.d) << '\n';
  os << "n_cells: " << req.n_cells << '\n';
  os << "ad-bc: " << format_number(det) << '\n';
  if (det != 0.0) {
    const RootClassification cls = classify(req.a * req.c / det, req.b * req.d / det);
    os << "m: " << format_number(cls.m) << '\n';
    os << "n: " << format_number(cls.n) << '\n';
    os << "case: " << cls.analysis_case << '\n';
    os << "hyperbolic_roots: " << to_string(cls.max_positive_roots) << '\n';
  } else {
    os << "m: undefined\nn: undefined\n";
  }
  const WavenumberSelection sel = select_wavenumber_detailed(low, high, req.n_cells);
  os << "equation: " << to_string(sel.source) << '\n';
  os << "mode: " << to_string(sel.mode) << '\n';
  os << "k: " << format_number(sel.mode.k) << '\n';
  if (sel.source == WavenumberSource::TrigEquation) {
    os << "residual: " << format_number(trig_characteristic(pair, sel.mode.k)) << '\n';
  } else if (sel.source == WavenumberSource::HyperEquation) {
    os << "residual: " << format_number(hyper_characteristic(pair, sel.mode.k)) << '\n';
  }
}

}  // namespace sorp
