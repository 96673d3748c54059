// sorp: optimal-omega experiments for SOR on the 2-D Poisson equation.

#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "sorpoisson/error.hpp"
#include "sorpoisson/harness.hpp"

namespace {

int exit_code_for(sorp::ErrorKind kind) {
  switch (kind) {
    case sorp::ErrorKind::NonConvergent:
    case sorp::ErrorKind::NonSolvable:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SOR relaxation-parameter experiments for the 2-D Poisson equation", "sorp"};
  app.set_config("--config", "", "Read options from a key = value file (flags override it)");
  app.require_subcommand(1);
  app.fallthrough();

  sorp::ExperimentConfig cfg;
  std::string scheme = "central2";
  std::string variant = "point";
  std::string left = "dirichlet", right = "dirichlet", bottom = "dirichlet", top = "dirichlet";
  std::string kernel = "auto";

  app.add_option("--nx", cfg.nx, "Cells along x")->capture_default_str();
  app.add_option("--ny", cfg.ny, "Cells along y")->capture_default_str();
  app.add_option("--scheme", scheme, "central2 | hoc")->capture_default_str();
  app.add_option("--variant", variant, "point | line")->capture_default_str();
  app.add_option("--bc-left", left, "dirichlet | neumann | robin:a,b")->capture_default_str();
  app.add_option("--bc-right", right, "dirichlet | neumann | robin:a,b")->capture_default_str();
  app.add_option("--bc-bottom", bottom, "dirichlet | neumann | robin:a,b")->capture_default_str();
  app.add_option("--bc-top", top, "dirichlet | neumann | robin:a,b")->capture_default_str();
  app.add_option("--omega-start", cfg.omega.start)->capture_default_str();
  app.add_option("--omega-stop", cfg.omega.stop)->capture_default_str();
  app.add_option("--omega-step", cfg.omega.step)->capture_default_str();
  app.add_option("--tol", cfg.tolerance, "Convergence threshold on the l2 norm")->capture_default_str();
  app.add_option("--max-iters", cfg.max_iterations)->capture_default_str();
  app.add_option("--out", cfg.out, "Output file (default: stdout)");
  app.add_option("--plot-script", cfg.plot_script, "Also write a gnuplot script (sweep only)");
  app.add_option("--jobs", cfg.jobs, "Worker threads for sweeps")->capture_default_str();
  app.add_option("--kernel", kernel, "auto | scalar | avx2")->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "Iteration counts over an omega range (CSV)");
  auto* predict = app.add_subcommand("predict", "Predicted optimal omega and its ingredients");
  auto* oracle = app.add_subcommand("oracle", "Dense spectral radius over an omega range (CSV)");
  auto* roots = app.add_subcommand("robin-roots", "Characteristic wavenumber for a Robin edge pair");

  sorp::RobinRootsRequest req;
  roots->add_option("-a", req.a, "Low edge: coefficient of u")->required();
  roots->add_option("-b", req.b, "Low edge: coefficient of du/dx")->required();
  roots->add_option("-c", req.c, "High edge: coefficient of u")->required();
  roots->add_option("-d", req.d, "High edge: coefficient of du/dx")->required();
  roots->add_option("--n-cells", req.n_cells)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    cfg.scheme = sorp::parse_scheme(scheme);
    cfg.variant = sorp::parse_variant(variant);
    cfg.bcs.left = sorp::parse_edge(left);
    cfg.bcs.right = sorp::parse_edge(right);
    cfg.bcs.bottom = sorp::parse_edge(bottom);
    cfg.bcs.top = sorp::parse_edge(top);
    cfg.isa = sorp::parse_kernel_isa(kernel);
  } catch (const sorp::Error& e) {
    std::cerr << "sorp: " << e.what() << '\n';
    return 1;
  }

  try {
    if (*sweep) {
      sorp::cmd_sweep(cfg, std::cout);
    } else if (*predict) {
      sorp::cmd_predict(cfg, std::cout);
    } else if (*oracle) {
      sorp::cmd_oracle(cfg, std::cout);
    } else if (*roots) {
      sorp::cmd_robin_roots(req, std::cout);
    }
  } catch (const sorp::Error& e) {
    std::cerr << "sorp: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return 0;
}
