#include "sorpoisson/oracle.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "sorpoisson/error.hpp"

namespace sorp {

std::vector<double> SweepMatrix::apply(std::span<const double> u) const {
  const std::size_t n = matrix.n;
  std::vector<double> out(n, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    double acc = 0.0;
    for (std::size_t c = 0; c < n; ++c) acc += matrix(r, c) * u[c];
    out[r] = acc;
  }
  return out;
}

SweepMatrix build_sweep_matrix(const GridSpec& grid, const BoundarySet& bcs, Scheme scheme,
                               SorVariant variant, double omega, KernelIsa isa) {
  Field field(grid, bcs);
  const std::size_t n = field.unknown_count();
  if (n > kOracleMaxUnknowns) {
    std::ostringstream msg;
    msg << n << " unknowns exceed the dense oracle limit of " << kOracleMaxUnknowns;
    throw Error(ErrorKind::TooManyUnknowns, msg.str());
  }
  SweepMatrix sm;
  sm.matrix = linalg::DenseMatrix(n);
  sm.points.reserve(n);
  for (int j = 0; j <= grid.ny; ++j) {
    for (int i = 0; i <= grid.nx; ++i) {
      if (field.is_unknown(i, j)) sm.points.emplace_back(i, j);
    }
  }

  SorSweeper sweeper(grid, bcs, scheme, isa);
  auto load = [&](auto&& value_of) {
    for (double& v : field.values()) v = 0.0;
    for (std::size_t k = 0; k < n; ++k) field.at(sm.points[k].first, sm.points[k].second) = value_of(k);
  };

  for (std::size_t col = 0; col < n; ++col) {
    load([&](std::size_t k) { return k == col ? 1.0 : 0.0; });
    sweeper.sweep(field, variant, omega);
    for (std::size_t row = 0; row < n; ++row) {
      sm.matrix(row, col) = field.at(sm.points[row].first, sm.points[row].second);
    }
  }

  std::mt19937_64 rng(0x5eed5eedULL);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> u(n);
  for (int trial = 0; trial < 5; ++trial) {
    for (double& v : u) v = dist(rng);
    load([&](std::size_t k) { return u[k]; });
    sweeper.sweep(field, variant, omega);
    const auto expected = sm.apply(u);
    double diff = 0.0;
    double ref = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double got = field.at(sm.points[k].first, sm.points[k].second);
      diff += (got - expected[k]) * (got - expected[k]);
      ref += expected[k] * expected[k];
    }
    if (std::sqrt(diff) > 1e-12 * std::max(std::sqrt(ref), 1e-300)) {
      throw Error(ErrorKind::InvalidArgument, "sweep is not linear: probed matrix disagrees with a direct sweep");
    }
  }
  return sm;
}

double spectral_radius(const SweepMatrix& m) { return linalg::spectral_radius(m.matrix); }

OmegaScan brute_force_omega(const GridSpec& grid, const BoundarySet& bcs, Scheme scheme,
                            SorVariant variant, std::span<const double> omega_grid) {
  if (omega_grid.empty()) throw Error(ErrorKind::InvalidArgument, "empty omega grid");
  OmegaScan scan;
  scan.omegas.assign(omega_grid.begin(), omega_grid.end());
  scan.radii.reserve(omega_grid.size());
  scan.rho_star = std::numeric_limits<double>::infinity();
  for (double w : omega_grid) {
    if (!(w > 0.0 && w < 2.0)) throw Error(ErrorKind::InvalidArgument, "omega grid must lie in (0, 2)");
    const double rho = spectral_radius(build_sweep_matrix(grid, bcs, scheme, variant, w));
    scan.radii.push_back(rho);
    if (rho < scan.rho_star) {
      scan.rho_star = rho;
      scan.omega_star = w;
    }
  }
  return scan;
}

std::vector<double> omega_range(double start, double stop, double step) {
  if (!(step > 0.0) || !(stop >= start)) {
    throw Error(ErrorKind::InvalidArgument, "omega range needs step > 0 and stop >= start");
  }
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 0.5)) + 1;
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = start + static_cast<double>(k) * step;
  return out;
}

}  // namespace sorp
