#pragma once

#include <span>
#include <utility>
#include <vector>

#include "sorpoisson/grid.hpp"
#include "sorpoisson/hessenberg_qr.hpp"
#include "sorpoisson/kernels.hpp"
#include "sorpoisson/solver.hpp"
#include "sorpoisson/stencil.hpp"

namespace sorp {

inline constexpr std::size_t kOracleMaxUnknowns = 4096;

/// One homogeneous sweep written as a dense matrix over the unknowns.
struct SweepMatrix {
  linalg::DenseMatrix matrix;
  /// (i, j) of each linear unknown index, in natural row-wise order.
  std::vector<std::pair<int, int>> points;

  std::size_t size() const noexcept { return matrix.n; }
  std::vector<double> apply(std::span<const double> u) const;
};

/// Builds the sweep matrix by probing unit basis fields, then checks linearity on five
/// random fields. Throws TooManyUnknowns above 4096 unknowns.
SweepMatrix build_sweep_matrix(const GridSpec& grid, const BoundarySet& bcs, Scheme scheme,
                               SorVariant variant, double omega,
                               KernelIsa isa = KernelIsa::Auto);

double spectral_radius(const SweepMatrix& m);

struct OmegaScan {
  double omega_star = 0.0;
  double rho_star = 0.0;
  std::vector<double> omegas;
  std::vector<double> radii;
};

OmegaScan brute_force_omega(const GridSpec& grid, const BoundarySet& bcs, Scheme scheme,
                            SorVariant variant, std::span<const double> omega_grid);

/// start, start + step, ... up to and including stop (within half a step).
std::vector<double> omega_range(double start, double stop, double step);

}  // namespace sorp
