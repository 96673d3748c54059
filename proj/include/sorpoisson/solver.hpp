#pragma once

#include <span>
#include <string>
#include <vector>

#include "sorpoisson/grid.hpp"
#include "sorpoisson/kernels.hpp"
#include "sorpoisson/stencil.hpp"

namespace sorp {

enum class SorVariant { PointSor, LineSor };

std::string to_string(SorVariant variant);

/// (2^-52)^4, the default convergence threshold on the l2 norm.
inline constexpr double kDefaultTolerance = 0x1p-208;
inline constexpr double kDivergenceNorm = 1e100;

struct SolverConfig {
  Scheme scheme = Scheme::Central2;
  SorVariant variant = SorVariant::PointSor;
  double omega = 1.0;
  double tolerance = kDefaultTolerance;
  long max_iterations = 1'000'000;
  KernelIsa isa = KernelIsa::Auto;

  /// Throws InvalidArgument unless 0 < omega < 2, tolerance > 0, max_iterations >= 1.
  void validate() const;
};

struct SolveReport {
  long iterations = 0;
  double final_norm = 0.0;
  bool converged = false;
  bool diverged = false;
};

/// Owns the assembled operator and row scratch for repeated sweeps on one grid.
/// Not thread-safe; use one sweeper per concurrent run.
class SorSweeper {
 public:
  SorSweeper(const GridSpec& grid, const BoundarySet& bcs, Scheme scheme,
             KernelIsa isa = KernelIsa::Auto);

  const AssembledOperator& op() const noexcept { return op_; }
  const KernelSet& kernels() const noexcept { return *kernels_; }

  /// Discrete right-hand side per equation (same scaling as the stencil weights).
  /// Defaults to zero.
  void set_rhs(std::vector<double> rhs);
  std::span<const double> rhs() const noexcept { return rhs_; }

  /// Throws SingularSystem when a boundary closure leaves an unknown with a zero diagonal.
  void point_sweep(Field& field, double omega);
  void line_sweep(Field& field, double omega);
  void sweep(Field& field, SorVariant variant, double omega);

 private:
  double point_update_generic(const Field& field, int i, int j, double omega) const;
  void line_row_generic(Field& field, int j, double omega);

  AssembledOperator op_;
  const KernelSet* kernels_;
  bool zero_diagonal_ = false;
  std::vector<double> rhs_;
  std::vector<double> offrow_;
  std::vector<double> lower_, diag_, upper_, line_rhs_, solution_, scratch_;
};

void point_sor_sweep(Field& field, const BoundarySet& bcs, Scheme scheme, double omega);
void line_sor_sweep(Field& field, const BoundarySet& bcs, Scheme scheme, double omega);

/// Runs sweeps from the all-ones initial guess until the l2 norm drops below the
/// tolerance, the norm exceeds 1e100 (diverged), or max_iterations is reached.
/// Throws NonSolvable for an all-Neumann boundary set.
SolveReport solve(const GridSpec& grid, const BoundarySet& bcs, const SolverConfig& config);

/// Same loop on a caller-supplied field and sweeper.
SolveReport solve(Field& field, SorSweeper& sweeper, const SolverConfig& config);

}  // namespace sorp
