#include "sorpoisson/solver.hpp"

#include <cmath>
#include <sstream>

#include "sorpoisson/error.hpp"
#include "sorpoisson/tridiagonal.hpp"

namespace sorp {

std::string to_string(SorVariant variant) {
  return variant == SorVariant::PointSor ? "point" : "line";
}

void SolverConfig::validate() const {
  if (!(omega > 0.0 && omega < 2.0)) {
    std::ostringstream msg;
    msg << "relaxation parameter must lie in (0, 2), got " << omega;
    throw Error(ErrorKind::InvalidArgument, msg.str());
  }
  if (!(tolerance > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  if (max_iterations < 1) throw Error(ErrorKind::InvalidArgument, "max_iterations must be >= 1");
}

SorSweeper::SorSweeper(const GridSpec& grid, const BoundarySet& bcs, Scheme scheme,
                       KernelIsa isa)
    : op_(grid, bcs, scheme), kernels_(&kernel_set(isa)), rhs_(grid.size(), 0.0) {
  const std::size_t row = grid.points_x();
  offrow_.resize(row);
  lower_.resize(row);
  diag_.resize(row);
  upper_.resize(row);
  line_rhs_.resize(row);
  solution_.resize(row);
  scratch_.resize(row);
  for (int j = 0; j <= grid.ny && !zero_diagonal_; ++j) {
    for (int i = 0; i <= grid.nx; ++i) {
      if (op_.is_unknown(i, j) && op_.block(i, j)[1][1] == 0.0) {
        zero_diagonal_ = true;
        break;
      }
    }
  }
}

void SorSweeper::set_rhs(std::vector<double> rhs) {
  if (rhs.size() != op_.grid().size()) {
    throw Error(ErrorKind::InvalidArgument, "right-hand side does not match the grid");
  }
  rhs_ = std::move(rhs);
}

namespace {

OffRowWeights offrow_weights(const StencilWeights& w) {
  return {w.south, w.north, w.south_west, w.south_east, w.north_west, w.north_east,
          w.has_corners()};
}

bool in_domain(const GridSpec& g, int i, int j) {
  return i >= 0 && i <= g.nx && j >= 0 && j <= g.ny;
}

// Sum of the block terms outside the row, minus the right-hand side.
// Used for points whose block is not the uniform stencil.
double generic_offrow(const AssembledOperator& op, const Field& field,
                      std::span<const double> rhs, int i, int j) {
  const GridSpec& g = op.grid();
  const Block3& blk = op.block(i, j);
  double t = 0.0;
  for (int dj = -1; dj <= 1; dj += 2) {
    for (int di = -1; di <= 1; ++di) {
      const double c = blk[dj + 1][di + 1];
      if (c != 0.0 && in_domain(g, i + di, j + dj)) t += c * field.at(i + di, j + dj);
    }
  }
  return t - rhs[g.index(i, j)];
}

}  // namespace

double SorSweeper::point_update_generic(const Field& field, int i, int j, double omega) const {
  const GridSpec& g = op_.grid();
  const Block3& blk = op_.block(i, j);
  double t = generic_offrow(op_, field, rhs_, i, j);
  if (i > 0) t += blk[1][0] * field.at(i - 1, j);
  if (i < g.nx) t += blk[1][2] * field.at(i + 1, j);
  const double candidate = -t / blk[1][1];
  return (1.0 - omega) * field.at(i, j) + omega * candidate;
}

void SorSweeper::point_sweep(Field& field, double omega) {
  if (zero_diagonal_) {
    throw Error(ErrorKind::SingularSystem,
                "a boundary closure cancels the diagonal coefficient; point SOR is undefined");
  }
  const GridSpec& g = op_.grid();
  const StencilWeights& w = op_.uniform();
  const OffRowWeights ow = offrow_weights(w);
  const double keep = 1.0 - omega;
  for (int j = 0; j <= g.ny; ++j) {
    const int first = op_.first_unknown(j);
    const int last = op_.last_unknown(j);
    if (first > last) continue;
    if (j == 0 || j == g.ny) {
      for (int i = first; i <= last; ++i) field.at(i, j) = point_update_generic(field, i, j, omega);
      continue;
    }
    if (first == 0) field.at(0, j) = point_update_generic(field, 0, j, omega);

    // Interior columns: everything except the west neighbour is known before the row
    // starts, so it is gathered by the row kernel; the west coupling is a recurrence.
    const std::size_t count = static_cast<std::size_t>(g.nx - 1);
    kernels_->offrow_sum(ow, field.row(j - 1) + 1, field.row(j + 1) + 1,
                         rhs_.data() + g.index(1, j), offrow_.data(), count);
    double* u = field.row(j);
    for (int i = 1; i < g.nx; ++i) {
      double t = w.west * u[i - 1];
      t = t + w.east * u[i + 1];
      t = t + offrow_[static_cast<std::size_t>(i - 1)];
      const double candidate = -t / w.center;
      u[i] = keep * u[i] + omega * candidate;
    }

    if (last == g.nx) field.at(g.nx, j) = point_update_generic(field, g.nx, j, omega);
  }
}

void SorSweeper::line_row_generic(Field& field, int j, double omega) {
  const GridSpec& g = op_.grid();
  const int first = op_.first_unknown(j);
  const int last = op_.last_unknown(j);
  const double keep = 1.0 - omega;
  const bool uniform_row = j > 0 && j < g.ny;
  const StencilWeights& w = op_.uniform();

  if (uniform_row) {
    const std::size_t count = static_cast<std::size_t>(g.nx - 1);
    const std::size_t offset = static_cast<std::size_t>(1 - first);
    kernels_->offrow_sum(offrow_weights(w), field.row(j - 1) + 1, field.row(j + 1) + 1,
                         rhs_.data() + g.index(1, j), offrow_.data() + offset, count);
    kernels_->line_rhs({w.west, w.center, w.east}, omega, field.row(j) + 1,
                       offrow_.data() + offset, line_rhs_.data() + offset, count);
  }

  for (int i = first; i <= last; ++i) {
    const std::size_t k = static_cast<std::size_t>(i - first);
    const Block3& blk = op_.block(i, j);
    lower_[k] = blk[1][0];
    diag_[k] = blk[1][1];
    upper_[k] = blk[1][2];
    if (uniform_row && op_.is_uniform(i, j)) continue;
    double t = (i > 0 ? blk[1][0] * field.at(i - 1, j) : 0.0);
    t = t + blk[1][1] * field.at(i, j);
    t = t + (i < g.nx ? blk[1][2] * field.at(i + 1, j) : 0.0);
    line_rhs_[k] = keep * t - omega * generic_offrow(op_, field, rhs_, i, j);
  }

  // Fixed in-row neighbours of the end points move to the right-hand side.
  const std::size_t m = static_cast<std::size_t>(last - first + 1);
  if (first > 0) line_rhs_[0] -= lower_[0] * field.at(first - 1, j);
  if (last < g.nx) line_rhs_[m - 1] -= upper_[m - 1] * field.at(last + 1, j);

  tridiagonal_solve_into(std::span<const double>(lower_.data(), m),
                         std::span<const double>(diag_.data(), m),
                         std::span<const double>(upper_.data(), m),
                         std::span<const double>(line_rhs_.data(), m),
                         std::span<double>(solution_.data(), m),
                         std::span<double>(scratch_.data(), m));
  double* u = field.row(j);
  for (std::size_t k = 0; k < m; ++k) u[static_cast<std::size_t>(first) + k] = solution_[k];
}

void SorSweeper::line_sweep(Field& field, double omega) {
  const GridSpec& g = op_.grid();
  for (int j = 0; j <= g.ny; ++j) {
    if (op_.first_unknown(j) > op_.last_unknown(j)) continue;
    line_row_generic(field, j, omega);
  }
}

void SorSweeper::sweep(Field& field, SorVariant variant, double omega) {
  if (variant == SorVariant::PointSor) {
    point_sweep(field, omega);
  } else {
    line_sweep(field, omega);
  }
}

void point_sor_sweep(Field& field, const BoundarySet& bcs, Scheme scheme, double omega) {
  SorSweeper sweeper(field.grid(), bcs, scheme);
  sweeper.point_sweep(field, omega);
}

void line_sor_sweep(Field& field, const BoundarySet& bcs, Scheme scheme, double omega) {
  SorSweeper sweeper(field.grid(), bcs, scheme);
  sweeper.line_sweep(field, omega);
}

SolveReport solve(Field& field, SorSweeper& sweeper, const SolverConfig& config) {
  config.validate();
  const KernelSet& k = sweeper.kernels();
  const auto values = field.values();
  SolveReport report;
  for (long it = 1; it <= config.max_iterations; ++it) {
    sweeper.sweep(field, config.variant, config.omega);
    const double norm = std::sqrt(k.sum_squares(values.data(), values.size()));
    report.iterations = it;
    report.final_norm = norm;
    if (!std::isfinite(norm) || norm > kDivergenceNorm) {
      report.diverged = true;
      return report;
    }
    if (norm < config.tolerance) {
      report.converged = true;
      return report;
    }
  }
  return report;
}

SolveReport solve(const GridSpec& grid, const BoundarySet& bcs, const SolverConfig& config) {
  config.validate();
  if (!bcs.solvable()) {
    throw Error(ErrorKind::NonSolvable, "all edges are Neumann: the solution is not unique");
  }
  Field field = initial_guess(grid, bcs);
  SorSweeper sweeper(grid, bcs, config.scheme, config.isa);
  return solve(field, sweeper, config);
}

}  // namespace sorp
