#pragma once

#include <array>
#include <string>
#include <vector>

#include "sorpoisson/grid.hpp"

namespace sorp {

enum class Scheme { Central2, Hoc };

std::string to_string(Scheme scheme);

/// Homogeneous Laplacian weights scaled by dx^2 (Central2) or 6 dx^2 (Hoc).
struct StencilWeights {
  double center = 0.0;
  double east = 0.0;
  double west = 0.0;
  double north = 0.0;
  double south = 0.0;
  double north_east = 0.0;
  double north_west = 0.0;
  double south_east = 0.0;
  double south_west = 0.0;

  double row_sum() const noexcept {
    return center + east + west + north + south + north_east + north_west + south_east +
           south_west;
  }
  bool has_corners() const noexcept {
    return north_east != 0.0 || north_west != 0.0 || south_east != 0.0 || south_west != 0.0;
  }
};

StencilWeights weights(Scheme scheme, double beta);

/// Which end of an axis an edge sits on: Low is left/bottom, High is right/top.
enum class EdgeSide { Low, High };

/// Ghost node as a combination of the mirrored interior node and the boundary node:
/// ghost = inner + boundary_weight * boundary, from the centred-difference closure.
struct GhostClosure {
  double boundary_weight = 0.0;
};

GhostClosure ghost_closure(const EdgeCondition& edge, EdgeSide side, double spacing);

double ghost_value(const EdgeCondition& edge, EdgeSide side, double inner_value,
                   double boundary_value, double spacing);

/// 3x3 coefficient block for one equation, indexed [dj + 1][di + 1].
using Block3 = std::array<std::array<double, 3>, 3>;

/// The discrete operator with every ghost node folded into in-domain coefficients.
/// Interior rows use the uniform weights; each unknown on a Neumann/Robin edge carries
/// its own block.
class AssembledOperator {
 public:
  AssembledOperator(const GridSpec& grid, const BoundarySet& bcs, Scheme scheme);

  const GridSpec& grid() const noexcept { return grid_; }
  const BoundarySet& boundaries() const noexcept { return bcs_; }
  Scheme scheme() const noexcept { return scheme_; }
  const StencilWeights& uniform() const noexcept { return uniform_; }

  /// Coefficients of the equation at (i, j). Fixed points return an all-zero block.
  const Block3& block(int i, int j) const noexcept { return blocks_[grid_.index(i, j)]; }
  bool is_unknown(int i, int j) const noexcept { return mask_[grid_.index(i, j)] != 0; }

  /// True when (i, j) is an interior point whose block equals the uniform weights.
  bool is_uniform(int i, int j) const noexcept {
    return i > 0 && i < grid_.nx && j > 0 && j < grid_.ny;
  }

  /// Range [first, last] of unknown columns in row j, or first > last if none.
  int first_unknown(int j) const noexcept { return row_first_[static_cast<std::size_t>(j)]; }
  int last_unknown(int j) const noexcept { return row_last_[static_cast<std::size_t>(j)]; }

 private:
  void add_resolved(Block3& block, int i, int j, int ti, int tj, double weight) const;

  GridSpec grid_;
  BoundarySet bcs_;
  Scheme scheme_;
  StencilWeights uniform_;
  std::vector<Block3> blocks_;
  std::vector<std::uint8_t> mask_;
  std::vector<int> row_first_;
  std::vector<int> row_last_;
};

}  // namespace sorp
