#include "sorpoisson/stencil.hpp"

#include "sorpoisson/error.hpp"

namespace sorp {

std::string to_string(Scheme scheme) {
  return scheme == Scheme::Central2 ? "central2" : "hoc";
}

StencilWeights weights(Scheme scheme, double beta) {
  if (!(beta > 0.0)) throw Error(ErrorKind::InvalidArgument, "beta must be positive");
  const double b2 = beta * beta;
  StencilWeights w;
  if (scheme == Scheme::Central2) {
    w.center = -2.0 * (1.0 + b2);
    w.east = w.west = 1.0;
    w.north = w.south = b2;
  } else {
    w.center = -20.0 * (1.0 + b2);
    w.east = w.west = 10.0 - 2.0 * b2;
    w.north = w.south = 10.0 * b2 - 2.0;
    w.north_east = w.north_west = w.south_east = w.south_west = 1.0 + b2;
  }
  return w;
}

GhostClosure ghost_closure(const EdgeCondition& edge, EdgeSide side, double spacing) {
  switch (edge.kind) {
    case EdgeKind::Dirichlet:
      throw Error(ErrorKind::InvalidBoundary, "no ghost node on a Dirichlet edge");
    case EdgeKind::Neumann:
      return {0.0};
    case EdgeKind::Robin:
      break;
  }
  if (edge.coef_du == 0.0) {
    throw Error(ErrorKind::InvalidBoundary, "Robin closure needs a non-zero derivative coefficient");
  }
  // coef_u u_0 + coef_du (u_1 - u_{-1}) / (2 h) = 0 at the low end, mirrored at the high end.
  const double ratio = 2.0 * spacing * edge.coef_u / edge.coef_du;
  return {side == EdgeSide::Low ? ratio : -ratio};
}

double ghost_value(const EdgeCondition& edge, EdgeSide side, double inner_value,
                   double boundary_value, double spacing) {
  const GhostClosure g = ghost_closure(edge, side, spacing);
  return inner_value + g.boundary_weight * boundary_value;
}

namespace {

Block3 uniform_block(const StencilWeights& w) {
  Block3 b{};
  b[0] = {w.south_west, w.south, w.south_east};
  b[1] = {w.west, w.center, w.east};
  b[2] = {w.north_west, w.north, w.north_east};
  return b;
}

}  // namespace

AssembledOperator::AssembledOperator(const GridSpec& grid, const BoundarySet& bcs,
                                     Scheme scheme)
    : grid_(grid),
      bcs_(bcs),
      scheme_(scheme),
      uniform_(weights(scheme, grid.beta)),
      blocks_(grid.size(), Block3{}),
      row_first_(grid.points_y(), 1),
      row_last_(grid.points_y(), 0) {
  const Field probe(grid, bcs);
  mask_.assign(probe.mask().begin(), probe.mask().end());

  const Block3 base = uniform_block(uniform_);
  for (int j = 0; j <= grid.ny; ++j) {
    for (int i = 0; i <= grid.nx; ++i) {
      if (!is_unknown(i, j)) continue;
      if (row_first_[j] > row_last_[j]) row_first_[j] = i;
      row_last_[j] = i;
      Block3& blk = blocks_[grid.index(i, j)];
      if (is_uniform(i, j)) {
        blk = base;
        continue;
      }
      for (int dj = -1; dj <= 1; ++dj) {
        for (int di = -1; di <= 1; ++di) {
          const double w = base[dj + 1][di + 1];
          if (w != 0.0) add_resolved(blk, i, j, i + di, j + dj, w);
        }
      }
    }
  }
}

void AssembledOperator::add_resolved(Block3& block, int i, int j, int ti, int tj,
                                     double weight) const {
  if (ti < 0) {
    const double bw = ghost_closure(bcs_.left, EdgeSide::Low, grid_.dx).boundary_weight;
    add_resolved(block, i, j, 1, tj, weight);
    if (bw != 0.0) add_resolved(block, i, j, 0, tj, weight * bw);
    return;
  }
  if (ti > grid_.nx) {
    const double bw = ghost_closure(bcs_.right, EdgeSide::High, grid_.dx).boundary_weight;
    add_resolved(block, i, j, grid_.nx - 1, tj, weight);
    if (bw != 0.0) add_resolved(block, i, j, grid_.nx, tj, weight * bw);
    return;
  }
  if (tj < 0) {
    const double bw = ghost_closure(bcs_.bottom, EdgeSide::Low, grid_.dy).boundary_weight;
    add_resolved(block, i, j, ti, 1, weight);
    if (bw != 0.0) add_resolved(block, i, j, ti, 0, weight * bw);
    return;
  }
  if (tj > grid_.ny) {
    const double bw = ghost_closure(bcs_.top, EdgeSide::High, grid_.dy).boundary_weight;
    add_resolved(block, i, j, ti, grid_.ny - 1, weight);
    if (bw != 0.0) add_resolved(block, i, j, ti, grid_.ny, weight * bw);
    return;
  }
  block[static_cast<std::size_t>(tj - j + 1)][static_cast<std::size_t>(ti - i + 1)] += weight;
}

}  // namespace sorp
