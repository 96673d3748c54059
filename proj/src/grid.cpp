#include "sorpoisson/grid.hpp"

#include <cmath>
#include <sstream>

#include "sorpoisson/error.hpp"
#include "sorpoisson/kernels.hpp"

namespace sorp {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionTooSmall: return "dimension-too-small";
    case ErrorKind::InvalidBoundary: return "invalid-boundary";
    case ErrorKind::NonSolvable: return "non-solvable";
    case ErrorKind::NonConvergent: return "non-convergent";
    case ErrorKind::InvalidMode: return "invalid-mode";
    case ErrorKind::FormulaDomain: return "formula-domain";
    case ErrorKind::SingularSystem: return "singular-system";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::TooManyUnknowns: return "too-many-unknowns";
    case ErrorKind::EigenFailure: return "eigen-failure";
    case ErrorKind::NoRoot: return "no-root";
    case ErrorKind::Inadmissible: return "inadmissible";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

GridSpec make_grid(int nx, int ny) {
  if (nx < 3 || ny < 3) {
    std::ostringstream msg;
    msg << "grid needs at least 3 cells per direction, got " << nx << " x " << ny;
    throw Error(ErrorKind::DimensionTooSmall, msg.str());
  }
  GridSpec g;
  g.nx = nx;
  g.ny = ny;
  g.dx = 1.0 / nx;
  g.dy = 1.0 / ny;
  g.beta = static_cast<double>(ny) / static_cast<double>(nx);
  return g;
}

EdgeCondition EdgeCondition::robin(double coef_u, double coef_du) {
  if (!std::isfinite(coef_u) || !std::isfinite(coef_du)) {
    throw Error(ErrorKind::InvalidBoundary, "Robin coefficients must be finite");
  }
  if (coef_u == 0.0 && coef_du == 0.0) {
    throw Error(ErrorKind::InvalidBoundary, "Robin condition with both coefficients zero");
  }
  if (coef_du == 0.0) return dirichlet();
  if (coef_u == 0.0) return neumann();
  return {EdgeKind::Robin, coef_u, coef_du};
}

std::string to_string(const EdgeCondition& edge) {
  switch (edge.kind) {
    case EdgeKind::Dirichlet: return "dirichlet";
    case EdgeKind::Neumann: return "neumann";
    case EdgeKind::Robin: {
      std::ostringstream s;
      s.precision(17);
      s << "robin:" << edge.coef_u << "," << edge.coef_du;
      return s.str();
    }
  }
  return "?";
}

bool BoundarySet::solvable() const noexcept {
  return !(left.is_neumann() && right.is_neumann() && bottom.is_neumann() &&
           top.is_neumann());
}

Field::Field(const GridSpec& grid, const BoundarySet& bcs)
    : grid_(grid), values_(grid.size(), 0.0), mask_(grid.size(), 0) {
  // Corner points shared with a Dirichlet edge stay fixed.
  const bool free_left = !bcs.left.is_dirichlet();
  const bool free_right = !bcs.right.is_dirichlet();
  const bool free_bottom = !bcs.bottom.is_dirichlet();
  const bool free_top = !bcs.top.is_dirichlet();
  for (int j = 0; j <= grid.ny; ++j) {
    const bool row_free = (j == 0) ? free_bottom : (j == grid.ny) ? free_top : true;
    for (int i = 0; i <= grid.nx; ++i) {
      const bool col_free = (i == 0) ? free_left : (i == grid.nx) ? free_right : true;
      if (row_free && col_free) {
        mask_[grid.index(i, j)] = 1;
        ++unknowns_;
      }
    }
  }
}

Field initial_guess(const GridSpec& grid, const BoundarySet& bcs) {
  Field f(grid, bcs);
  auto values = f.values();
  auto mask = f.mask();
  for (std::size_t k = 0; k < values.size(); ++k) values[k] = mask[k] ? 1.0 : 0.0;
  return f;
}

double l2_norm(const Field& field) {
  const auto v = field.values();
  return std::sqrt(kernel_set(KernelIsa::Auto).sum_squares(v.data(), v.size()));
}

}  // namespace sorp
