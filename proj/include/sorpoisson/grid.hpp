#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sorp {

/// Uniform grid on the unit square with (nx+1) x (ny+1) points.
struct GridSpec {
  int nx = 0;
  int ny = 0;
  double dx = 0.0;
  double dy = 0.0;
  double beta = 0.0;  // dx / dy

  std::size_t points_x() const noexcept { return static_cast<std::size_t>(nx) + 1; }
  std::size_t points_y() const noexcept { return static_cast<std::size_t>(ny) + 1; }
  std::size_t size() const noexcept { return points_x() * points_y(); }
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(j) * points_x() + static_cast<std::size_t>(i);
  }
};

GridSpec make_grid(int nx, int ny);

enum class EdgeKind { Dirichlet, Neumann, Robin };

/// Boundary condition on one edge: coef_u * u + coef_du * du/dn_axis = 0, where the
/// derivative is taken along +x (left/right edges) or +y (bottom/top edges).
struct EdgeCondition {
  EdgeKind kind = EdgeKind::Dirichlet;
  double coef_u = 1.0;
  double coef_du = 0.0;

  static EdgeCondition dirichlet() { return {EdgeKind::Dirichlet, 1.0, 0.0}; }
  static EdgeCondition neumann() { return {EdgeKind::Neumann, 0.0, 1.0}; }
  /// Robin(a, b). Degenerate pairs collapse to Dirichlet (b == 0) or Neumann (a == 0);
  /// both zero throws.
  static EdgeCondition robin(double coef_u, double coef_du);

  bool is_dirichlet() const noexcept { return kind == EdgeKind::Dirichlet; }
  bool is_neumann() const noexcept { return kind == EdgeKind::Neumann; }
  bool is_robin() const noexcept { return kind == EdgeKind::Robin; }

  friend bool operator==(const EdgeCondition&, const EdgeCondition&) = default;
};

std::string to_string(const EdgeCondition& edge);

struct BoundarySet {
  EdgeCondition left = EdgeCondition::dirichlet();
  EdgeCondition right = EdgeCondition::dirichlet();
  EdgeCondition bottom = EdgeCondition::dirichlet();
  EdgeCondition top = EdgeCondition::dirichlet();

  static BoundarySet all_dirichlet() { return {}; }

  /// False when every edge is Neumann (solution not unique).
  bool solvable() const noexcept;
};

/// Grid values plus the unknown mask. Storage is row-major with j as the slow axis.
class Field {
 public:
  Field(const GridSpec& grid, const BoundarySet& bcs);

  const GridSpec& grid() const noexcept { return grid_; }

  double& at(int i, int j) noexcept { return values_[grid_.index(i, j)]; }
  double at(int i, int j) const noexcept { return values_[grid_.index(i, j)]; }

  bool is_unknown(int i, int j) const noexcept { return mask_[grid_.index(i, j)] != 0; }
  std::size_t unknown_count() const noexcept { return unknowns_; }

  std::span<double> values() noexcept { return values_; }
  std::span<const double> values() const noexcept { return values_; }
  std::span<const std::uint8_t> mask() const noexcept { return mask_; }

  /// Pointer to the start of row j.
  double* row(int j) noexcept { return values_.data() + grid_.index(0, j); }
  const double* row(int j) const noexcept { return values_.data() + grid_.index(0, j); }

 private:
  GridSpec grid_;
  std::vector<double> values_;
  std::vector<std::uint8_t> mask_;
  std::size_t unknowns_ = 0;
};

/// Unknown points set to one, fixed (Dirichlet) points set to zero.
Field initial_guess(const GridSpec& grid, const BoundarySet& bcs);

double l2_norm(const Field& field);

}  // namespace sorp
