#pragma once

// Slow reference implementations used as test oracles. They evaluate every equation
// with explicit ghost nodes instead of the folded operator blocks.

#include <Eigen/Dense>

#include <random>
#include <vector>

#include "sorpoisson/grid.hpp"
#include "sorpoisson/stencil.hpp"

namespace sorp::testref {

inline double value(const Field& f, const BoundarySet& b, int i, int j) {
  const GridSpec& g = f.grid();
  if (i < 0) return ghost_value(b.left, EdgeSide::Low, value(f, b, -i, j), value(f, b, 0, j), g.dx);
  if (i > g.nx) {
    return ghost_value(b.right, EdgeSide::High, value(f, b, 2 * g.nx - i, j), value(f, b, g.nx, j), g.dx);
  }
  if (j < 0) return ghost_value(b.bottom, EdgeSide::Low, value(f, b, i, -j), value(f, b, i, 0), g.dy);
  if (j > g.ny) {
    return ghost_value(b.top, EdgeSide::High, value(f, b, i, 2 * g.ny - j), value(f, b, i, g.ny), g.dy);
  }
  return f.at(i, j);
}

/// Sum of w * u over the 3x3 stencil at (i, j), ghosts resolved from the field.
inline double equation(const Field& f, const BoundarySet& b, const StencilWeights& w, int i, int j) {
  const double c[3][3] = {{w.south_west, w.south, w.south_east},
                          {w.west, w.center, w.east},
                          {w.north_west, w.north, w.north_east}};
  double acc = 0.0;
  for (int dj = -1; dj <= 1; ++dj) {
    for (int di = -1; di <= 1; ++di) {
      const double coef = c[dj + 1][di + 1];
      if (coef != 0.0) acc += coef * value(f, b, i + di, j + dj);
    }
  }
  return acc;
}

inline void point_sweep(Field& f, const BoundarySet& b, Scheme scheme, double omega,
                        const std::vector<double>* rhs = nullptr) {
  const GridSpec& g = f.grid();
  const StencilWeights w = weights(scheme, g.beta);
  for (int j = 0; j <= g.ny; ++j) {
    for (int i = 0; i <= g.nx; ++i) {
      if (!f.is_unknown(i, j)) continue;
      const double old = f.at(i, j);
      const double r = rhs ? (*rhs)[g.index(i, j)] : 0.0;
      f.at(i, j) = 0.0;
      const double e0 = equation(f, b, w, i, j) - r;
      f.at(i, j) = 1.0;
      const double e1 = equation(f, b, w, i, j) - r;
      const double candidate = -e0 / (e1 - e0);
      f.at(i, j) = (1.0 - omega) * old + omega * candidate;
    }
  }
}

inline void line_sweep(Field& f, const BoundarySet& b, Scheme scheme, double omega) {
  const GridSpec& g = f.grid();
  const StencilWeights w = weights(scheme, g.beta);
  for (int j = 0; j <= g.ny; ++j) {
    std::vector<int> cols;
    for (int i = 0; i <= g.nx; ++i) {
      if (f.is_unknown(i, j)) cols.push_back(i);
    }
    if (cols.empty()) continue;
    const auto n = static_cast<Eigen::Index>(cols.size());
    std::vector<double> old(cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k) old[k] = f.at(cols[k], j);

    auto residuals = [&] {
      Eigen::VectorXd e(n);
      for (Eigen::Index k = 0; k < n; ++k) e(k) = equation(f, b, w, cols[static_cast<std::size_t>(k)], j);
      return e;
    };
    for (int c : cols) f.at(c, j) = 0.0;
    const Eigen::VectorXd e0 = residuals();
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
      f.at(cols[static_cast<std::size_t>(k)], j) = 1.0;
      m.col(k) = residuals() - e0;
      f.at(cols[static_cast<std::size_t>(k)], j) = 0.0;
    }
    const Eigen::VectorXd star = m.partialPivLu().solve(-e0);
    for (Eigen::Index k = 0; k < n; ++k) {
      const auto kk = static_cast<std::size_t>(k);
      f.at(cols[kk], j) = (1.0 - omega) * old[kk] + omega * star(k);
    }
  }
}

inline void fill_random(Field& f, std::mt19937_64& rng, bool fixed_too = false) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  const GridSpec& g = f.grid();
  for (int j = 0; j <= g.ny; ++j) {
    for (int i = 0; i <= g.nx; ++i) {
      if (f.is_unknown(i, j) || fixed_too) {
        f.at(i, j) = d(rng);
      } else {
        f.at(i, j) = 0.0;
      }
    }
  }
}

inline double max_abs_diff(const Field& a, const Field& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.values().size(); ++k) {
    m = std::max(m, std::abs(a.values()[k] - b.values()[k]));
  }
  return m;
}

inline double max_abs(const Field& a) {
  double m = 0.0;
  for (double v : a.values()) m = std::max(m, std::abs(v));
  return m;
}

/// Boundary sets covering every edge type, used by parameterised tests.
inline std::vector<BoundarySet> boundary_catalogue() {
  std::vector<BoundarySet> out;
  out.push_back(BoundarySet::all_dirichlet());
  BoundarySet s;
  s.right = EdgeCondition::neumann();
  out.push_back(s);
  s.left = EdgeCondition::neumann();
  out.push_back(s);
  BoundarySet r1;
  r1.left = EdgeCondition::robin(1.0, -0.25);
  r1.right = EdgeCondition::robin(1.0, 1.0);
  out.push_back(r1);
  BoundarySet r3;
  r3.left = EdgeCondition::robin(1.0, 1.0);
  r3.right = EdgeCondition::robin(1.0, -1.0);
  r3.top = EdgeCondition::neumann();
  out.push_back(r3);
  BoundarySet mixed;
  mixed.left = EdgeCondition::neumann();
  mixed.bottom = EdgeCondition::robin(2.0, 0.5);
  mixed.top = EdgeCondition::neumann();
  out.push_back(mixed);
  return out;
}

}  // namespace sorp::testref
