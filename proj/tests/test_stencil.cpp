#include <doctest.h>

#include <random>

#include "reference.hpp"
#include "sorpoisson/error.hpp"
#include "sorpoisson/stencil.hpp"

using namespace sorp;

TEST_SUITE("stencil") {

TEST_CASE("weights") {
  const StencilWeights c = weights(Scheme::Central2, 1.0);
  CHECK(c.center == -4.0);
  CHECK(c.east == 1.0);
  CHECK(c.north == 1.0);
  CHECK_FALSE(c.has_corners());

  const StencilWeights h = weights(Scheme::Hoc, 1.0);
  CHECK(h.center == -40.0);
  CHECK(h.west == 8.0);
  CHECK(h.south == 8.0);
  CHECK(h.north_east == 2.0);
  // Mehrstellen (-20, 4, 1) up to a positive factor.
  CHECK(h.center / -20.0 == h.east / 4.0);
  CHECK(h.center / -20.0 == h.south_west / 1.0);

  const StencilWeights c3 = weights(Scheme::Central2, 3.0);
  CHECK(c3.center == -20.0);
  CHECK(c3.west == 1.0);
  CHECK(c3.south == 9.0);
}

TEST_CASE("row sums vanish") {
  for (double beta : {1.0, 3.0, 1.0 / 3.0, 0.5, 2.0, std::sqrt(5.0), 0.123, 7.0}) {
    for (Scheme s : {Scheme::Central2, Scheme::Hoc}) {
      const StencilWeights w = weights(s, beta);
      CHECK(std::abs(w.row_sum()) <= 1e-12 * std::abs(w.center));
    }
  }
}

TEST_CASE("ghost values") {
  CHECK(ghost_value(EdgeCondition::neumann(), EdgeSide::High, 0.7, 0.1, 0.1) == 0.7);
  CHECK(ghost_value(EdgeCondition::robin(1.0, 1.0), EdgeSide::High, 0.5, 0.2, 0.1) ==
        doctest::Approx(0.46).epsilon(1e-15));
  CHECK(ghost_value(EdgeCondition::robin(0.0, 1.0), EdgeSide::Low, 0.3, 5.0, 0.1) == 0.3);
  // Low side: u(-1) = u(1) + 2 h a / b u(0).
  CHECK(ghost_value(EdgeCondition::robin(2.0, 1.0), EdgeSide::Low, 0.5, 0.2, 0.1) ==
        doctest::Approx(0.58).epsilon(1e-15));
  CHECK_THROWS_AS(ghost_value(EdgeCondition::dirichlet(), EdgeSide::Low, 0.3, 0.0, 0.1), Error);
}

TEST_CASE("constant field has zero interior residual") {
  for (Scheme s : {Scheme::Central2, Scheme::Hoc}) {
    const GridSpec g = make_grid(7, 5);
    Field f(g, BoundarySet{});
    for (double& v : f.values()) v = 2.5;
    const StencilWeights w = weights(s, g.beta);
    for (int j = 1; j < g.ny; ++j) {
      for (int i = 1; i < g.nx; ++i) CHECK(std::abs(testref::equation(f, BoundarySet{}, w, i, j)) < 1e-12);
    }
  }
}

TEST_CASE("folded blocks equal explicit ghost evaluation") {
  std::mt19937_64 rng(7);
  for (const BoundarySet& b : testref::boundary_catalogue()) {
    for (Scheme s : {Scheme::Central2, Scheme::Hoc}) {
      for (auto [nx, ny] : {std::pair{5, 4}, std::pair{4, 7}}) {
        const GridSpec g = make_grid(nx, ny);
        const AssembledOperator op(g, b, s);
        Field f(g, b);
        testref::fill_random(f, rng, true);
        const StencilWeights w = weights(s, g.beta);
        for (int j = 0; j <= ny; ++j) {
          for (int i = 0; i <= nx; ++i) {
            CHECK(op.is_unknown(i, j) == f.is_unknown(i, j));
            if (!op.is_unknown(i, j)) continue;
            const Block3& blk = op.block(i, j);
            double folded = 0.0;
            for (int dj = -1; dj <= 1; ++dj) {
              for (int di = -1; di <= 1; ++di) {
                const double c = blk[static_cast<std::size_t>(dj + 1)][static_cast<std::size_t>(di + 1)];
                if (c != 0.0) folded += c * f.at(i + di, j + dj);
              }
            }
            const double direct = testref::equation(f, b, w, i, j);
            CHECK(folded == doctest::Approx(direct).epsilon(1e-13).scale(std::abs(w.center)));
          }
        }
      }
    }
  }
}

TEST_CASE("dirichlet edge has no ghost closure") {
  CHECK_THROWS_AS(ghost_closure(EdgeCondition::dirichlet(), EdgeSide::High, 0.1), Error);
  CHECK(ghost_closure(EdgeCondition::neumann(), EdgeSide::High, 0.1).boundary_weight == 0.0);
}

}
