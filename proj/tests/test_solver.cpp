#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <random>

#include "reference.hpp"
#include "sorpoisson/error.hpp"
#include "sorpoisson/omega.hpp"
#include "sorpoisson/solver.hpp"

using namespace sorp;

TEST_SUITE("solver") {

TEST_CASE("config validation") {
  SolverConfig c;
  c.omega = 2.0;
  CHECK_THROWS_AS(c.validate(), Error);
  c.omega = 0.0;
  CHECK_THROWS_AS(c.validate(), Error);
  c.omega = 1.2;
  c.max_iterations = 0;
  CHECK_THROWS_AS(c.validate(), Error);
  CHECK(kDefaultTolerance == std::pow(std::pow(2.0, -52), 4));
}

TEST_CASE("zero field is a fixed point") {
  for (const BoundarySet& b : testref::boundary_catalogue()) {
    for (Scheme s : {Scheme::Central2, Scheme::Hoc}) {
      Field f(make_grid(6, 5), b);
      point_sor_sweep(f, b, s, 1.7);
      line_sor_sweep(f, b, s, 1.7);
      CHECK(testref::max_abs(f) == 0.0);
    }
  }
}

TEST_CASE("hand Gauss-Seidel on 4x4") {
  const BoundarySet b;
  Field f = initial_guess(make_grid(4, 4), b);
  point_sor_sweep(f, b, Scheme::Central2, 1.0);
  const double expect[3][3] = {{0.5, 0.625, 0.40625},
                               {0.625, 0.8125, 0.5546875},
                               {0.40625, 0.5546875, 0.27734375}};
  for (int j = 1; j <= 3; ++j) {
    for (int i = 1; i <= 3; ++i) CHECK(f.at(i, j) == expect[j - 1][i - 1]);
  }
}

TEST_CASE("hand line Gauss-Seidel on 4x4") {
  const BoundarySet b;
  Field f = initial_guess(make_grid(4, 4), b);
  line_sor_sweep(f, b, Scheme::Central2, 1.0);
  // Row j: tridiag(1, -4, 1) x = -(south + north).
  Eigen::Matrix3d t;
  t << -4, 1, 0, 1, -4, 1, 0, 1, -4;
  Eigen::Vector3d south = Eigen::Vector3d::Zero();
  for (int j = 1; j <= 3; ++j) {
    const Eigen::Vector3d north = j < 3 ? Eigen::Vector3d::Ones() : Eigen::Vector3d::Zero();
    const Eigen::Vector3d x = t.partialPivLu().solve(-(south + north));
    for (int i = 1; i <= 3; ++i) CHECK(f.at(i, j) == doctest::Approx(x(i - 1)).epsilon(1e-15));
    south = x;
  }
  CHECK(f.at(1, 1) == doctest::Approx(5.0 / 14.0));
  CHECK(f.at(2, 1) == doctest::Approx(3.0 / 7.0));
}

TEST_CASE("relaxation is (1 - omega) old + omega candidate") {
  std::mt19937_64 rng(11);
  for (const BoundarySet& b : testref::boundary_catalogue()) {
    for (Scheme s : {Scheme::Central2, Scheme::Hoc}) {
      const GridSpec g = make_grid(7, 6);
      Field f(g, b);
      testref::fill_random(f, rng);
      Field ref = f;
      point_sor_sweep(f, b, s, 1.5);
      testref::point_sweep(ref, b, s, 1.5);
      CHECK(testref::max_abs_diff(f, ref) <= 1e-12 * std::max(1.0, testref::max_abs(ref)));

      Field lf(g, b);
      testref::fill_random(lf, rng);
      Field lref = lf;
      line_sor_sweep(lf, b, s, 1.5);
      testref::line_sweep(lref, b, s, 1.5);
      CHECK(testref::max_abs_diff(lf, lref) <= 1e-12 * std::max(1.0, testref::max_abs(lref)));
    }
  }
}

TEST_CASE("omega = 1 equals a relaxation-free sweep") {
  std::mt19937_64 rng(5);
  const BoundarySet b = testref::boundary_catalogue()[2];
  const GridSpec g = make_grid(8, 8);
  Field f(g, b);
  testref::fill_random(f, rng);
  Field ref = f;
  point_sor_sweep(f, b, Scheme::Hoc, 1.0);
  testref::point_sweep(ref, b, Scheme::Hoc, 1.0);
  CHECK(testref::max_abs_diff(f, ref) <= 1e-13);
}

TEST_CASE("middle-row line solve matches a dense solve") {
  const BoundarySet b;
  const GridSpec g = make_grid(4, 4);
  std::mt19937_64 rng(21);
  Field f(g, b);
  testref::fill_random(f, rng);
  Field ref = f;
  SorSweeper sw(g, b, Scheme::Hoc);
  sw.line_sweep(f, 1.3);
  testref::line_sweep(ref, b, Scheme::Hoc, 1.3);
  for (int i = 1; i <= 3; ++i) CHECK(f.at(i, 2) == doctest::Approx(ref.at(i, 2)).epsilon(1e-13));
}

TEST_CASE("sweeps are linear") {
  std::mt19937_64 rng(13);
  for (const BoundarySet& b : testref::boundary_catalogue()) {
    for (Scheme s : {Scheme::Central2, Scheme::Hoc}) {
      for (SorVariant v : {SorVariant::PointSor, SorVariant::LineSor}) {
        const GridSpec g = make_grid(9, 6);
        SorSweeper sw(g, b, s);
        Field u(g, b), w(g, b), mix(g, b);
        testref::fill_random(u, rng);
        testref::fill_random(w, rng);
        const double a = 0.75, c = -1.25;
        for (std::size_t k = 0; k < mix.values().size(); ++k) {
          mix.values()[k] = a * u.values()[k] + c * w.values()[k];
        }
        sw.sweep(u, v, 1.45);
        sw.sweep(w, v, 1.45);
        sw.sweep(mix, v, 1.45);
        double diff = 0.0, scale = 0.0;
        for (std::size_t k = 0; k < mix.values().size(); ++k) {
          const double expect = a * u.values()[k] + c * w.values()[k];
          diff = std::max(diff, std::abs(mix.values()[k] - expect));
          scale = std::max(scale, std::abs(expect));
        }
        CHECK(diff <= 1e-12 * scale);
      }
    }
  }
}

TEST_CASE("dirichlet entries are untouched") {
  std::mt19937_64 rng(17);
  BoundarySet b;
  b.right = EdgeCondition::neumann();
  const GridSpec g = make_grid(6, 6);
  for (SorVariant v : {SorVariant::PointSor, SorVariant::LineSor}) {
    Field f(g, b);
    testref::fill_random(f, rng, true);
    const Field before = f;
    SorSweeper(g, b, Scheme::Hoc).sweep(f, v, 1.3);
    for (int j = 0; j <= g.ny; ++j) {
      for (int i = 0; i <= g.nx; ++i) {
        if (f.is_unknown(i, j)) continue;
        const double now = f.at(i, j), then = before.at(i, j);
        CHECK(std::memcmp(&now, &then, sizeof(double)) == 0);
      }
    }
  }
}

TEST_CASE("point and line SOR reach the zero solution unless a mode grows") {
  for (const BoundarySet& b : testref::boundary_catalogue()) {
    bool growing = false;
    try {
      predict(make_grid(8, 8), b, Scheme::Central2, SorVariant::PointSor);
    } catch (const Error& e) {
      growing = e.kind() == ErrorKind::NonConvergent;
    }
    for (SorVariant v : {SorVariant::PointSor, SorVariant::LineSor}) {
      SolverConfig c;
      c.variant = v;
      c.omega = 1.2;
      c.scheme = Scheme::Hoc;
      const SolveReport r = solve(make_grid(8, 8), b, c);
      CHECK(r.converged != growing);
      CHECK(r.diverged == growing);
      if (r.converged) CHECK(r.final_norm < c.tolerance);
    }
  }
}

TEST_CASE("all-Neumann is rejected before sweeping") {
  BoundarySet b;
  b.left = b.right = b.top = b.bottom = EdgeCondition::neumann();
  try {
    solve(make_grid(5, 5), b, SolverConfig{});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonSolvable);
  }
}

TEST_CASE("growing mode is reported as divergence") {
  BoundarySet b;
  b.left = EdgeCondition::robin(1.0, 0.1);
  b.right = EdgeCondition::robin(1.0, -0.1);
  SolverConfig c;
  c.omega = 1.0;
  const SolveReport r = solve(make_grid(10, 10), b, c);
  CHECK(r.diverged);
  CHECK_FALSE(r.converged);
  CHECK(r.final_norm > kDivergenceNorm);
}

TEST_CASE("cancelled diagonal is an error for point SOR") {
  BoundarySet b;
  b.left = EdgeCondition::robin(1.0, 0.05);
  SolverConfig c;
  CHECK_THROWS_AS(solve(make_grid(10, 10), b, c), Error);
}

TEST_CASE("iteration count follows geometric decay away from the optimum") {
  // Gauss-Seidel on 10x10: rho = cos(pi/10)^2, initial norm 9.
  SolverConfig c;
  c.omega = 1.0;
  const SolveReport r = solve(make_grid(10, 10), BoundarySet{}, c);
  const double rho = std::pow(std::cos(std::numbers::pi / 10.0), 2);
  const double model = std::log(c.tolerance / 9.0) / std::log(rho);
  CHECK(r.converged);
  CHECK(std::abs(r.iterations - model) <= 0.15 * model);
}

TEST_CASE("max_iterations caps the run") {
  SolverConfig c;
  c.omega = 1.5;
  c.max_iterations = 7;
  const SolveReport r = solve(make_grid(10, 10), BoundarySet{}, c);
  CHECK(r.iterations == 7);
  CHECK_FALSE(r.converged);
  CHECK_FALSE(r.diverged);
}

TEST_CASE("right-hand side and Dirichlet data reach a manufactured solution") {
  for (Scheme s : {Scheme::Central2, Scheme::Hoc}) {
    for (SorVariant v : {SorVariant::PointSor, SorVariant::LineSor}) {
      const GridSpec g = make_grid(8, 6);
      const BoundarySet b;
      Field exact(g, b);
      for (int j = 0; j <= g.ny; ++j) {
        for (int i = 0; i <= g.nx; ++i) {
          const double x = i * g.dx, y = j * g.dy;
          exact.at(i, j) = 1.0 + x * x - 0.5 * y + x * y * y;
        }
      }
      const StencilWeights w = weights(s, g.beta);
      std::vector<double> rhs(g.size(), 0.0);
      for (int j = 1; j < g.ny; ++j) {
        for (int i = 1; i < g.nx; ++i) rhs[g.index(i, j)] = testref::equation(exact, b, w, i, j);
      }
      Field f(g, b);
      for (int j = 0; j <= g.ny; ++j) {
        for (int i = 0; i <= g.nx; ++i) f.at(i, j) = f.is_unknown(i, j) ? 0.0 : exact.at(i, j);
      }
      SorSweeper sw(g, b, s);
      sw.set_rhs(rhs);
      for (int it = 0; it < 400; ++it) sw.sweep(f, v, 1.5);
      CHECK(testref::max_abs_diff(f, exact) < 1e-12);
    }
  }
  SorSweeper sw(make_grid(4, 4), BoundarySet{}, Scheme::Central2);
  CHECK_THROWS_AS(sw.set_rhs(std::vector<double>(3)), Error);
}

}
