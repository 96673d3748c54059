#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "sorpoisson/error.hpp"
#include "sorpoisson/harness.hpp"

using namespace sorp;

TEST_SUITE("harness") {

TEST_CASE("edge parsing") {
  CHECK(parse_edge("dirichlet").is_dirichlet());
  CHECK(parse_edge("Neumann").is_neumann());
  const EdgeCondition r = parse_edge("robin:1,-0.25");
  CHECK(r.is_robin());
  CHECK(r.coef_u == 1.0);
  CHECK(r.coef_du == -0.25);
  CHECK(parse_edge("robin:0,1").is_neumann());
  CHECK_THROWS_AS(parse_edge("robin:1"), Error);
  CHECK_THROWS_AS(parse_edge("robin:a,b"), Error);
  CHECK_THROWS_AS(parse_edge("periodic"), Error);
  CHECK(parse_scheme("hoc") == Scheme::Hoc);
  CHECK(parse_variant("line") == SorVariant::LineSor);
  CHECK_THROWS_AS(parse_variant("block"), Error);
}

TEST_CASE("CSV round trip is exact") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-300.0, 0.0);
  std::vector<SweepRecord> recs;
  for (int k = 0; k < 200; ++k) {
    recs.push_back({1.0 + k * 0.005, k * 37, std::pow(10.0, u(rng)), k % 3 != 0});
  }
  recs.push_back({0.1 + 0.2, 1000000, std::numeric_limits<double>::denorm_min(), false});
  recs.push_back({1.9999999999999998, 1, 1e100, false});
  std::stringstream ss;
  ss << "# comment\n";
  write_csv(ss, recs);
  ss << "# trailer\n";
  CHECK(read_csv(ss) == recs);
}

TEST_CASE("malformed CSV") {
  std::stringstream a("omega,iterations,final_norm,converged\n1.5,10,1e-70\n");
  CHECK_THROWS_AS(read_csv(a), Error);
  std::stringstream b("1.5,x,1e-70,1\n");
  CHECK_THROWS_AS(read_csv(b), Error);
  std::stringstream c("1.5,10,1e-70,2\n");
  CHECK_THROWS_AS(read_csv(c), Error);
}

TEST_CASE("number formatting keeps 17 digits") {
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(1.5) == "1.5");
  CHECK(format_number(std::pow(2.0, -208)) == "2.4308653429145085e-63");
}

TEST_CASE("config validation") {
  ExperimentConfig c;
  c.omega = {1.5, 2.0, 0.005};
  CHECK_THROWS_AS(c.validate(), Error);
  c.omega = {1.5, 1.9, 0.0};
  CHECK_THROWS_AS(c.validate(), Error);
  c.omega = {1.5, 1.9, 0.005};
  c.nx = 2;
  CHECK_THROWS_AS(c.validate(), Error);
}

TEST_CASE("sweeps are deterministic across runs and worker counts") {
  ExperimentConfig c;
  c.nx = 10;
  c.ny = 10;
  c.omega = {1.3, 1.8, 0.05};
  std::ostringstream a, b, d;
  cmd_sweep(c, a);
  cmd_sweep(c, b);
  c.jobs = 3;
  cmd_sweep(c, d);
  CHECK(a.str() == b.str());
  CHECK(a.str() == d.str());
  CHECK(a.str().find("omega,iterations,final_norm,converged\n") != std::string::npos);
  CHECK(a.str().find("# predicted_omega=1.5278640450004206") != std::string::npos);
  CHECK(a.str().find("omega_step=0.050000000000000003") != std::string::npos);
}

TEST_CASE("sweep argmin") {
  const std::vector<SweepRecord> r = {{1.0, 50, 0, true}, {1.1, 20, 0, false}, {1.2, 30, 0, true}, {1.3, 30, 0, true}};
  CHECK(*sweep_argmin(r) == 2);
  CHECK_FALSE(sweep_argmin({{1.0, 5, 1, false}}).has_value());
}

TEST_CASE("non-solvable sweep") {
  ExperimentConfig c;
  c.bcs.left = c.bcs.right = c.bcs.top = c.bcs.bottom = EdgeCondition::neumann();
  std::ostringstream os;
  CHECK_THROWS_AS(cmd_sweep(c, os), Error);
}

TEST_CASE("predict report") {
  ExperimentConfig c;
  c.nx = 10;
  c.ny = 10;
  std::ostringstream os;
  cmd_predict(c, os);
  CHECK(os.str().find("omega_opt: 1.5278640450004206") != std::string::npos);
  c.nx = 10;
  c.ny = 30;
  c.bcs.right = EdgeCondition::neumann();
  std::ostringstream n;
  cmd_predict(c, n);
  CHECK(n.str().find("kx: Trig(1.5707963267948966)") != std::string::npos);
  c.scheme = Scheme::Hoc;
  std::ostringstream h;
  cmd_predict(c, h);
  CHECK(h.str().find("k2: ") != std::string::npos);
  CHECK(h.str().find("(expansion)") != std::string::npos);
}

TEST_CASE("oracle report") {
  ExperimentConfig c;
  c.nx = 6;
  c.ny = 6;
  c.omega = {1.2, 1.5, 0.01};
  std::ostringstream os;
  cmd_oracle(c, os);
  CHECK(os.str().find("omega,spectral_radius\n") != std::string::npos);
  CHECK(os.str().find("# omega_star=1.3") != std::string::npos);
  CHECK(os.str().find("# formula_omega=1.3333333333333") != std::string::npos);
  c.nx = c.ny = 80;
  std::ostringstream big;
  CHECK_THROWS_AS(cmd_oracle(c, big), Error);
}

TEST_CASE("robin roots report") {
  std::ostringstream os;
  cmd_robin_roots({1, -0.25, 1, 1, 30}, os);
  const std::string s = os.str();
  CHECK(s.find("ad-bc: 1.25") != std::string::npos);
  CHECK(s.find("m: 0.80000000000000004") != std::string::npos);
  CHECK(s.find("equation: trigonometric") != std::string::npos);
  CHECK(s.find("k: 1.70073") != std::string::npos);
  std::ostringstream bad;
  CHECK_THROWS_AS(cmd_robin_roots({0, 0, 1, 1, 30}, bad), Error);
}

}
