#pragma once

#include <optional>
#include <string>

#include "sorpoisson/grid.hpp"
#include "sorpoisson/wavenumber.hpp"

namespace sorp {

/// Robin coefficients on a pair of opposite edges: (a u + b u') at the low end,
/// (c u + d u') at the high end, on an axis with n_cells cells.
struct RobinPair {
  double a = 1.0;
  double b = 0.0;
  double c = 1.0;
  double d = 0.0;
  int n_cells = 0;

  double det() const noexcept { return a * d - b * c; }
};

/// Encodes two edges as a RobinPair (Dirichlet -> (1, 0), Neumann -> (0, 1)).
RobinPair make_robin_pair(const EdgeCondition& low, const EdgeCondition& high, int n_cells);

/// Upper bound on the number of positive roots of the hyperbolic characteristic equation.
enum class RootBound { Zero, One, AtMostOne, AtMostTwo };

std::string to_string(RootBound bound);

struct RootClassification {
  double m = 0.0;
  double n = 0.0;
  RootBound max_positive_roots = RootBound::Zero;
  /// Case I..V of the root-count analysis (1..5).
  int analysis_case = 0;

  int bound_count() const noexcept;
};

/// m = ac / (ad - bc), n = bd / (ad - bc). Throws Inadmissible if 1 + 4 m n < 0.
RootClassification classify(double m, double n);

/// Left-hand sides of the two characteristic equations.
double trig_characteristic(const RobinPair& pair, double k);
double hyper_characteristic(const RobinPair& pair, double k);
/// Hyperbolic equation divided by (ad - bc) cosh k:
/// (m - n sh(k)^2) tanh(k) + sh(k), with sh(k) = n_cells sinh(k / n_cells).
double hyper_normalized(double m, double n, int n_cells, double k);

/// Smallest root of the trigonometric equation in (0, pi n_cells). Throws NoRoot.
double trig_wavenumber(const RobinPair& pair);

/// Largest positive root of the hyperbolic equation, if any.
std::optional<double> hyper_wavenumber(const RobinPair& pair);

enum class WavenumberSource { Closed, TrigEquation, HyperEquation, DoubleRootAtZero };

std::string to_string(WavenumberSource source);

struct WavenumberSelection {
  WavenumberMode mode;
  WavenumberSource source = WavenumberSource::Closed;
};

/// Extremal mode for one axis given its two edges (low = left/bottom).
WavenumberSelection select_wavenumber_detailed(const EdgeCondition& low,
                                               const EdgeCondition& high, int n_cells);

WavenumberMode select_wavenumber(const EdgeCondition& low, const EdgeCondition& high,
                                 int n_cells);

}  // namespace sorp
