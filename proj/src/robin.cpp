#include "sorpoisson/robin.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "sorpoisson/error.hpp"

namespace sorp {

namespace {

constexpr double kScanStep = std::numbers::pi / 1024.0;  // per unit of k
constexpr double kBisectTol = 1e-12;

bool near_zero(double x, double scale) { return std::abs(x) <= 1e-12 * std::max(1.0, scale); }

template <class F>
double bisect(F&& f, double lo, double hi) {
  double flo = f(lo);
  for (int it = 0; it < 200 && hi - lo > kBisectTol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Scans (0, k_max) on the fixed mesh and returns every bracketed root in increasing order.
template <class F>
std::vector<double> scan_roots(F&& f, double k_max, bool stop_at_first) {
  std::vector<double> roots;
  const auto steps = static_cast<long>(std::ceil(k_max / kScanStep));
  double prev_k = kScanStep;
  double prev = f(prev_k);
  for (long t = 2; t < steps; ++t) {
    const double k = static_cast<double>(t) * kScanStep;
    const double v = f(k);
    if (prev == 0.0) {
      roots.push_back(prev_k);
      if (stop_at_first) return roots;
    } else if ((v < 0.0) != (prev < 0.0) && v != 0.0) {
      roots.push_back(bisect(f, prev_k, k));
      if (stop_at_first) return roots;
    }
    prev = v;
    prev_k = k;
  }
  return roots;
}

}  // namespace

RobinPair make_robin_pair(const EdgeCondition& low, const EdgeCondition& high, int n_cells) {
  return {low.coef_u, low.coef_du, high.coef_u, high.coef_du, n_cells};
}

std::string to_string(RootBound bound) {
  switch (bound) {
    case RootBound::Zero: return "0";
    case RootBound::One: return "1";
    case RootBound::AtMostOne: return "at most 1";
    case RootBound::AtMostTwo: return "at most 2";
  }
  return "?";
}

int RootClassification::bound_count() const noexcept {
  switch (max_positive_roots) {
    case RootBound::Zero: return 0;
    case RootBound::One:
    case RootBound::AtMostOne: return 1;
    case RootBound::AtMostTwo: return 2;
  }
  return 0;
}

RootClassification classify(double m, double n) {
  if (!std::isfinite(m) || !std::isfinite(n) || 1.0 + 4.0 * m * n < -1e-12) {
    std::ostringstream msg;
    msg << "inadmissible (m, n) = (" << m << ", " << n << "): requires 1 + 4mn >= 0";
    throw Error(ErrorKind::Inadmissible, msg.str());
  }
  RootClassification c{m, n, RootBound::Zero, 0};
  const double slope = m + 1.0;  // f'(0)
  const bool flat = near_zero(slope, std::abs(m));
  if (n > 0.0) {
    if (flat) {
      // Admissibility forces n <= 1/4, so f'''(0) > 0 and k = 0 is an isolated triple root.
      c.max_positive_roots = RootBound::AtMostOne;
      c.analysis_case = 5;
    } else if (slope < 0.0) {
      c.max_positive_roots = RootBound::AtMostTwo;
      c.analysis_case = 4;
    } else {
      c.max_positive_roots = RootBound::One;
      c.analysis_case = 3;
    }
  } else {
    if (flat) {
      c.max_positive_roots = RootBound::Zero;
      c.analysis_case = 5;
    } else if (slope < 0.0) {
      c.max_positive_roots = RootBound::One;
      c.analysis_case = 2;
    } else {
      c.max_positive_roots = RootBound::Zero;
      c.analysis_case = 1;
    }
  }
  return c;
}

double trig_characteristic(const RobinPair& p, double k) {
  const double cells = p.n_cells;
  const double s = cells * std::sin(k / cells);
  return (p.a * p.c + s * s * p.b * p.d) * std::sin(k) + p.det() * s * std::cos(k);
}

double hyper_characteristic(const RobinPair& p, double k) {
  const double cells = p.n_cells;
  const double sh = cells * std::sinh(k / cells);
  return (p.a * p.c - sh * sh * p.b * p.d) * std::sinh(k) + p.det() * sh * std::cosh(k);
}

double hyper_normalized(double m, double n, int n_cells, double k) {
  const double cells = n_cells;
  const double sh = cells * std::sinh(k / cells);
  return (m - n * sh * sh) * std::tanh(k) + sh;
}

double trig_wavenumber(const RobinPair& pair) {
  if (pair.n_cells < 1) throw Error(ErrorKind::InvalidArgument, "n_cells must be positive");
  const double k_max = std::numbers::pi * pair.n_cells;
  const auto roots =
      scan_roots([&](double k) { return trig_characteristic(pair, k); }, k_max, true);
  if (roots.empty()) {
    throw Error(ErrorKind::NoRoot, "trigonometric characteristic equation has no root in (0, pi N)");
  }
  return roots.front();
}

std::optional<double> hyper_wavenumber(const RobinPair& pair) {
  if (pair.n_cells < 1) throw Error(ErrorKind::InvalidArgument, "n_cells must be positive");
  const double cells = pair.n_cells;
  const double det = pair.det();
  const double scale = std::max({std::abs(pair.a * pair.d), std::abs(pair.b * pair.c), 1e-300});
  if (near_zero(det / scale, 0.0)) {
    if (pair.a != 0.0 && pair.b != 0.0 && pair.c != 0.0 && pair.d != 0.0) {
      return cells * std::asinh(std::abs(pair.a / pair.b) / cells);
    }
    return std::nullopt;
  }
  const double m = pair.a * pair.c / det;
  const double n = pair.b * pair.d / det;
  const RootClassification cls = classify(m, n);
  if (cls.max_positive_roots == RootBound::Zero) return std::nullopt;

  // Beyond sh(k) = bound the normalized function keeps the sign of its limit.
  const double t1 = std::tanh(1.0);
  double bound;
  if (n > 0.0) {
    bound = (1.0 / t1 + std::sqrt(1.0 / (t1 * t1) + 4.0 * n * std::abs(m))) / (2.0 * n);
  } else if (n < 0.0) {
    bound = std::sqrt(std::abs(m) / (std::abs(n) * t1));
  } else {
    bound = std::abs(m);
  }
  double k_max = 50.0;
  while (cells * std::sinh(k_max / cells) <= bound && k_max < 700.0 * cells) k_max *= 2.0;
  k_max = std::max(k_max, 1.0) + kScanStep;

  const auto roots =
      scan_roots([&](double k) { return hyper_normalized(m, n, pair.n_cells, k); }, k_max, false);
  if (roots.empty()) return std::nullopt;
  return roots.back();
}

std::string to_string(WavenumberSource source) {
  switch (source) {
    case WavenumberSource::Closed: return "closed-form";
    case WavenumberSource::TrigEquation: return "trigonometric";
    case WavenumberSource::HyperEquation: return "hyperbolic";
    case WavenumberSource::DoubleRootAtZero: return "double-root-at-zero";
  }
  return "?";
}

WavenumberSelection select_wavenumber_detailed(const EdgeCondition& low,
                                               const EdgeCondition& high, int n_cells) {
  const double pi = std::numbers::pi;
  if (!low.is_robin() && !high.is_robin()) {
    const int neumann = (low.is_neumann() ? 1 : 0) + (high.is_neumann() ? 1 : 0);
    switch (neumann) {
      case 0: return {WavenumberMode::trig(pi), WavenumberSource::Closed};
      case 1: return {WavenumberMode::trig(0.5 * pi), WavenumberSource::Closed};
      default: return {WavenumberMode::zero(), WavenumberSource::Closed};
    }
  }
  const RobinPair pair = make_robin_pair(low, high, n_cells);
  if (auto k = hyper_wavenumber(pair)) {
    return {WavenumberMode::hyper(*k), WavenumberSource::HyperEquation};
  }
  const double det = pair.det();
  if (det != 0.0) {
    const double m = pair.a * pair.c / det;
    if (near_zero(m + 1.0, std::abs(m))) {
      return {WavenumberMode::zero(), WavenumberSource::DoubleRootAtZero};
    }
  }
  return {WavenumberMode::trig(trig_wavenumber(pair)), WavenumberSource::TrigEquation};
}

WavenumberMode select_wavenumber(const EdgeCondition& low, const EdgeCondition& high,
                                 int n_cells) {
  return select_wavenumber_detailed(low, high, n_cells).mode;
}

}  // namespace sorp
