#include "sorpoisson/omega.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sorpoisson/error.hpp"
#include "sorpoisson/hessenberg_qr.hpp"

namespace sorp {

double r_point_2nd(const WavenumberMode& kx, const WavenumberMode& ky, const GridSpec& grid) {
  const double b2 = grid.beta * grid.beta;
  return (kx.factor(grid.dx) + b2 * ky.factor(grid.dy)) / (1.0 + b2);
}

double r_line_2nd(const WavenumberMode& kx, const WavenumberMode& ky, const GridSpec& grid) {
  const double b2 = grid.beta * grid.beta;
  const double denom = 1.0 + b2 - kx.factor(grid.dx);
  if (!(denom > 0.0)) {
    throw Error(ErrorKind::InvalidMode, "line-SOR r denominator is not positive for " + to_string(kx));
  }
  return b2 * ky.factor(grid.dy) / denom;
}

double r_line_hoc(const WavenumberMode& kx, const WavenumberMode& ky, const GridSpec& grid) {
  const double b2 = grid.beta * grid.beta;
  const double cx = kx.factor(grid.dx);
  const double denom = 5.0 * (1.0 + b2) - (5.0 - b2) * cx;
  if (std::abs(denom) < 1e-14) {
    throw Error(ErrorKind::InvalidMode, "compact line-SOR r denominator vanishes for " + to_string(kx));
  }
  return (5.0 * b2 - 1.0 + (1.0 + b2) * cx) / denom * ky.factor(grid.dy);
}

OmegaPrediction omega_from_r(double r) {
  if (!std::isfinite(r) || std::abs(r) >= 1.0) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "r = " << r << " gives no convergent relaxation parameter (|r| must be < 1)";
    throw Error(ErrorKind::NonConvergent, msg.str());
  }
  OmegaPrediction out;
  out.omega_opt = 2.0 / (1.0 + std::sqrt(1.0 - r * r));
  out.predicted_spectral_radius = out.omega_opt - 1.0;
  return out;
}

HocConstants hoc_constants(const WavenumberMode& kx, const WavenumberMode& ky,
                           const GridSpec& grid) {
  HocConstants k;
  const double b2 = grid.beta * grid.beta;
  k.h = grid.dx;
  k.c1 = (5.0 - b2) / (10.0 * (1.0 + b2));
  k.c2 = 0.8 - 2.0 * k.c1;
  k.p = kx.factor(grid.dx);
  k.q = ky.factor(grid.dy);

  const double c1 = k.c1;
  const double delta2 = 0.8 * (1.0 + 8.0 * c1) * (kx.signed_k2() + ky.signed_k2());
  if (!(delta2 >= 0.0)) {
    throw Error(ErrorKind::FormulaDomain, "delta(kx, ky)^2 is negative for the given modes");
  }
  k.delta_kk = std::sqrt(delta2);
  // sign(c1) is taken as + at c1 = 0.
  const double factor =
      c1 >= 0.0 ? (1.0 + 10.0 * c1) / std::sqrt(84.0 * c1 * c1 + 20.0 * c1 + 1.0) : 1.0;
  k.k1 = k.delta_kk * factor;

  double r2 = k.k1 * k.k1 - delta2;
  if (r2 < 0.0) {
    if (r2 < -1e-12 * std::max(1.0, delta2)) {
      throw Error(ErrorKind::FormulaDomain, "k1^2 < delta^2: real-root branch is empty");
    }
    r2 = 0.0;
  }
  k.R = std::sqrt(r2);

  const double p = k.p;
  const double q = k.q;
  const double c2 = k.c2;
  k.disc = (1.0 + 20.0 * c1 * c2) * q * q + 4.0 * c1 * c1 * p * p * q * q + 100.0 * c1 * c1;
  if (!(k.disc > 0.0)) throw Error(ErrorKind::FormulaDomain, "Delta' is not positive");
  if (p == 0.0) throw Error(ErrorKind::FormulaDomain, "cos(kx dx) = 0 makes D undefined");
  const double root_disc = std::sqrt(k.disc);
  const double sign_c1 = c1 >= 0.0 ? 1.0 : -1.0;

  k.B = 0.25 - c1 * c1 * p * p * q * q / k.disc;
  k.A = 0.5 - std::abs(c1) * p * q / root_disc;
  k.D = 0.5 * (k.B + sign_c1 * ((2.0 * c1 * p * p + 5.0 * c2) * k.B * q + c1 * p * p * q) /
                         (p * root_disc));
  if (k.A == 0.0 || k.R + k.k1 == 0.0) {
    throw Error(ErrorKind::FormulaDomain, "second-order coefficient is singular");
  }
  k.k2 = -k.k1 * k.k1 / (2.0 * k.A) * (k.R * k.A * k.A + k.A * k.k1 + 2.0 * k.R * k.D) /
         (k.R + k.k1);

  k.beta_m = k.A * k.k1;
  k.gamma_m = k.A * k.k2 + k.D * k.k1 * k.k1;
  k.cos_phi1 = q / 5.0 * (2.0 * c1 * p * p + 5.0 * c2) - p / 5.0 * root_disc;
  k.cos_phi2 = q / 5.0 * (2.0 * c1 * p * p + 5.0 * c2) + p / 5.0 * root_disc;
  k.s_m = (1.0 + 10.0 * c1) / (2.0 * (1.0 + 8.0 * c1)) * (k.k1 - k.R);
  return k;
}

OmegaPrediction omega_point_hoc(const WavenumberMode& kx, const WavenumberMode& ky,
                                const GridSpec& grid) {
  const HocConstants k = hoc_constants(kx, ky, grid);
  const double h = k.h;
  OmegaPrediction out;
  out.omega_opt = 2.0 - k.k1 * h - k.k2 * h * h;
  if (!(out.omega_opt > 0.0 && out.omega_opt < 2.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "second-order estimate " << out.omega_opt << " lies outside (0, 2)";
    throw Error(k.k1 == 0.0 ? ErrorKind::NonConvergent : ErrorKind::FormulaDomain, msg.str());
  }
  out.predicted_spectral_radius = 1.0 - 2.0 * k.beta_m * h - 2.0 * k.gamma_m * h * h;
  out.radius_approximate = true;
  return out;
}

double omega_point_hoc_first_order(const WavenumberMode& kx, const WavenumberMode& ky,
                                   const GridSpec& grid) {
  const HocConstants k = hoc_constants(kx, ky, grid);
  return 2.0 - k.k1 * k.h;
}

std::array<std::complex<double>, 4> quartic_roots(double omega, double p, double q, double c1) {
  const double c2 = 0.8 - 2.0 * c1;
  const double w = omega;
  const double a3 = -0.4 * q * w * (c1 * p * p * w + 5.0 * c2);
  const double a2 =
      2.0 * (w - 1.0) + (c2 * c2 * q * q - 4.0 * c1 * c1 * p * p - p * p * q * q / 25.0) * w * w;
  const double a1 = -0.4 * q * w * (c1 * p * p * w + 5.0 * c2 * (w - 1.0));
  const double a0 = (w - 1.0) * (w - 1.0);

  linalg::DenseMatrix companion(4);
  companion(0, 0) = -a3;
  companion(0, 1) = -a2;
  companion(0, 2) = -a1;
  companion(0, 3) = -a0;
  companion(1, 0) = 1.0;
  companion(2, 1) = 1.0;
  companion(3, 2) = 1.0;
  const auto ev = linalg::eigenvalues(companion);
  std::array<std::complex<double>, 4> roots{};
  std::copy(ev.begin(), ev.end(), roots.begin());
  return roots;
}

std::array<double, 4> quartic_moduli(double omega, double p, double q, double c1) {
  const auto roots = quartic_roots(omega, p, q, c1);
  std::array<double, 4> mod{};
  for (std::size_t k = 0; k < 4; ++k) mod[k] = std::norm(roots[k]);
  std::sort(mod.begin(), mod.end(), std::greater<>());
  return mod;
}

double quartic_optimal_omega(double p, double q, double c1) {
  auto largest = [&](double w) { return quartic_moduli(w, p, q, c1)[0]; };
  const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = 1.0;
  double hi = 1.9999;
  double x1 = hi - golden * (hi - lo);
  double x2 = lo + golden * (hi - lo);
  double f1 = largest(x1);
  double f2 = largest(x2);
  while (hi - lo > 1e-10) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - golden * (hi - lo);
      f1 = largest(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + golden * (hi - lo);
      f2 = largest(x2);
    }
  }
  return 0.5 * (lo + hi);
}

PredictionReport predict_detailed(const GridSpec& grid, const BoundarySet& bcs, Scheme scheme,
                                  SorVariant variant) {
  if (!bcs.solvable()) {
    throw Error(ErrorKind::NonConvergent,
                "all edges are Neumann: r = 1 and omega_opt = 2, which does not converge");
  }
  PredictionReport rep;
  rep.scheme = scheme;
  rep.variant = variant;
  rep.x = select_wavenumber_detailed(bcs.left, bcs.right, grid.nx);
  rep.y = select_wavenumber_detailed(bcs.bottom, bcs.top, grid.ny);
  const WavenumberMode& kx = rep.x.mode;
  const WavenumberMode& ky = rep.y.mode;

  if (scheme == Scheme::Hoc && variant == SorVariant::PointSor) {
    rep.hoc = hoc_constants(kx, ky, grid);
    rep.prediction = omega_point_hoc(kx, ky, grid);
    rep.omega_first_order = 2.0 - rep.hoc->k1 * rep.hoc->h;
    rep.omega_quartic = quartic_optimal_omega(rep.hoc->p, rep.hoc->q, rep.hoc->c1);
    return rep;
  }
  if (scheme == Scheme::Central2) {
    rep.r = variant == SorVariant::PointSor ? r_point_2nd(kx, ky, grid) : r_line_2nd(kx, ky, grid);
  } else {
    rep.r = r_line_hoc(kx, ky, grid);
  }
  rep.prediction = omega_from_r(*rep.r);
  return rep;
}

OmegaPrediction predict(const GridSpec& grid, const BoundarySet& bcs, Scheme scheme,
                        SorVariant variant) {
  return predict_detailed(grid, bcs, scheme, variant).prediction;
}

}  // namespace sorp
