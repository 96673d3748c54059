#pragma once

#include <array>
#include <complex>
#include <optional>

#include "sorpoisson/grid.hpp"
#include "sorpoisson/robin.hpp"
#include "sorpoisson/solver.hpp"
#include "sorpoisson/stencil.hpp"
#include "sorpoisson/wavenumber.hpp"

namespace sorp {

// r-functions of the quadratic eigenvalue relation  alpha^2 - r omega alpha + omega - 1 = 0.
double r_point_2nd(const WavenumberMode& kx, const WavenumberMode& ky, const GridSpec& grid);
double r_line_2nd(const WavenumberMode& kx, const WavenumberMode& ky, const GridSpec& grid);
double r_line_hoc(const WavenumberMode& kx, const WavenumberMode& ky, const GridSpec& grid);

struct OmegaPrediction {
  double omega_opt = 1.0;
  std::optional<double> predicted_spectral_radius;
  /// Set when the radius comes from a truncated expansion rather than a closed form.
  bool radius_approximate = false;
};

/// omega = 2 / (1 + sqrt(1 - r^2)), radius omega - 1. Throws NonConvergent for r >= 1.
OmegaPrediction omega_from_r(double r);

/// Constants of the perturbation expansion omega = 2 - k1 h - k2 h^2 for point SOR with
/// the compact 9-point scheme (h = dx).
struct HocConstants {
  double c1 = 0.0;
  double c2 = 0.0;
  double p = 1.0;
  double q = 1.0;
  double delta_kk = 0.0;   // delta(kx, ky)
  double disc = 0.0;       // Delta' of the unit-circle limit
  double k1 = 0.0;
  double k2 = 0.0;
  double A = 0.0;
  double B = 0.0;
  double D = 0.0;
  double R = 0.0;          // sqrt(k1^2 - delta^2)
  double beta_m = 0.0;
  double gamma_m = 0.0;
  // Derivation intermediates kept for the debug report.
  double cos_phi1 = 0.0;
  double cos_phi2 = 0.0;
  double s_m = 0.0;
  double h = 0.0;
};

HocConstants hoc_constants(const WavenumberMode& kx, const WavenumberMode& ky,
                           const GridSpec& grid);

/// Second-order estimate 2 - k1 h - k2 h^2 with radius 1 - 2 beta_m h - 2 gamma_m h^2.
OmegaPrediction omega_point_hoc(const WavenumberMode& kx, const WavenumberMode& ky,
                                const GridSpec& grid);

/// First-order estimate 2 - k1 h.
double omega_point_hoc_first_order(const WavenumberMode& kx, const WavenumberMode& ky,
                                   const GridSpec& grid);

/// Roots of the point-SOR/compact-scheme quartic in alpha.
std::array<std::complex<double>, 4> quartic_roots(double omega, double p, double q, double c1);

/// |alpha|^2 of the four quartic roots, descending.
std::array<double, 4> quartic_moduli(double omega, double p, double q, double c1);

/// omega in [1, 2) minimizing the largest quartic modulus (golden-section search).
double quartic_optimal_omega(double p, double q, double c1);

struct PredictionReport {
  Scheme scheme = Scheme::Central2;
  SorVariant variant = SorVariant::PointSor;
  WavenumberSelection x;
  WavenumberSelection y;
  std::optional<double> r;
  std::optional<HocConstants> hoc;
  std::optional<double> omega_first_order;
  std::optional<double> omega_quartic;
  OmegaPrediction prediction;
};

PredictionReport predict_detailed(const GridSpec& grid, const BoundarySet& bcs, Scheme scheme,
                                  SorVariant variant);

OmegaPrediction predict(const GridSpec& grid, const BoundarySet& bcs, Scheme scheme,
                        SorVariant variant);

}  // namespace sorp
