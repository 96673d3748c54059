#include "sorpoisson/wavenumber.hpp"

#include <cmath>
#include <sstream>

#include "sorpoisson/error.hpp"

namespace sorp {

WavenumberMode WavenumberMode::trig(double k) {
  if (!(k >= 0.0)) throw Error(ErrorKind::InvalidMode, "trigonometric wavenumber must be >= 0");
  return {ModeKind::Trig, k};
}

WavenumberMode WavenumberMode::hyper(double k) {
  if (!(k > 0.0)) throw Error(ErrorKind::InvalidMode, "hyperbolic wavenumber must be > 0");
  return {ModeKind::Hyper, k};
}

double WavenumberMode::factor(double spacing) const noexcept {
  switch (kind) {
    case ModeKind::Trig: return std::cos(k * spacing);
    case ModeKind::Hyper: return std::cosh(k * spacing);
    case ModeKind::Zero: return 1.0;
  }
  return 1.0;
}

double WavenumberMode::signed_k2() const noexcept {
  return kind == ModeKind::Hyper ? -k * k : k * k;
}

std::string to_string(const WavenumberMode& mode) {
  std::ostringstream s;
  s.precision(17);
  switch (mode.kind) {
    case ModeKind::Trig: s << "Trig(" << mode.k << ")"; break;
    case ModeKind::Hyper: s << "Hyper(" << mode.k << ")"; break;
    case ModeKind::Zero: s << "Zero"; break;
  }
  return s.str();
}

}  // namespace sorp
