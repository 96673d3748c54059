#pragma once

#include <string>

namespace sorp {

enum class ModeKind { Trig, Hyper, Zero };

/// Separable mode along one axis: sin/cos (Trig), sinh (Hyper) or constant (Zero).
struct WavenumberMode {
  ModeKind kind = ModeKind::Trig;
  double k = 0.0;

  static WavenumberMode trig(double k);
  static WavenumberMode hyper(double k);
  static WavenumberMode zero() { return {ModeKind::Zero, 0.0}; }

  /// cos(k h), cosh(k h) or 1.
  double factor(double spacing) const noexcept;
  /// k^2 with the sign flipped for hyperbolic modes.
  double signed_k2() const noexcept;

  friend bool operator==(const WavenumberMode&, const WavenumberMode&) = default;
};

std::string to_string(const WavenumberMode& mode);

}  // namespace sorp
