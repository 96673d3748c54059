#include "sorpoisson/tridiagonal.hpp"

#include <cmath>

#include "sorpoisson/error.hpp"

namespace sorp {

namespace {
constexpr double kPivotFloor = 1e-300;

[[noreturn]] void singular(std::size_t row) {
  throw Error(ErrorKind::SingularSystem,
              "tridiagonal pivot vanished at row " + std::to_string(row));
}
}  // namespace

void tridiagonal_solve_into(std::span<const double> lower, std::span<const double> diag,
                            std::span<const double> upper, std::span<const double> rhs,
                            std::span<double> x, std::span<double> scratch) {
  const std::size_t n = diag.size();
  if (n == 0 || lower.size() != n || upper.size() != n || rhs.size() != n || x.size() < n ||
      scratch.size() < n) {
    throw Error(ErrorKind::InvalidArgument, "tridiagonal_solve: inconsistent vector lengths");
  }
  // scratch holds the modified super-diagonal, x the modified right-hand side.
  double pivot = diag[0];
  if (!(std::abs(pivot) >= kPivotFloor)) singular(0);
  scratch[0] = upper[0] / pivot;
  x[0] = rhs[0] / pivot;
  for (std::size_t k = 1; k < n; ++k) {
    pivot = diag[k] - lower[k] * scratch[k - 1];
    if (!(std::abs(pivot) >= kPivotFloor)) singular(k);
    scratch[k] = upper[k] / pivot;
    x[k] = (rhs[k] - lower[k] * x[k - 1]) / pivot;
  }
  for (std::size_t k = n - 1; k-- > 0;) x[k] -= scratch[k] * x[k + 1];
}

std::vector<double> tridiagonal_solve(std::span<const double> lower,
                                      std::span<const double> diag,
                                      std::span<const double> upper,
                                      std::span<const double> rhs) {
  std::vector<double> x(diag.size());
  std::vector<double> scratch(diag.size());
  tridiagonal_solve_into(lower, diag, upper, rhs, x, scratch);
  return x;
}

}  // namespace sorp
