#pragma once

#include <span>
#include <vector>

namespace sorp {

/// Thomas algorithm for lower[k] x[k-1] + diag[k] x[k] + upper[k] x[k+1] = rhs[k].
/// lower[0] and upper[n-1] are ignored. Throws SingularSystem when a pivot falls
/// below 1e-300 in magnitude.
std::vector<double> tridiagonal_solve(std::span<const double> lower,
                                      std::span<const double> diag,
                                      std::span<const double> upper,
                                      std::span<const double> rhs);

/// In-place variant used by the line sweep; `scratch` must hold n values.
void tridiagonal_solve_into(std::span<const double> lower, std::span<const double> diag,
                            std::span<const double> upper, std::span<const double> rhs,
                            std::span<double> x, std::span<double> scratch);

}  // namespace sorp
