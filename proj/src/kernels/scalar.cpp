// Scalar reference row kernels. The SIMD variants must reproduce these operation by
// operation.

#include "sorpoisson/kernels.hpp"

namespace sorp::kernels {
namespace {

void offrow_sum(const OffRowWeights& w, const double* s, const double* n, const double* rhs,
                double* out, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) {
    double t = w.south * s[k];
    t = t + w.north * n[k];
    if (w.corners) {
      t = t + w.south_west * s[k - 1];
      t = t + w.south_east * s[k + 1];
      t = t + w.north_west * n[k - 1];
      t = t + w.north_east * n[k + 1];
    }
    out[k] = t - rhs[k];
  }
}

void line_rhs(const InRowWeights& w, double omega, const double* r, const double* offrow,
              double* out, std::size_t count) {
  const double keep = 1.0 - omega;
  for (std::size_t k = 0; k < count; ++k) {
    double t = w.west * r[k - 1];
    t = t + w.center * r[k];
    t = t + w.east * r[k + 1];
    out[k] = keep * t - omega * offrow[k];
  }
}

double sum_squares(const double* x, std::size_t count) {
  double acc = 0.0;
  for (std::size_t k = 0; k < count; ++k) acc += x[k] * x[k];
  return acc;
}

constexpr KernelSet kScalar{KernelIsa::Scalar, &offrow_sum, &line_rhs, &sum_squares};

}  // namespace

const KernelSet& scalar() noexcept { return kScalar; }

}  // namespace sorp::kernels
