#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace sorp::linalg {

/// Dense row-major square matrix.
struct DenseMatrix {
  std::size_t n = 0;
  std::vector<double> data;

  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t size) : n(size), data(size * size, 0.0) {}

  double& operator()(std::size_t r, std::size_t c) noexcept { return data[r * n + c]; }
  double operator()(std::size_t r, std::size_t c) const noexcept { return data[r * n + c]; }
};

/// All eigenvalues of a general real matrix: balancing, Householder reduction to upper
/// Hessenberg form, then Francis double-shift QR. Throws EigenFailure if the QR
/// steps exceed 40 per row in total.
std::vector<std::complex<double>> eigenvalues(DenseMatrix a);

/// Eigenvalues of a matrix that is already upper Hessenberg (entries below the
/// subdiagonal are ignored).
std::vector<std::complex<double>> hessenberg_eigenvalues(DenseMatrix h);

double spectral_radius(const DenseMatrix& a);

}  // namespace sorp::linalg
