#pragma once

#include <cstddef>
#include <string>

namespace sorp {

/// Instruction-set variant for the row kernels. Auto picks the widest one the CPU supports.
enum class KernelIsa { Auto, Scalar, Avx2 };

std::string to_string(KernelIsa isa);
KernelIsa parse_kernel_isa(const std::string& name);

/// Weights of the neighbours that live outside the row being updated.
struct OffRowWeights {
  double south = 0.0;
  double north = 0.0;
  double south_west = 0.0;
  double south_east = 0.0;
  double north_west = 0.0;
  double north_east = 0.0;
  bool corners = false;
};

/// Weights of the neighbours inside the row (the tridiagonal part).
struct InRowWeights {
  double west = 0.0;
  double center = 0.0;
  double east = 0.0;
};

// Row kernels. Pointers address the first column handled; the corner and in-row terms
// read one element to either side, so callers must keep [-1, n] addressable.
//
// offrow_sum:  out[k] = S s[k] + N n[k] (+ SW s[k-1] + SE s[k+1] + NW n[k-1] + NE n[k+1])
//                       - rhs[k]
// line_rhs:    out[k] = (1 - omega) (W r[k-1] + C r[k] + E r[k+1]) - omega offrow[k]
// sum_squares: sum of x[k]^2
//
// Every variant evaluates each element with the same operation order as the scalar
// reference, so the elementwise kernels agree bit-for-bit; sum_squares differs only by
// reduction order.
struct KernelSet {
  KernelIsa isa;
  void (*offrow_sum)(const OffRowWeights& w, const double* south, const double* north,
                     const double* rhs, double* out, std::size_t n);
  void (*line_rhs)(const InRowWeights& w, double omega, const double* row,
                   const double* offrow, double* out, std::size_t n);
  double (*sum_squares)(const double* x, std::size_t n);
};

bool cpu_has_avx2() noexcept;

/// Resolves Auto and returns the kernel table. Requesting Avx2 on a CPU without it throws.
const KernelSet& kernel_set(KernelIsa isa);

namespace kernels {
const KernelSet& scalar() noexcept;
#if defined(SORP_HAVE_AVX2_KERNELS)
const KernelSet& avx2() noexcept;
#endif
}  // namespace kernels

}  // namespace sorp
