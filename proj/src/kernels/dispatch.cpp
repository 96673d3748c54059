#include <algorithm>
#include <cctype>

#include "sorpoisson/error.hpp"
#include "sorpoisson/kernels.hpp"

namespace sorp {

std::string to_string(KernelIsa isa) {
  switch (isa) {
    case KernelIsa::Auto: return "auto";
    case KernelIsa::Scalar: return "scalar";
    case KernelIsa::Avx2: return "avx2";
  }
  return "?";
}

KernelIsa parse_kernel_isa(const std::string& name) {
  std::string lower = name;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "auto") return KernelIsa::Auto;
  if (lower == "scalar") return KernelIsa::Scalar;
  if (lower == "avx2") return KernelIsa::Avx2;
  throw Error(ErrorKind::InvalidArgument, "unknown kernel variant '" + name + "'");
}

bool cpu_has_avx2() noexcept {
#if defined(SORP_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

const KernelSet& kernel_set(KernelIsa isa) {
  switch (isa) {
    case KernelIsa::Scalar:
      return kernels::scalar();
    case KernelIsa::Avx2:
#if defined(SORP_HAVE_AVX2_KERNELS)
      if (cpu_has_avx2()) return kernels::avx2();
#endif
      throw Error(ErrorKind::InvalidArgument, "AVX2 kernels requested but not available");
    case KernelIsa::Auto:
      break;
  }
#if defined(SORP_HAVE_AVX2_KERNELS)
  static const bool use_avx2 = cpu_has_avx2();
  if (use_avx2) return kernels::avx2();
#endif
  return kernels::scalar();
}

}  // namespace sorp
