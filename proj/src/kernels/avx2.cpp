// AVX2 row kernels, four doubles per lane group. Built with -mavx2 only (no FMA) so each
// element follows the scalar reference's rounding exactly.

#include <immintrin.h>

#include "sorpoisson/kernels.hpp"

namespace sorp::kernels {
namespace {

void offrow_sum(const OffRowWeights& w, const double* s, const double* n, const double* rhs,
                double* out, std::size_t count) {
  const __m256d ws = _mm256_set1_pd(w.south);
  const __m256d wn = _mm256_set1_pd(w.north);
  std::size_t k = 0;
  if (w.corners) {
    const __m256d wsw = _mm256_set1_pd(w.south_west);
    const __m256d wse = _mm256_set1_pd(w.south_east);
    const __m256d wnw = _mm256_set1_pd(w.north_west);
    const __m256d wne = _mm256_set1_pd(w.north_east);
    for (; k + 4 <= count; k += 4) {
      __m256d t = _mm256_mul_pd(ws, _mm256_loadu_pd(s + k));
      t = _mm256_add_pd(t, _mm256_mul_pd(wn, _mm256_loadu_pd(n + k)));
      t = _mm256_add_pd(t, _mm256_mul_pd(wsw, _mm256_loadu_pd(s + k - 1)));
      t = _mm256_add_pd(t, _mm256_mul_pd(wse, _mm256_loadu_pd(s + k + 1)));
      t = _mm256_add_pd(t, _mm256_mul_pd(wnw, _mm256_loadu_pd(n + k - 1)));
      t = _mm256_add_pd(t, _mm256_mul_pd(wne, _mm256_loadu_pd(n + k + 1)));
      _mm256_storeu_pd(out + k, _mm256_sub_pd(t, _mm256_loadu_pd(rhs + k)));
    }
  } else {
    for (; k + 4 <= count; k += 4) {
      __m256d t = _mm256_mul_pd(ws, _mm256_loadu_pd(s + k));
      t = _mm256_add_pd(t, _mm256_mul_pd(wn, _mm256_loadu_pd(n + k)));
      _mm256_storeu_pd(out + k, _mm256_sub_pd(t, _mm256_loadu_pd(rhs + k)));
    }
  }
  for (; k < count; ++k) {
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
  const __m256d ww = _mm256_set1_pd(w.west);
  const __m256d wc = _mm256_set1_pd(w.center);
  const __m256d we = _mm256_set1_pd(w.east);
  const __m256d vkeep = _mm256_set1_pd(keep);
  const __m256d vomega = _mm256_set1_pd(omega);
  std::size_t k = 0;
  for (; k + 4 <= count; k += 4) {
    __m256d t = _mm256_mul_pd(ww, _mm256_loadu_pd(r + k - 1));
    t = _mm256_add_pd(t, _mm256_mul_pd(wc, _mm256_loadu_pd(r + k)));
    t = _mm256_add_pd(t, _mm256_mul_pd(we, _mm256_loadu_pd(r + k + 1)));
    const __m256d relaxed = _mm256_mul_pd(vkeep, t);
    const __m256d coupled = _mm256_mul_pd(vomega, _mm256_loadu_pd(offrow + k));
    _mm256_storeu_pd(out + k, _mm256_sub_pd(relaxed, coupled));
  }
  for (; k < count; ++k) {
    double t = w.west * r[k - 1];
    t = t + w.center * r[k];
    t = t + w.east * r[k + 1];
    out[k] = keep * t - omega * offrow[k];
  }
}

double sum_squares(const double* x, std::size_t count) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= count; k += 4) {
    const __m256d v = _mm256_loadu_pd(x + k);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; k < count; ++k) total += x[k] * x[k];
  return total;
}

constexpr KernelSet kAvx2{KernelIsa::Avx2, &offrow_sum, &line_rhs, &sum_squares};

}  // namespace

const KernelSet& avx2() noexcept { return kAvx2; }

}  // namespace sorp::kernels
