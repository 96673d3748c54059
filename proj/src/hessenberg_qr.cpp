#include "sorpoisson/hessenberg_qr.hpp"

#include <algorithm>
#include <cmath>

#include "sorpoisson/error.hpp"

namespace sorp::linalg {

namespace {

// Total QR steps allowed per matrix row. Clusters from large Jordan blocks (line
// Gauss-Seidel has one at zero) need far more steps than isolated eigenvalues.
constexpr int kIterationsPerRow = 40;

// Diagonal similarity scaling by powers of two so row and column norms are comparable.
void balance(DenseMatrix& a) {
  constexpr double radix = 2.0;
  constexpr double sqrdx = radix * radix;
  const std::size_t n = a.n;
  bool done = false;
  while (!done) {
    done = true;
    for (std::size_t i = 0; i < n; ++i) {
      double r = 0.0;
      double c = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= radix;
        c *= sqrdx;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= sqrdx;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        const double inv = 1.0 / f;
        for (std::size_t j = 0; j < n; ++j) a(i, j) *= inv;
        for (std::size_t j = 0; j < n; ++j) a(j, i) *= f;
      }
    }
  }
}

void reduce_to_hessenberg(DenseMatrix& a) {
  const std::size_t n = a.n;
  if (n < 3) return;
  std::vector<double> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double norm = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) norm += a(i, k) * a(i, k);
    norm = std::sqrt(norm);
    if (norm == 0.0) continue;
    const double alpha = a(k + 1, k) > 0.0 ? -norm : norm;
    std::fill(v.begin(), v.end(), 0.0);
    for (std::size_t i = k + 1; i < n; ++i) v[i] = a(i, k);
    v[k + 1] -= alpha;
    double vv = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vv += v[i] * v[i];
    if (vv == 0.0) continue;
    const double scale = 2.0 / vv;
    for (std::size_t j = k; j < n; ++j) {
      double s = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) s += v[i] * a(i, j);
      s *= scale;
      for (std::size_t i = k + 1; i < n; ++i) a(i, j) -= s * v[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) s += a(i, j) * v[j];
      s *= scale;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= s * v[j];
    }
    for (std::size_t i = k + 2; i < n; ++i) a(i, k) = 0.0;
  }
}

double sign_of(double magnitude, double sign) {
  return sign >= 0.0 ? std::abs(magnitude) : -std::abs(magnitude);
}

}  // namespace

std::vector<std::complex<double>> hessenberg_eigenvalues(DenseMatrix h) {
  const int n = static_cast<int>(h.n);
  std::vector<std::complex<double>> out(static_cast<std::size_t>(n));
  if (n == 0) return out;
  // 1-based view keeps the deflation bookkeeping readable.
  auto A = [&](int r, int c) -> double& {
    return h.data[static_cast<std::size_t>(r - 1) * h.n + static_cast<std::size_t>(c - 1)];
  };
  auto put = [&](int idx, double re, double im) {
    out[static_cast<std::size_t>(idx - 1)] = {re, im};
  };

  double anorm = 0.0;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::max(i - 1, 1); j <= n; ++j) anorm += std::abs(A(i, j));
  }

  int nn = n;
  long budget = static_cast<long>(kIterationsPerRow) * n;
  double t = 0.0;  // accumulated exceptional shifts
  while (nn >= 1) {
    int its = 0;
    int l = 1;
    do {
      for (l = nn; l >= 2; --l) {
        double s = std::abs(A(l - 1, l - 1)) + std::abs(A(l, l));
        if (s == 0.0) s = anorm;
        if (std::abs(A(l, l - 1)) + s == s) {
          A(l, l - 1) = 0.0;
          break;
        }
      }
      double x = A(nn, nn);
      if (l == nn) {
        put(nn, x + t, 0.0);
        --nn;
        break;
      }
      double y = A(nn - 1, nn - 1);
      double w = A(nn, nn - 1) * A(nn - 1, nn);
      if (l == nn - 1) {
        double p = 0.5 * (y - x);
        double q = p * p + w;
        double z = std::sqrt(std::abs(q));
        x += t;
        if (q >= 0.0) {
          z = p + sign_of(z, p);
          const double hi = x + z;
          const double lo = (z != 0.0) ? x - w / z : hi;
          put(nn - 1, hi, 0.0);
          put(nn, lo, 0.0);
        } else {
          put(nn - 1, x + p, -z);
          put(nn, x + p, z);
        }
        nn -= 2;
        break;
      }
      if (--budget < 0) {
        throw Error(ErrorKind::EigenFailure, "QR iteration failed to deflate an eigenvalue");
      }
      if (its > 0 && its % 10 == 0) {
        t += x;
        for (int i = 1; i <= nn; ++i) A(i, i) -= x;
        const double s = std::abs(A(nn, nn - 1)) + std::abs(A(nn - 1, nn - 2));
        y = x = 0.75 * s;
        w = -0.4375 * s * s;
      }
      ++its;
      int m = nn - 2;
      double p = 0.0, q = 0.0, r = 0.0, z = 0.0;
      for (; m >= l; --m) {
        z = A(m, m);
        r = x - z;
        double s = y - z;
        p = (r * s - w) / A(m + 1, m) + A(m, m + 1);
        q = A(m + 1, m + 1) - z - r - s;
        r = A(m + 2, m + 1);
        s = std::abs(p) + std::abs(q) + std::abs(r);
        p /= s;
        q /= s;
        r /= s;
        if (m == l) break;
        const double u = std::abs(A(m, m - 1)) * (std::abs(q) + std::abs(r));
        const double v = std::abs(p) * (std::abs(A(m - 1, m - 1)) + std::abs(z) +
                                        std::abs(A(m + 1, m + 1)));
        if (u + v == v) break;
      }
      for (int i = m + 2; i <= nn; ++i) {
        A(i, i - 2) = 0.0;
        if (i != m + 2) A(i, i - 3) = 0.0;
      }
      for (int k = m; k <= nn - 1; ++k) {
        if (k != m) {
          p = A(k, k - 1);
          q = A(k + 1, k - 1);
          r = (k != nn - 1) ? A(k + 2, k - 1) : 0.0;
          x = std::abs(p) + std::abs(q) + std::abs(r);
          if (x != 0.0) {
            p /= x;
            q /= x;
            r /= x;
          }
        }
        const double s = sign_of(std::sqrt(p * p + q * q + r * r), p);
        if (s == 0.0) continue;
        if (k == m) {
          if (l != m) A(k, k - 1) = -A(k, k - 1);
        } else {
          A(k, k - 1) = -s * x;
        }
        p += s;
        x = p / s;
        y = q / s;
        z = r / s;
        q /= p;
        r /= p;
        for (int j = k; j <= nn; ++j) {
          p = A(k, j) + q * A(k + 1, j);
          if (k != nn - 1) {
            p += r * A(k + 2, j);
            A(k + 2, j) -= p * z;
          }
          A(k + 1, j) -= p * y;
          A(k, j) -= p * x;
        }
        const int mmin = std::min(nn, k + 3);
        for (int i = l; i <= mmin; ++i) {
          p = x * A(i, k) + y * A(i, k + 1);
          if (k != nn - 1) {
            p += z * A(i, k + 2);
            A(i, k + 2) -= p * r;
          }
          A(i, k + 1) -= p * q;
          A(i, k) -= p;
        }
      }
    } while (l < nn - 1);
  }
  return out;
}

std::vector<std::complex<double>> eigenvalues(DenseMatrix a) {
  for (double v : a.data) {
    if (!std::isfinite(v)) throw Error(ErrorKind::EigenFailure, "matrix has non-finite entries");
  }
  balance(a);
  reduce_to_hessenberg(a);
  return hessenberg_eigenvalues(std::move(a));
}

double spectral_radius(const DenseMatrix& a) {
  double rho = 0.0;
  for (const auto& lambda : eigenvalues(a)) rho = std::max(rho, std::abs(lambda));
  return rho;
}

}  // namespace sorp::linalg
