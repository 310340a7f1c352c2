#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "gibbs/errors.hpp"
#include "gibbs/spectral.hpp"

namespace gibbs {

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  for (double v : values_) {
    if (!std::isfinite(v)) throw NumericError("spectrum contains a non-finite value");
  }
  std::sort(values_.begin(), values_.end(), std::greater<>());
}

double zero_eigenvalue_tolerance(const Spectrum& spectrum) {
  return 1e-8 * std::max(1.0, spectrum.empty() ? 0.0 : std::abs(spectrum.largest()));
}

namespace {

// Reduces the lower triangle of `a` (n x n, row-major, destroyed) to
// tridiagonal form with Householder reflections H = I - beta v v^T applied
// from both sides.
void householder_tridiagonalize(std::vector<double>& a, std::size_t n, std::vector<double>& diag,
                                std::vector<double>& offdiag) {
  diag.assign(n, 0.0);
  offdiag.assign(n > 0 ? n - 1 : 0, 0.0);
  std::vector<double> v(n);
  std::vector<double> p(n);

  for (std::size_t k = 0; k + 2 < n; ++k) {
    diag[k] = a[k * n + k];
    const std::size_t m = n - k - 1;
    const std::size_t base = k + 1;

    double scale = 0.0;
    for (std::size_t i = 0; i < m; ++i) scale = std::max(scale, std::abs(a[(base + i) * n + k]));
    if (scale == 0.0) {
      offdiag[k] = 0.0;
      continue;
    }
    double sigma = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      v[i] = a[(base + i) * n + k] / scale;
      sigma += v[i] * v[i];
    }
    const double xnorm = std::sqrt(sigma);
    const double x0 = v[0];
    const double alpha = x0 >= 0.0 ? -xnorm : xnorm;
    v[0] = x0 - alpha;
    const double beta = 1.0 / (xnorm * (xnorm + std::abs(x0)));
    offdiag[k] = alpha * scale;

    // p = beta * A22 v, reading the lower triangle only.
    std::fill_n(p.begin(), m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      const double* row = &a[(base + i) * n + base];
      const double vi = v[i];
      double* pp = p.data();
      const double* vv = v.data();
      double s = 0.0;
#pragma omp simd reduction(+ : s)
      for (std::size_t j = 0; j < i; ++j) {
        s += row[j] * vv[j];
        pp[j] += row[j] * vi;
      }
      p[i] += s + row[i] * vi;
    }
    double pv = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      p[i] *= beta;
      pv += p[i] * v[i];
    }
    const double half_k = 0.5 * beta * pv;
    for (std::size_t i = 0; i < m; ++i) p[i] -= half_k * v[i];  // p becomes w

    // A22 -= v w^T + w v^T on the lower triangle.
    for (std::size_t i = 0; i < m; ++i) {
      double* row = &a[(base + i) * n + base];
      const double vi = v[i];
      const double wi = p[i];
      const double* vv = v.data();
      const double* ww = p.data();
#pragma omp simd
      for (std::size_t j = 0; j <= i; ++j) row[j] -= vi * ww[j] + wi * vv[j];
    }
  }
  if (n >= 2) {
    diag[n - 2] = a[(n - 2) * n + (n - 2)];
    offdiag[n - 2] = a[(n - 1) * n + (n - 2)];
  }
  if (n >= 1) diag[n - 1] = a[(n - 1) * n + (n - 1)];
}

}  // namespace

std::vector<double> tridiagonal_eigenvalues(std::vector<double> d, std::vector<double> offdiag,
                                            const EigenOptions& options) {
  const std::size_t n = d.size();
  if (n == 0) return d;
  if (offdiag.size() + 1 != n) throw DomainError("tridiagonal: offdiag must have n-1 entries");
  std::vector<double> e(n, 0.0);
  std::copy(offdiag.begin(), offdiag.end(), e.begin());

  double anorm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double left = i > 0 ? std::abs(e[i - 1]) : 0.0;
    anorm = std::max(anorm, std::abs(d[i]) + std::abs(e[i]) + left);
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double absolute_floor = std::max(options.tol, 0.0) * anorm;

  for (std::size_t l = 0; l < n; ++l) {
    int iterations = 0;
    std::size_t m = l;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd || std::abs(e[m]) <= absolute_floor) break;
      }
      if (m != l) {
        if (iterations++ == options.max_iterations_per_eigenvalue) {
          throw NumericError("QL iteration did not converge for eigenvalue " + std::to_string(l));
        }
        // Shift: eigenvalue of the leading 2x2 block closer to d[l].
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0;
        double c = 1.0;
        double p = 0.0;
        bool underflow = false;
        for (std::size_t i = m; i-- > l;) {
          const double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
  return d;
}

Spectrum eigenvalues_sym(const SymMatrix& m, const EigenOptions& options) {
  const std::size_t n = m.order();
  if (n == 0) throw DomainError("eigenvalues_sym: empty matrix");
  if (n > options.dense_cap) {
    throw ResourceError("matrix order " + std::to_string(n) + " exceeds dense cap " +
                        std::to_string(options.dense_cap));
  }
  std::vector<double> work(m.values().begin(), m.values().end());
  for (double x : work) {
    if (!std::isfinite(x)) throw NumericError("matrix contains a non-finite entry");
  }
  std::vector<double> diag;
  std::vector<double> offdiag;
  householder_tridiagonalize(work, n, diag, offdiag);
  work = {};
  return Spectrum(tridiagonal_eigenvalues(std::move(diag), std::move(offdiag), options));
}

}  // namespace gibbs
