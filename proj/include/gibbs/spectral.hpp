#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gibbs/matrices.hpp"

namespace gibbs {

// Real eigenvalues sorted descending (values()[0] is the largest).
class Spectrum {
 public:
  Spectrum() = default;
  // Sorts descending. Throws NumericError on non-finite input.
  explicit Spectrum(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }
  double largest() const { return values_.front(); }
  double smallest() const { return values_.back(); }

 private:
  std::vector<double> values_;
};

struct EigenOptions {
  // Requested absolute accuracy, relative to the matrix norm. Values below
  // machine epsilon fall back to the usual deflation test.
  double tol = 1e-14;
  std::size_t dense_cap = 4096;
  int max_iterations_per_eigenvalue = 60;
};

// Householder tridiagonalization followed by implicit QL with Wilkinson
// shifts. Eigenvalues only. Throws ResourceError above dense_cap, NumericError
// on non-finite entries or non-convergence.
Spectrum eigenvalues_sym(const SymMatrix& m, const EigenOptions& options = {});

// Tridiagonal stage on its own: diag has n entries, offdiag n-1.
std::vector<double> tridiagonal_eigenvalues(std::vector<double> diag,
                                            std::vector<double> offdiag,
                                            const EigenOptions& options = {});

// Zero-eigenvalue threshold for Laplacian-type spectra: 1e-8 * max(1, lambda_1).
double zero_eigenvalue_tolerance(const Spectrum& spectrum);

// Modified Bessel function of the first kind, order 0 or 1, x >= 0.
double bessel_i(int order, double x);
// exp(-x) * I_order(x); finite for every x >= 0.
double bessel_i_scaled(int order, double x);

// Lambert W, branch 0 (w >= -1, x >= -1/e) or -1 (w <= -1, -1/e <= x < 0).
double lambert_w(int branch, double x);

}  // namespace gibbs
