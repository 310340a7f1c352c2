#include <cmath>
#include <numbers>

#include "gibbs/errors.hpp"
#include "gibbs/spectral.hpp"

namespace gibbs {

namespace {

constexpr double kSeriesLimit = 20.0;

void check_arguments(int order, double x) {
  if (order != 0 && order != 1) throw DomainError("bessel_i: order must be 0 or 1");
  if (!(x >= 0.0)) throw DomainError("bessel_i: argument must be non-negative");
}

// sum_k (x/2)^(2k+order) / (k! (k+order)!), all terms positive.
long double power_series(int order, long double x) {
  const long double half = x / 2.0L;
  const long double q = half * half;
  long double term = order == 0 ? 1.0L : half;
  long double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<long double>(k) * static_cast<long double>(k + order));
    sum += term;
    if (term < sum * 1e-21L) break;
  }
  return sum;
}

// Hankel expansion of exp(-x) I_order(x), valid for large x.
double asymptotic_scaled(int order, double x) {
  const double mu = 4.0 * order * order;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 60; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = -term * (mu - odd * odd) / (8.0 * k * x);
    if (std::abs(next) >= std::abs(term)) break;  // series starts to diverge
    term = next;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

}  // namespace

double bessel_i(int order, double x) {
  check_arguments(order, x);
  if (x <= kSeriesLimit) return static_cast<double>(power_series(order, x));
  return std::exp(x) * asymptotic_scaled(order, x);
}

double bessel_i_scaled(int order, double x) {
  check_arguments(order, x);
  if (x <= kSeriesLimit) {
    return static_cast<double>(power_series(order, x) * std::exp(-static_cast<long double>(x)));
  }
  return asymptotic_scaled(order, x);
}

}  // namespace gibbs
