#include <cmath>
#include <limits>
#include <numbers>

#include "gibbs/errors.hpp"
#include "gibbs/spectral.hpp"

namespace gibbs {

namespace {

constexpr double kBranchPoint = -1.0 / std::numbers::e;

// Halley's method on f(w) = w e^w - x.
double halley(double x, double w) {
  const double eps = std::numeric_limits<double>::epsilon();
  double previous = HUGE_VAL;
  for (int iter = 0; iter < 100; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    if (f == 0.0) return w;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) return w;  // stationary at the branch point
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::abs(step) <= 4.0 * eps * std::max(1.0, std::abs(w))) return w;
    // Near -1/e the residual is rounding noise amplified by 1 / |w + 1|;
    // once the steps stop shrinking we are at that floor.
    if (std::abs(step) >= previous && std::abs(step) < 1e-8 * std::max(1.0, std::abs(w))) {
      return w;
    }
    previous = std::abs(step);
  }
  throw NumericError("lambert_w: Halley iteration did not converge");
}

}  // namespace

double lambert_w(int branch, double x) {
  if (branch != 0 && branch != -1) throw DomainError("lambert_w: branch must be 0 or -1");
  if (!std::isfinite(x) && !(branch == 0 && x == std::numeric_limits<double>::infinity())) {
    throw DomainError("lambert_w: non-finite argument");
  }
  // Accept -1/e rounded either way.
  const double below = x - kBranchPoint;
  if (below < -4.0 * std::numeric_limits<double>::epsilon() * -kBranchPoint) {
    throw DomainError("lambert_w: argument below -1/e");
  }
  if (branch == -1 && x >= 0.0) throw DomainError("lambert_w: branch -1 needs x < 0");
  if (below <= 0.0) return -1.0;
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;

  // Near the branch point both branches follow the series in
  // p = +-sqrt(2 (1 + e x)).
  const double p2 = 2.0 * (1.0 + std::numbers::e * x);
  double w0;
  if (p2 < 0.25) {
    const double p = (branch == 0 ? 1.0 : -1.0) * std::sqrt(std::max(p2, 0.0));
    w0 = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0)));
  } else if (branch == 0) {
    if (x < 1.0) {
      w0 = x;
    } else if (x < std::numbers::e) {
      w0 = 0.5 + 0.25 * (x - 1.0);
    } else {
      const double lx = std::log(x);
      w0 = lx - std::log(lx);
    }
  } else {
    const double l1 = std::log(-x);
    w0 = l1 - std::log(-l1);
  }
  return halley(x, w0);
}

}  // namespace gibbs
