#include <algorithm>
#include <cmath>
#include <numbers>

#include "gibbs/entropy.hpp"
#include "gibbs/errors.hpp"

namespace gibbs {

double finite_spectrum_entropy_lower_bound(double c1, double c2, double tau, std::size_t n) {
  if (!(c1 >= c2)) throw DomainError("spectral bounds need c1 >= c2");
  if (!(tau > 0.0)) throw DomainError("spectral bound needs tau > 0");
  if (n == 0) throw DomainError("spectral bound needs n >= 1");
  const double inv = 1.0 / tau;
  double deficit = 0.0;
  if (c1 <= inv) {
    deficit = tau * (c1 - c2);
  } else if (c2 >= inv) {
    deficit = tau * c1 * (1.0 - std::exp(tau * (c2 - c1)));
  } else {
    deficit = tau * (c1 - std::min(c1 * std::exp(tau * (c2 - c1)), c2));
  }
  return std::log(static_cast<double>(n)) - deficit;
}

double entropy_lower_bound(const Spectrum& spectrum, double tau, MatrixKind kind) {
  if (spectrum.empty()) throw DomainError("entropy_lower_bound: empty spectrum");
  const double width = spectrum.largest() - spectrum.smallest();
  (void)kind;  // the sign flip for adjacency leaves the width unchanged
  return finite_spectrum_entropy_lower_bound(width, 0.0, tau, spectrum.size());
}

LogSpectrumClassification log_spectrum_classification(double a, double b, double tau) {
  if (!(a > 0.0) || !(b >= a)) throw DomainError("classification needs 0 < a <= b");
  if (!(tau > 0.0)) throw DomainError("classification needs tau > 0");
  using Regime = LogSpectrumClassification::Regime;
  const double boundary = 1.0 / b;
  if (std::abs(tau - boundary) <= 1e-12 * boundary) return {Regime::Boundary, 0.0};
  if (tau < boundary) return {Regime::HighEntropy, 1.0 - tau * b};
  if (tau > 1.0 / a) return {Regime::VanishingEntropy, 0.0};
  return {Regime::Indeterminate, 0.0};
}

ErThresholds er_phase_transition_thresholds(double p0) {
  if (!(p0 > 1.0) || !std::isfinite(p0)) throw DomainError("ER thresholds need p0 > 1");
  const double x = (1.0 - p0) / (std::numbers::e * p0);
  return {lambert_w(0, x) / (1.0 - p0), lambert_w(-1, x) / (1.0 - p0)};
}

std::size_t spectral_component_count(const Spectrum& spectrum, MatrixKind kind) {
  if (kind == MatrixKind::Adjacency) {
    throw DomainError("component count needs a Laplacian-type spectrum");
  }
  const double tol = zero_eigenvalue_tolerance(spectrum);
  return static_cast<std::size_t>(std::count_if(spectrum.values().begin(),
                                                spectrum.values().end(),
                                                [tol](double v) { return std::abs(v) <= tol; }));
}

}  // namespace gibbs
