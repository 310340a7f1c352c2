#include <algorithm>
#include <cmath>
#include <string>

#include "gibbs/entropy.hpp"
#include "gibbs/errors.hpp"

namespace gibbs {

namespace {

// exp(-745) is below the smallest subnormal double.
constexpr double kUnderflowExponent = 745.0;

void check_tau(double tau) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw DomainError("tau must be finite and non-negative");
  }
}

double oriented(double value, MatrixKind kind) {
  return kind == MatrixKind::Adjacency ? -value : value;
}

}  // namespace

GibbsEntropyResult gibbs_entropy(std::span<const SpectralLevel> levels, double tau,
                                 MatrixKind kind) {
  check_tau(tau);
  std::size_t n = 0;
  double lowest = HUGE_VAL;
  for (const SpectralLevel& level : levels) {
    if (!std::isfinite(level.value)) throw NumericError("spectrum contains a non-finite value");
    if (level.multiplicity == 0) continue;
    n += level.multiplicity;
    lowest = std::min(lowest, oriented(level.value, kind));
  }
  if (n == 0) throw DomainError("gibbs_entropy: empty spectrum");

  GibbsEntropyResult result;
  result.tau = tau;
  if (tau == 0.0) {
    result.entropy = std::log(static_cast<double>(n));
    result.log_partition = result.entropy;
    return result;
  }

  long double partition = 0.0L;
  long double weighted = 0.0L;
  for (const SpectralLevel& level : levels) {
    if (level.multiplicity == 0) continue;
    const double x = tau * (oriented(level.value, kind) - lowest);
    if (x > kUnderflowExponent) continue;
    const long double boltzmann = std::exp(-static_cast<long double>(x));
    const auto count = static_cast<long double>(level.multiplicity);
    partition += count * boltzmann;
    weighted += count * static_cast<long double>(x) * boltzmann;
  }
  result.trace_term = static_cast<double>(weighted / partition);
  result.log_partition = static_cast<double>(std::log(partition));
  result.entropy = static_cast<double>(weighted / partition + std::log(partition));
  return result;
}

GibbsEntropyResult gibbs_entropy(const Spectrum& spectrum, double tau, MatrixKind kind) {
  std::vector<SpectralLevel> levels;
  levels.reserve(spectrum.size());
  for (double v : spectrum.values()) levels.push_back({v, 1});
  return gibbs_entropy(levels, tau, kind);
}

double shannon_entropy_of_gibbs_weights(const Spectrum& spectrum, double tau, MatrixKind kind) {
  check_tau(tau);
  if (spectrum.empty()) throw DomainError("shannon_entropy_of_gibbs_weights: empty spectrum");
  const auto values = spectrum.values();
  if (tau == 0.0) return std::log(static_cast<double>(values.size()));

  double lowest = HUGE_VAL;
  for (double v : values) lowest = std::min(lowest, oriented(v, kind));
  std::vector<double> weights(values.size());
  double partition = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    weights[i] = std::exp(-tau * (oriented(values[i], kind) - lowest));
    partition += weights[i];
  }
  double entropy = 0.0;
  for (double w : weights) {
    const double p = w / partition;
    if (p > 0.0) entropy -= p * std::log(p);
  }
  return entropy;
}

TauGrid::TauGrid(std::vector<double> points) : points_(std::move(points)) {
  if (points_.empty()) throw DomainError("tau grid must not be empty");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!(points_[i] >= 0.0) || !std::isfinite(points_[i])) {
      throw DomainError("tau grid points must be finite and non-negative");
    }
    if (i > 0 && !(points_[i] > points_[i - 1])) {
      throw DomainError("tau grid must be strictly increasing");
    }
  }
}

TauGrid TauGrid::log_spaced(double min, double max, std::size_t count) {
  if (count == 0) throw DomainError("tau grid needs at least one point");
  if (count == 1) return TauGrid({min});
  if (!(min > 0.0) || !(max > min)) {
    throw DomainError("log-spaced tau grid needs 0 < min < max");
  }
  std::vector<double> points(count);
  const double lo = std::log10(min);
  const double hi = std::log10(max);
  for (std::size_t i = 0; i < count; ++i) {
    points[i] = std::pow(10.0, lo + (hi - lo) * static_cast<double>(i) /
                                         static_cast<double>(count - 1));
  }
  points.front() = min;
  points.back() = max;
  return TauGrid(std::move(points));
}

TauGrid TauGrid::linear(double min, double max, std::size_t count) {
  if (count == 0) throw DomainError("tau grid needs at least one point");
  if (count == 1) return TauGrid({min});
  if (!(max > min)) throw DomainError("linear tau grid needs min < max");
  std::vector<double> points(count);
  for (std::size_t i = 0; i < count; ++i) {
    points[i] = min + (max - min) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  points.back() = max;
  return TauGrid(std::move(points));
}

TauGrid TauGrid::default_grid() { return log_spaced(1e-3, 1e3, 200); }

}  // namespace gibbs
