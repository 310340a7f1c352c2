#include <cmath>
#include <string>

#include "gibbs/entropy.hpp"
#include "gibbs/errors.hpp"

namespace gibbs {

namespace {

bool admissible(const Graph& g, MatrixKind kind) {
  if (g.order() == 0) return false;
  if (kind != MatrixKind::NormalizedLaplacian) return true;
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (g.degree(static_cast<Vertex>(v)) == 0) return false;
  }
  return true;
}

double normalize(double entropy, std::size_t n) {
  return n >= 2 ? entropy / std::log(static_cast<double>(n)) : entropy;
}

}  // namespace

EntropyCurve curve_from_spectrum(const Spectrum& spectrum, MatrixKind kind, const TauGrid& grid) {
  EntropyCurve curve;
  curve.kind = kind;
  curve.n = spectrum.size();
  curve.samples.reserve(grid.size());
  for (double tau : grid.points()) {
    const double s = gibbs_entropy(spectrum, tau, kind).entropy;
    curve.samples.push_back({tau, s, normalize(s, curve.n)});
  }
  return curve;
}

EntropyCurve entropy_curve(const Graph& g, MatrixKind kind, const TauGrid& grid,
                           const EigenOptions& options) {
  return curve_from_spectrum(eigenvalues_sym(graph_matrix(g, kind), options), kind, grid);
}

EntropyCurve ensemble_average_curve(const GeneratorSpec& spec, MatrixKind kind,
                                    const TauGrid& grid, std::size_t samples, RngSeed seed,
                                    const GraphTransform& preprocess,
                                    const EigenOptions& options) {
  if (samples == 0) throw DomainError("ensemble needs at least one sample");
  const std::size_t max_draws = 10 * samples;

  std::vector<long double> entropy_sum(grid.size(), 0.0L);
  std::vector<long double> normalized_sum(grid.size(), 0.0L);
  std::size_t accepted = 0;
  std::size_t order_sum = 0;
  std::size_t common_order = 0;
  bool orders_equal = true;

  // Members are reduced in seed order, so sums are reproducible.
  for (std::size_t draw = 0; accepted < samples; ++draw) {
    if (draw == max_draws) {
      throw GenerationError("only " + std::to_string(accepted) + " of " +
                            std::to_string(samples) + " admissible graphs in " +
                            std::to_string(max_draws) + " draws of " + to_string(spec));
    }
    Graph g = generate(spec, seed + draw);
    if (preprocess) g = preprocess(g);
    if (!admissible(g, kind)) continue;

    const EntropyCurve member = entropy_curve(g, kind, grid, options);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      entropy_sum[i] += member.samples[i].entropy;
      normalized_sum[i] += member.samples[i].normalized_entropy;
    }
    if (accepted == 0) common_order = g.order();
    orders_equal = orders_equal && g.order() == common_order;
    order_sum += g.order();
    ++accepted;
  }

  EntropyCurve curve;
  curve.kind = kind;
  curve.ensemble_size = samples;
  const auto count = static_cast<long double>(samples);
  curve.n = orders_equal ? common_order
                         : static_cast<std::size_t>(std::llround(
                               static_cast<double>(order_sum) / static_cast<double>(samples)));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double mean = static_cast<double>(entropy_sum[i] / count);
    // With a common order the normalized column is exactly mean / log n;
    // otherwise it is the mean of each member's own normalization.
    const double normalized = orders_equal ? normalize(mean, curve.n)
                                           : static_cast<double>(normalized_sum[i] / count);
    curve.samples.push_back({grid.points()[i], mean, normalized});
  }
  return curve;
}

}  // namespace gibbs
