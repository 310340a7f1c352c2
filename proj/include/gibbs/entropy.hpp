#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "gibbs/generators.hpp"
#include "gibbs/graph.hpp"
#include "gibbs/matrices.hpp"
#include "gibbs/spectral.hpp"

namespace gibbs {

// Entropy of the Gibbs state exp(-tau H) / Z, split as
// entropy = trace_term + log_partition. The spectrum is shifted by its
// minimum before exponentiation, so both parts are the shifted quantities.
struct GibbsEntropyResult {
  double tau = 0.0;
  double entropy = 0.0;
  double log_partition = 0.0;
  double trace_term = 0.0;
};

// An eigenvalue with its multiplicity.
struct SpectralLevel {
  double value;
  std::size_t multiplicity;
};

// For Adjacency the spectrum of -A is used. tau = 0 returns log n exactly.
// Terms with tau * mu > 745 are dropped (they underflow double anyway).
GibbsEntropyResult gibbs_entropy(const Spectrum& spectrum, double tau, MatrixKind kind);
GibbsEntropyResult gibbs_entropy(std::span<const SpectralLevel> levels, double tau,
                                 MatrixKind kind);

// Independent route: -sum p_i log p_i over the normalized Gibbs weights.
double shannon_entropy_of_gibbs_weights(const Spectrum& spectrum, double tau, MatrixKind kind);

class TauGrid {
 public:
  // Strictly increasing, non-negative. Throws DomainError otherwise.
  explicit TauGrid(std::vector<double> points);

  static TauGrid log_spaced(double min, double max, std::size_t count);
  static TauGrid linear(double min, double max, std::size_t count);
  // 200 log-spaced points over [1e-3, 1e3].
  static TauGrid default_grid();

  std::span<const double> points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

 private:
  std::vector<double> points_;
};

struct CurveSample {
  double tau;
  double entropy;
  double normalized_entropy;  // entropy / log n; equals entropy when n = 1
};

struct EntropyCurve {
  MatrixKind kind = MatrixKind::Laplacian;
  std::size_t n = 0;
  std::vector<CurveSample> samples;
  std::size_t ensemble_size = 1;
};

EntropyCurve curve_from_spectrum(const Spectrum& spectrum, MatrixKind kind, const TauGrid& grid);
EntropyCurve entropy_curve(const Graph& g, MatrixKind kind, const TauGrid& grid,
                           const EigenOptions& options = {});

// Applied to every drawn graph before the matrix is built (e.g. LCC, BFS
// subgraph). Empty means identity.
using GraphTransform = std::function<Graph(const Graph&)>;

// Mean entropy over `samples` graphs drawn with seeds seed, seed + 1, ...
// Draws violating the kind's preconditions are skipped; at most
// 10 * samples draws are attempted before GenerationError.
EntropyCurve ensemble_average_curve(const GeneratorSpec& spec, MatrixKind kind,
                                    const TauGrid& grid, std::size_t samples, RngSeed seed,
                                    const GraphTransform& preprocess = {},
                                    const EigenOptions& options = {});

namespace closed_form {

struct CompleteL {
  std::size_t n;
};
struct CompleteNL {
  std::size_t n;
};
struct BipartiteAdj {
  std::size_t n1;
  std::size_t n2;
};
struct BipartiteL {
  std::size_t n1;
  std::size_t n2;
};
struct BipartiteNL {
  std::size_t n1;
  std::size_t n2;
};
struct BipartiteEqualL {
  std::size_t n1;
};
struct BipartiteEqualNL {
  std::size_t n1;
};
struct StarL {
  std::size_t n1;
};
struct StarNL {
  std::size_t n1;
};
// Finite-n cycle spectrum for any kind.
struct Cycle {
  std::size_t n;
  MatrixKind kind;
};

}  // namespace closed_form

using ClosedFormClass =
    std::variant<closed_form::CompleteL, closed_form::CompleteNL, closed_form::BipartiteAdj,
                 closed_form::BipartiteL, closed_form::BipartiteNL, closed_form::BipartiteEqualL,
                 closed_form::BipartiteEqualNL, closed_form::StarL, closed_form::StarNL,
                 closed_form::Cycle>;

// The known analytic spectrum of the class, and the matrix kind it belongs to.
std::vector<SpectralLevel> analytic_spectrum(const ClosedFormClass& cls);
MatrixKind matrix_kind(const ClosedFormClass& cls);
double closed_form_entropy(const ClosedFormClass& cls, double tau);

// c(tau) with S(C_n) = log n + c(tau) + o(1). Adjacency and Laplacian share
// -2t I1(2t)/I0(2t) + log I0(2t); the normalized Laplacian uses argument t.
double cycle_asymptotic_offset(MatrixKind kind, double tau);

// Lower bound on S for a spectrum inside [c2, c1].
double finite_spectrum_entropy_lower_bound(double c1, double c2, double tau, std::size_t n);

// The same bound for a concrete spectrum after the kind's sign flip and
// shift to a zero minimum.
double entropy_lower_bound(const Spectrum& spectrum, double tau, MatrixKind kind);

// Spectra with lambda_{n-1} = a log n and lambda_1 = b log n.
struct LogSpectrumClassification {
  enum class Regime { HighEntropy, Boundary, VanishingEntropy, Indeterminate };
  Regime regime;
  double coefficient = 0.0;  // S >= coefficient * log n, HighEntropy only
};
LogSpectrumClassification log_spectrum_classification(double a, double b, double tau);

// Lambert-W critical window for G(n, p0 log n / n) Laplacians.
struct ErThresholds {
  double tau_low;
  double tau_high;
};
ErThresholds er_phase_transition_thresholds(double p0);

// Eigenvalues within zero_eigenvalue_tolerance; Laplacian kinds only.
std::size_t spectral_component_count(const Spectrum& spectrum, MatrixKind kind);

}  // namespace gibbs
