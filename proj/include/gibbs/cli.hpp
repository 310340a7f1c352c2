#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "gibbs/entropy.hpp"
#include "gibbs/generators.hpp"
#include "gibbs/matrices.hpp"

namespace gibbs::cli {

enum ExitCode : int {
  kSuccess = 0,
  kPropertyViolation = 1,
  kUsageError = 2,
  kNumericFailure = 3,
};

struct FileSource {
  std::string path;
};
using Source = std::variant<GeneratorSpec, FileSource>;

// "file:<path>" or a path when the text does not start with a known model
// name; see parse_generator_spec for the generator forms.
Source parse_source(const std::string& text);

struct TauGridParams {
  double min = 1e-3;
  double max = 1e3;
  std::size_t count = 200;
  bool log_spaced = true;
};
TauGrid make_grid(const TauGridParams& params);

struct SweepConfig {
  Source source;
  MatrixKind kind = MatrixKind::Laplacian;
  TauGridParams grid;
  std::size_t samples = 1;
  std::uint64_t seed = 1;
  bool lcc = false;
  std::optional<double> subgraph_fraction;
};

// ingest -> lcc (if set) -> BFS subgraph (if set).
Graph preprocess(Graph g, bool lcc, std::optional<double> fraction);

// Resolves a source into one graph (generators use `seed`), preprocessed.
Graph resolve_graph(const Source& source, std::uint64_t seed, bool lcc,
                    std::optional<double> fraction);

EntropyCurve run_sweep(const SweepConfig& config);

// Header "tau,entropy,entropy_over_logn,n,kind,ensemble_size"; reals with 17
// significant digits.
void write_curve_csv(const EntropyCurve& curve, std::ostream& out);
void write_spectrum_csv(const Spectrum& spectrum, std::ostream& out);

std::string format_real(double x);

// Self-checks; each returns an ExitCode and writes a report.
int oracle_check(std::size_t max_n, const std::vector<double>& taus, std::ostream& out);
int bounds_check(std::size_t samples, std::uint64_t seed, std::ostream& out);

// Entry point shared by the executable and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gibbs::cli
