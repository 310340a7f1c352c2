#include "gibbs/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "gibbs/errors.hpp"
#include "gibbs/rng.hpp"

namespace gibbs::cli {

std::string format_real(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  (void)ec;
  return {buf, ptr};
}

Source parse_source(const std::string& text) {
  static const std::vector<std::string> kModels = {
      "er",    "erdos-renyi", "cl",       "chung-lu",  "ws",   "watts-strogatz", "ba",
      "barabasi-albert", "empty", "complete", "bipartite", "star", "cycle"};
  if (text.rfind("file:", 0) == 0) return FileSource{text.substr(5)};
  const std::size_t colon = text.find(':');
  if (colon != std::string::npos &&
      std::find(kModels.begin(), kModels.end(), text.substr(0, colon)) != kModels.end()) {
    return parse_generator_spec(text);
  }
  return FileSource{text};
}

TauGrid make_grid(const TauGridParams& params) {
  return params.log_spaced ? TauGrid::log_spaced(params.min, params.max, params.count)
                           : TauGrid::linear(params.min, params.max, params.count);
}

Graph preprocess(Graph g, bool lcc, std::optional<double> fraction) {
  if (lcc) g = largest_connected_component(g);
  if (fraction) g = bfs_nearest_subgraph(g, *fraction);
  return g;
}

Graph resolve_graph(const Source& source, std::uint64_t seed, bool lcc,
                    std::optional<double> fraction) {
  Graph g = std::holds_alternative<FileSource>(source)
                ? read_edge_list_file(std::get<FileSource>(source).path)
                : generate(std::get<GeneratorSpec>(source), seed);
  return preprocess(std::move(g), lcc, fraction);
}

EntropyCurve run_sweep(const SweepConfig& config) {
  if (config.samples == 0) throw DomainError("--samples must be >= 1");
  if (config.subgraph_fraction &&
      !(*config.subgraph_fraction > 0.0 && *config.subgraph_fraction <= 1.0)) {
    throw DomainError("--fraction must lie in (0, 1]");
  }
  const TauGrid grid = make_grid(config.grid);
  if (const auto* file = std::get_if<FileSource>(&config.source)) {
    const Graph g =
        preprocess(read_edge_list_file(file->path), config.lcc, config.subgraph_fraction);
    return entropy_curve(g, config.kind, grid);
  }
  const bool lcc = config.lcc;
  const auto fraction = config.subgraph_fraction;
  GraphTransform transform;
  if (lcc || fraction) {
    transform = [lcc, fraction](const Graph& g) { return preprocess(g, lcc, fraction); };
  }
  return ensemble_average_curve(std::get<GeneratorSpec>(config.source), config.kind, grid,
                                config.samples, config.seed, transform);
}

void write_curve_csv(const EntropyCurve& curve, std::ostream& out) {
  out << "tau,entropy,entropy_over_logn,n,kind,ensemble_size\n";
  for (const CurveSample& s : curve.samples) {
    out << format_real(s.tau) << ',' << format_real(s.entropy) << ','
        << format_real(s.normalized_entropy) << ',' << curve.n << ',' << to_string(curve.kind)
        << ',' << curve.ensemble_size << '\n';
  }
}

void write_spectrum_csv(const Spectrum& spectrum, std::ostream& out) {
  out << "eigenvalue\n";
  for (double v : spectrum.values()) out << format_real(v) << '\n';
}

// ---------------------------------------------------------------------------
// oracle-check

namespace {

struct OracleCase {
  std::string label;
  GeneratorSpec graph;
  MatrixKind kind;
  ClosedFormClass oracle;
};

std::vector<OracleCase> oracle_cases(std::size_t n, std::vector<std::string>& skipped) {
  using namespace closed_form;
  std::vector<OracleCase> cases;
  const std::string size = std::to_string(n);

  cases.push_back({"K_" + size, model::Complete{n}, MatrixKind::Laplacian, CompleteL{n}});
  // d-regular: adjacency entropy equals the Laplacian one.
  cases.push_back({"K_" + size, model::Complete{n}, MatrixKind::Adjacency, CompleteL{n}});
  if (n >= 2) {
    cases.push_back({"K_" + size, model::Complete{n}, MatrixKind::NormalizedLaplacian,
                     CompleteNL{n}});
    const std::size_t leaves = n - 1;
    const std::string star = "K_{" + std::to_string(leaves) + ",1}";
    cases.push_back({star, model::Star{leaves}, MatrixKind::Laplacian, StarL{leaves}});
    cases.push_back({star, model::Star{leaves}, MatrixKind::NormalizedLaplacian, StarNL{leaves}});
    cases.push_back({star, model::Star{leaves}, MatrixKind::Adjacency, BipartiteAdj{leaves, 1}});

    const std::size_t n1 = std::max<std::size_t>(1, n / 4);
    const std::size_t n2 = n - n1;
    const std::string bip = "K_{" + std::to_string(n1) + "," + std::to_string(n2) + "}";
    const model::CompleteBipartite unequal{n1, n2};
    cases.push_back({bip, unequal, MatrixKind::Adjacency, BipartiteAdj{n1, n2}});
    cases.push_back({bip, unequal, MatrixKind::Laplacian, BipartiteL{n1, n2}});
    cases.push_back({bip, unequal, MatrixKind::NormalizedLaplacian, BipartiteNL{n1, n2}});
  } else {
    skipped.push_back("n=" + size + ": star and bipartite classes need n >= 2");
  }
  if (n >= 2 && n % 2 == 0) {
    const std::size_t h = n / 2;
    const std::string bip = "K_{" + std::to_string(h) + "," + std::to_string(h) + "}";
    const model::CompleteBipartite equal{h, h};
    cases.push_back({bip, equal, MatrixKind::Adjacency, BipartiteAdj{h, h}});
    cases.push_back({bip, equal, MatrixKind::Laplacian, BipartiteEqualL{h}});
    cases.push_back({bip, equal, MatrixKind::NormalizedLaplacian, BipartiteEqualNL{h}});
  }
  if (n >= 3) {
    for (MatrixKind kind :
         {MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::NormalizedLaplacian}) {
      cases.push_back({"C_" + size, model::Cycle{n}, kind, closed_form::Cycle{n, kind}});
    }
  } else {
    skipped.push_back("n=" + size + ": cycle needs n >= 3");
  }
  return cases;
}

}  // namespace

int oracle_check(std::size_t max_n, const std::vector<double>& taus, std::ostream& out) {
  constexpr double kExactTolerance = 1e-8;
  constexpr double kAsymptoticTolerance = 1e-3;
  constexpr std::size_t kAsymptoticMinOrder = 64;
  if (max_n == 0) throw DomainError("--max-n must be >= 1");
  if (taus.empty()) throw DomainError("--tau needs at least one value");
  for (double t : taus) {
    if (!(t >= 0.0)) throw DomainError("--tau values must be non-negative");
  }

  std::vector<std::size_t> sizes;
  for (std::size_t n = 1; n <= max_n; n *= 2) sizes.push_back(n);
  if (sizes.back() != max_n) sizes.push_back(max_n);

  out << "check,class,kind,n,tau,eigensolver,reference,discrepancy,tolerance,status\n";
  double worst = 0.0;
  bool ok = true;
  std::vector<std::string> skipped;
  auto report = [&](const std::string& check, const std::string& label, MatrixKind kind,
                    std::size_t n, double tau, double got, double want, double tol) {
    const double diff = std::abs(got - want);
    const bool pass = diff <= tol;
    ok = ok && pass;
    worst = std::max(worst, diff);
    out << check << ',' << label << ',' << to_string(kind) << ',' << n << ',' << format_real(tau)
        << ',' << format_real(got) << ',' << format_real(want) << ',' << format_real(diff) << ','
        << format_real(tol) << ',' << (pass ? "ok" : "FAIL") << '\n';
  };

  for (std::size_t n : sizes) {
    for (const OracleCase& c : oracle_cases(n, skipped)) {
      const Spectrum spectrum = eigenvalues_sym(graph_matrix(generate(c.graph, 0), c.kind));
      for (double tau : taus) {
        report("closed-form", c.label, c.kind, n, tau, gibbs_entropy(spectrum, tau, c.kind).entropy,
               closed_form_entropy(c.oracle, tau), kExactTolerance);
      }
    }
  }

  std::size_t cycle_n = 0;
  for (std::size_t n : sizes) {
    if (n >= kAsymptoticMinOrder) cycle_n = n;
  }
  if (cycle_n == 0) {
    skipped.push_back("cycle asymptote: needs max-n >= " + std::to_string(kAsymptoticMinOrder));
  } else {
    const Graph cycle = generate(model::Cycle{cycle_n}, 0);
    for (MatrixKind kind :
         {MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::NormalizedLaplacian}) {
      const Spectrum spectrum = eigenvalues_sym(graph_matrix(cycle, kind));
      for (double tau : taus) {
        const double asymptote =
            std::log(static_cast<double>(cycle_n)) + cycle_asymptotic_offset(kind, tau);
        report("cycle-asymptote", "C_" + std::to_string(cycle_n), kind, cycle_n, tau,
               gibbs_entropy(spectrum, tau, kind).entropy, asymptote, kAsymptoticTolerance);
      }
    }
  }

  for (const std::string& s : skipped) out << "# skipped " << s << '\n';
  out << "# max discrepancy " << format_real(worst) << '\n';
  out << "# result " << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kSuccess : kPropertyViolation;
}

// ---------------------------------------------------------------------------
// bounds-check

namespace {

GeneratorSpec random_small_spec(std::size_t index, Rng& rng) {
  const std::size_t n = 8 + static_cast<std::size_t>(rng.uniform_below(57));
  switch (index % 4) {
    case 0: return model::ErdosRenyi{n, 0.05 + 0.55 * rng.uniform01()};
    case 1: return model::WattsStrogatz{n, 2 + 2 * static_cast<std::size_t>(rng.uniform_below(2)),
                                        rng.uniform01()};
    case 2: {
      const std::size_t m0 = 2 + static_cast<std::size_t>(rng.uniform_below(2));
      return model::BarabasiAlbert{n, m0, 1 + static_cast<std::size_t>(rng.uniform_below(m0))};
    }
    default: {
      // Weights in [1, 2] keep w_i w_j / sum w <= 4 / 8.
      model::ChungLu cl;
      for (std::size_t i = 0; i < n; ++i) cl.weights.push_back(1.0 + rng.uniform01());
      return cl;
    }
  }
}

// {0} plus n - 1 values spread over [a log n, b log n], both ends included.
Spectrum log_scaled_spectrum(std::size_t n, double a, double b, Rng& rng) {
  const double log_n = std::log(static_cast<double>(n));
  std::vector<double> values{0.0, a * log_n, b * log_n};
  while (values.size() < n) values.push_back((a + (b - a) * rng.uniform01()) * log_n);
  return Spectrum(std::move(values));
}

}  // namespace

int bounds_check(std::size_t samples, std::uint64_t seed, std::ostream& out) {
  if (samples == 0) throw DomainError("--samples must be >= 1");
  bool ok = true;
  std::size_t checks = 0;
  auto fail = [&](const std::string& what) {
    ok = false;
    out << "violation: " << what << '\n';
  };

  // Finite-spectrum lower bound on random graphs.
  const std::vector<double> taus = {0.01, 0.03, 0.1, 0.3, 1.0, 3.0, 10.0, 30.0, 100.0};
  for (std::size_t i = 0; i < samples; ++i) {
    Rng param_rng(seed + i);
    const GeneratorSpec spec = random_small_spec(i, param_rng);
    const Graph g = generate(spec, seed + i);
    for (MatrixKind kind :
         {MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::NormalizedLaplacian}) {
      const auto deg = degrees(g);
      if (kind == MatrixKind::NormalizedLaplacian &&
          std::find(deg.begin(), deg.end(), 0u) != deg.end()) {
        continue;
      }
      const Spectrum spectrum = eigenvalues_sym(graph_matrix(g, kind));
      for (double tau : taus) {
        const double s = gibbs_entropy(spectrum, tau, kind).entropy;
        const double bound = entropy_lower_bound(spectrum, tau, kind);
        ++checks;
        if (s < bound - 1e-9) {
          fail("lower bound spec=" + to_string(spec) + " seed=" + std::to_string(seed + i) +
               " kind=" + to_string(kind) + " tau=" + format_real(tau) + " S=" + format_real(s) +
               " bound=" + format_real(bound));
        }
      }
    }
  }
  out << "lower-bound checks: " << checks << '\n';

  // Log-scaled synthetic spectra against the classification.
  using Regime = LogSpectrumClassification::Regime;
  const std::vector<std::pair<double, double>> shapes = {
      {1.0, 1.0}, {0.5, 1.0}, {1.0, 2.0}, {0.25, 3.0}, {2.0, 5.0}};
  std::size_t class_checks = 0;
  Rng spectrum_rng(seed);
  for (auto [a, b] : shapes) {
    for (std::size_t n : {std::size_t{1} << 8, std::size_t{1} << 10, std::size_t{1} << 12,
                          std::size_t{1} << 14}) {
      const Spectrum spectrum = log_scaled_spectrum(n, a, b, spectrum_rng);
      const double log_n = std::log(static_cast<double>(n));
      for (double tau : {0.25 / b, 0.5 / b, 0.9 / b, 1.0 / b, 0.5 * (1.0 / a + 1.0 / b),
                         1.5 / a, 2.0 / a, 4.0 / a}) {
        const double s = gibbs_entropy(spectrum, tau, MatrixKind::Laplacian).entropy;
        const LogSpectrumClassification c = log_spectrum_classification(a, b, tau);
        const std::string where = "a=" + format_real(a) + " b=" + format_real(b) +
                                  " n=" + std::to_string(n) + " tau=" + format_real(tau) +
                                  " seed=" + std::to_string(seed) + " S=" + format_real(s);
        ++class_checks;
        switch (c.regime) {
          case Regime::HighEntropy:
            if (s < c.coefficient * log_n - 1e-9) fail("high-entropy bound " + where);
            break;
          case Regime::Boundary:
            if (s < std::log(2.0 - 1.0 / static_cast<double>(n)) - 1e-9) {
              fail("boundary bound " + where);
            }
            break;
          case Regime::VanishingEntropy: {
            const double nd = static_cast<double>(n);
            const double cap = (nd - 1.0) * std::pow(nd, -tau * a) * (1.0 + tau * a * log_n);
            if (s > cap + 1e-12) fail("vanishing bound " + where);
            if (n == (std::size_t{1} << 14) && tau == 2.0 / a && s > 0.01) {
              fail("vanishing entropy above 0.01 " + where);
            }
            break;
          }
          case Regime::Indeterminate: break;
        }
      }
    }
  }
  out << "classification checks: " << class_checks << '\n';

  // Lambert-W thresholds: ordering, monotonicity in p0, bracketing.
  double previous_low = HUGE_VAL;
  double previous_high = HUGE_VAL;
  for (double p0 : {2.0, 10.5, 21.0, 42.0}) {
    const ErThresholds t = er_phase_transition_thresholds(p0);
    const std::string where = "p0=" + format_real(p0) + " tau_low=" + format_real(t.tau_low) +
                              " tau_high=" + format_real(t.tau_high);
    out << "thresholds " << where << '\n';
    if (!(t.tau_low > 0.0 && t.tau_low < t.tau_high)) fail("threshold ordering " + where);
    if (!(t.tau_low < previous_low && t.tau_high < previous_high)) {
      fail("thresholds not decreasing in p0 " + where);
    }
    previous_low = t.tau_low;
    previous_high = t.tau_high;

    const std::size_t n = std::size_t{1} << 12;
    const Spectrum spectrum = log_scaled_spectrum(n, 1.0 / t.tau_high, 1.0 / t.tau_low,
                                                  spectrum_rng);
    const double log_n = std::log(static_cast<double>(n));
    const double high = gibbs_entropy(spectrum, t.tau_low / 2.0, MatrixKind::Laplacian).entropy;
    const double low = gibbs_entropy(spectrum, 2.0 * t.tau_high, MatrixKind::Laplacian).entropy;
    if (high / log_n < 0.5) fail("bracket below tau_low/2 " + where + " S/log n=" +
                                 format_real(high / log_n));
    if (low / log_n > 0.05) fail("bracket above 2 tau_high " + where + " S/log n=" +
                                format_real(low / log_n));
  }

  out << "# result " << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kSuccess : kPropertyViolation;
}

// ---------------------------------------------------------------------------
// command line

namespace {

class Output {
 public:
  Output(const std::string& target, std::ostream& fallback) : stream_(&fallback) {
    if (!target.empty() && target != "-" && target != "stdout") {
      file_ = std::make_unique<std::ofstream>(target, std::ios::binary);
      if (!*file_) throw DomainError("cannot open output '" + target + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

struct GraphOptions {
  std::string source;
  std::string kind = "lap";
  std::uint64_t seed = 1;
  bool lcc = false;
  std::optional<double> fraction;
  std::string out = "stdout";
};

void add_graph_options(CLI::App& cmd, GraphOptions& o, bool with_kind) {
  cmd.add_option("--source", o.source, "generator spec (e.g. er:n=1200,p0=10.5) or edge-list path")
      ->required();
  if (with_kind) {
    cmd.add_option("--kind", o.kind, "matrix: adj | lap | nlap")->capture_default_str();
  }
  cmd.add_option("--seed", o.seed, "RNG seed for random models")->capture_default_str();
  cmd.add_flag("--lcc", o.lcc, "keep the largest connected component");
  cmd.add_option("--fraction", o.fraction, "keep the ceil(f n) vertices nearest the hub");
  cmd.add_option("--out", o.out, "output path or stdout")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Von Neumann entropy of graph Gibbs states", "gibbs-entropy"};
  app.require_subcommand(1);

  GraphOptions spectrum_opts;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "print the sorted eigenvalues");
  add_graph_options(*spectrum_cmd, spectrum_opts, true);

  GraphOptions sweep_opts;
  TauGridParams grid;
  std::size_t samples = 1;
  auto* sweep_cmd = app.add_subcommand("sweep", "entropy over a tau grid as CSV");
  add_graph_options(*sweep_cmd, sweep_opts, true);
  sweep_cmd->add_option("--tau-min", grid.min)->capture_default_str();
  sweep_cmd->add_option("--tau-max", grid.max)->capture_default_str();
  sweep_cmd->add_option("--tau-points", grid.count)->capture_default_str();
  sweep_cmd->add_flag("--tau-log,!--tau-linear", grid.log_spaced,
                      "log-spaced grid (default) or linear");
  sweep_cmd->add_option("--samples", samples, "ensemble size for random models")
      ->capture_default_str();

  GraphOptions generate_opts;
  auto* generate_cmd = app.add_subcommand("generate", "write a graph as an edge list");
  add_graph_options(*generate_cmd, generate_opts, false);

  std::size_t max_n = 1024;
  std::vector<double> taus = {0.1, 1.0, 10.0};
  auto* oracle_cmd = app.add_subcommand("oracle-check", "eigensolver vs analytic spectra");
  oracle_cmd->add_option("--max-n", max_n)->capture_default_str();
  oracle_cmd->add_option("--tau", taus, "tau values")->delimiter(',');

  std::size_t bound_samples = 25;
  std::uint64_t bound_seed = 1;
  auto* bounds_cmd = app.add_subcommand("bounds-check", "spectral bounds and thresholds");
  bounds_cmd->add_option("--samples", bound_samples)->capture_default_str();
  bounds_cmd->add_option("--seed", bound_seed)->capture_default_str();

  std::vector<std::string> argv_storage{"gibbs-entropy"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*spectrum_cmd) {
      const auto& o = spectrum_opts;
      const MatrixKind kind = parse_matrix_kind(o.kind);
      const Graph g = resolve_graph(parse_source(o.source), o.seed, o.lcc, o.fraction);
      const Spectrum spectrum = eigenvalues_sym(graph_matrix(g, kind));
      Output target(o.out, out);
      write_spectrum_csv(spectrum, target.stream());
    } else if (*sweep_cmd) {
      const auto& o = sweep_opts;
      SweepConfig config{parse_source(o.source), parse_matrix_kind(o.kind), grid, samples,
                         o.seed, o.lcc, o.fraction};
      const EntropyCurve curve = run_sweep(config);
      Output target(o.out, out);
      write_curve_csv(curve, target.stream());
    } else if (*generate_cmd) {
      const auto& o = generate_opts;
      const Graph g = resolve_graph(parse_source(o.source), o.seed, o.lcc, o.fraction);
      Output target(o.out, out);
      target.stream() << to_edge_list_text(g);
    } else if (*oracle_cmd) {
      return oracle_check(max_n, taus, out);
    } else if (*bounds_cmd) {
      return bounds_check(bound_samples, bound_seed, out);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << '\n';
    return kNumericFailure;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kNumericFailure;
  } catch (const GenerationError& e) {
    err << "generation error: " << e.what() << '\n';
    return kNumericFailure;
  }
  return kSuccess;
}

}  // namespace gibbs::cli
