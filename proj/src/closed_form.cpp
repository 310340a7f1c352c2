#include <cmath>
#include <numbers>

#include "gibbs/entropy.hpp"
#include "gibbs/errors.hpp"

namespace gibbs {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

std::vector<SpectralLevel> analytic_spectrum(const ClosedFormClass& cls) {
  using namespace closed_form;
  return std::visit(
      overloaded{
          [](const CompleteL& c) -> std::vector<SpectralLevel> {
            require(c.n >= 1, "complete graph needs n >= 1");
            return {{static_cast<double>(c.n), c.n - 1}, {0.0, 1}};
          },
          [](const CompleteNL& c) -> std::vector<SpectralLevel> {
            require(c.n >= 2, "normalized Laplacian of K_n needs n >= 2");
            const double n = static_cast<double>(c.n);
            return {{n / (n - 1.0), c.n - 1}, {0.0, 1}};
          },
          [](const BipartiteAdj& c) -> std::vector<SpectralLevel> {
            require(c.n1 >= 1 && c.n2 >= 1, "bipartite graph needs n1, n2 >= 1");
            const double r = std::sqrt(static_cast<double>(c.n1) * static_cast<double>(c.n2));
            return {{r, 1}, {0.0, c.n1 + c.n2 - 2}, {-r, 1}};
          },
          [](const BipartiteL& c) -> std::vector<SpectralLevel> {
            require(c.n1 >= 1 && c.n2 >= 1, "bipartite graph needs n1, n2 >= 1");
            return {{static_cast<double>(c.n1 + c.n2), 1},
                    {static_cast<double>(c.n2), c.n1 - 1},
                    {static_cast<double>(c.n1), c.n2 - 1},
                    {0.0, 1}};
          },
          [](const BipartiteNL& c) -> std::vector<SpectralLevel> {
            require(c.n1 >= 1 && c.n2 >= 1, "bipartite graph needs n1, n2 >= 1");
            return {{2.0, 1}, {1.0, c.n1 + c.n2 - 2}, {0.0, 1}};
          },
          [](const BipartiteEqualL& c) -> std::vector<SpectralLevel> {
            require(c.n1 >= 1, "bipartite graph needs n1 >= 1");
            const double n1 = static_cast<double>(c.n1);
            return {{2.0 * n1, 1}, {n1, 2 * c.n1 - 2}, {0.0, 1}};
          },
          [](const BipartiteEqualNL& c) -> std::vector<SpectralLevel> {
            require(c.n1 >= 1, "bipartite graph needs n1 >= 1");
            return {{2.0, 1}, {1.0, 2 * c.n1 - 2}, {0.0, 1}};
          },
          [](const StarL& c) -> std::vector<SpectralLevel> {
            require(c.n1 >= 1, "star needs n1 >= 1");
            return {{static_cast<double>(c.n1 + 1), 1}, {1.0, c.n1 - 1}, {0.0, 1}};
          },
          [](const StarNL& c) -> std::vector<SpectralLevel> {
            require(c.n1 >= 1, "star needs n1 >= 1");
            return {{2.0, 1}, {1.0, c.n1 - 1}, {0.0, 1}};
          },
          [](const closed_form::Cycle& c) -> std::vector<SpectralLevel> {
            require(c.n >= 3, "cycle needs n >= 3");
            std::vector<SpectralLevel> levels;
            levels.reserve(c.n);
            for (std::size_t j = 0; j < c.n; ++j) {
              const double cosine =
                  std::cos(2.0 * std::numbers::pi * static_cast<double>(j) /
                           static_cast<double>(c.n));
              double value = 0.0;
              switch (c.kind) {
                case MatrixKind::Adjacency: value = 2.0 * cosine; break;
                case MatrixKind::Laplacian: value = 2.0 - 2.0 * cosine; break;
                case MatrixKind::NormalizedLaplacian: value = 1.0 - cosine; break;
              }
              levels.push_back({value, 1});
            }
            return levels;
          },
      },
      cls);
}

MatrixKind matrix_kind(const ClosedFormClass& cls) {
  using namespace closed_form;
  return std::visit(overloaded{
                        [](const CompleteL&) { return MatrixKind::Laplacian; },
                        [](const CompleteNL&) { return MatrixKind::NormalizedLaplacian; },
                        [](const BipartiteAdj&) { return MatrixKind::Adjacency; },
                        [](const BipartiteL&) { return MatrixKind::Laplacian; },
                        [](const BipartiteNL&) { return MatrixKind::NormalizedLaplacian; },
                        [](const BipartiteEqualL&) { return MatrixKind::Laplacian; },
                        [](const BipartiteEqualNL&) { return MatrixKind::NormalizedLaplacian; },
                        [](const StarL&) { return MatrixKind::Laplacian; },
                        [](const StarNL&) { return MatrixKind::NormalizedLaplacian; },
                        [](const closed_form::Cycle& c) { return c.kind; },
                    },
                    cls);
}

double closed_form_entropy(const ClosedFormClass& cls, double tau) {
  const std::vector<SpectralLevel> levels = analytic_spectrum(cls);
  return gibbs_entropy(levels, tau, matrix_kind(cls)).entropy;
}

double cycle_asymptotic_offset(MatrixKind kind, double tau) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) throw DomainError("tau must be non-negative");
  const double x = kind == MatrixKind::NormalizedLaplacian ? tau : 2.0 * tau;
  const double i0 = bessel_i_scaled(0, x);
  const double i1 = bessel_i_scaled(1, x);
  // log I0(x) = x + log(exp(-x) I0(x)).
  return -x * (i1 / i0) + x + std::log(i0);
}

}  // namespace gibbs
