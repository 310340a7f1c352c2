#include <cmath>

#include "doctest.h"
#include "gibbs/errors.hpp"
#include "gibbs/generators.hpp"
#include "gibbs/matrices.hpp"
#include "support.hpp"

using namespace gibbs;

namespace {

bool symmetric(const SymMatrix& m) {
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) {
      if (m(i, j) != m(j, i)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("matrix kind names") {
  CHECK(to_string(MatrixKind::Adjacency) == "adj");
  CHECK(to_string(MatrixKind::Laplacian) == "lap");
  CHECK(to_string(MatrixKind::NormalizedLaplacian) == "nlap");
  CHECK(parse_matrix_kind("adj") == MatrixKind::Adjacency);
  CHECK(parse_matrix_kind("lap") == MatrixKind::Laplacian);
  CHECK(parse_matrix_kind("nlap") == MatrixKind::NormalizedLaplacian);
  CHECK_THROWS_AS(parse_matrix_kind("laplace"), DomainError);
}

TEST_CASE("adjacency_matrix") {
  const SymMatrix k2 = adjacency_matrix(generate(model::Complete{2}, 0));
  CHECK(k2(0, 0) == 0.0);
  CHECK(k2(0, 1) == 1.0);
  CHECK(k2(1, 0) == 1.0);
  CHECK(k2(1, 1) == 0.0);

  const SymMatrix e3 = adjacency_matrix(Graph(3));
  for (double x : e3.values()) CHECK(x == 0.0);

  const SymMatrix c4 = adjacency_matrix(generate(model::Cycle{4}, 0));
  for (std::size_t i = 0; i < 4; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < 4; ++j) row += c4(i, j);
    CHECK(row == 2.0);
  }
}

TEST_CASE("laplacian") {
  const SymMatrix k2 = laplacian(generate(model::Complete{2}, 0));
  CHECK(k2(0, 0) == 1.0);
  CHECK(k2(0, 1) == -1.0);
  CHECK(k2(1, 1) == 1.0);

  const SymMatrix k3 = laplacian(generate(model::Complete{3}, 0));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) CHECK(k3(i, j) == (i == j ? 2.0 : -1.0));
  }
  const SymMatrix e4 = laplacian(Graph(4));
  for (double x : e4.values()) CHECK(x == 0.0);
}

TEST_CASE("normalized_laplacian") {
  const SymMatrix k2 = normalized_laplacian(generate(model::Complete{2}, 0));
  CHECK(k2(0, 0) == 1.0);
  CHECK(k2(0, 1) == -1.0);

  for (std::size_t n : {3, 7, 12}) {
    const SymMatrix nl = normalized_laplacian(generate(model::Cycle{n}, 0));
    const SymMatrix a = adjacency_matrix(generate(model::Cycle{n}, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(nl(i, j) == (i == j ? 1.0 : 0.0) - a(i, j) / 2.0);
      }
    }
  }
  CHECK_THROWS_AS(normalized_laplacian(Graph(2)), DomainError);
  CHECK_THROWS_AS(normalized_laplacian(Graph(3, {{0, 1}})), DomainError);

  const Graph star = generate(model::Star{4}, 0);
  const SymMatrix s = normalized_laplacian(star);
  CHECK(s(0, 1) == doctest::Approx(-0.5));
  CHECK(s(1, 2) == 0.0);
}

TEST_CASE("regular graphs: normalized laplacian is laplacian over degree") {
  for (const GeneratorSpec& spec : {GeneratorSpec{model::Complete{9}}, GeneratorSpec{model::Cycle{11}},
                                    GeneratorSpec{model::WattsStrogatz{20, 6, 0.0}}}) {
    const Graph g = generate(spec, 0);
    const double d = static_cast<double>(g.degree(0));
    const SymMatrix nl = normalized_laplacian(g);
    const SymMatrix l = laplacian(g);
    for (std::size_t i = 0; i < g.order(); ++i) {
      for (std::size_t j = 0; j < g.order(); ++j) CHECK(nl(i, j) == doctest::Approx(l(i, j) / d));
    }
  }
}

TEST_CASE("random graphs: row sums, traces, symmetry") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = testing::random_graph(5 + seed, 0.3, seed);
    const SymMatrix a = adjacency_matrix(g);
    const SymMatrix l = laplacian(g);
    CHECK(symmetric(a));
    CHECK(symmetric(l));
    for (std::size_t i = 0; i < g.order(); ++i) {
      double row = 0.0;
      for (std::size_t j = 0; j < g.order(); ++j) row += l(i, j);
      CHECK(row == 0.0);
    }
    CHECK(a.trace() == 0.0);
    CHECK(l.trace() == 2.0 * static_cast<double>(g.size()));
    CHECK(a.frobenius_norm() == doctest::Approx(std::sqrt(2.0 * static_cast<double>(g.size()))));

    const Graph h = largest_connected_component(g);
    if (h.order() >= 2) {
      const SymMatrix nl = normalized_laplacian(h);
      CHECK(symmetric(nl));
      CHECK(nl.trace() == doctest::Approx(static_cast<double>(h.order())));
    }
  }
}

TEST_CASE("graph_matrix dispatches on kind") {
  const Graph g = generate(model::Cycle{5}, 0);
  CHECK(graph_matrix(g, MatrixKind::Adjacency).values()[1] == 1.0);
  CHECK(graph_matrix(g, MatrixKind::Laplacian).values()[0] == 2.0);
  CHECK(graph_matrix(g, MatrixKind::NormalizedLaplacian).values()[1] == -0.5);
}
