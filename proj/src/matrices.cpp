#include "gibbs/matrices.hpp"

#include <cmath>

#include "gibbs/errors.hpp"

namespace gibbs {

std::string to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Adjacency: return "adj";
    case MatrixKind::Laplacian: return "lap";
    case MatrixKind::NormalizedLaplacian: return "nlap";
  }
  return "?";
}

MatrixKind parse_matrix_kind(std::string_view text) {
  if (text == "adj" || text == "adjacency") return MatrixKind::Adjacency;
  if (text == "lap" || text == "laplacian") return MatrixKind::Laplacian;
  if (text == "nlap" || text == "normalized-laplacian") return MatrixKind::NormalizedLaplacian;
  throw DomainError("unknown matrix kind '" + std::string(text) + "' (adj|lap|nlap)");
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double SymMatrix::frobenius_norm() const {
  long double s = 0.0L;
  for (double x : data_) s += static_cast<long double>(x) * x;
  return static_cast<double>(std::sqrt(s));
}

SymMatrix adjacency_matrix(const Graph& g) {
  SymMatrix a(g.order());
  for (const Edge& e : g.edges()) a.set(e.u, e.v, 1.0);
  return a;
}

SymMatrix laplacian(const Graph& g) {
  SymMatrix l(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) {
    l.set(v, v, static_cast<double>(g.degree(static_cast<Vertex>(v))));
  }
  for (const Edge& e : g.edges()) l.set(e.u, e.v, -1.0);
  return l;
}

SymMatrix normalized_laplacian(const Graph& g) {
  const std::vector<std::size_t> deg = degrees(g);
  for (std::size_t v = 0; v < deg.size(); ++v) {
    if (deg[v] == 0) {
      throw DomainError("normalized Laplacian undefined: vertex " + std::to_string(v) +
                        " is isolated");
    }
  }
  SymMatrix nl(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) nl.set(v, v, 1.0);
  // sqrt of the product keeps d-regular entries exactly -1/d.
  for (const Edge& e : g.edges()) {
    nl.set(e.u, e.v,
           -1.0 / std::sqrt(static_cast<double>(deg[e.u]) * static_cast<double>(deg[e.v])));
  }
  return nl;
}

SymMatrix graph_matrix(const Graph& g, MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Adjacency: return adjacency_matrix(g);
    case MatrixKind::Laplacian: return laplacian(g);
    case MatrixKind::NormalizedLaplacian: return normalized_laplacian(g);
  }
  throw DomainError("unknown matrix kind");
}

}  // namespace gibbs
