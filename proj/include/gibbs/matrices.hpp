#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gibbs/graph.hpp"

namespace gibbs {

enum class MatrixKind { Adjacency, Laplacian, NormalizedLaplacian };

// "adj" | "lap" | "nlap"
std::string to_string(MatrixKind kind);
MatrixKind parse_matrix_kind(std::string_view text);

// Dense symmetric matrix, row-major full storage. Writes go through set(),
// which mirrors the entry, so storage is exactly symmetric.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t order() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, double value) {
    data_[i * n_ + j] = value;
    data_[j * n_ + i] = value;
  }
  std::span<const double> values() const noexcept { return data_; }

  double trace() const;
  double frobenius_norm() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

SymMatrix adjacency_matrix(const Graph& g);
SymMatrix laplacian(const Graph& g);
// Throws DomainError when any vertex is isolated.
SymMatrix normalized_laplacian(const Graph& g);

SymMatrix graph_matrix(const Graph& g, MatrixKind kind);

}  // namespace gibbs
