#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

#include "gibbs/graph.hpp"
#include "gibbs/rng.hpp"

namespace testing {

// Plain G(n, p) built straight from the RNG, independent of the generators.
inline gibbs::Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  gibbs::Rng rng(seed);
  std::vector<gibbs::Edge> edges;
  for (gibbs::Vertex u = 0; u < n; ++u) {
    for (gibbs::Vertex v = u + 1; v < n; ++v) {
      if (rng.uniform01() < p) edges.push_back({u, v});
    }
  }
  return gibbs::Graph(n, std::move(edges));
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

inline std::size_t union_find_components(const gibbs::Graph& g) {
  UnionFind uf(g.order());
  std::size_t count = g.order();
  for (const auto& e : g.edges()) count -= uf.unite(e.u, e.v) ? 1 : 0;
  return count;
}

// Direct evaluation of the entropy over a spectrum, long double throughout.
inline long double reference_entropy(std::vector<long double> h, long double tau) {
  long double lo = h[0];
  for (long double x : h) lo = std::min(lo, x);
  long double z = 0.0L, weighted = 0.0L;
  for (long double x : h) {
    const long double w = std::exp(-tau * (x - lo));
    z += w;
    weighted += (x - lo) * w;
  }
  return tau * weighted / z + std::log(z);
}

}  // namespace testing
