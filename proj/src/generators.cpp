#include <algorithm>
#include <set>

#include "gibbs/errors.hpp"
#include "gibbs/generators.hpp"
#include "gibbs/rng.hpp"

namespace gibbs {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

Edge canonical(std::size_t a, std::size_t b) {
  return {static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b))};
}

// Pairs (i, j), i < j, in lexicographic order; one uniform draw per pair.
template <class Probability>
Graph bernoulli_pairs(std::size_t n, Rng& rng, Probability&& probability) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.uniform01() < probability(i, j)) edges.push_back(canonical(i, j));
    }
  }
  return Graph(n, std::move(edges));
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n > 0 ? n - 1 : 0) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back(canonical(i, j));
  }
  return Graph(n, std::move(edges));
}

Graph watts_strogatz(const model::WattsStrogatz& s, Rng& rng) {
  const std::size_t n = s.n;
  const std::size_t half = s.K / 2;
  std::vector<std::set<std::size_t>> adj(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t k = 1; k <= half; ++k) {
      const std::size_t w = (v + k) % n;
      adj[v].insert(w);
      adj[w].insert(v);
    }
  }
  // Only v rewires its clockwise lattice edges, so each is still present when
  // v reaches it.
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t k = 1; k <= half; ++k) {
      if (!(rng.uniform01() < s.beta)) continue;
      if (adj[v].size() == n - 1) continue;
      std::size_t target = 0;
      do {
        target = static_cast<std::size_t>(rng.uniform_below(n));
      } while (target == v || adj[v].count(target) != 0);
      const std::size_t old = (v + k) % n;
      adj[v].erase(old);
      adj[old].erase(v);
      adj[v].insert(target);
      adj[target].insert(v);
    }
  }
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w : adj[v]) {
      if (v < w) edges.push_back(canonical(v, w));
    }
  }
  return Graph(n, std::move(edges));
}

Graph barabasi_albert(const model::BarabasiAlbert& s, Rng& rng) {
  std::vector<Edge> edges;
  // Every edge contributes both endpoints, so a uniform pick from this list
  // is a degree-proportional pick of a vertex.
  std::vector<Vertex> endpoints;
  for (std::size_t i = 0; i < s.m0; ++i) {
    for (std::size_t j = i + 1; j < s.m0; ++j) {
      edges.push_back(canonical(i, j));
      endpoints.push_back(static_cast<Vertex>(i));
      endpoints.push_back(static_cast<Vertex>(j));
    }
  }
  std::vector<Vertex> targets;
  for (std::size_t v = s.m0; v < s.n; ++v) {
    targets.clear();
    const std::size_t frozen = endpoints.size();  // degrees fixed for this round
    while (targets.size() < s.m) {
      const Vertex candidate =
          frozen == 0 ? static_cast<Vertex>(rng.uniform_below(v))
                      : endpoints[static_cast<std::size_t>(rng.uniform_below(frozen))];
      if (std::find(targets.begin(), targets.end(), candidate) == targets.end()) {
        targets.push_back(candidate);
      }
    }
    for (Vertex t : targets) {
      edges.push_back(canonical(t, v));
      endpoints.push_back(t);
      endpoints.push_back(static_cast<Vertex>(v));
    }
  }
  return Graph(s.n, std::move(edges));
}

}  // namespace

Graph generate(const GeneratorSpec& spec, RngSeed seed) {
  validate(spec);
  Rng rng(seed);
  return std::visit(
      overloaded{
          [&](const model::ErdosRenyi& s) {
            return bernoulli_pairs(s.n, rng, [p = s.p](std::size_t, std::size_t) { return p; });
          },
          [&](const model::ChungLu& s) {
            double total = 0.0;
            for (double w : s.weights) total += w;
            return bernoulli_pairs(s.weights.size(), rng, [&](std::size_t i, std::size_t j) {
              return s.weights[i] * s.weights[j] / total;
            });
          },
          [&](const model::WattsStrogatz& s) { return watts_strogatz(s, rng); },
          [&](const model::BarabasiAlbert& s) { return barabasi_albert(s, rng); },
          [](const model::Empty& s) { return Graph(s.n); },
          [](const model::Complete& s) { return complete_graph(s.n); },
          [](const model::CompleteBipartite& s) {
            std::vector<Edge> edges;
            for (std::size_t i = 0; i < s.n1; ++i) {
              for (std::size_t j = 0; j < s.n2; ++j) edges.push_back(canonical(i, s.n1 + j));
            }
            return Graph(s.n1 + s.n2, std::move(edges));
          },
          [](const model::Star& s) {
            std::vector<Edge> edges;
            for (std::size_t leaf = 1; leaf <= s.n1; ++leaf) edges.push_back(canonical(0, leaf));
            return Graph(s.n1 + 1, std::move(edges));
          },
          [](const model::Cycle& s) {
            std::vector<Edge> edges;
            for (std::size_t i = 0; i < s.n; ++i) edges.push_back(canonical(i, (i + 1) % s.n));
            return Graph(s.n, std::move(edges));
          },
      },
      spec);
}

model::ErdosRenyi matched_er_spec(const Graph& g) {
  if (g.order() == 0) throw DomainError("matched_er_spec: empty graph");
  const double n = static_cast<double>(g.order());
  return {g.order(), 2.0 * static_cast<double>(g.size()) / (n * n)};
}

}  // namespace gibbs
