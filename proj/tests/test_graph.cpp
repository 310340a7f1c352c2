#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <queue>
#include <set>

#include "doctest.h"
#include "gibbs/errors.hpp"
#include "gibbs/generators.hpp"
#include "gibbs/graph.hpp"
#include "support.hpp"

using namespace gibbs;
using Pairs = std::vector<std::pair<std::int64_t, std::int64_t>>;

namespace {

std::vector<Edge> edge_vec(const Graph& g) { return {g.edges().begin(), g.edges().end()}; }

// Brute-force check that h is the subgraph of g induced by `kept` (h vertex i = kept[i]).
bool is_induced(const Graph& g, const Graph& h, const std::vector<Vertex>& kept) {
  if (h.order() != kept.size()) return false;
  for (Vertex i = 0; i < h.order(); ++i) {
    for (Vertex j = i + 1; j < h.order(); ++j) {
      if (h.has_edge(i, j) != g.has_edge(kept[i], kept[j])) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("from_edge_list drops loops, directions and duplicates") {
  const Pairs pairs = {{0, 1}, {1, 0}, {1, 1}, {1, 2}};
  const Graph g = from_edge_list(pairs);
  CHECK(g.order() == 3);
  CHECK(edge_vec(g) == std::vector<Edge>{{0, 1}, {1, 2}});

  const Graph empty = from_edge_list(Pairs{}, 5);
  CHECK(empty.order() == 5);
  CHECK(empty.size() == 0);
  CHECK(from_edge_list(Pairs{}).order() == 0);

  const Graph tri = from_edge_list(Pairs{{0, 1}, {1, 2}, {2, 0}});
  CHECK(degrees(tri) == std::vector<std::size_t>{2, 2, 2});
}

TEST_CASE("from_edge_list rejects out-of-range and negative ids") {
  CHECK_THROWS_AS(from_edge_list(Pairs{{0, 5}}, 5), DomainError);
  CHECK_THROWS_AS(from_edge_list(Pairs{{-1, 2}}), DomainError);
  CHECK_NOTHROW(from_edge_list(Pairs{{0, 4}}, 5));
}

TEST_CASE("Graph constructor validates canonical edges") {
  CHECK_THROWS_AS(Graph(3, {{1, 0}}), DomainError);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), DomainError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), DomainError);
  const Graph g(4, {{2, 3}, {0, 1}, {0, 1}});
  CHECK(g.size() == 2);
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(1, 2));
}

TEST_CASE("parse_edge_list_text") {
  SUBCASE("comments and blank lines") {
    const Graph g = parse_edge_list_text("# header\n0 1\n\n   # indented comment\n1 2\n");
    CHECK(g.order() == 3);
    CHECK(edge_vec(g) == std::vector<Edge>{{0, 1}, {1, 2}});
  }
  SUBCASE("sparse ids remapped in first-appearance order") {
    const Graph g = parse_edge_list_text("10 20\n20 10\n");
    CHECK(g.order() == 2);
    CHECK(edge_vec(g) == std::vector<Edge>{{0, 1}});
    const Graph h = parse_edge_list_text("7\t3\n3   9\r\n");
    CHECK(h.order() == 3);
    CHECK(edge_vec(h) == std::vector<Edge>{{0, 1}, {1, 2}});
  }
  SUBCASE("malformed lines report their line number") {
    try {
      parse_edge_list_text("0 1\n1 x\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_edge_list_text("0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list_text("0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list_text("0 1.5\n"), ParseError);
    CHECK(parse_edge_list_text("0 -3\n").order() == 2);
  }
}

TEST_CASE("parse, serialize, parse round trip") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::string text = to_edge_list_text(testing::random_graph(30, 0.1, seed));
    const Graph once = parse_edge_list_text(text);
    const Graph twice = parse_edge_list_text(to_edge_list_text(once));
    CHECK(once == twice);
  }
  // A graph straight from a generator keeps its numbering when it has no isolated vertices.
  const Graph c6 = generate(model::Cycle{6}, 0);
  CHECK(parse_edge_list_text(to_edge_list_text(c6)) == c6);
}

TEST_CASE("read_edge_list_file") {
  const std::string path = "graph_test_c6.txt";
  {
    std::ofstream f(path);
    f << "# C6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n";
  }
  const Graph g = read_edge_list_file(path);
  CHECK(g == generate(model::Cycle{6}, 0));
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_edge_list_file("no/such/file.txt"), DomainError);
}

TEST_CASE("degrees") {
  CHECK(degrees(generate(model::Star{3}, 0)) == std::vector<std::size_t>{3, 1, 1, 1});
  CHECK(degrees(Graph(4)) == std::vector<std::size_t>{0, 0, 0, 0});
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = testing::random_graph(40, 0.15, seed);
    const auto d = degrees(g);
    CHECK(std::accumulate(d.begin(), d.end(), std::size_t{0}) == 2 * g.size());
  }
}

TEST_CASE("connected_components") {
  CHECK(connected_components(generate(model::Complete{3}, 0)).count == 1);
  const Graph two(4, {{0, 1}, {2, 3}});
  const auto lab = connected_components(two);
  CHECK(lab.count == 2);
  CHECK(lab.label == std::vector<std::size_t>{0, 0, 1, 1});
  CHECK(connected_components(Graph(5)).count == 5);
  CHECK(connected_components(Graph(0)).count == 0);

  // Labels collected by smallest member.
  const Graph mixed(5, {{1, 4}, {0, 3}});
  CHECK(connected_components(mixed).label == std::vector<std::size_t>{0, 1, 2, 0, 1});
}

TEST_CASE("component count matches union-find on random graphs") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 1 + seed % 64;
    const Graph g = testing::random_graph(n, 1.5 / static_cast<double>(n), seed);
    const auto lab = connected_components(g);
    CHECK(lab.count == testing::union_find_components(g));
    for (const auto& e : g.edges()) CHECK(lab.label[e.u] == lab.label[e.v]);
    std::set<std::size_t> distinct(lab.label.begin(), lab.label.end());
    CHECK(distinct.size() == lab.count);
  }
}

TEST_CASE("largest_connected_component") {
  const Graph tri_plus(4, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(largest_connected_component(tri_plus) == generate(model::Complete{3}, 0));

  const Graph two(4, {{0, 2}, {1, 3}});
  CHECK(largest_connected_component(two) == Graph(2, {{0, 1}}));

  const Graph c6 = generate(model::Cycle{6}, 0);
  CHECK(largest_connected_component(c6) == c6);

  CHECK_THROWS_AS(largest_connected_component(Graph(0)), DomainError);
  CHECK(largest_connected_component(Graph(3)) == Graph(1));
}

TEST_CASE("largest component is induced on random graphs") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 2 + seed % 63;
    const Graph g = testing::random_graph(n, 1.2 / static_cast<double>(n), seed);
    const auto lab = connected_components(g);
    std::vector<std::size_t> sizes(lab.count, 0);
    for (auto l : lab.label) ++sizes[l];
    const std::size_t best =
        static_cast<std::size_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
    std::vector<Vertex> kept;
    for (Vertex v = 0; v < n; ++v) {
      if (lab.label[v] == best) kept.push_back(v);
    }
    const Graph h = largest_connected_component(g);
    CHECK(is_induced(g, h, kept));
    CHECK(connected_components(h).count == 1);
  }
}

TEST_CASE("bfs_nearest_subgraph") {
  SUBCASE("star keeps the centre and the smallest leaves") {
    const Graph star = generate(model::Star{6}, 0);
    const Graph h = bfs_nearest_subgraph(star, 3.0 / 7.0);
    CHECK(h == generate(model::Star{2}, 0));
  }
  SUBCASE("cycle half") {
    const Graph h = bfs_nearest_subgraph(generate(model::Cycle{6}, 0), 0.5);
    // Vertices {0, 1, 5}: edges 0-1 and 0-5.
    CHECK(h == Graph(3, {{0, 1}, {0, 2}}));
  }
  SUBCASE("fraction one is the identity") {
    const Graph g = generate(model::WattsStrogatz{30, 4, 0.3}, 7);
    CHECK(bfs_nearest_subgraph(g, 1.0) == g);
  }
  SUBCASE("errors") {
    const Graph c6 = generate(model::Cycle{6}, 0);
    CHECK_THROWS_AS(bfs_nearest_subgraph(c6, 0.0), DomainError);
    CHECK_THROWS_AS(bfs_nearest_subgraph(c6, 1.5), DomainError);
    CHECK_THROWS_AS(bfs_nearest_subgraph(Graph(4, {{0, 1}, {2, 3}}), 0.5), DomainError);
  }
}

TEST_CASE("bfs subgraph matches a hand-rolled BFS and is induced") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = largest_connected_component(testing::random_graph(50, 0.08, seed));
    const std::size_t n = g.order();
    const double fraction = 0.1 + 0.02 * static_cast<double>(seed);

    Vertex root = 0;
    for (Vertex v = 1; v < n; ++v) {
      if (g.degree(v) > g.degree(root)) root = v;
    }
    std::vector<Vertex> order{root};
    std::vector<bool> seen(n, false);
    seen[root] = true;
    std::vector<Vertex> layer{root};
    while (!layer.empty()) {
      std::vector<Vertex> next;
      for (Vertex u : layer) {
        for (Vertex w : g.neighbors(u)) {
          if (!seen[w]) {
            seen[w] = true;
            next.push_back(w);
          }
        }
      }
      std::sort(next.begin(), next.end());
      order.insert(order.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    // ceil of the exact product; 0.3 * 40 must give 12, not 13.
    const auto target =
        static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n) - 1e-9));
    std::vector<Vertex> kept(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(target));
    std::sort(kept.begin(), kept.end());

    const Graph h = bfs_nearest_subgraph(g, fraction);
    CHECK(h.order() == target);
    CHECK(is_induced(g, h, kept));
  }
}

TEST_CASE("induced_subgraph renumbers in keep order") {
  const Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
  const std::vector<Vertex> keep = {3, 2, 0};
  CHECK(induced_subgraph(path, keep) == Graph(3, {{0, 1}}));
  const std::vector<Vertex> bad = {0, 9};
  CHECK_THROWS_AS(induced_subgraph(path, bad), DomainError);
}
