#include "gibbs/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "gibbs/errors.hpp"

namespace gibbs {

Graph::Graph(std::size_t n) : n_(n) { build_adjacency(); }

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (const Edge& e : edges_) {
    if (e.u >= e.v || e.v >= n_) {
      throw DomainError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                        "} is not canonical for a graph of order " + std::to_string(n_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  build_adjacency();
}

void Graph::build_adjacency() {
  std::vector<std::size_t> deg(n_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(n_ + 1, 0);
  for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adjacency_.resize(offsets_[n_]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  // Smaller neighbours first, then larger: each list comes out sorted.
  for (const Edge& e : edges_) adjacency_[cursor[e.v]++] = e.u;
  for (const Edge& e : edges_) adjacency_[cursor[e.u]++] = e.v;
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (v >= n_) throw DomainError("vertex " + std::to_string(v) + " out of range");
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a == b || a >= n_ || b >= n_) return false;
  const Edge key{std::min(a, b), std::max(a, b)};
  return std::binary_search(edges_.begin(), edges_.end(), key);
}

Graph from_edge_list(std::span<const std::pair<std::int64_t, std::int64_t>> pairs,
                     std::optional<std::size_t> n) {
  std::int64_t max_id = -1;
  for (const auto& [a, b] : pairs) {
    if (a < 0 || b < 0) throw DomainError("negative vertex id");
    max_id = std::max({max_id, a, b});
  }
  const std::size_t order = n ? *n : static_cast<std::size_t>(max_id + 1);
  if (n && max_id >= 0 && static_cast<std::size_t>(max_id) >= *n) {
    throw DomainError("vertex id " + std::to_string(max_id) + " >= n = " + std::to_string(*n));
  }
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a == b) continue;
    edges.push_back({static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b))});
  }
  return Graph(order, std::move(edges));
}

namespace {

bool parse_int(std::string_view token, std::int64_t& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

Graph parse_edge_list_text(std::string_view text) {
  std::unordered_map<std::int64_t, std::int64_t> remap;
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  auto dense_id = [&remap](std::int64_t raw) {
    auto [it, inserted] = remap.try_emplace(raw, static_cast<std::int64_t>(remap.size()));
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    std::string_view tokens[3];
    std::size_t count = 0;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i >= line.size()) break;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (count == 0 && line[i] == '#') break;
      if (count < 3) tokens[count] = line.substr(i, j - i);
      ++count;
      i = j;
    }
    if (count == 0) continue;
    if (count != 2) {
      throw ParseError("expected 2 vertex ids, found " + std::to_string(count) + " tokens",
                       line_no);
    }
    std::int64_t a = 0;
    std::int64_t b = 0;
    if (!parse_int(tokens[0], a) || !parse_int(tokens[1], b)) {
      throw ParseError("vertex ids must be integers", line_no);
    }
    const std::int64_t da = dense_id(a);
    const std::int64_t db = dense_id(b);
    pairs.emplace_back(da, db);
  }
  return from_edge_list(pairs, remap.size());
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open edge list '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list_text(buffer.str());
}

std::string to_edge_list_text(const Graph& g) {
  std::ostringstream out;
  out << "# n=" << g.order() << " m=" << g.size() << "\n";

  // Introduce vertices in id order: vertex c either has a smaller neighbour,
  // or (for parsed graphs) shares its first line with c + 1.
  std::vector<bool> written(g.size(), false);
  auto edge_index = [&g](Vertex a, Vertex b) {
    const Edge key{std::min(a, b), std::max(a, b)};
    auto edges = g.edges();
    return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), key) -
                                    edges.begin());
  };
  Vertex introduced = 0;
  const auto n = static_cast<Vertex>(g.order());
  while (introduced < n) {
    const Vertex c = introduced;
    auto nbrs = g.neighbors(c);
    if (!nbrs.empty() && nbrs.front() < c) {
      out << nbrs.front() << ' ' << c << '\n';
      written[edge_index(nbrs.front(), c)] = true;
      introduced = c + 1;
    } else if (c + 1 < n && g.has_edge(c, c + 1)) {
      out << c << ' ' << c + 1 << '\n';
      written[edge_index(c, c + 1)] = true;
      introduced = c + 2;
    } else {
      introduced = c + 1;  // not representable in first-appearance order
    }
  }
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!written[i]) out << edges[i].u << ' ' << edges[i].v << '\n';
  }
  return out.str();
}

std::vector<std::size_t> degrees(const Graph& g) {
  std::vector<std::size_t> deg(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) deg[v] = g.degree(static_cast<Vertex>(v));
  return deg;
}

ComponentLabeling connected_components(const Graph& g) {
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  ComponentLabeling result;
  result.label.assign(g.order(), kUnset);
  std::vector<Vertex> stack;
  for (std::size_t root = 0; root < g.order(); ++root) {
    if (result.label[root] != kUnset) continue;
    const std::size_t id = result.count++;
    result.label[root] = id;
    stack.push_back(static_cast<Vertex>(root));
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (result.label[w] == kUnset) {
          result.label[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  return result;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  constexpr auto kAbsent = static_cast<Vertex>(-1);
  std::vector<Vertex> position(g.order(), kAbsent);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= g.order() || position[keep[i]] != kAbsent) {
      throw DomainError("induced_subgraph: invalid or repeated vertex");
    }
    position[keep[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const Vertex a = position[e.u];
    const Vertex b = position[e.v];
    if (a != kAbsent && b != kAbsent) edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return Graph(keep.size(), std::move(edges));
}

Graph largest_connected_component(const Graph& g) {
  if (g.order() == 0) throw DomainError("largest_connected_component: empty graph");
  const ComponentLabeling cc = connected_components(g);
  std::vector<std::size_t> sizes(cc.count, 0);
  for (std::size_t l : cc.label) ++sizes[l];
  // Labels are ordered by smallest member, so the first maximum wins ties.
  const auto best = static_cast<std::size_t>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<Vertex> keep;
  keep.reserve(sizes[best]);
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (cc.label[v] == best) keep.push_back(static_cast<Vertex>(v));
  }
  return induced_subgraph(g, keep);
}

Graph bfs_nearest_subgraph(const Graph& g, double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw DomainError("subgraph fraction must lie in (0, 1]");
  }
  if (g.order() == 0 || connected_components(g).count != 1) {
    throw DomainError("bfs_nearest_subgraph requires a connected graph");
  }
  const std::size_t n = g.order();
  // Guard against fraction * n landing a hair above an integer (3/7 * 7).
  auto target = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n) - 1e-9));
  target = std::clamp<std::size_t>(target, 1, n);

  Vertex root = 0;
  for (std::size_t v = 1; v < n; ++v) {
    if (g.degree(static_cast<Vertex>(v)) > g.degree(root)) root = static_cast<Vertex>(v);
  }

  std::vector<bool> seen(n, false);
  std::vector<Vertex> order{root};
  std::vector<Vertex> layer{root};
  seen[root] = true;
  while (order.size() < target && !layer.empty()) {
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          next.push_back(w);
        }
      }
    }
    std::sort(next.begin(), next.end());
    for (Vertex w : next) {
      if (order.size() == target) break;
      order.push_back(w);
    }
    layer = std::move(next);
  }
  std::sort(order.begin(), order.end());
  return induced_subgraph(g, order);
}

}  // namespace gibbs
