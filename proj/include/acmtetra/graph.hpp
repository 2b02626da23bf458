#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "acmtetra/error.hpp"
#include "acmtetra/polarization.hpp"
#include "acmtetra/variables.hpp"

namespace acmtetra {

inline constexpr std::size_t kDefaultInducedCycleVertexLimit = 24;

// Finite simple graph over polynomial-ring variables. Vertices are kept in
// canonical variable order; adjacency is a dense matrix.
class Graph {
 public:
  Graph() = default;
  Graph(Universe universe, std::vector<VarId> vertices)
      : universe_(std::move(universe)), vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    adj_.assign(vertices_.size() * vertices_.size(), 0);
  }

  const Universe& universe() const { return universe_; }
  const std::vector<VarId>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  VarId vertex(std::size_t i) const { return vertices_[i]; }

  std::optional<std::size_t> find(VarId v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  std::size_t index_of(VarId v) const {
    auto i = find(v);
    if (!i) throw Error(ErrorKind::invalid_argument, "vertex not in graph");
    return *i;
  }

  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i * size() + j] != 0; }
  bool adjacent(VarId u, VarId v) const { return adjacent(index_of(u), index_of(v)); }

  void add_edge(std::size_t i, std::size_t j) {
    if (i == j) throw Error(ErrorKind::invalid_argument, "graph loops are not allowed");
    adj_[i * size() + j] = 1;
    adj_[j * size() + i] = 1;
  }
  void add_edge(VarId u, VarId v) { add_edge(index_of(u), index_of(v)); }

  std::vector<std::size_t> neighbors(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < size(); ++j)
      if (adjacent(i, j)) out.push_back(j);
    return out;
  }

  // Edges as index pairs (i < j) in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (adjacent(i, j)) out.emplace_back(i, j);
    return out;
  }

  std::size_t edge_count() const { return edges().size(); }

  friend bool operator==(const Graph& x, const Graph& y) {
    return x.vertices_ == y.vertices_ && x.adj_ == y.adj_;
  }

 private:
  Universe universe_;
  std::vector<VarId> vertices_;
  std::vector<std::uint8_t> adj_;
};

// Graph whose edge ideal is `ideal`. With include_isolated the vertex set is
// the whole universe; otherwise only variables occurring in a generator.
inline Graph graph_from_ideal(const SquarefreeIdeal& ideal, bool include_isolated = true) {
  std::vector<VarId> vertices;
  if (include_isolated) {
    vertices = ideal.universe().variables();
  }
  for (const auto& g : ideal.generators()) {
    if (g.degree() != 2)
      throw Error(ErrorKind::not_an_edge_ideal, "generator of degree " + std::to_string(g.degree()));
    if (!include_isolated) vertices.insert(vertices.end(), g.support().begin(), g.support().end());
  }
  Graph graph(ideal.universe(), std::move(vertices));
  for (const auto& g : ideal.generators()) graph.add_edge(g.support()[0], g.support()[1]);
  return graph;
}

inline SquarefreeIdeal edge_ideal(const Graph& graph) {
  std::vector<SquarefreeMonomial> gens;
  for (auto [i, j] : graph.edges()) gens.push_back(SquarefreeMonomial{graph.vertex(i), graph.vertex(j)});
  return SquarefreeIdeal(graph.universe(), std::move(gens));
}

inline Graph complement(const Graph& graph) {
  Graph out(graph.universe(), graph.vertices());
  for (std::size_t i = 0; i < graph.size(); ++i)
    for (std::size_t j = i + 1; j < graph.size(); ++j)
      if (!graph.adjacent(i, j)) out.add_edge(i, j);
  return out;
}

struct ChordalityCertificate {
  bool chordal = true;
  std::optional<std::vector<VarId>> elimination_order;
  std::optional<std::vector<VarId>> chordless_cycle;
};

namespace detail {

// Visit order of maximum cardinality search; ties go to the lowest index.
inline std::vector<std::size_t> maximum_cardinality_search(const Graph& graph) {
  const std::size_t n = graph.size();
  std::vector<std::size_t> weight(n, 0);
  std::vector<bool> visited(n, false);
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!visited[v] && (best == n || weight[v] > weight[best])) best = v;
    visited[best] = true;
    order.push_back(best);
    for (std::size_t w = 0; w < n; ++w)
      if (!visited[w] && graph.adjacent(best, w)) ++weight[w];
  }
  return order;
}

struct EliminationViolation {
  std::size_t vertex;
  std::size_t x;
  std::size_t y;
};

// First vertex whose later neighbours in `order` are not a clique, together
// with a non-adjacent pair of those neighbours.
inline std::optional<EliminationViolation> find_elimination_violation(const Graph& graph,
                                                                      const std::vector<std::size_t>& order) {
  const std::size_t n = graph.size();
  std::vector<std::size_t> position(n);
  for (std::size_t k = 0; k < n; ++k) position[order[k]] = k;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t v = order[k];
    std::vector<std::size_t> later;
    for (std::size_t w : graph.neighbors(v))
      if (position[w] > k) later.push_back(w);
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b)
        if (!graph.adjacent(later[a], later[b])) return EliminationViolation{v, later[a], later[b]};
  }
  return std::nullopt;
}

// Induced cycle v - x - ... - y - v, where x and y are non-adjacent neighbours
// of v: a shortest x-y path avoiding v and its other neighbours closes it.
inline std::optional<std::vector<std::size_t>> chordless_cycle_through(const Graph& graph, std::size_t v,
                                                                       std::size_t x, std::size_t y) {
  const std::size_t n = graph.size();
  const std::size_t none = n;
  std::vector<bool> blocked(n, false);
  blocked[v] = true;
  for (std::size_t w : graph.neighbors(v))
    if (w != x && w != y) blocked[w] = true;
  std::vector<std::size_t> parent(n, none);
  std::queue<std::size_t> queue;
  queue.push(x);
  parent[x] = x;
  while (!queue.empty() && parent[y] == none) {
    std::size_t cur = queue.front();
    queue.pop();
    for (std::size_t w = 0; w < n; ++w) {
      if (blocked[w] || parent[w] != none || !graph.adjacent(cur, w)) continue;
      parent[w] = cur;
      queue.push(w);
    }
  }
  if (parent[y] == none) return std::nullopt;
  std::vector<std::size_t> path;
  for (std::size_t w = y; w != x; w = parent[w]) path.push_back(w);
  path.push_back(x);
  std::reverse(path.begin(), path.end());
  std::vector<std::size_t> cycle{v};
  cycle.insert(cycle.end(), path.begin(), path.end());
  return cycle;
}

inline std::vector<VarId> to_vars(const Graph& graph, const std::vector<std::size_t>& idx) {
  std::vector<VarId> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(graph.vertex(i));
  return out;
}

}  // namespace detail

// Chordality with a certificate either way: a verified perfect elimination
// order, or an induced cycle of length >= 4.
inline ChordalityCertificate is_chordal(const Graph& graph) {
  auto visit = detail::maximum_cardinality_search(graph);
  std::vector<std::size_t> peo(visit.rbegin(), visit.rend());
  auto violation = detail::find_elimination_violation(graph, peo);
  ChordalityCertificate cert;
  if (!violation) {
    cert.chordal = true;
    cert.elimination_order = detail::to_vars(graph, peo);
    return cert;
  }
  cert.chordal = false;
  if (auto cycle = detail::chordless_cycle_through(graph, violation->vertex, violation->x, violation->y)) {
    cert.chordless_cycle = detail::to_vars(graph, *cycle);
    return cert;
  }
  // Every chordless cycle passes through some vertex with two non-adjacent
  // cycle neighbours, so this scan always succeeds on a non-chordal graph.
  for (std::size_t v = 0; v < graph.size(); ++v) {
    auto nbrs = graph.neighbors(v);
    for (std::size_t a = 0; a < nbrs.size(); ++a)
      for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
        if (graph.adjacent(nbrs[a], nbrs[b])) continue;
        if (auto cycle = detail::chordless_cycle_through(graph, v, nbrs[a], nbrs[b])) {
          cert.chordless_cycle = detail::to_vars(graph, *cycle);
          return cert;
        }
      }
  }
  throw Error(ErrorKind::invalid_argument, "chordality: elimination failed but no chordless cycle found");
}

// All induced cycles of length >= min_len, each once. A cycle is reported
// starting at its smallest vertex, oriented so the second vertex is smaller
// than the last; the list is sorted by length, then lexicographically.
inline std::vector<std::vector<VarId>> induced_cycles(const Graph& graph, std::size_t min_len,
                                                      std::size_t vertex_limit = kDefaultInducedCycleVertexLimit) {
  if (graph.size() > vertex_limit)
    throw Error(ErrorKind::resource_limit, "induced cycle enumeration limited to " +
                                               std::to_string(vertex_limit) + " vertices");
  const std::size_t n = graph.size();
  std::vector<std::vector<std::size_t>> found;
  std::vector<std::size_t> path;
  std::vector<bool> on_path(n, false);

  auto extend = [&](auto&& self, std::size_t start) -> void {
    const std::size_t last = path.back();
    for (std::size_t w = start + 1; w < n; ++w) {
      if (on_path[w] || !graph.adjacent(last, w)) continue;
      bool chord = false;
      for (std::size_t k = 1; k + 1 < path.size() && !chord; ++k) chord = graph.adjacent(w, path[k]);
      if (chord) continue;
      if (path.size() >= 2 && graph.adjacent(w, start)) {
        if (path[1] < w && path.size() + 1 >= std::max<std::size_t>(min_len, 3)) {
          found.push_back(path);
          found.back().push_back(w);
        }
        continue;
      }
      path.push_back(w);
      on_path[w] = true;
      self(self, start);
      on_path[w] = false;
      path.pop_back();
    }
  };

  for (std::size_t s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path[s] = true;
    extend(extend, s);
    on_path[s] = false;
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<std::vector<VarId>> out;
  out.reserve(found.size());
  for (const auto& c : found) out.push_back(detail::to_vars(graph, c));
  return out;
}

// Vertex list line, then one "u -- v" line per edge.
inline std::string render(const Graph& graph) {
  std::string s = "vertices:";
  for (VarId v : graph.vertices()) s += " " + graph.universe().name(v);
  s += '\n';
  for (auto [i, j] : graph.edges())
    s += graph.universe().name(graph.vertex(i)) + " -- " + graph.universe().name(graph.vertex(j)) + '\n';
  return s;
}

inline std::string render_vertices(const Universe& u, const std::vector<VarId>& vs, const char* sep = " ") {
  std::string s;
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (k) s += sep;
    s += u.name(vs[k]);
  }
  return s;
}

}  // namespace acmtetra
