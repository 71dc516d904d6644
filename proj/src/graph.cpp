#include "cfc/graph.hpp"

#include <algorithm>
#include <string>

#include "cfc/errors.hpp"

namespace cfc {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adj_(n) {
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InputError("edge endpoint out of range: " + std::to_string(u + 1) + " " +
                       std::to_string(v + 1));
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u + 1));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& nb = adj_[v];
    std::sort(nb.begin(), nb.end());
    auto dup = std::adjacent_find(nb.begin(), nb.end());
    if (dup != nb.end()) {
      throw InputError("duplicate edge " + std::to_string(v + 1) + " " + std::to_string(*dup + 1));
    }
  }
  m_ = edges.size();
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& nb : adj_) d = std::max(d, nb.size());
  return d;
}

std::size_t Graph::min_degree() const {
  if (adj_.empty()) return 0;
  std::size_t d = adj_.front().size();
  for (const auto& nb : adj_) d = std::min(d, nb.size());
  return d;
}

bool Graph::has_isolated_vertex() const {
  return std::any_of(adj_.begin(), adj_.end(), [](const auto& nb) { return nb.empty(); });
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < adj_.size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Hypergraph::Hypergraph(std::size_t n, std::vector<VertexSet> edges) : n_(n), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto& e = edges_[i];
    if (e.empty()) throw InputError("hyperedge " + std::to_string(i + 1) + " is empty");
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.back() >= n) {
      throw InputError("hyperedge " + std::to_string(i + 1) + " has vertex " +
                       std::to_string(e.back() + 1) + " out of range");
    }
  }
}

std::vector<std::vector<std::size_t>> Hypergraph::incidence() const {
  std::vector<std::vector<std::size_t>> inc(n_);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    for (Vertex v : edges_[i]) inc[v].push_back(i);
  }
  return inc;
}

Hypergraph derived_hypergraph(const Graph& g, Neighborhood mode) {
  std::vector<VertexSet> edges;
  edges.reserve(g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    auto nb = g.neighbors(v);
    VertexSet e(nb.begin(), nb.end());
    if (mode == Neighborhood::Closed) {
      e.insert(std::lower_bound(e.begin(), e.end(), v), v);
    } else if (e.empty()) {
      throw InputError("vertex " + std::to_string(v + 1) +
                       " is isolated; open neighborhoods need every vertex to have a neighbor");
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph(g.size(), std::move(edges));
}

namespace {

// Maximum independent set size among `cands` (local indices into `local`),
// by include/exclude branching with a size bound.
void mis_search(const std::vector<std::vector<char>>& adj, std::vector<std::size_t>& cands,
                std::size_t current, std::size_t& best) {
  if (current + cands.size() <= best) return;
  if (cands.empty()) {
    best = std::max(best, current);
    return;
  }
  std::size_t v = cands.back();
  cands.pop_back();
  std::vector<std::size_t> rest;
  rest.reserve(cands.size());
  for (std::size_t u : cands) {
    if (!adj[v][u]) rest.push_back(u);
  }
  mis_search(adj, rest, current + 1, best);
  mis_search(adj, cands, current, best);
  cands.push_back(v);
}

}  // namespace

std::size_t max_star(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.size(); ++v) {
    auto nb = g.neighbors(v);
    if (nb.size() <= best) continue;
    std::vector<std::vector<char>> adj(nb.size(), std::vector<char>(nb.size(), 0));
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) adj[i][j] = adj[j][i] = 1;
      }
    }
    std::vector<std::size_t> cands(nb.size());
    for (std::size_t i = 0; i < cands.size(); ++i) cands[i] = i;
    mis_search(adj, cands, 0, best);
  }
  return best;
}

namespace {

std::vector<Vertex> resolve_order(const Graph& g, std::span<const Vertex> order) {
  std::vector<Vertex> out;
  if (order.empty()) {
    out.resize(g.size());
    for (Vertex v = 0; v < g.size(); ++v) out[v] = v;
    return out;
  }
  std::vector<char> seen(g.size(), 0);
  for (Vertex v : order) {
    if (v >= g.size() || seen[v]) throw InputError("vertex order is not a permutation");
    seen[v] = 1;
  }
  if (order.size() != g.size()) throw InputError("vertex order is not a permutation");
  return {order.begin(), order.end()};
}

}  // namespace

VertexSet maximal_independent_set(const Graph& g, std::span<const Vertex> order) {
  std::vector<char> blocked(g.size(), 0);
  VertexSet out;
  for (Vertex v : resolve_order(g, order)) {
    if (blocked[v]) continue;
    out.push_back(v);
    blocked[v] = 1;
    for (Vertex u : g.neighbors(v)) blocked[u] = 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

GreedyClasses greedy_color_classes(const Graph& g, std::span<const Vertex> order) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> color(g.size(), kNone);
  std::vector<char> used;
  GreedyClasses out;
  for (Vertex v : resolve_order(g, order)) {
    used.assign(g.degree(v) + 1, 0);
    for (Vertex u : g.neighbors(v)) {
      if (color[u] != kNone && color[u] < used.size()) used[color[u]] = 1;
    }
    std::size_t c = 0;
    while (used[c]) ++c;
    color[v] = c;
    if (c == out.classes.size()) out.classes.emplace_back();
    out.classes[c].push_back(v);
  }
  for (auto& cls : out.classes) std::sort(cls.begin(), cls.end());
  return out;
}

Graph extended_double_cover(const Graph& g) {
  const auto n = static_cast<Vertex>(g.size());
  GraphBuilder b(2 * n);
  for (Vertex i = 0; i < n; ++i) {
    b.add_edge(i, n + i);
    for (Vertex j : g.neighbors(i)) b.add_edge(i, n + j);
  }
  return b.build();
}

HypergraphStats hypergraph_stats(const Hypergraph& h) {
  HypergraphStats s;
  if (h.edge_count() == 0) return s;
  auto inc = h.incidence();
  for (const auto& e : inc) s.max_degree = std::max(s.max_degree, e.size());
  s.min_edge_size = h.edge(0).size();
  std::vector<std::size_t> mark(h.edge_count(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    auto e = h.edge(i);
    s.min_edge_size = std::min(s.min_edge_size, e.size());
    s.max_edge_size = std::max(s.max_edge_size, e.size());
    std::size_t touching = 0;
    mark[i] = i;
    for (Vertex v : e) {
      for (std::size_t j : inc[v]) {
        if (mark[j] != i) {
          mark[j] = i;
          ++touching;
        }
      }
    }
    s.gamma = std::max(s.gamma, touching);
  }
  return s;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<Vertex> pos(g.size(), static_cast<Vertex>(-1));
  for (Vertex i = 0; i < keep.size(); ++i) pos[keep[i]] = i;
  GraphBuilder b(keep.size());
  for (Vertex i = 0; i < keep.size(); ++i) {
    for (Vertex u : g.neighbors(keep[i])) {
      if (pos[u] != static_cast<Vertex>(-1) && pos[u] > i) b.add_edge(i, pos[u]);
    }
  }
  return b.build();
}

bool is_independent(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

bool is_maximal_independent(const Graph& g, std::span<const Vertex> s) {
  if (!is_independent(g, s)) return false;
  std::vector<char> covered(g.size(), 0);
  for (Vertex v : s) {
    covered[v] = 1;
    for (Vertex u : g.neighbors(v)) covered[u] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

}  // namespace cfc
