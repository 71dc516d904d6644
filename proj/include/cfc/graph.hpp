#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace cfc {

using Vertex = std::uint32_t;
using VertexSet = std::vector<Vertex>;  // sorted ascending unless noted
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  /// Throws InputError on self-loops, duplicate edges or out-of-range endpoints.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  std::size_t max_degree() const;
  std::size_t min_degree() const;
  bool has_isolated_vertex() const;

  /// Edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

/// Accumulates edges, then freezes into a Graph.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : n_(n) {}
  GraphBuilder& add_edge(Vertex u, Vertex v) {
    edges_.emplace_back(u, v);
    return *this;
  }
  std::size_t size() const noexcept { return n_; }
  Graph build() const { return Graph(n_, edges_); }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

/// Vertex set plus a list of non-empty hyperedges. Duplicate hyperedges are
/// kept so derived hypergraphs stay aligned with the vertices they came from.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(std::size_t n) : n_(n) {}
  /// Each edge is sorted and deduplicated; throws on empty edges or
  /// out-of-range vertices.
  Hypergraph(std::size_t n, std::vector<VertexSet> edges);

  std::size_t size() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<VertexSet>& edges() const noexcept { return edges_; }
  std::span<const Vertex> edge(std::size_t i) const { return edges_[i]; }

  /// incidence()[v] lists the indices of edges containing v.
  std::vector<std::vector<std::size_t>> incidence() const;

 private:
  std::size_t n_ = 0;
  std::vector<VertexSet> edges_;
};

enum class Neighborhood { Open, Closed };

/// One hyperedge per vertex, in vertex order: N(v) for Open, N[v] for Closed.
/// Open mode rejects isolated vertices.
Hypergraph derived_hypergraph(const Graph& g, Neighborhood mode);

/// Largest t such that g has an induced K_{1,t}; g is K_{1,k}-free for k > t.
std::size_t max_star(const Graph& g);

/// Greedy scan in the given order. An empty order means 0..n-1.
VertexSet maximal_independent_set(const Graph& g, std::span<const Vertex> order = {});

struct GreedyClasses {
  std::vector<VertexSet> classes;  // S_1..S_s, each sorted
  std::size_t count() const noexcept { return classes.size(); }
};

/// First-fit proper coloring in the given order; class i holds color i+1.
GreedyClasses greedy_color_classes(const Graph& g, std::span<const Vertex> order = {});

/// Bipartite double with x_i = i, y_i = n + i and x_i ~ y_j iff i = j or
/// v_i ~ v_j.
Graph extended_double_cover(const Graph& g);

struct HypergraphStats {
  std::size_t max_degree = 0;  // most edges containing one vertex
  std::size_t gamma = 0;       // most other edges one edge intersects
  std::size_t min_edge_size = 0;
  std::size_t max_edge_size = 0;
  friend bool operator==(const HypergraphStats&, const HypergraphStats&) = default;
};

HypergraphStats hypergraph_stats(const Hypergraph& h);

/// Induced subgraph on `keep` (sorted). Vertex i of the result is keep[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

bool is_independent(const Graph& g, std::span<const Vertex> s);
bool is_maximal_independent(const Graph& g, std::span<const Vertex> s);

}  // namespace cfc
