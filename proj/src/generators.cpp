#include "cfc/generators.hpp"

#include <algorithm>
#include <numeric>

#include "cfc/errors.hpp"

namespace cfc::gen {

Graph complete(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return b.build();
}

Graph path(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) b.add_edge(v - 1, v);
  return b.build();
}

Graph cycle(std::size_t n) {
  if (n < 3) throw InputError("a cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, static_cast<Vertex>((v + 1) % n));
  return b.build();
}

Graph star(std::size_t leaves) {
  GraphBuilder b(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) b.add_edge(0, v);
  return b.build();
}

Graph empty(std::size_t n) { return Graph(n); }

Graph gnp(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) b.add_edge(u, v);
    }
  }
  return b.build();
}

Graph line_graph(const Graph& g) {
  const auto edges = g.edges();
  GraphBuilder b(edges.size());
  for (Vertex i = 0; i < edges.size(); ++i) {
    for (Vertex j = i + 1; j < edges.size(); ++j) {
      auto [a, c] = edges[i];
      auto [d, e] = edges[j];
      if (a == d || a == e || c == d || c == e) b.add_edge(i, j);
    }
  }
  return b.build();
}

void for_each_graph(std::size_t n, const std::function<void(const Graph&)>& visit) {
  std::vector<Edge> slots;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  }
  if (slots.size() > 30) throw ResourceExceeded("too many graphs to enumerate");
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    edges.clear();
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (mask >> i & 1) edges.push_back(slots[i]);
    }
    visit(Graph(n, edges));
  }
}

bool is_connected(const Graph& g) {
  if (g.size() == 0) return true;
  std::vector<char> seen(g.size(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == g.size();
}

Formula random_formula(std::uint32_t num_vars, std::size_t num_clauses, Rng& rng) {
  if (num_vars < 3 && num_clauses > 0) throw InputError("clauses need at least 3 variables");
  Formula phi;
  phi.num_vars = num_vars;
  std::vector<std::uint32_t> vars(num_vars);
  std::iota(vars.begin(), vars.end(), 0u);
  for (std::size_t i = 0; i < num_clauses; ++i) {
    std::shuffle(vars.begin(), vars.end(), rng);
    Formula::Clause c{vars[0], vars[1], vars[2]};
    std::sort(c.begin(), c.end());
    phi.clauses.push_back(c);
  }
  return phi;
}

Hypergraph random_hypergraph(std::size_t n, std::size_t edges, std::size_t min_size, std::size_t max_size,
                             Rng& rng) {
  if (min_size < 1 || min_size > max_size || max_size > n) throw InputError("bad hyperedge size range");
  std::uniform_int_distribution<std::size_t> size_dist(min_size, max_size);
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0u);
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < edges; ++i) {
    const std::size_t s = size_dist(rng);
    // partial Fisher-Yates
    for (std::size_t j = 0; j < s; ++j) {
      std::uniform_int_distribution<std::size_t> pick(j, n - 1);
      std::swap(all[j], all[pick(rng)]);
    }
    out.emplace_back(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(s));
  }
  return Hypergraph(n, std::move(out));
}

Formula running_example_formula() {
  Formula phi;
  phi.num_vars = 5;
  phi.clauses = {{0, 1, 2}, {0, 1, 4}, {0, 2, 4}, {2, 3, 4}};
  return phi;
}

}  // namespace cfc::gen
