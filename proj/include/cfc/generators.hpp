#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "cfc/formula.hpp"
#include "cfc/graph.hpp"

namespace cfc::gen {

using Rng = std::mt19937_64;

Graph complete(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph star(std::size_t leaves);  // center 0
Graph empty(std::size_t n);

/// Erdos-Renyi G(n, p).
Graph gnp(std::size_t n, double p, Rng& rng);

/// Vertices are the edges of g in edges() order; adjacent iff they share an
/// endpoint. Always claw-free.
Graph line_graph(const Graph& g);

/// Calls visit on every labelled graph on n vertices (2^(n choose 2) of them).
void for_each_graph(std::size_t n, const std::function<void(const Graph&)>& visit);

bool is_connected(const Graph& g);

/// Random positive 3-CNF with distinct variables per clause.
Formula random_formula(std::uint32_t num_vars, std::size_t num_clauses, Rng& rng);

/// Edges of sizes uniform in [min_size, max_size] drawn without replacement
/// from n vertices.
Hypergraph random_hypergraph(std::size_t n, std::size_t edges, std::size_t min_size,
                             std::size_t max_size, Rng& rng);

/// The formula with four clauses over x1..x5 used as the running example
/// in the NP-hardness construction; its unique 1-in-3 solution is {x1, x4}.
Formula running_example_formula();

}  // namespace cfc::gen
