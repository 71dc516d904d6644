#pragma once

// Brute-force reference implementations. They share only the data types with
// the library; `choosable` alone calls solve_list_cf for the inner test,
// which list_cf checks separately.

#include <optional>
#include <vector>

#include "cfc/color.hpp"
#include "cfc/formula.hpp"
#include "cfc/graph.hpp"

namespace oracle {

using cfc::ColorList;
using cfc::Graph;
using cfc::Hypergraph;
using cfc::ListAssignment;
using cfc::PartialColoring;
using cfc::Vertex;

std::vector<std::vector<Vertex>> open_edges(const Graph& g);
std::vector<std::vector<Vertex>> closed_edges(const Graph& g);

bool is_cf(const std::vector<std::vector<Vertex>>& edges, const PartialColoring& f, bool total);

/// Tries all prod(|L_v| + 1) partial colorings (or prod |L_v| when total).
std::optional<PartialColoring> list_cf(std::size_t n, const std::vector<std::vector<Vertex>>& edges,
                                       const ListAssignment& lists, bool total);

std::size_t chromatic(std::size_t n, const std::vector<std::vector<Vertex>>& edges, bool total);

/// Every vertex sees exactly one chosen vertex in N(v) (open) or N[v] (closed).
bool exact_domination_exists(const Graph& g, bool closed);

bool one_in_three_exists(const cfc::Formula& phi);

/// Every k-subset list of {1..universe} on every vertex.
bool choosable(std::size_t n, const std::vector<std::vector<Vertex>>& edges, bool total, std::size_t k,
               std::size_t universe);

/// Number of vertices colored with a color repeated in the edge.
std::size_t repeated(const std::vector<Vertex>& edge, const PartialColoring& f);

}  // namespace oracle
