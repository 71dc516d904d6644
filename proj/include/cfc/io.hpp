#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "cfc/color.hpp"
#include "cfc/formula.hpp"
#include "cfc/graph.hpp"
#include "cfc/reductions.hpp"

namespace cfc::io {

// Text formats use 1-indexed vertices. `c` lines and blank lines are
// ignored. Parse errors throw InputError with a "line N:" prefix.

Graph read_graph(std::istream& in);                 // p graph n m / e u v
Hypergraph read_hypergraph(std::istream& in);       // p hgraph n m / h v1 v2 ...
PartialColoring read_coloring(std::istream& in, std::size_t n);  // v vertex color
ListAssignment read_lists(std::istream& in, std::size_t n);      // l v c1.. / L v lo hi
Formula read_formula(std::istream& in);             // p cnf n m, clauses end in 0

void write_graph(std::ostream& out, const Graph& g);
void write_hypergraph(std::ostream& out, const Hypergraph& h);
void write_coloring(std::ostream& out, const PartialColoring& f);
void write_lists(std::ostream& out, const ListAssignment& lists);
void write_formula(std::ostream& out, const Formula& phi);
void write_roles(std::ostream& out, const std::vector<Role>& roles);

// File helpers; throw InputError if the file cannot be opened.
Graph load_graph(const std::string& path);
Hypergraph load_hypergraph(const std::string& path);
PartialColoring load_coloring(const std::string& path, std::size_t n);
ListAssignment load_lists(const std::string& path, std::size_t n);
Formula load_formula(const std::string& path);

/// "RANGE:r" gives every vertex the list [0, r); anything else is a lists file.
ListAssignment load_lists_arg(std::string_view arg, std::size_t n);

}  // namespace cfc::io
