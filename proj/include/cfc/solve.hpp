#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "cfc/color.hpp"
#include "cfc/formula.hpp"
#include "cfc/graph.hpp"

namespace cfc {

/// ON*/CN* are partial colorings of the open/closed neighborhood hypergraph;
/// ON/CN insist on coloring every vertex.
enum class Variant { OnStar, CnStar, On, Cn };

std::string_view to_string(Variant v);
/// Accepts on-star, cn-star, on, cn. Throws InputError otherwise.
Variant parse_variant(std::string_view s);

struct SolveInstance {
  Hypergraph target;
  bool require_total = false;

  /// Throws InputError for ON variants on graphs with isolated vertices.
  static SolveInstance for_graph(const Graph& g, Variant v);
  static SolveInstance for_hypergraph(Hypergraph h, bool require_total);
};

/// Explicit limits; exceeding any of them throws ResourceExceeded.
struct SearchBudget {
  std::uint64_t max_nodes = 200'000'000;       // per solve_list_cf call
  std::uint64_t max_assignments = 5'000'000;   // adversary lists in decide_choosable
  std::size_t max_vertices = 4096;
  std::uint32_t max_formula_vars = 26;
};

struct SolveStats {
  std::uint64_t nodes = 0;
};

/// Exhaustive backtracking for an L-CF* coloring. Returns a coloring that
/// passes verify_cf with the lists, or nullopt iff none exists.
std::optional<PartialColoring> solve_list_cf(const SolveInstance& inst, const ListAssignment& lists,
                                             const SearchBudget& budget = {},
                                             SolveStats* stats = nullptr);

struct ChromaticResult {
  std::size_t k = 0;
  PartialColoring coloring;
};

/// Least k with a coloring from the constant lists {1..k}.
ChromaticResult chromatic_number(const SolveInstance& inst, const SearchBudget& budget = {});

struct ChoosabilityCertificate {
  bool yes = false;
  std::optional<ListAssignment> witness;  // failing k-assignment when !yes
  std::uint64_t assignments_checked = 0;
};

/// Decides k-CF*-choosability. Adversary lists range over the colors
/// {1..k*n} in canonical form (sorted lists, fresh colors introduced in
/// increasing order); the first failing assignment in that order is returned.
ChoosabilityCertificate decide_choosable(const SolveInstance& inst, std::size_t k,
                                         const SearchBudget& budget = {});

/// Calls visit(lists) for every canonical k-assignment on n vertices over
/// {1..k*n} until visit returns false. Returns the number visited.
std::uint64_t for_each_canonical_assignment(std::size_t n, std::size_t k, std::uint64_t limit,
                                            const std::function<bool(const ListAssignment&)>& visit);

/// A set hitting every open neighborhood exactly once, if one exists.
std::optional<VertexSet> find_pimds(const Graph& g, const SearchBudget& budget = {});
/// A set hitting every closed neighborhood exactly once, if one exists.
std::optional<VertexSet> find_pids(const Graph& g, const SearchBudget& budget = {});

/// Exact hitting set: every edge of h contains exactly one chosen vertex.
std::optional<VertexSet> find_exact_hitting_set(const Hypergraph& h, const SearchBudget& budget = {});

/// Exhaustive 1-in-3 search; returns the solution with the smallest bitmask
/// (x1 is the low bit).
std::optional<TruthAssignment> solve_one_in_three(const Formula& phi,
                                                  const SearchBudget& budget = {});

}  // namespace cfc
