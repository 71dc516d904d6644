#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cfc/color.hpp"
#include "cfc/formula.hpp"
#include "cfc/graph.hpp"
#include "cfc/solve.hpp"

namespace cfc {

enum class RoleKind { Variable, Clause, GadgetMiddle, GadgetFar, Pendant, Hub, Copy };

/// What a vertex of a constructed graph stands for. Indices are 0-based.
struct Role {
  RoleKind kind = RoleKind::Variable;
  std::uint32_t index = 0;  // variable, clause or hub index
  // Copy vertices: the hub pair (i < j, 0-based), side (0 = a, 1 = b) and the
  // original vertex.
  std::uint32_t pair_i = 0, pair_j = 0, side = 0, original = 0;

  friend bool operator==(const Role&, const Role&) = default;
};

struct ReductionOutput {
  Graph graph;
  std::vector<Role> roles;  // one per vertex
};

/// Bipartite incidence graph: variables 0..n-1, clauses n..n+m-1.
ReductionOutput build_associated_graph(const Formula& phi);

/// Incidence graph plus, for each variable, a path far - middle - x_i.
/// Layout: variables, clauses, then (middle_i, far_i) pairs.
ReductionOutput build_g_prime(const Formula& phi);

/// Incidence graph plus a pendant v_i on each variable.
/// Layout: variables, clauses, then pendants.
ReductionOutput build_g_double_prime(const Formula& phi);

/// Twelve disjoint copies G^z_{ij} (1 <= i < j <= 4, z in {a, b}) and hubs
/// v_1..v_4, with v_i and v_j joined to every vertex of G^a_{ij} and G^b_{ij}.
/// Copy q = 2 * pair + side occupies [q*n, (q+1)*n); hubs follow.
ReductionOutput build_h_gadget(const Graph& g);

/// Vertex id of the copy of `original` in G^side_{ij} (0-based hub indices).
Vertex h_gadget_copy_vertex(std::size_t n, std::uint32_t i, std::uint32_t j, std::uint32_t side,
                            Vertex original);
Vertex h_gadget_hub(std::size_t n, std::uint32_t hub);

enum class CfVariant { On, Cn };

/// Maps a 1-in-3 solution to a PIMDS of G'_phi (On) or a PIDS of G''_phi
/// (Cn). Throws InputError if the assignment is not a 1-in-3 solution.
VertexSet truth_to_certificate(const Formula& phi, const TruthAssignment& a, CfVariant variant);

/// Reads the truth assignment off a certificate: x_i is true iff its
/// variable vertex is in s. Throws InputError if s is not a certificate.
TruthAssignment certificate_to_truth(const Formula& phi, std::span<const Vertex> s,
                                     CfVariant variant);

/// CFCN* coloring of g under (possibly reduced) lists, or nullopt.
using InnerSolver =
    std::function<std::optional<PartialColoring>(const Graph&, const ListAssignment&)>;

InnerSolver default_inner_solver(const SearchBudget& budget = {});

struct HgStrategyResult {
  PartialColoring coloring;
  bool all_hubs_distinct = false;
  // Hub pair sharing a color (0-based) when not all distinct.
  std::optional<std::pair<std::uint32_t, std::uint32_t>> duplicated;
};

/// Colors H_g from a 2-assignment when g is 1-CFCN*-choosable: hubs v_1..v_3
/// first (at most two equal), one vertex w of G^a_{14} avoiding v_1's color,
/// and when two hubs share color c, both copies between them via `inner` on
/// lists with c removed. Throws Error if the inner solver fails.
HgStrategyResult hg_strategy(const Graph& g, const ListAssignment& lists, const InnerSolver& inner);

/// f(x_i) = fx(v_i), f(y_i) = fy(v_i). Inputs must be CFCN* colorings of g
/// (respecting the X-side / Y-side lists of `dg_lists` when given); the result
/// is a verified CFON* coloring of the extended double cover.
PartialColoring edc_cn_to_on(const Graph& g, const PartialColoring& fx, const PartialColoring& fy,
                             const ListAssignment* dg_lists = nullptr);

/// f(v_i) = f'(x_i). f' must be a CFON* coloring of the extended double cover
/// (respecting L'_{x_i} = L'_{y_i} = L_{v_i} when `lists` is given); the
/// result is a verified CFCN* coloring of g.
PartialColoring edc_on_to_cn(const Graph& g, const PartialColoring& fprime,
                             const ListAssignment* lists = nullptr);

std::string role_to_string(const Role& r);  // file form, 1-indexed payload

}  // namespace cfc
