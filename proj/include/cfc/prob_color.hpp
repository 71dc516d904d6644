#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cfc/color.hpp"
#include "cfc/graph.hpp"
#include "cfc/solve.hpp"

namespace cfc {

/// Constants of the near-uniform hypergraph colorer. Defaults are the
/// published values: lists of 32*beta colors, bad events X_E >= 7|E|/8,
/// guarantee of |E|/8 unique colors, alpha = max(2^12, ceil(136 ln(16 Gamma))).
struct LemmaConfig {
  double list_factor = 32.0;
  double bad_fraction = 7.0 / 8.0;
  double unique_fraction = 1.0 / 8.0;
  double alpha_floor = 4096.0;
  double alpha_log_factor = 136.0;
  double alpha_log_multiplier = 16.0;
  std::optional<std::size_t> alpha_override;
  std::uint64_t max_rounds = 100'000;
  std::uint64_t rng_seed = 0;
  bool enforce_preconditions = true;

  /// Throws InputError if the fractions or factors are out of range.
  void validate() const;
  std::size_t effective_alpha(std::size_t gamma) const;
};

struct LemmaResult {
  PartialColoring coloring;  // total
  std::uint64_t rounds = 0;  // number of edges resampled
};

/// Vertices of `edge` whose color occurs more than once in it. Throws
/// InputError if a vertex of the edge is uncolored.
std::size_t count_non_unique(std::span<const Vertex> edge, const PartialColoring& f);

/// Colors every vertex uniformly from its list, then repeatedly resamples the
/// lowest-indexed edge with X_E >= bad_fraction*|E| until none is left.
/// Throws ResampleFailure after max_rounds resamplings.
LemmaResult near_uniform_color(const Hypergraph& h, const ListAssignment& lists,
                               const LemmaConfig& cfg);

/// Colors a subset of the independent set A so that every v in A u B sees a
/// color exactly once in N[v] n A. Greedy first, exhaustive fallback.
/// Returns a coloring over all of g's vertices (only A colored).
PartialColoring color_h1(const Graph& g, std::span<const Vertex> A, std::span<const Vertex> B,
                         const ListAssignment& lists, const SearchBudget& budget = {});

struct ReducedLists {
  ListAssignment lists;                  // indexed by position in B
  std::vector<std::vector<ColorId>> x;   // X_u per position in B
  std::vector<std::vector<ColorId>> y;   // Y_u per position in B
};

struct ReductionBounds {
  std::size_t k = 0;
  std::size_t b = 0;
};

/// L''_u = L_u minus the witness colors of u's A-neighbors (X_u) and of the
/// B-vertices in N[u] (Y_u); a vertex without a witness adds nothing.
/// With bounds, |X_u| <= k-1 and
/// |Y_u| <= (k-1)(b-1)+1 are asserted. Throws InvariantViolation on an empty
/// reduced list.
ReducedLists reduce_lists(const Graph& g, std::span<const Vertex> B, const PartialColoring& f1,
                          const ListAssignment& lists,
                          std::optional<ReductionBounds> bounds = std::nullopt);

/// Constants of the K_{1,k}-free pipeline. published() holds the original values
/// b = min{s, max{2^12, 272 ln(4 Delta)}}, r = 2^18 k ln Delta and the branch
/// test k <= ln Delta / 8.
struct PipelineConfig {
  double b_floor = 4096.0;
  double b_log_factor = 272.0;
  double r_factor = 262144.0;
  double branch_divisor = 8.0;
  double lemma_list_factor = 32.0;
  bool scaled_mode = false;
  // When false the main construction runs even if k > ln Delta / divisor.
  bool apply_branch_test = true;
  std::optional<std::size_t> k_override;
  std::uint64_t rng_seed = 0;
  std::size_t retry_limit = 20;
  std::uint64_t lemma_max_rounds = 10'000;
  std::vector<Vertex> mis_order;  // empty: by vertex id
  SearchBudget fallback_budget;

  static PipelineConfig published();
  /// Small constants so the second stage (C nonempty) runs on desk-size graphs.
  static PipelineConfig scaled();

  void validate() const;
};

struct PipelineTrace {
  bool scaled_mode = false;
  double b_floor = 0, b_log_factor = 0, r_factor = 0, branch_divisor = 0;
  std::size_t k = 0;
  std::size_t delta = 0;
  std::uint64_t r = 0;
  bool delegated = false;

  VertexSet A;
  std::vector<VertexSet> classes;  // greedy classes of G' = G - A, original ids
  std::size_t b = 0;
  VertexSet B, C;
  PartialColoring f1;
  std::vector<std::vector<ColorId>> x;  // X_u per position in B
  std::vector<std::vector<ColorId>> y;  // Y_u per position in B
  std::vector<std::size_t> reduced_sizes;  // |L''_u| per position in B
  std::size_t h2_edges = 0;
  std::size_t h2_gamma = 0;
  PartialColoring f2;
  std::uint64_t resample_rounds = 0;
  std::size_t attempts = 0;
  std::uint64_t seed_used = 0;
  PartialColoring final_coloring;

  std::string to_text() const;
};

struct PipelineResult {
  PartialColoring coloring;
  PipelineTrace trace;
};

/// Computes an L-CFCN* coloring of g. Every returned coloring has passed
/// verify_cf on the closed-neighborhood hypergraph with the original lists.
/// Throws InputError when some list is shorter than r, Error when the retry
/// limit is exhausted.
PipelineResult cfcn_pipeline(const Graph& g, const ListAssignment& lists, const PipelineConfig& cfg);

/// Checks the structural properties of a non-delegated trace. Empty when all hold.
std::vector<std::string> check_trace_invariants(const Graph& g, const PipelineTrace& t);

}  // namespace cfc
