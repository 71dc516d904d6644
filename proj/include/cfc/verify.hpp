#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cfc/color.hpp"
#include "cfc/graph.hpp"

namespace cfc {

enum class EdgeStatus { Unique, NoColoredVertex, NoUniqueColor };

struct EdgeCheck {
  EdgeStatus status = EdgeStatus::NoColoredVertex;
  // Set when status == Unique: the smallest uniquely-occurring color and the
  // vertex carrying it.
  std::optional<Vertex> witness;
  std::optional<ColorId> color;
};

struct VerificationReport {
  bool valid = false;
  std::vector<EdgeCheck> edges;          // one per hyperedge
  std::vector<Vertex> list_violations;   // colored outside their list
  std::vector<Vertex> uncolored;         // only filled when totality is required

  /// Human-readable summary, 1-indexed.
  std::string to_text() const;
  /// One line per edge plus violation lines; stable for golden files.
  std::string to_machine() const;
};

/// Checks the conflict-free property on every hyperedge. Uncolored vertices
/// are ignored when counting. Violations are reported, never thrown, except
/// for a coloring whose size does not match the hypergraph.
VerificationReport verify_cf(const Hypergraph& h, const PartialColoring& f,
                             const ListAssignment* lists = nullptr, bool require_total = false);

/// Every vertex has exactly one neighbor in s (so s induces a perfect matching).
bool is_pimds(const Graph& g, std::span<const Vertex> s);

/// s is independent and every vertex outside s has exactly one neighbor in s.
bool is_pids(const Graph& g, std::span<const Vertex> s);

}  // namespace cfc
