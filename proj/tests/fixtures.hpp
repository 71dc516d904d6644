#pragma once

#include <initializer_list>
#include <utility>

#include "cfc/color.hpp"
#include "cfc/graph.hpp"

namespace fx {

// Graph from 1-indexed edges, the way the examples are written.
inline cfc::Graph g1(std::size_t n, std::initializer_list<std::pair<int, int>> edges) {
  cfc::GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(static_cast<cfc::Vertex>(u - 1), static_cast<cfc::Vertex>(v - 1));
  return b.build();
}

inline cfc::Graph c4() { return g1(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}); }
inline cfc::Graph k3() { return g1(3, {{1, 2}, {2, 3}, {1, 3}}); }
inline cfc::Graph p4() { return g1(4, {{1, 2}, {2, 3}, {3, 4}}); }
inline cfc::Graph claw() { return g1(4, {{1, 2}, {1, 3}, {1, 4}}); }

// Coloring from (1-indexed vertex, color) pairs.
inline cfc::PartialColoring col(std::size_t n, std::initializer_list<std::pair<int, std::uint64_t>> cs) {
  cfc::PartialColoring f(n);
  for (auto [v, c] : cs) f.set(static_cast<cfc::Vertex>(v - 1), cfc::ColorId{c});
  return f;
}

inline cfc::ListAssignment all(std::size_t n, std::initializer_list<std::uint64_t> colors) {
  std::vector<cfc::ColorId> cs;
  for (auto c : colors) cs.push_back(cfc::ColorId{c});
  return cfc::ListAssignment::uniform(n, cfc::ColorList::of(cs));
}

inline cfc::VertexSet vs(std::initializer_list<int> one_indexed) {
  cfc::VertexSet s;
  for (int v : one_indexed) s.push_back(static_cast<cfc::Vertex>(v - 1));
  return s;
}

constexpr std::uint64_t R = 1, G = 2, B = 3;

}  // namespace fx
