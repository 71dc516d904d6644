#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cfc/graph.hpp"

namespace cfc {

/// Opaque color label.
struct ColorId {
  std::uint64_t value = 0;
  friend auto operator<=>(const ColorId&, const ColorId&) = default;
};

/// A vertex's permissible colors in ascending order: either an explicit set
/// or a contiguous range [lo, hi) minus a small set of removed colors. The
/// range form avoids materializing very long lists.
class ColorList {
 public:
  /// Sorts and deduplicates; throws InputError if empty.
  static ColorList of(std::vector<ColorId> colors);
  /// Throws InputError if lo >= hi.
  static ColorList range(std::uint64_t lo, std::uint64_t hi);

  std::size_t size() const noexcept;
  /// i-th color in ascending order.
  ColorId at(std::size_t i) const;
  ColorId front() const { return at(0); }
  bool contains(ColorId c) const;
  bool is_range() const noexcept { return ranged_; }
  std::uint64_t range_lo() const noexcept { return lo_; }
  std::uint64_t range_hi() const noexcept { return hi_; }

  /// Copy with the given colors removed. May be empty; callers check.
  ColorList without(std::span<const ColorId> remove) const;
  /// Materializes the colors; intended for short lists.
  std::vector<ColorId> colors() const;

  friend bool operator==(const ColorList& a, const ColorList& b);

 private:
  bool ranged_ = false;
  std::uint64_t lo_ = 0, hi_ = 0;
  std::vector<ColorId> items_;  // explicit colors, or removed colors when ranged
};

/// Per-vertex color lists.
class ListAssignment {
 public:
  ListAssignment() = default;
  explicit ListAssignment(std::vector<ColorList> lists) : lists_(std::move(lists)) {}

  /// Every vertex gets the same list.
  static ListAssignment uniform(std::size_t n, const ColorList& list);
  /// The classical assignment: every list is {1..k}.
  static ListAssignment constant(std::size_t n, std::size_t k);

  std::size_t size() const noexcept { return lists_.size(); }
  const ColorList& operator[](Vertex v) const { return lists_[v]; }
  ColorList& operator[](Vertex v) { return lists_[v]; }
  const std::vector<ColorList>& lists() const noexcept { return lists_; }

  std::size_t min_list_size() const;
  /// True when every list has exactly k colors.
  bool is_k_assignment(std::size_t k) const;

  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

 private:
  std::vector<ColorList> lists_;
};

/// f : V' -> colors for some V' subset of V.
class PartialColoring {
 public:
  PartialColoring() = default;
  explicit PartialColoring(std::size_t n) : colors_(n) {}

  std::size_t size() const noexcept { return colors_.size(); }
  const std::optional<ColorId>& operator[](Vertex v) const { return colors_[v]; }
  void set(Vertex v, ColorId c) { colors_[v] = c; }
  void clear(Vertex v) { colors_[v].reset(); }
  bool colored(Vertex v) const { return colors_[v].has_value(); }

  bool is_total() const;
  std::size_t colored_count() const;
  VertexSet domain() const;

  friend bool operator==(const PartialColoring&, const PartialColoring&) = default;

 private:
  std::vector<std::optional<ColorId>> colors_;
};

}  // namespace cfc
