#include "cfc/color.hpp"

#include <algorithm>

#include "cfc/errors.hpp"

namespace cfc {

ColorList ColorList::of(std::vector<ColorId> colors) {
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  if (colors.empty()) throw InputError("color list is empty");
  ColorList l;
  l.items_ = std::move(colors);
  return l;
}

ColorList ColorList::range(std::uint64_t lo, std::uint64_t hi) {
  if (lo >= hi) throw InputError("color range is empty");
  ColorList l;
  l.ranged_ = true;
  l.lo_ = lo;
  l.hi_ = hi;
  return l;
}

std::size_t ColorList::size() const noexcept {
  if (!ranged_) return items_.size();
  return static_cast<std::size_t>(hi_ - lo_) - items_.size();
}

ColorId ColorList::at(std::size_t i) const {
  if (!ranged_) return items_.at(i);
  if (i >= size()) throw std::out_of_range("ColorList::at");
  // Skip removed colors at or below the candidate.
  std::uint64_t c = lo_ + i;
  for (ColorId r : items_) {
    if (r.value <= c) {
      ++c;
    } else {
      break;
    }
  }
  return ColorId{c};
}

bool ColorList::contains(ColorId c) const {
  if (!ranged_) return std::binary_search(items_.begin(), items_.end(), c);
  return c.value >= lo_ && c.value < hi_ && !std::binary_search(items_.begin(), items_.end(), c);
}

ColorList ColorList::without(std::span<const ColorId> remove) const {
  ColorList out = *this;
  if (!ranged_) {
    std::erase_if(out.items_, [&](ColorId c) {
      return std::find(remove.begin(), remove.end(), c) != remove.end();
    });
    return out;
  }
  for (ColorId c : remove) {
    if (out.contains(c)) out.items_.push_back(c);
  }
  std::sort(out.items_.begin(), out.items_.end());
  return out;
}

std::vector<ColorId> ColorList::colors() const {
  if (!ranged_) return items_;
  std::vector<ColorId> out;
  out.reserve(size());
  auto r = items_.begin();
  for (std::uint64_t c = lo_; c < hi_; ++c) {
    if (r != items_.end() && r->value == c) {
      ++r;
      continue;
    }
    out.push_back(ColorId{c});
  }
  return out;
}

bool operator==(const ColorList& a, const ColorList& b) {
  if (a.size() != b.size()) return false;
  if (a.ranged_ == b.ranged_) {
    return a.items_ == b.items_ && (!a.ranged_ || (a.lo_ == b.lo_ && a.hi_ == b.hi_));
  }
  return a.colors() == b.colors();
}

ListAssignment ListAssignment::uniform(std::size_t n, const ColorList& list) {
  return ListAssignment(std::vector<ColorList>(n, list));
}

ListAssignment ListAssignment::constant(std::size_t n, std::size_t k) {
  if (k == 0) throw InputError("constant assignment needs k >= 1");
  return uniform(n, ColorList::range(1, k + 1));
}

std::size_t ListAssignment::min_list_size() const {
  std::size_t m = lists_.empty() ? 0 : lists_.front().size();
  for (const auto& l : lists_) m = std::min(m, l.size());
  return m;
}

bool ListAssignment::is_k_assignment(std::size_t k) const {
  return std::all_of(lists_.begin(), lists_.end(), [k](const ColorList& l) { return l.size() == k; });
}

bool PartialColoring::is_total() const {
  return std::all_of(colors_.begin(), colors_.end(), [](const auto& c) { return c.has_value(); });
}

std::size_t PartialColoring::colored_count() const {
  return static_cast<std::size_t>(
      std::count_if(colors_.begin(), colors_.end(), [](const auto& c) { return c.has_value(); }));
}

VertexSet PartialColoring::domain() const {
  VertexSet out;
  for (Vertex v = 0; v < colors_.size(); ++v) {
    if (colors_[v]) out.push_back(v);
  }
  return out;
}

}  // namespace cfc
