#include "cfc/solve.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "cfc/errors.hpp"

namespace cfc {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::OnStar: return "on-star";
    case Variant::CnStar: return "cn-star";
    case Variant::On: return "on";
    case Variant::Cn: return "cn";
  }
  return "?";
}

Variant parse_variant(std::string_view s) {
  if (s == "on-star") return Variant::OnStar;
  if (s == "cn-star") return Variant::CnStar;
  if (s == "on") return Variant::On;
  if (s == "cn") return Variant::Cn;
  throw InputError("unknown variant '" + std::string(s) + "' (expected on-star, cn-star, on, cn)");
}

SolveInstance SolveInstance::for_graph(const Graph& g, Variant v) {
  const bool open = v == Variant::OnStar || v == Variant::On;
  const bool total = v == Variant::On || v == Variant::Cn;
  return {derived_hypergraph(g, open ? Neighborhood::Open : Neighborhood::Closed), total};
}

SolveInstance SolveInstance::for_hypergraph(Hypergraph h, bool require_total) {
  return {std::move(h), require_total};
}

namespace {

constexpr std::size_t kMaterializeCap = 1 << 16;

std::vector<VertexSet> hyper_neighbors(const Hypergraph& h) {
  std::vector<VertexSet> nb(h.size());
  for (const auto& e : h.edges()) {
    for (Vertex v : e) nb[v].insert(nb[v].end(), e.begin(), e.end());
  }
  for (Vertex v = 0; v < h.size(); ++v) {
    auto& s = nb[v];
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::erase(s, v);
  }
  return nb;
}

// Shrinks lists without changing whether a coloring exists:
//  * when every list has at least Delta_H + 1 colors, a full CF coloring is
//    guaranteed (ch_CF(H) <= Delta + 1), so each list is cut to its first
//    Delta_H + 1 colors;
//  * colors of v that occur in no list of a vertex sharing an edge with v
//    are interchangeable for v, so only the first of them is kept.
std::vector<std::vector<ColorId>> effective_lists(const Hypergraph& h, const ListAssignment& lists) {
  const std::size_t n = h.size();
  std::size_t delta = 0;
  {
    std::vector<std::size_t> deg(n, 0);
    for (const auto& e : h.edges()) {
      for (Vertex v : e) delta = std::max(delta, ++deg[v]);
    }
  }
  const bool truncate = n > 0 && lists.min_list_size() >= delta + 1;
  std::vector<ColorList> trimmed;
  trimmed.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    const ColorList& l = lists[v];
    if (truncate && l.size() > delta + 1) {
      std::vector<ColorId> head;
      for (std::size_t i = 0; i <= delta; ++i) head.push_back(l.at(i));
      trimmed.push_back(ColorList::of(std::move(head)));
    } else {
      trimmed.push_back(l);
    }
  }

  auto nb = hyper_neighbors(h);
  std::vector<std::vector<ColorId>> out(n);
  for (Vertex v = 0; v < n; ++v) {
    const ColorList& l = trimmed[v];
    std::vector<ColorId> shared;
    if (l.size() <= kMaterializeCap) {
      for (ColorId c : l.colors()) {
        bool elsewhere = std::any_of(nb[v].begin(), nb[v].end(),
                                     [&](Vertex u) { return trimmed[u].contains(c); });
        if (elsewhere) shared.push_back(c);
      }
    } else {
      for (Vertex u : nb[v]) {
        if (trimmed[u].size() > kMaterializeCap) {
          throw ResourceExceeded("color lists too long for exhaustive search");
        }
        for (ColorId c : trimmed[u].colors()) {
          if (l.contains(c)) shared.push_back(c);
        }
      }
      std::sort(shared.begin(), shared.end());
      shared.erase(std::unique(shared.begin(), shared.end()), shared.end());
    }
    // First private color in list order, if any.
    for (std::size_t i = 0; i < l.size(); ++i) {
      ColorId c = l.at(i);
      if (!std::binary_search(shared.begin(), shared.end(), c)) {
        shared.insert(std::lower_bound(shared.begin(), shared.end(), c), c);
        break;
      }
    }
    out[v] = std::move(shared);
  }
  return out;
}

constexpr int kUndecided = -2;
constexpr int kNone = -1;

class ListCfSearch {
 public:
  ListCfSearch(const Hypergraph& h, bool total, const std::vector<std::vector<ColorId>>& lists,
               const SearchBudget& budget)
      : h_(h), total_(total), budget_(budget), inc_(h.incidence()) {
    for (const auto& l : lists) palette_.insert(palette_.end(), l.begin(), l.end());
    std::sort(palette_.begin(), palette_.end());
    palette_.erase(std::unique(palette_.begin(), palette_.end()), palette_.end());
    colors_ = palette_.size();
    const std::size_t cells = h.edge_count() * std::max<std::size_t>(colors_, 1);
    if (cells > (std::size_t{1} << 26)) throw ResourceExceeded("instance too large for exhaustive search");
    dom_.resize(h.size());
    for (Vertex v = 0; v < h.size(); ++v) {
      for (ColorId c : lists[v]) {
        dom_[v].push_back(static_cast<int>(std::lower_bound(palette_.begin(), palette_.end(), c) - palette_.begin()));
      }
    }
    assign_.assign(h.size(), kUndecided);
    cnt_.assign(cells, 0);
    ones_.assign(h.edge_count(), 0);
    undecided_.resize(h.edge_count());
    for (std::size_t e = 0; e < h.edge_count(); ++e) undecided_[e] = h.edge(e).size();
    unsatisfied_ = h.edge_count();
  }

  std::optional<PartialColoring> run() {
    for (std::size_t e = 0; e < h_.edge_count(); ++e) {
      if (!alive(e)) return std::nullopt;
    }
    if (!search()) return std::nullopt;
    PartialColoring f(h_.size());
    for (Vertex v = 0; v < h_.size(); ++v) {
      if (assign_[v] >= 0) f.set(v, palette_[static_cast<std::size_t>(assign_[v])]);
    }
    return f;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  bool alive(std::size_t e) const {
    if (ones_[e] > 0) return true;
    for (Vertex u : h_.edge(e)) {
      if (assign_[u] != kUndecided) continue;
      for (int c : dom_[u]) {
        if (cnt_[e * colors_ + static_cast<std::size_t>(c)] == 0) return true;
      }
    }
    return false;
  }

  bool apply(Vertex v, int c) {
    assign_[v] = c;
    for (std::size_t e : inc_[v]) {
      --undecided_[e];
      if (c < 0) continue;
      auto& x = cnt_[e * colors_ + static_cast<std::size_t>(c)];
      ++x;
      if (x == 1) {
        if (ones_[e]++ == 0) --unsatisfied_;
      } else if (x == 2) {
        if (--ones_[e] == 0) ++unsatisfied_;
      }
    }
    for (std::size_t e : inc_[v]) {
      if (!alive(e)) return false;
    }
    return true;
  }

  void undo(Vertex v, int c) {
    for (std::size_t e : inc_[v]) {
      ++undecided_[e];
      if (c < 0) continue;
      auto& x = cnt_[e * colors_ + static_cast<std::size_t>(c)];
      if (x == 1) {
        if (--ones_[e] == 0) ++unsatisfied_;
      } else if (x == 2) {
        if (ones_[e]++ == 0) --unsatisfied_;
      }
      --x;
    }
    assign_[v] = kUndecided;
  }

  // Branch vertex: inside the unsatisfied edge with the fewest undecided
  // vertices, the one in most edges (ties: lowest id).
  std::optional<Vertex> pick() const {
    std::size_t best_edge = h_.edge_count();
    if (unsatisfied_ > 0) {
      std::size_t best = static_cast<std::size_t>(-1);
      for (std::size_t e = 0; e < h_.edge_count(); ++e) {
        if (ones_[e] == 0 && undecided_[e] < best) {
          best = undecided_[e];
          best_edge = e;
        }
      }
    }
    std::optional<Vertex> choice;
    auto consider = [&](Vertex u) {
      if (assign_[u] != kUndecided) return;
      if (!choice || inc_[u].size() > inc_[*choice].size()) choice = u;
    };
    if (best_edge < h_.edge_count()) {
      for (Vertex u : h_.edge(best_edge)) consider(u);
    } else {
      for (Vertex u = 0; u < h_.size(); ++u) consider(u);
    }
    return choice;
  }

  bool search() {
    if (++nodes_ > budget_.max_nodes) {
      throw ResourceExceeded("search exceeded " + std::to_string(budget_.max_nodes) + " nodes");
    }
    if (unsatisfied_ == 0 && !total_) return true;
    auto v = pick();
    if (!v) return unsatisfied_ == 0;
    for (int c : dom_[*v]) {
      bool ok = apply(*v, c);
      if (ok && search()) return true;
      undo(*v, c);
    }
    if (!total_) {
      bool ok = apply(*v, kNone);
      if (ok && search()) return true;
      undo(*v, kNone);
    }
    return false;
  }

  const Hypergraph& h_;
  bool total_;
  const SearchBudget& budget_;
  std::vector<std::vector<std::size_t>> inc_;
  std::vector<ColorId> palette_;
  std::size_t colors_ = 0;
  std::vector<std::vector<int>> dom_;
  std::vector<int> assign_;
  std::vector<std::uint32_t> cnt_;
  std::vector<std::uint32_t> ones_;
  std::vector<std::size_t> undecided_;
  std::size_t unsatisfied_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<PartialColoring> solve_list_cf(const SolveInstance& inst, const ListAssignment& lists,
                                             const SearchBudget& budget, SolveStats* stats) {
  const Hypergraph& h = inst.target;
  if (lists.size() != h.size()) {
    throw InputError("list assignment covers " + std::to_string(lists.size()) + " vertices, expected " +
                     std::to_string(h.size()));
  }
  if (h.size() > budget.max_vertices) {
    throw ResourceExceeded("instance has " + std::to_string(h.size()) + " vertices, budget allows " +
                           std::to_string(budget.max_vertices));
  }
  ListCfSearch search(h, inst.require_total, effective_lists(h, lists), budget);
  std::optional<PartialColoring> out;
  try {
    out = search.run();
  } catch (...) {
    if (stats) stats->nodes += search.nodes();
    throw;
  }
  if (stats) stats->nodes += search.nodes();
  return out;
}

ChromaticResult chromatic_number(const SolveInstance& inst, const SearchBudget& budget) {
  const std::size_t n = inst.target.size();
  for (std::size_t k = 1; k <= std::max<std::size_t>(n, 1); ++k) {
    auto f = solve_list_cf(inst, ListAssignment::constant(n, k), budget);
    if (f) return {k, std::move(*f)};
  }
  throw InvariantViolation("no coloring with n distinct colors");
}

namespace {

// Sorted k-subsets that are canonical given the current largest color.
std::vector<std::vector<std::uint64_t>> canonical_lists(std::size_t k, std::uint64_t max_color) {
  std::vector<std::vector<std::uint64_t>> out;
  for (std::size_t fresh = 0; fresh <= k; ++fresh) {
    const std::size_t old = k - fresh;
    if (old > max_color) continue;
    std::vector<std::uint64_t> combo(old);
    for (std::size_t i = 0; i < old; ++i) combo[i] = i + 1;
    while (true) {
      auto list = combo;
      for (std::size_t t = 1; t <= fresh; ++t) list.push_back(max_color + t);
      out.push_back(std::move(list));
      // Next combination of `old` from 1..max_color.
      std::size_t i = old;
      while (i > 0 && combo[i - 1] == max_color - (old - i)) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < old; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Enumerator {
  std::size_t n, k;
  std::uint64_t limit;
  const std::function<bool(const ListAssignment&)>& visit;
  std::vector<ColorList> lists;
  std::uint64_t visited = 0;
  bool stopped = false;

  void rec(std::size_t v, std::uint64_t max_color) {
    if (stopped) return;
    if (v == n) {
      if (visited == limit) {
        throw ResourceExceeded("more than " + std::to_string(limit) + " list assignments");
      }
      ++visited;
      if (!visit(ListAssignment(lists))) stopped = true;
      return;
    }
    for (const auto& l : canonical_lists(k, max_color)) {
      std::vector<ColorId> ids;
      for (auto c : l) ids.push_back(ColorId{c});
      lists[v] = ColorList::of(std::move(ids));
      rec(v + 1, std::max(max_color, l.back()));
      if (stopped) return;
    }
  }
};

}  // namespace

std::uint64_t for_each_canonical_assignment(std::size_t n, std::size_t k, std::uint64_t limit,
                                            const std::function<bool(const ListAssignment&)>& visit) {
  if (k == 0) throw InputError("k must be positive");
  Enumerator en{n, k, limit, visit, std::vector<ColorList>(n, ColorList::range(0, 1))};
  en.rec(0, 0);
  return en.visited;
}

ChoosabilityCertificate decide_choosable(const SolveInstance& inst, std::size_t k,
                                         const SearchBudget& budget) {
  if (k == 0) throw InputError("k must be positive");
  const std::size_t n = inst.target.size();
  ChoosabilityCertificate cert;
  if (k == 1) {
    // Every 1-assignment behaves like the constant one: only which vertices
    // get colored matters, and all colors within an edge are then equal.
    auto lists = ListAssignment::constant(n, 1);
    cert.assignments_checked = 1;
    cert.yes = solve_list_cf(inst, lists, budget).has_value();
    if (!cert.yes) cert.witness = std::move(lists);
    return cert;
  }
  cert.yes = true;
  cert.assignments_checked =
      for_each_canonical_assignment(n, k, budget.max_assignments, [&](const ListAssignment& lists) {
        if (solve_list_cf(inst, lists, budget)) return true;
        cert.yes = false;
        cert.witness = lists;
        return false;
      });
  return cert;
}

namespace {

class ExactHitting {
 public:
  ExactHitting(const Hypergraph& h, const SearchBudget& budget)
      : h_(h), budget_(budget), inc_(h.incidence()), state_(h.size(), 0), hit_(h.edge_count(), 0) {}

  std::optional<VertexSet> run() {
    if (!search()) return std::nullopt;
    VertexSet s;
    for (Vertex v = 0; v < h_.size(); ++v) {
      if (state_[v] == kIn) s.push_back(v);
    }
    return s;
  }

 private:
  static constexpr char kFree = 0, kIn = 1, kOut = 2;

  bool search() {
    if (++nodes_ > budget_.max_nodes) {
      throw ResourceExceeded("search exceeded " + std::to_string(budget_.max_nodes) + " nodes");
    }
    std::size_t best_edge = h_.edge_count();
    std::size_t best = static_cast<std::size_t>(-1);
    for (std::size_t e = 0; e < h_.edge_count(); ++e) {
      if (hit_[e]) continue;
      std::size_t free = 0;
      for (Vertex u : h_.edge(e)) free += state_[u] == kFree;
      if (free < best) {
        best = free;
        best_edge = e;
        if (free == 0) return false;
      }
    }
    if (best_edge == h_.edge_count()) return true;
    VertexSet cands;
    for (Vertex u : h_.edge(best_edge)) {
      if (state_[u] == kFree) cands.push_back(u);
    }
    for (Vertex u : cands) {
      // Taking u hits all its edges; nothing else in them may be taken.
      std::vector<Vertex> excluded;
      state_[u] = kIn;
      for (std::size_t e : inc_[u]) {
        hit_[e] = 1;
        for (Vertex w : h_.edge(e)) {
          if (state_[w] == kFree) {
            state_[w] = kOut;
            excluded.push_back(w);
          }
        }
      }
      if (search()) return true;
      for (Vertex w : excluded) state_[w] = kFree;
      for (std::size_t e : inc_[u]) hit_[e] = 0;
      state_[u] = kOut;  // later branches of this edge exclude u
    }
    for (Vertex u : cands) state_[u] = kFree;
    return false;
  }

  const Hypergraph& h_;
  const SearchBudget& budget_;
  std::vector<std::vector<std::size_t>> inc_;
  std::vector<char> state_;
  std::vector<char> hit_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<VertexSet> find_exact_hitting_set(const Hypergraph& h, const SearchBudget& budget) {
  return ExactHitting(h, budget).run();
}

std::optional<VertexSet> find_pimds(const Graph& g, const SearchBudget& budget) {
  if (g.has_isolated_vertex()) return std::nullopt;
  return find_exact_hitting_set(derived_hypergraph(g, Neighborhood::Open), budget);
}

std::optional<VertexSet> find_pids(const Graph& g, const SearchBudget& budget) {
  return find_exact_hitting_set(derived_hypergraph(g, Neighborhood::Closed), budget);
}

std::optional<TruthAssignment> solve_one_in_three(const Formula& phi, const SearchBudget& budget) {
  phi.validate();
  if (phi.num_vars > budget.max_formula_vars) {
    throw ResourceExceeded("formula has " + std::to_string(phi.num_vars) + " variables, budget allows " +
                           std::to_string(budget.max_formula_vars));
  }
  const std::uint64_t total = std::uint64_t{1} << phi.num_vars;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool ok = true;
    for (const auto& c : phi.clauses) {
      int hits = ((mask >> c[0]) & 1) + ((mask >> c[1]) & 1) + ((mask >> c[2]) & 1);
      if (hits != 1) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    TruthAssignment a(phi.num_vars);
    for (std::uint32_t i = 0; i < phi.num_vars; ++i) a[i] = (mask >> i) & 1;
    return a;
  }
  return std::nullopt;
}

}  // namespace cfc
