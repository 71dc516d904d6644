#include "cfc/prob_color.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "cfc/errors.hpp"
#include "cfc/verify.hpp"

namespace cfc {

void LemmaConfig::validate() const {
  if (!(list_factor >= 1.0)) throw InputError("list_factor must be >= 1");
  if (!(bad_fraction > 0.0 && bad_fraction < 1.0)) throw InputError("bad_fraction must lie in (0, 1)");
  if (!(unique_fraction > 0.0 && unique_fraction <= 1.0 - bad_fraction)) {
    throw InputError("unique_fraction must lie in (0, 1 - bad_fraction]");
  }
  if (max_rounds < 1) throw InputError("max_rounds must be >= 1");
}

std::size_t LemmaConfig::effective_alpha(std::size_t gamma) const {
  if (alpha_override) return *alpha_override;
  double log_term = gamma == 0 ? 0.0 : std::ceil(alpha_log_factor * std::log(alpha_log_multiplier * gamma));
  return static_cast<std::size_t>(std::max(alpha_floor, log_term));
}

std::size_t count_non_unique(std::span<const Vertex> edge, const PartialColoring& f) {
  std::vector<ColorId> colors;
  colors.reserve(edge.size());
  for (Vertex v : edge) {
    if (!f[v]) throw InputError("vertex " + std::to_string(v + 1) + " is uncolored");
    colors.push_back(*f[v]);
  }
  std::sort(colors.begin(), colors.end());
  std::size_t repeated = 0;
  for (std::size_t i = 0; i < colors.size();) {
    std::size_t j = i;
    while (j < colors.size() && colors[j] == colors[i]) ++j;
    if (j - i > 1) repeated += j - i;
    i = j;
  }
  return repeated;
}

LemmaResult near_uniform_color(const Hypergraph& h, const ListAssignment& lists, const LemmaConfig& cfg) {
  cfg.validate();
  if (lists.size() != h.size()) throw InputError("list assignment size does not match the hypergraph");
  const auto stats = hypergraph_stats(h);
  if (cfg.enforce_preconditions && h.edge_count() > 0) {
    const auto need = static_cast<std::size_t>(std::ceil(cfg.list_factor * stats.max_edge_size));
    if (lists.min_list_size() < need) {
      throw InputError("lists need at least " + std::to_string(need) + " colors, shortest has " +
                       std::to_string(lists.min_list_size()));
    }
    const auto alpha = cfg.effective_alpha(stats.gamma);
    if (stats.min_edge_size < alpha) {
      throw InputError("smallest edge has " + std::to_string(stats.min_edge_size) +
                       " vertices, alpha is " + std::to_string(alpha));
    }
  }

  std::mt19937_64 rng(cfg.rng_seed);
  PartialColoring f(h.size());
  auto draw = [&](Vertex v) {
    std::uniform_int_distribution<std::size_t> pick(0, lists[v].size() - 1);
    f.set(v, lists[v].at(pick(rng)));
  };
  for (Vertex v = 0; v < h.size(); ++v) draw(v);

  auto is_bad = [&](std::size_t e) {
    return static_cast<double>(count_non_unique(h.edge(e), f)) >= cfg.bad_fraction * h.edge(e).size();
  };
  const auto inc = h.incidence();
  std::set<std::size_t> bad;
  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    if (is_bad(e)) bad.insert(e);
  }

  std::uint64_t rounds = 0;
  std::vector<std::size_t> touched;
  while (!bad.empty()) {
    if (rounds == cfg.max_rounds) {
      std::size_t worst = *bad.begin();
      double worst_ratio = -1.0;
      for (std::size_t e : bad) {
        double ratio = static_cast<double>(count_non_unique(h.edge(e), f)) / h.edge(e).size();
        if (ratio > worst_ratio) {
          worst_ratio = ratio;
          worst = e;
        }
      }
      throw ResampleFailure(rounds, worst);
    }
    const std::size_t e = *bad.begin();
    for (Vertex v : h.edge(e)) draw(v);
    ++rounds;
    touched.clear();
    for (Vertex v : h.edge(e)) touched.insert(touched.end(), inc[v].begin(), inc[v].end());
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    for (std::size_t t : touched) {
      if (is_bad(t)) {
        bad.insert(t);
      } else {
        bad.erase(t);
      }
    }
  }

  for (std::size_t e = 0; e < h.edge_count(); ++e) {
    const auto size = h.edge(e).size();
    const auto unique = size - count_non_unique(h.edge(e), f);
    if (static_cast<double>(unique) < std::ceil(cfg.unique_fraction * size - 1e-9)) {
      throw InvariantViolation("edge " + std::to_string(e + 1) + " sees too few unique colors");
    }
  }
  return {std::move(f), rounds};
}

PartialColoring color_h1(const Graph& g, std::span<const Vertex> A, std::span<const Vertex> B,
                         const ListAssignment& lists, const SearchBudget& budget) {
  if (lists.size() != g.size()) throw InputError("list assignment size does not match the graph");
  if (!is_independent(g, A)) throw InputError("A is not independent");
  const std::size_t n = g.size();
  std::vector<Vertex> local(n, static_cast<Vertex>(-1));
  for (Vertex i = 0; i < A.size(); ++i) local[A[i]] = i;

  // H1 edges N[v] n A for v in A u B, as local indices into A.
  VertexSet owners(A.begin(), A.end());
  owners.insert(owners.end(), B.begin(), B.end());
  std::sort(owners.begin(), owners.end());
  owners.erase(std::unique(owners.begin(), owners.end()), owners.end());
  std::vector<VertexSet> edges;
  for (Vertex v : owners) {
    VertexSet e;
    if (local[v] != static_cast<Vertex>(-1)) e.push_back(local[v]);
    for (Vertex u : g.neighbors(v)) {
      if (local[u] != static_cast<Vertex>(-1)) e.push_back(local[u]);
    }
    if (e.empty()) throw InputError("vertex " + std::to_string(v + 1) + " has no neighbor in A");
    edges.push_back(std::move(e));
  }
  Hypergraph h1(A.size(), std::move(edges));

  // Greedy: colors distinct within every H1 edge.
  std::vector<VertexSet> conflicts(A.size());
  for (const auto& e : h1.edges()) {
    for (Vertex a : e) conflicts[a].insert(conflicts[a].end(), e.begin(), e.end());
  }
  PartialColoring local_f(A.size());
  bool greedy_ok = true;
  for (Vertex a = 0; a < A.size() && greedy_ok; ++a) {
    std::vector<ColorId> used;
    for (Vertex o : conflicts[a]) {
      if (o != a && local_f[o]) used.push_back(*local_f[o]);
    }
    std::sort(used.begin(), used.end());
    const ColorList& l = lists[A[a]];
    greedy_ok = false;
    for (std::size_t i = 0; i < l.size() && i <= used.size(); ++i) {
      ColorId c = l.at(i);
      if (!std::binary_search(used.begin(), used.end(), c)) {
        local_f.set(a, c);
        greedy_ok = true;
        break;
      }
    }
  }

  std::vector<ColorList> local_lists;
  for (Vertex a : A) local_lists.push_back(lists[a]);
  ListAssignment h1_lists(std::move(local_lists));
  if (!greedy_ok || !verify_cf(h1, local_f, &h1_lists).valid) {
    auto solved = solve_list_cf(SolveInstance::for_hypergraph(h1, false), h1_lists, budget);
    if (!solved) throw Error("H1 admits no list conflict-free coloring");
    local_f = std::move(*solved);
  }

  PartialColoring f(n);
  for (Vertex i = 0; i < A.size(); ++i) {
    if (local_f[i]) f.set(A[i], *local_f[i]);
  }
  return f;
}

namespace {

// Smallest color occurring exactly once among the colored vertices of N[w].
std::optional<ColorId> closed_witness(const Graph& g, Vertex w, const PartialColoring& f) {
  std::vector<ColorId> colors;
  if (f[w]) colors.push_back(*f[w]);
  for (Vertex u : g.neighbors(w)) {
    if (f[u]) colors.push_back(*f[u]);
  }
  std::sort(colors.begin(), colors.end());
  for (std::size_t i = 0; i < colors.size();) {
    std::size_t j = i;
    while (j < colors.size() && colors[j] == colors[i]) ++j;
    if (j - i == 1) return colors[i];
    i = j;
  }
  return std::nullopt;
}

}  // namespace

ReducedLists reduce_lists(const Graph& g, std::span<const Vertex> B, const PartialColoring& f1,
                          const ListAssignment& lists, std::optional<ReductionBounds> bounds) {
  // A is recovered as the domain of f1: a valid H1 coloring colors every
  // vertex of A, since {a} is an H1 edge.
  const std::size_t n = g.size();
  std::vector<char> in_b(n, 0);
  for (Vertex u : B) in_b[u] = 1;

  ReducedLists out;
  std::vector<ColorList> reduced;
  for (Vertex u : B) {
    // Vertices without a witness constrain nothing.
    std::vector<ColorId> x, y;
    for (Vertex a : g.neighbors(u)) {
      if (!f1[a]) continue;
      if (auto c = closed_witness(g, a, f1)) x.push_back(*c);
    }
    if (auto c = closed_witness(g, u, f1)) y.push_back(*c);
    for (Vertex w : g.neighbors(u)) {
      if (!in_b[w]) continue;
      if (auto c = closed_witness(g, w, f1)) y.push_back(*c);
    }
    for (auto* s : {&x, &y}) {
      std::sort(s->begin(), s->end());
      s->erase(std::unique(s->begin(), s->end()), s->end());
    }
    if (bounds) {
      const auto [k, b] = *bounds;
      if (x.size() + 1 > k) {
        throw InvariantViolation("|X_u| = " + std::to_string(x.size()) + " exceeds k - 1 at vertex " +
                                 std::to_string(u + 1));
      }
      if (y.size() > (k - 1) * (b - 1) + 1) {
        throw InvariantViolation("|Y_u| = " + std::to_string(y.size()) +
                                 " exceeds (k-1)(b-1)+1 at vertex " + std::to_string(u + 1));
      }
    }
    std::vector<ColorId> remove = x;
    remove.insert(remove.end(), y.begin(), y.end());
    ColorList l = lists[u].without(remove);
    if (l.size() == 0) {
      throw InvariantViolation("reduced list of vertex " + std::to_string(u + 1) + " is empty");
    }
    reduced.push_back(std::move(l));
    out.x.push_back(std::move(x));
    out.y.push_back(std::move(y));
  }
  out.lists = ListAssignment(std::move(reduced));
  return out;
}

PipelineConfig PipelineConfig::published() { return {}; }

PipelineConfig PipelineConfig::scaled() {
  PipelineConfig c;
  c.scaled_mode = true;
  c.b_floor = 2.0;
  c.b_log_factor = 0.25;
  c.r_factor = 32.0;
  c.branch_divisor = 0.25;
  c.lemma_list_factor = 32.0;
  return c;
}

void PipelineConfig::validate() const {
  if (!(b_floor > 0 && b_log_factor > 0 && r_factor > 0 && branch_divisor > 0 && lemma_list_factor >= 1)) {
    throw InputError("pipeline constants must be positive");
  }
  if (retry_limit < 1) throw InputError("retry_limit must be >= 1");
  if (k_override && *k_override < 1) throw InputError("k must be >= 1");
}

namespace {

std::string join(std::span<const Vertex> s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i] + 1;
  return out.str();
}

std::string join(std::span<const ColorId> s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i].value;
  return out.str();
}

std::string coloring_line(const PartialColoring& f) {
  std::ostringstream out;
  bool first = true;
  for (Vertex v = 0; v < f.size(); ++v) {
    if (!f[v]) continue;
    out << (first ? "" : " ") << v + 1 << ":" << f[v]->value;
    first = false;
  }
  return out.str();
}

}  // namespace

std::string PipelineTrace::to_text() const {
  std::ostringstream out;
  out << "mode " << (scaled_mode ? "scaled" : "published") << '\n';
  out << "constants b_floor=" << b_floor << " b_log_factor=" << b_log_factor << " r_factor=" << r_factor
      << " branch_divisor=" << branch_divisor << '\n';
  out << "k " << k << "\ndelta " << delta << "\nr " << r << "\ndelegated " << (delegated ? 1 : 0) << '\n';
  if (!delegated) {
    out << "[A]\n" << join(A) << '\n';
    out << "[classes] " << classes.size() << '\n';
    for (std::size_t i = 0; i < classes.size(); ++i) out << "S" << i + 1 << ": " << join(classes[i]) << '\n';
    out << "[b]\n" << b << '\n';
    out << "[B]\n" << join(B) << '\n';
    out << "[C]\n" << join(C) << '\n';
    out << "[f1]\n" << coloring_line(f1) << '\n';
    out << "[X_u,Y_u]\n";
    for (std::size_t i = 0; i < x.size(); ++i) {
      out << "u " << B[i] + 1 << " X: " << join(x[i]) << " Y: " << join(y[i]) << " |L''|: " << reduced_sizes[i]
          << '\n';
    }
    out << "[H2] edges=" << h2_edges << " gamma=" << h2_gamma << '\n';
    out << "[f2]\n" << coloring_line(f2) << '\n';
    out << "[rounds]\n" << resample_rounds << '\n';
    out << "attempts " << attempts << "\nseed " << seed_used << '\n';
  }
  out << "[final]\n" << coloring_line(final_coloring) << '\n';
  return out.str();
}

PipelineResult cfcn_pipeline(const Graph& g, const ListAssignment& lists, const PipelineConfig& cfg) {
  cfg.validate();
  const std::size_t n = g.size();
  if (lists.size() != n) throw InputError("list assignment size does not match the graph");

  PipelineTrace t;
  t.scaled_mode = cfg.scaled_mode;
  t.b_floor = cfg.b_floor;
  t.b_log_factor = cfg.b_log_factor;
  t.r_factor = cfg.r_factor;
  t.branch_divisor = cfg.branch_divisor;
  t.delta = g.max_degree();
  t.k = cfg.k_override ? *cfg.k_override : max_star(g) + 1;
  const double ln_delta = t.delta >= 1 ? std::log(static_cast<double>(t.delta)) : 0.0;
  t.r = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(cfg.r_factor * t.k * ln_delta)));
  if (n > 0 && lists.min_list_size() < t.r) {
    throw InputError("lists must have at least r = " + std::to_string(t.r) + " colors, shortest has " +
                     std::to_string(lists.min_list_size()));
  }

  const Hypergraph closed = derived_hypergraph(g, Neighborhood::Closed);
  auto finish = [&](PartialColoring f) {
    if (!verify_cf(closed, f, &lists).valid) throw InvariantViolation("pipeline produced an invalid coloring");
    t.final_coloring = f;
    if (!t.delegated) {
      auto problems = check_trace_invariants(g, t);
      if (!problems.empty()) throw InvariantViolation("pipeline trace: " + problems.front());
    }
    return PipelineResult{std::move(f), std::move(t)};
  };

  if (cfg.apply_branch_test && static_cast<double>(t.k) > ln_delta / cfg.branch_divisor) {
    // Large-k branch: handled by the exact solver.
    t.delegated = true;
    auto f = solve_list_cf(SolveInstance::for_hypergraph(closed, false), lists, cfg.fallback_budget);
    if (!f) throw Error("fallback solver found no CFCN* coloring for these lists");
    return finish(std::move(*f));
  }

  t.A = maximal_independent_set(g, cfg.mis_order);
  VertexSet rest;
  {
    std::vector<char> in_a(n, 0);
    for (Vertex a : t.A) in_a[a] = 1;
    for (Vertex v = 0; v < n; ++v) {
      if (!in_a[v]) rest.push_back(v);
    }
  }
  const Graph gp = induced_subgraph(g, rest);
  for (auto& cls : greedy_color_classes(gp).classes) {
    VertexSet mapped;
    for (Vertex v : cls) mapped.push_back(rest[v]);
    t.classes.push_back(std::move(mapped));
  }
  const double b_raw =
      std::max(cfg.b_floor, cfg.b_log_factor * std::log(4.0 * static_cast<double>(std::max<std::size_t>(t.delta, 1))));
  t.b = std::min(t.classes.size(), static_cast<std::size_t>(std::ceil(b_raw)));
  for (std::size_t i = 0; i < t.classes.size(); ++i) {
    auto& dst = i < t.b ? t.B : t.C;
    dst.insert(dst.end(), t.classes[i].begin(), t.classes[i].end());
  }
  std::sort(t.B.begin(), t.B.end());
  std::sort(t.C.begin(), t.C.end());

  t.f1 = color_h1(g, t.A, t.B, lists, cfg.fallback_budget);
  t.f2 = PartialColoring(n);
  if (t.C.empty()) {
    t.attempts = 1;
    t.seed_used = cfg.rng_seed;
    return finish(t.f1);
  }

  auto reduced = reduce_lists(g, t.B, t.f1, lists, ReductionBounds{t.k, t.b});
  t.x = reduced.x;
  t.y = reduced.y;
  for (const auto& l : reduced.lists.lists()) t.reduced_sizes.push_back(l.size());

  std::vector<Vertex> pos_in_b(n, static_cast<Vertex>(-1));
  for (Vertex i = 0; i < t.B.size(); ++i) pos_in_b[t.B[i]] = i;
  std::vector<VertexSet> h2_edges;
  for (Vertex v : t.C) {
    VertexSet e;
    for (Vertex u : g.neighbors(v)) {
      if (pos_in_b[u] != static_cast<Vertex>(-1)) e.push_back(pos_in_b[u]);
    }
    if (e.empty()) throw InvariantViolation("vertex " + std::to_string(v + 1) + " of C has no neighbor in B");
    h2_edges.push_back(std::move(e));
  }
  const Hypergraph h2(t.B.size(), std::move(h2_edges));
  t.h2_edges = h2.edge_count();
  t.h2_gamma = hypergraph_stats(h2).gamma;

  std::string last_failure;
  for (std::size_t attempt = 0; attempt < cfg.retry_limit; ++attempt) {
    LemmaConfig lc;
    lc.alpha_override = t.b;
    lc.list_factor = cfg.lemma_list_factor;
    lc.max_rounds = cfg.lemma_max_rounds;
    lc.rng_seed = cfg.rng_seed + attempt;
    t.attempts = attempt + 1;
    t.seed_used = lc.rng_seed;
    LemmaResult lr;
    try {
      lr = near_uniform_color(h2, reduced.lists, lc);
    } catch (const ResampleFailure& e) {
      last_failure = std::string("resampling: ") + e.what();
      continue;
    }
    PartialColoring f = t.f1;
    t.f2 = PartialColoring(n);
    for (Vertex i = 0; i < t.B.size(); ++i) {
      if (f[t.B[i]]) throw InvariantViolation("vertex colored twice");
      f.set(t.B[i], *lr.coloring[i]);
      t.f2.set(t.B[i], *lr.coloring[i]);
    }
    t.resample_rounds = lr.rounds;
    if (!verify_cf(closed, f, &lists).valid) {
      last_failure = "verification of the assembled coloring";
      continue;
    }
    return finish(std::move(f));
  }
  throw Error("pipeline retry limit exhausted; last failing stage: " + last_failure);
}

std::vector<std::string> check_trace_invariants(const Graph& g, const PipelineTrace& t) {
  std::vector<std::string> bad;
  const std::size_t n = g.size();
  auto fail = [&](std::string s) { bad.push_back(std::move(s)); };

  if (!is_maximal_independent(g, t.A)) fail("A is not a maximal independent set");
  std::vector<int> where(n, -1);  // -2: A, >= 0: class index
  for (Vertex a : t.A) where[a] = -2;
  for (std::size_t i = 0; i < t.classes.size(); ++i) {
    if (!is_independent(g, t.classes[i])) fail("class S" + std::to_string(i + 1) + " is not independent");
    for (Vertex v : t.classes[i]) {
      if (where[v] != -1) fail("vertex " + std::to_string(v + 1) + " appears twice");
      where[v] = static_cast<int>(i);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (where[v] == -1) fail("vertex " + std::to_string(v + 1) + " is in neither A nor a class");
  }
  if (!bad.empty()) return bad;

  for (Vertex v = 0; v < n; ++v) {
    if (where[v] < 0) continue;
    std::vector<std::size_t> per_class(t.classes.size(), 0);
    std::size_t in_a = 0;
    for (Vertex u : g.neighbors(v)) {
      if (where[u] == -2) {
        ++in_a;
      } else {
        ++per_class[static_cast<std::size_t>(where[u])];
      }
    }
    if (in_a < 1 || in_a + 1 > t.k) {
      fail("vertex " + std::to_string(v + 1) + " has " + std::to_string(in_a) + " neighbors in A");
    }
    for (int j = 0; j < where[v]; ++j) {
      if (per_class[static_cast<std::size_t>(j)] == 0) {
        fail("vertex " + std::to_string(v + 1) + " misses class S" + std::to_string(j + 1));
      }
    }
    const auto cls = static_cast<std::size_t>(where[v]);
    if (cls >= t.b) {
      std::size_t in_b = 0;
      for (std::size_t j = 0; j < t.b; ++j) in_b += per_class[j];
      if (in_b < t.b || in_b > (t.k - 1) * t.b) {
        fail("vertex " + std::to_string(v + 1) + " of C has " + std::to_string(in_b) + " neighbors in B");
      }
    }
  }
  if (t.b > t.classes.size()) fail("b exceeds the number of classes");
  for (std::size_t i = 0; i < t.x.size(); ++i) {
    if (t.x[i].size() + 1 > t.k) fail("|X_u| > k - 1");
    if (t.y[i].size() > (t.k - 1) * (t.b - 1) + 1) fail("|Y_u| > (k-1)(b-1)+1");
  }
  if (t.h2_gamma > t.delta * t.delta) fail("Gamma(H2) exceeds Delta^2");
  for (Vertex v = 0; v < n && v < t.f1.size(); ++v) {
    if (t.f1[v] && where[v] != -2) fail("f1 colors a vertex outside A");
    if (v < t.f2.size() && t.f2[v] && (where[v] < 0 || static_cast<std::size_t>(where[v]) >= t.b)) {
      fail("f2 colors a vertex outside B");
    }
    if (v < t.f2.size() && t.f1[v] && t.f2[v]) fail("vertex colored twice");
  }
  return bad;
}

}  // namespace cfc
