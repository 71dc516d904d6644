#include "cfc/reductions.hpp"

#include <algorithm>

#include "cfc/errors.hpp"
#include "cfc/verify.hpp"

namespace cfc {
namespace {

constexpr std::uint32_t kHubs = 4;

// Pair index of hubs (i, j), i < j, in the order 12 13 14 23 24 34.
std::uint32_t pair_index(std::uint32_t i, std::uint32_t j) {
  static constexpr std::uint32_t base[kHubs] = {0, 3, 5, 6};
  return base[i] + (j - i - 1);
}

ReductionOutput incidence(const Formula& phi, std::size_t extra) {
  phi.validate();
  const std::size_t n = phi.num_vars, m = phi.clauses.size();
  ReductionOutput out{Graph(), std::vector<Role>(n + m + extra)};
  for (std::uint32_t i = 0; i < n; ++i) out.roles[i] = Role{RoleKind::Variable, i};
  for (std::uint32_t j = 0; j < m; ++j) out.roles[n + j] = Role{RoleKind::Clause, j};
  return out;
}

void add_clause_edges(const Formula& phi, GraphBuilder& b) {
  const auto n = phi.num_vars;
  for (std::uint32_t j = 0; j < phi.clauses.size(); ++j) {
    for (auto x : phi.clauses[j]) b.add_edge(x, n + j);
  }
}

}  // namespace

ReductionOutput build_associated_graph(const Formula& phi) {
  auto out = incidence(phi, 0);
  GraphBuilder b(out.roles.size());
  add_clause_edges(phi, b);
  out.graph = b.build();
  return out;
}

ReductionOutput build_g_prime(const Formula& phi) {
  const std::size_t n = phi.num_vars, m = phi.clauses.size();
  auto out = incidence(phi, 2 * n);
  GraphBuilder b(out.roles.size());
  add_clause_edges(phi, b);
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto middle = static_cast<Vertex>(n + m + 2 * i);
    out.roles[middle] = Role{RoleKind::GadgetMiddle, i};
    out.roles[middle + 1] = Role{RoleKind::GadgetFar, i};
    b.add_edge(i, middle);
    b.add_edge(middle, middle + 1);
  }
  out.graph = b.build();
  return out;
}

ReductionOutput build_g_double_prime(const Formula& phi) {
  const std::size_t n = phi.num_vars, m = phi.clauses.size();
  auto out = incidence(phi, n);
  GraphBuilder b(out.roles.size());
  add_clause_edges(phi, b);
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto pendant = static_cast<Vertex>(n + m + i);
    out.roles[pendant] = Role{RoleKind::Pendant, i};
    b.add_edge(i, pendant);
  }
  out.graph = b.build();
  return out;
}

Vertex h_gadget_copy_vertex(std::size_t n, std::uint32_t i, std::uint32_t j, std::uint32_t side, Vertex original) {
  if (!(i < j && j < kHubs && side < 2 && original < n)) throw InputError("bad gadget copy coordinates");
  return static_cast<Vertex>((2 * pair_index(i, j) + side) * n + original);
}

Vertex h_gadget_hub(std::size_t n, std::uint32_t hub) {
  if (hub >= kHubs) throw InputError("hub index out of range");
  return static_cast<Vertex>(12 * n + hub);
}

ReductionOutput build_h_gadget(const Graph& g) {
  const std::size_t n = g.size();
  ReductionOutput out{Graph(), std::vector<Role>(12 * n + kHubs)};
  GraphBuilder b(out.roles.size());
  const auto edges = g.edges();
  for (std::uint32_t i = 0; i < kHubs; ++i) {
    out.roles[h_gadget_hub(n, i)] = Role{RoleKind::Hub, i};
    for (std::uint32_t j = i + 1; j < kHubs; ++j) {
      for (std::uint32_t side = 0; side < 2; ++side) {
        for (Vertex v = 0; v < n; ++v) {
          const Vertex c = h_gadget_copy_vertex(n, i, j, side, v);
          out.roles[c] = Role{RoleKind::Copy, 0, i, j, side, v};
          b.add_edge(c, h_gadget_hub(n, i));
          b.add_edge(c, h_gadget_hub(n, j));
        }
        for (auto [u, v] : edges) b.add_edge(h_gadget_copy_vertex(n, i, j, side, u), h_gadget_copy_vertex(n, i, j, side, v));
      }
    }
  }
  out.graph = b.build();
  return out;
}

VertexSet truth_to_certificate(const Formula& phi, const TruthAssignment& a, CfVariant variant) {
  phi.validate();
  if (!is_one_in_three(phi, a)) throw InputError("assignment is not a 1-in-3 solution");
  const std::size_t n = phi.num_vars, m = phi.clauses.size();
  VertexSet s;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (variant == CfVariant::On) {
      const auto middle = static_cast<Vertex>(n + m + 2 * i);
      s.push_back(a[i] ? i : middle + 1);
      s.push_back(middle);
    } else {
      s.push_back(a[i] ? i : static_cast<Vertex>(n + m + i));
    }
  }
  std::sort(s.begin(), s.end());
  const auto built = variant == CfVariant::On ? build_g_prime(phi) : build_g_double_prime(phi);
  const bool ok = variant == CfVariant::On ? is_pimds(built.graph, s) : is_pids(built.graph, s);
  if (!ok) throw InvariantViolation("certificate built from a 1-in-3 solution does not verify");
  return s;
}

TruthAssignment certificate_to_truth(const Formula& phi, std::span<const Vertex> s, CfVariant variant) {
  const auto built = variant == CfVariant::On ? build_g_prime(phi) : build_g_double_prime(phi);
  for (Vertex v : s) {
    if (v >= built.graph.size()) throw InputError("certificate vertex out of range");
  }
  const bool ok = variant == CfVariant::On ? is_pimds(built.graph, s) : is_pids(built.graph, s);
  if (!ok) {
    throw InputError(variant == CfVariant::On ? "set is not a PIMDS of G'" : "set is not a PIDS of G''");
  }
  TruthAssignment a(phi.num_vars, false);
  for (Vertex v : s) {
    if (v < phi.num_vars) a[v] = true;
  }
  if (!is_one_in_three(phi, a)) throw InvariantViolation("certificate yields an assignment that is not 1-in-3");
  return a;
}

InnerSolver default_inner_solver(const SearchBudget& budget) {
  return [budget](const Graph& g, const ListAssignment& lists) {
    return solve_list_cf(SolveInstance::for_graph(g, Variant::CnStar), lists, budget);
  };
}

HgStrategyResult hg_strategy(const Graph& g, const ListAssignment& lists, const InnerSolver& inner) {
  const std::size_t n = g.size();
  const auto h = build_h_gadget(g);
  if (lists.size() != h.graph.size()) throw InputError("lists must cover the gadget's vertices");
  if (!lists.is_k_assignment(2)) throw InputError("hg_strategy needs a 2-assignment");
  if (n == 0) throw InputError("the base graph must be nonempty");

  HgStrategyResult res{PartialColoring(h.graph.size()), false, std::nullopt};
  auto& f = res.coloring;
  ColorId hub[3];
  for (std::uint32_t i = 0; i < 3; ++i) {
    const auto& l = lists[h_gadget_hub(n, i)];
    hub[i] = l.at(0);
    for (std::size_t t = 0; t < l.size(); ++t) {
      const ColorId c = l.at(t);
      if (std::none_of(hub, hub + i, [&](ColorId o) { return o == c; })) {
        hub[i] = c;
        break;
      }
    }
    f.set(h_gadget_hub(n, i), hub[i]);
  }
  const Vertex w = h_gadget_copy_vertex(n, 0, 3, 0, 0);
  {
    const auto& l = lists[w];
    f.set(w, l.at(0) == hub[0] ? l.at(1) : l.at(0));
  }

  for (std::uint32_t i = 0; i < 3 && !res.duplicated; ++i) {
    for (std::uint32_t j = i + 1; j < 3; ++j) {
      if (hub[i] == hub[j]) {
        res.duplicated = std::make_pair(i, j);
        break;
      }
    }
  }
  res.all_hubs_distinct = !res.duplicated;

  if (res.duplicated) {
    const auto [i, j] = *res.duplicated;
    const ColorId c = hub[i];
    for (std::uint32_t side = 0; side < 2; ++side) {
      std::vector<ColorList> reduced;
      for (Vertex v = 0; v < n; ++v) {
        auto l = lists[h_gadget_copy_vertex(n, i, j, side, v)].without(std::span<const ColorId>(&c, 1));
        if (l.size() == 0) throw InvariantViolation("reduced gadget list is empty");
        reduced.push_back(std::move(l));
      }
      auto sub = inner(g, ListAssignment(std::move(reduced)));
      if (!sub) {
        throw Error("inner solver found no CFCN* coloring of a gadget copy; the base graph is not 1-CFCN*-choosable");
      }
      for (Vertex v = 0; v < n; ++v) {
        if ((*sub)[v]) f.set(h_gadget_copy_vertex(n, i, j, side, v), *(*sub)[v]);
      }
    }
  }

  if (!verify_cf(derived_hypergraph(h.graph, Neighborhood::Closed), f, &lists).valid) {
    throw InvariantViolation("gadget coloring does not verify");
  }
  return res;
}

PartialColoring edc_cn_to_on(const Graph& g, const PartialColoring& fx, const PartialColoring& fy,
                             const ListAssignment* dg_lists) {
  const std::size_t n = g.size();
  if (fx.size() != n || fy.size() != n) throw InputError("colorings must cover the graph");
  if (dg_lists && dg_lists->size() != 2 * n) throw InputError("lists must cover the double cover");
  std::optional<ListAssignment> lx, ly;
  if (dg_lists) {
    const auto& all = dg_lists->lists();
    lx = ListAssignment(std::vector<ColorList>(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n)));
    ly = ListAssignment(std::vector<ColorList>(all.begin() + static_cast<std::ptrdiff_t>(n), all.end()));
  }
  const auto closed = derived_hypergraph(g, Neighborhood::Closed);
  if (!verify_cf(closed, fx, lx ? &*lx : nullptr).valid) throw InputError("X-side coloring is not a CFCN* coloring");
  if (!verify_cf(closed, fy, ly ? &*ly : nullptr).valid) throw InputError("Y-side coloring is not a CFCN* coloring");

  PartialColoring f(2 * n);
  for (Vertex v = 0; v < n; ++v) {
    if (fx[v]) f.set(v, *fx[v]);
    if (fy[v]) f.set(static_cast<Vertex>(n + v), *fy[v]);
  }
  const auto d = extended_double_cover(g);
  if (!verify_cf(derived_hypergraph(d, Neighborhood::Open), f, dg_lists).valid) {
    throw InvariantViolation("transferred coloring is not CFON* on the double cover");
  }
  return f;
}

PartialColoring edc_on_to_cn(const Graph& g, const PartialColoring& fprime, const ListAssignment* lists) {
  const std::size_t n = g.size();
  if (fprime.size() != 2 * n) throw InputError("coloring must cover the double cover");
  if (lists && lists->size() != n) throw InputError("lists must cover the graph");
  std::optional<ListAssignment> doubled;
  if (lists) {
    auto all = lists->lists();
    all.insert(all.end(), lists->lists().begin(), lists->lists().end());
    doubled = ListAssignment(std::move(all));
  }
  const auto d = extended_double_cover(g);
  if (!verify_cf(derived_hypergraph(d, Neighborhood::Open), fprime, doubled ? &*doubled : nullptr).valid) {
    throw InputError("coloring is not CFON* on the double cover");
  }
  PartialColoring f(n);
  for (Vertex v = 0; v < n; ++v) {
    if (fprime[v]) f.set(v, *fprime[v]);
  }
  if (!verify_cf(derived_hypergraph(g, Neighborhood::Closed), f, lists).valid) {
    throw InvariantViolation("recovered coloring is not CFCN*");
  }
  return f;
}

std::string role_to_string(const Role& r) {
  const auto idx = std::to_string(r.index + 1);
  switch (r.kind) {
    case RoleKind::Variable: return "variable " + idx;
    case RoleKind::Clause: return "clause " + idx;
    case RoleKind::GadgetMiddle: return "gadget-middle " + idx;
    case RoleKind::GadgetFar: return "gadget-far " + idx;
    case RoleKind::Pendant: return "pendant " + idx;
    case RoleKind::Hub: return "hub " + idx;
    case RoleKind::Copy:
      return "copy " + std::to_string(r.pair_i + 1) + " " + std::to_string(r.pair_j + 1) + " " +
             (r.side == 0 ? "a" : "b") + " " + std::to_string(r.original + 1);
  }
  return "unknown";
}

}  // namespace cfc
