#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>

#include "cfc/errors.hpp"
#include "cfc/io.hpp"
#include "cfc/prob_color.hpp"
#include "cfc/reductions.hpp"
#include "cfc/solve.hpp"
#include "cfc/sweep.hpp"
#include "cfc/verify.hpp"

namespace cfc::cli {
namespace {

struct Options {
  std::string graph, hgraph, coloring, lists, formula, out, rolemap, trace, machine, variant = "cn-star";
  std::string target, suite, size;
  std::size_t k = 0;
  std::optional<std::uint64_t> seed;
  std::uint64_t max_nodes = SearchBudget{}.max_nodes;
  std::uint64_t max_assignments = SearchBudget{}.max_assignments;
  std::uint64_t max_rounds = 0;
  std::size_t retry_limit = 20, max_n = 5, trials = 50, edges = 100, base_n = 15;
  double list_factor = 32.0;
  std::optional<std::size_t> alpha;
  bool scaled = false, chromatic = false, no_branch_test = false, pids = false, pimds = false;
};

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  return f;
}

// Writes via `emit` to `path`, or to `out` when path is empty.
template <class Emit>
void emit_to(const std::string& path, std::ostream& out, Emit emit) {
  if (path.empty()) {
    emit(out);
  } else {
    auto f = open_out(path);
    emit(f);
  }
}

SearchBudget budget_of(const Options& o) {
  SearchBudget b;
  b.max_nodes = o.max_nodes;
  b.max_assignments = o.max_assignments;
  return b;
}

std::uint64_t need_seed(const Options& o) {
  if (!o.seed) throw InputError("--seed is required for this command");
  return *o.seed;
}

// The target hypergraph from --graph/--variant or --hgraph.
SolveInstance load_instance(const Options& o) {
  if (o.graph.empty() == o.hgraph.empty()) throw InputError("give exactly one of --graph and --hgraph");
  const Variant v = parse_variant(o.variant);
  if (!o.graph.empty()) return SolveInstance::for_graph(io::load_graph(o.graph), v);
  return SolveInstance::for_hypergraph(io::load_hypergraph(o.hgraph), v == Variant::On || v == Variant::Cn);
}

int cmd_verify(const Options& o, std::ostream& out) {
  const auto inst = load_instance(o);
  const auto n = inst.target.size();
  const auto f = io::load_coloring(o.coloring, n);
  std::optional<ListAssignment> lists;
  if (!o.lists.empty()) lists = io::load_lists_arg(o.lists, n);
  const auto rep = verify_cf(inst.target, f, lists ? &*lists : nullptr, inst.require_total);
  out << rep.to_text();
  if (!o.machine.empty()) {
    auto m = open_out(o.machine);
    m << rep.to_machine();
  }
  return rep.valid ? Yes : No;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const auto inst = load_instance(o);
  const auto n = inst.target.size();
  const auto budget = budget_of(o);
  if (o.chromatic) {
    const auto res = chromatic_number(inst, budget);
    out << "chromatic " << res.k << '\n';
    emit_to(o.out, out, [&](std::ostream& s) { io::write_coloring(s, res.coloring); });
    return Yes;
  }
  ListAssignment lists;
  if (!o.lists.empty()) {
    lists = io::load_lists_arg(o.lists, n);
  } else if (o.k > 0) {
    lists = ListAssignment::constant(n, o.k);
  } else {
    throw InputError("solve needs --lists, --k or --chromatic");
  }
  SolveStats stats;
  const auto f = solve_list_cf(inst, lists, budget, &stats);
  if (!f) {
    out << "none\n";
    return No;
  }
  emit_to(o.out, out, [&](std::ostream& s) { io::write_coloring(s, *f); });
  return Yes;
}

int cmd_choose(const Options& o, std::ostream& out) {
  if (o.k < 1) throw InputError("--k must be >= 1");
  const auto inst = load_instance(o);
  const auto cert = decide_choosable(inst, o.k, budget_of(o));
  out << (cert.yes ? "yes" : "no") << " k=" << o.k << " assignments=" << cert.assignments_checked << '\n';
  if (!cert.yes && cert.witness) {
    emit_to(o.out, out, [&](std::ostream& s) { io::write_lists(s, *cert.witness); });
  }
  return cert.yes ? Yes : No;
}

void write_reduction(const Options& o, const ReductionOutput& r, std::ostream& out) {
  emit_to(o.out, out, [&](std::ostream& s) { io::write_graph(s, r.graph); });
  if (!o.rolemap.empty()) {
    auto f = open_out(o.rolemap);
    io::write_roles(f, r.roles);
  }
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const auto phi = io::load_formula(o.formula);
  ReductionOutput r;
  if (o.target == "gphi") {
    r = build_associated_graph(phi);
  } else if (o.target == "gprime") {
    r = build_g_prime(phi);
  } else if (o.target == "gdoubleprime") {
    r = build_g_double_prime(phi);
  } else {
    throw InputError("--target must be gphi, gprime or gdoubleprime");
  }
  write_reduction(o, r, out);
  return Yes;
}

int cmd_gadget(const Options& o, std::ostream& out) {
  write_reduction(o, build_h_gadget(io::load_graph(o.graph)), out);
  return Yes;
}

int cmd_edc(const Options& o, std::ostream& out) {
  const auto d = extended_double_cover(io::load_graph(o.graph));
  emit_to(o.out, out, [&](std::ostream& s) { io::write_graph(s, d); });
  return Yes;
}

int cmd_pipeline(const Options& o, std::ostream& out) {
  const auto g = io::load_graph(o.graph);
  const auto lists = io::load_lists_arg(o.lists, g.size());
  auto cfg = o.scaled ? PipelineConfig::scaled() : PipelineConfig::published();
  cfg.rng_seed = need_seed(o);
  cfg.retry_limit = o.retry_limit;
  cfg.apply_branch_test = !o.no_branch_test;
  cfg.fallback_budget = budget_of(o);
  if (o.k > 0) cfg.k_override = o.k;
  const auto res = cfcn_pipeline(g, lists, cfg);
  if (!o.trace.empty()) {
    auto f = open_out(o.trace);
    f << res.trace.to_text();
  }
  emit_to(o.out, out, [&](std::ostream& s) { io::write_coloring(s, res.coloring); });
  return Yes;
}

int cmd_lemma(const Options& o, std::ostream& out) {
  const auto h = io::load_hypergraph(o.hgraph);
  LemmaConfig cfg;
  cfg.list_factor = o.list_factor;
  cfg.alpha_override = o.alpha;
  cfg.rng_seed = need_seed(o);
  if (o.max_rounds > 0) cfg.max_rounds = o.max_rounds;
  std::string lists_arg = o.lists;
  if (lists_arg.empty()) {
    const auto need = std::ceil(o.list_factor * static_cast<double>(hypergraph_stats(h).max_edge_size));
    lists_arg = "RANGE:" + std::to_string(std::max<std::uint64_t>(1, static_cast<std::uint64_t>(need)));
  }
  const auto lists = io::load_lists_arg(lists_arg, h.size());
  try {
    const auto res = near_uniform_color(h, lists, cfg);
    out << "rounds " << res.rounds << '\n';
    emit_to(o.out, out, [&](std::ostream& s) { io::write_coloring(s, res.coloring); });
    return Yes;
  } catch (const ResampleFailure& e) {
    out << "failed rounds " << e.rounds() << " worst-edge " << e.worst_edge() + 1 << '\n';
    return No;
  }
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const auto budget = budget_of(o);
  if (!o.formula.empty()) {
    const auto phi = io::load_formula(o.formula);
    const auto a = solve_one_in_three(phi, budget);
    if (!a) {
      out << "unsatisfiable\n";
      return No;
    }
    bool first = true;
    for (std::size_t i = 0; i < a->size(); ++i) {
      if (!(*a)[i]) continue;
      out << (first ? "" : " ") << 'x' << i + 1;
      first = false;
    }
    out << '\n';
    return Yes;
  }
  if (o.graph.empty() || o.pids == o.pimds) throw InputError("oracle needs --formula, or --graph with one of --pids/--pimds");
  const auto g = io::load_graph(o.graph);
  const auto s = o.pids ? find_pids(g, budget) : find_pimds(g, budget);
  if (!s) {
    out << "none\n";
    return No;
  }
  PartialColoring f(g.size());
  for (Vertex v : *s) f.set(v, ColorId{1});
  emit_to(o.out, out, [&](std::ostream& os) { io::write_coloring(os, f); });
  return Yes;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  SweepOptions s;
  s.suite = o.suite;
  s.max_n = o.max_n;
  s.trials = o.trials;
  s.edges = o.edges;
  s.base_n = o.base_n;
  s.scaled = o.scaled;
  if (s.suite != "propositions") s.seed = need_seed(o);
  if (!o.size.empty()) {
    auto dots = o.size.find("..");
    try {
      if (dots == std::string::npos) throw std::invalid_argument("");
      s.min_size = std::stoul(o.size.substr(0, dots));
      s.max_size = std::stoul(o.size.substr(dots + 2));
    } catch (const std::exception&) {
      throw InputError("--size must look like 64..128");
    }
  }
  const auto rep = run_sweep(s);
  rep.write(out);
  return rep.all_pass() ? Yes : No;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Conflict-free coloring toolkit", "cfc"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  auto add_budget = [&](CLI::App* c) {
    c->add_option("--max-nodes", o.max_nodes, "Search node budget");
  };
  auto add_instance = [&](CLI::App* c) {
    c->add_option("--graph", o.graph, "Graph file (p graph n m / e u v)");
    c->add_option("--hgraph", o.hgraph, "Hypergraph file (p hgraph n m / h v1 v2 ...)");
    c->add_option("--variant", o.variant, "on-star | cn-star | on | cn (default cn-star)");
  };

  auto* verify = app.add_subcommand("verify", "Check a coloring; exit 0 valid, 1 invalid");
  add_instance(verify);
  verify->add_option("--coloring", o.coloring, "Coloring file (v vertex color)")->required();
  verify->add_option("--lists", o.lists, "Lists file or RANGE:r");
  verify->add_option("--machine", o.machine, "Also write the one-line-per-edge report here");

  auto* solve = app.add_subcommand("solve", "Search for a list CF coloring; exit 0 found, 1 none, 2 budget");
  add_instance(solve);
  add_budget(solve);
  solve->add_option("--lists", o.lists, "Lists file or RANGE:r");
  solve->add_option("--k", o.k, "Use the constant lists {1..k}");
  solve->add_flag("--chromatic", o.chromatic, "Compute the chromatic number instead");
  solve->add_option("--out", o.out, "Coloring output file");

  auto* choose = app.add_subcommand("choose", "Decide k-choosability; exit 0 yes, 1 no, 2 budget");
  add_instance(choose);
  add_budget(choose);
  choose->add_option("--k", o.k, "List size")->required();
  choose->add_option("--max-assignments", o.max_assignments, "Adversary assignment budget");
  choose->add_option("--out", o.out, "Witness lists output file");

  auto* reduce = app.add_subcommand("reduce", "Build a graph from a positive 1-in-3 formula");
  reduce->add_option("--formula", o.formula, "DIMACS CNF file, positive 3-literal clauses")->required();
  reduce->add_option("--target", o.target, "gphi | gprime | gdoubleprime")->required();
  reduce->add_option("--out", o.out, "Graph output file");
  reduce->add_option("--rolemap", o.rolemap, "Role-map output file");

  auto* gadget = app.add_subcommand("gadget-hg", "Build the twelve-copy hub gadget H_G");
  gadget->add_option("--graph", o.graph, "Base graph file")->required();
  gadget->add_option("--out", o.out, "Graph output file");
  gadget->add_option("--rolemap", o.rolemap, "Role-map output file");

  auto* edc = app.add_subcommand("edc", "Build the extended double cover");
  edc->add_option("--graph", o.graph, "Graph file")->required();
  edc->add_option("--out", o.out, "Graph output file");

  auto* pipe = app.add_subcommand("pipeline", "Randomized CFCN* list coloring of a K_{1,k}-free graph");
  add_budget(pipe);
  pipe->add_option("--graph", o.graph, "Graph file")->required();
  pipe->add_option("--lists", o.lists, "Lists file or RANGE:r")->required();
  pipe->add_option("--seed", o.seed, "Random seed (required)");
  pipe->add_flag("--scaled", o.scaled, "Use small constants so the second stage runs");
  pipe->add_flag("--no-branch-test", o.no_branch_test, "Run the construction even when k > ln(Delta)/divisor");
  pipe->add_option("--k", o.k, "Override k (default: largest induced star + 1)");
  pipe->add_option("--retry-limit", o.retry_limit, "Attempts with fresh seeds");
  pipe->add_option("--trace", o.trace, "Trace output file");
  pipe->add_option("--out", o.out, "Coloring output file");

  auto* lemma = app.add_subcommand("lemma", "Near-uniform hypergraph coloring by resampling");
  lemma->add_option("--hgraph", o.hgraph, "Hypergraph file")->required();
  lemma->add_option("--lists", o.lists, "Lists file or RANGE:r (default RANGE:list-factor*max edge)");
  lemma->add_option("--list-factor", o.list_factor, "Required list size per unit of max edge size");
  lemma->add_option("--alpha", o.alpha, "Override the minimum edge size");
  lemma->add_option("--seed", o.seed, "Random seed (required)");
  lemma->add_option("--max-rounds", o.max_rounds, "Resampling cap");
  lemma->add_option("--out", o.out, "Coloring output file");

  auto* oracle = app.add_subcommand("oracle", "1-in-3 SAT, PIDS or PIMDS by exhaustive search");
  add_budget(oracle);
  oracle->add_option("--formula", o.formula, "DIMACS CNF file");
  oracle->add_option("--graph", o.graph, "Graph file");
  oracle->add_flag("--pids", o.pids, "Find a perfect independent dominating set");
  oracle->add_flag("--pimds", o.pimds, "Find a perfect induced matching dominating set");
  oracle->add_option("--out", o.out, "Certificate coloring output file");

  auto* sweep = app.add_subcommand("sweep", "Run a batch suite; exit 0 iff every row passes");
  sweep->add_option("--suite", o.suite, "propositions | reductions | lemma | pipeline")->required();
  sweep->add_option("--max-n", o.max_n, "propositions: largest graph order");
  sweep->add_option("--trials", o.trials, "Instances for reductions, lemma, pipeline");
  sweep->add_option("--seed", o.seed, "Random seed (required except for propositions)");
  sweep->add_option("--edges", o.edges, "lemma: hyperedge count");
  sweep->add_option("--size", o.size, "lemma: edge size range lo..hi");
  sweep->add_option("--base-n", o.base_n, "pipeline: order of the random base graph");
  sweep->add_flag("--scaled", o.scaled, "pipeline: scaled constants");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(std::move(rev));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Yes : Input;
  }

  try {
    if (verify->parsed()) return cmd_verify(o, out);
    if (solve->parsed()) return cmd_solve(o, out);
    if (choose->parsed()) return cmd_choose(o, out);
    if (reduce->parsed()) return cmd_reduce(o, out);
    if (gadget->parsed()) return cmd_gadget(o, out);
    if (edc->parsed()) return cmd_edc(o, out);
    if (pipe->parsed()) return cmd_pipeline(o, out);
    if (lemma->parsed()) return cmd_lemma(o, out);
    if (oracle->parsed()) return cmd_oracle(o, out);
    if (sweep->parsed()) return cmd_sweep(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return Input;
  } catch (const ResourceExceeded& e) {
    err << "resource exceeded: " << e.what() << '\n';
    return Resource;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return Internal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return No;
  }
  return Input;
}

}  // namespace cfc::cli
