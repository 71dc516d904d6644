#include "cfc/sweep.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "cfc/errors.hpp"
#include "cfc/generators.hpp"
#include "cfc/prob_color.hpp"
#include "cfc/reductions.hpp"
#include "cfc/solve.hpp"
#include "cfc/verify.hpp"

namespace cfc {

bool SweepReport::all_pass() const { return failures() == 0; }

std::size_t SweepReport::failures() const {
  std::size_t bad = 0;
  for (const auto& r : rows) bad += r.pass ? 0 : 1;
  return bad;
}

void SweepReport::write(std::ostream& out) const {
  for (const auto& r : rows) {
    out << r.index << '\t' << r.instance << '\t' << (r.pass ? "pass" : "FAIL") << '\t' << r.counters << '\n';
  }
  out << "rows " << rows.size() << " failures " << failures() << '\n';
}

namespace {

std::string edge_code(const Graph& g) {
  std::ostringstream s;
  s << "n=" << g.size() << " E=";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    s << (first ? "" : ",") << u + 1 << '-' << v + 1;
    first = false;
  }
  if (first) s << '-';
  return s.str();
}

template <class Body>
void guarded(SweepReport& rep, std::string instance, Body body) {
  SweepRow row{rep.rows.size() + 1, std::move(instance), false, {}};
  try {
    row.pass = body(row.counters);
  } catch (const std::exception& e) {
    row.pass = false;
    row.counters += (row.counters.empty() ? "" : " ") + std::string("error=\"") + e.what() + "\"";
  }
  rep.rows.push_back(std::move(row));
}

void propositions(const SweepOptions& o, SweepReport& rep) {
  for (std::size_t n = 1; n <= o.max_n; ++n) {
    gen::for_each_graph(n, [&](const Graph& g) {
      guarded(rep, edge_code(g), [&](std::string& counters) {
        const auto cn_total = chromatic_number(SolveInstance::for_graph(g, Variant::Cn)).k;
        const auto cn_star = chromatic_number(SolveInstance::for_graph(g, Variant::CnStar)).k;
        bool ok = cn_total <= cn_star + 1;
        ok = ok && ((cn_star == 1) == find_pids(g).has_value());
        std::ostringstream c;
        c << "chi_cn=" << cn_total << " chi_cn_star=" << cn_star;
        if (!g.has_isolated_vertex()) {
          const auto on_star = chromatic_number(SolveInstance::for_graph(g, Variant::OnStar)).k;
          ok = ok && cn_star <= 2 * on_star;
          ok = ok && ((on_star == 1) == find_pimds(g).has_value());
          c << " chi_on_star=" << on_star;
        }
        counters = c.str();
        return ok;
      });
    });
  }
}

void reductions(const SweepOptions& o, SweepReport& rep) {
  gen::Rng rng(o.seed);
  for (std::size_t t = 0; t < o.trials; ++t) {
    const auto n = static_cast<std::uint32_t>(std::uniform_int_distribution<int>(3, 6)(rng));
    const auto m = static_cast<std::size_t>(std::uniform_int_distribution<int>(0, 5)(rng));
    const auto phi = gen::random_formula(n, m, rng);
    std::ostringstream name;
    name << "n=" << n << " m=" << m;
    for (const auto& c : phi.clauses) name << " (" << c[0] + 1 << ' ' << c[1] + 1 << ' ' << c[2] + 1 << ')';
    guarded(rep, name.str(), [&](std::string& counters) {
      const auto sat = solve_one_in_three(phi);
      const auto gp = build_g_prime(phi);
      const auto gpp = build_g_double_prime(phi);
      const auto pimds = find_pimds(gp.graph);
      const auto pids = find_pids(gpp.graph);
      bool ok = sat.has_value() == pimds.has_value() && sat.has_value() == pids.has_value();
      if (ok && sat) {
        for (auto variant : {CfVariant::On, CfVariant::Cn}) {
          const auto cert = truth_to_certificate(phi, *sat, variant);
          ok = ok && certificate_to_truth(phi, cert, variant) == *sat;
        }
        ok = ok && is_one_in_three(phi, certificate_to_truth(phi, *pimds, CfVariant::On));
        ok = ok && is_one_in_three(phi, certificate_to_truth(phi, *pids, CfVariant::Cn));
      }
      counters = std::string("sat=") + (sat ? "1" : "0") + " pimds=" + (pimds ? "1" : "0") +
                 " pids=" + (pids ? "1" : "0") + " gprime_n=" + std::to_string(gp.graph.size()) +
                 " gdoubleprime_n=" + std::to_string(gpp.graph.size());
      return ok;
    });
  }
}

void lemma(const SweepOptions& o, SweepReport& rep) {
  const std::size_t n = 8 * o.max_size;
  for (std::size_t t = 0; t < o.trials; ++t) {
    const std::uint64_t seed = o.seed + t;
    guarded(rep, "seed=" + std::to_string(seed) + " n=" + std::to_string(n) + " edges=" + std::to_string(o.edges),
            [&](std::string& counters) {
              gen::Rng rng(seed);
              const auto h = gen::random_hypergraph(n, o.edges, o.min_size, o.max_size, rng);
              LemmaConfig cfg;
              cfg.alpha_override = o.min_size;
              cfg.rng_seed = seed;
              const auto lists = ListAssignment::uniform(
                  n, ColorList::range(0, static_cast<std::uint64_t>(cfg.list_factor * o.max_size)));
              const auto res = near_uniform_color(h, lists, cfg);
              std::size_t worst = SIZE_MAX;
              bool ok = res.coloring.is_total();
              for (const auto& e : h.edges()) {
                const auto unique = e.size() - count_non_unique(e, res.coloring);
                worst = std::min(worst, unique);
                ok = ok && unique * 8 >= e.size();
              }
              counters = "rounds=" + std::to_string(res.rounds) + " gamma=" +
                         std::to_string(hypergraph_stats(h).gamma) + " min_unique=" + std::to_string(worst);
              return ok;
            });
  }
}

void pipeline(const SweepOptions& o, SweepReport& rep) {
  gen::Rng rng(o.seed);
  for (std::size_t t = 0; t < o.trials; ++t) {
    const auto base = gen::gnp(o.base_n, 0.6, rng);
    const auto g = gen::line_graph(base);
    const std::uint64_t seed = o.seed + 1000 * t;
    guarded(rep, "line(G(" + std::to_string(o.base_n) + ",0.6)) #" + std::to_string(t + 1),
            [&](std::string& counters) {
              auto cfg = o.scaled ? PipelineConfig::scaled() : PipelineConfig::published();
              cfg.rng_seed = seed;
              if (!o.scaled) cfg.apply_branch_test = false;
              const std::size_t delta = g.max_degree();
              const std::size_t k = max_star(g) + 1;
              const double ln_delta = delta >= 1 ? std::log(static_cast<double>(delta)) : 0.0;
              const auto r = std::max<std::uint64_t>(
                  1, static_cast<std::uint64_t>(std::ceil(cfg.r_factor * static_cast<double>(k) * ln_delta)));
              const auto lists = ListAssignment::uniform(g.size(), ColorList::range(0, r));
              const auto res = cfcn_pipeline(g, lists, cfg);
              const auto& tr = res.trace;
              bool ok = verify_cf(derived_hypergraph(g, Neighborhood::Closed), res.coloring, &lists).valid;
              if (!tr.delegated) ok = ok && check_trace_invariants(g, tr).empty();
              std::ostringstream c;
              c << "n=" << g.size() << " delta=" << delta << " k=" << tr.k << " r=" << r
                << " delegated=" << tr.delegated << " s=" << tr.classes.size() << " b=" << tr.b
                << " C=" << tr.C.size() << " attempts=" << tr.attempts << " rounds=" << tr.resample_rounds
                << " colored=" << res.coloring.colored_count();
              counters = c.str();
              return ok;
            });
  }
}

}  // namespace

SweepReport run_sweep(const SweepOptions& opts) {
  SweepReport rep;
  if (opts.suite == "propositions") {
    propositions(opts, rep);
  } else if (opts.suite == "reductions") {
    reductions(opts, rep);
  } else if (opts.suite == "lemma") {
    lemma(opts, rep);
  } else if (opts.suite == "pipeline") {
    pipeline(opts, rep);
  } else {
    throw InputError("unknown suite '" + opts.suite + "' (propositions, reductions, lemma, pipeline)");
  }
  return rep;
}

}  // namespace cfc
