#include <gtest/gtest.h>

#include <sstream>

#include "cfc/generators.hpp"
#include "cfc/solve.hpp"
#include "cfc/sweep.hpp"

using namespace cfc;

TEST(ChromaticBounds, ChromaticInequalitiesAllGraphsUpToFive) {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    gen::for_each_graph(n, [&](const Graph& g) {
      const auto cn = chromatic_number(SolveInstance::for_graph(g, Variant::Cn)).k;
      const auto cn_star = chromatic_number(SolveInstance::for_graph(g, Variant::CnStar)).k;
      ASSERT_LE(cn, cn_star + 1);
      if (!g.has_isolated_vertex()) {
        const auto on_star = chromatic_number(SolveInstance::for_graph(g, Variant::OnStar)).k;
        ASSERT_LE(cn_star, 2 * on_star);
        const auto on = chromatic_number(SolveInstance::for_graph(g, Variant::On)).k;
        ASSERT_LE(on, on_star + 1);
      }
      ++checked;
    });
  }
  EXPECT_EQ(checked, 1u + 2 + 8 + 64 + 1024);
}

TEST(ChromaticBounds, ChromaticAtMostChoiceNumber) {
  for (std::size_t n = 1; n <= 4; ++n) {
    gen::for_each_graph(n, [&](const Graph& g) {
      for (auto v : {Variant::CnStar, Variant::OnStar}) {
        if (v == Variant::OnStar && g.has_isolated_vertex()) continue;
        auto inst = SolveInstance::for_graph(g, v);
        const auto chi = chromatic_number(inst).k;
        for (std::size_t k = 1; k <= (n <= 3 ? 2u : 1u); ++k) {
          if (decide_choosable(inst, k).yes) ASSERT_LE(chi, k);
        }
      }
    });
  }
}

TEST(ChromaticBounds, OnlyP2IsOneOnChoosableAmongConnectedGraphs) {
  // A connected graph with CFON choice number 1 must be the path on two
  // vertices: the total variant asks every vertex to be colored.
  for (std::size_t n = 2; n <= 5; ++n) {
    gen::for_each_graph(n, [&](const Graph& g) {
      if (!gen::is_connected(g)) return;
      const bool one = decide_choosable(SolveInstance::for_graph(g, Variant::On), 1).yes;
      ASSERT_EQ(one, n == 2);
    });
  }
}

TEST(Sweep, DeterministicReports) {
  SweepOptions o;
  o.suite = "reductions";
  o.trials = 30;
  o.seed = 4;
  std::ostringstream a, b;
  run_sweep(o).write(a);
  run_sweep(o).write(b);
  EXPECT_EQ(a.str(), b.str());
}

TEST(Sweep, ReductionsSuitePasses) {
  SweepOptions o;
  o.suite = "reductions";
  o.trials = 50;
  o.seed = 1;
  auto rep = run_sweep(o);
  EXPECT_EQ(rep.rows.size(), 50u);
  EXPECT_TRUE(rep.all_pass());
}

TEST(Sweep, LemmaSuitePasses) {
  SweepOptions o;
  o.suite = "lemma";
  o.trials = 3;
  o.seed = 9;
  auto rep = run_sweep(o);
  EXPECT_TRUE(rep.all_pass());
  for (const auto& r : rep.rows) EXPECT_NE(r.counters.find("rounds="), std::string::npos);
}

TEST(Sweep, PipelineSuitePassesBothModes) {
  for (bool scaled : {false, true}) {
    SweepOptions o;
    o.suite = "pipeline";
    o.trials = 4;
    o.seed = 2;
    o.scaled = scaled;
    auto rep = run_sweep(o);
    std::ostringstream s;
    rep.write(s);
    EXPECT_TRUE(rep.all_pass()) << s.str();
  }
}
