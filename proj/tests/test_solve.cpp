#include <gtest/gtest.h>

#include "cfc/errors.hpp"
#include "cfc/generators.hpp"
#include "cfc/solve.hpp"
#include "cfc/verify.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cfc;
using fx::R;
using fx::vs;

namespace {

ListAssignment random_lists(std::size_t n, gen::Rng& rng, int max_len, int universe) {
  std::uniform_int_distribution<int> len(1, max_len), color(1, universe);
  std::vector<ColorList> ls;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<ColorId> cs;
    for (int i = len(rng); i > 0; --i) cs.push_back(ColorId{static_cast<std::uint64_t>(color(rng))});
    ls.push_back(ColorList::of(cs));
  }
  return ListAssignment(std::move(ls));
}

}  // namespace

TEST(SolveListCf, Examples) {
  auto c4 = SolveInstance::for_graph(fx::c4(), Variant::CnStar);
  EXPECT_FALSE(solve_list_cf(c4, fx::all(4, {R})));

  auto k3 = SolveInstance::for_graph(fx::k3(), Variant::CnStar);
  auto f = solve_list_cf(k3, fx::all(3, {R}));
  ASSERT_TRUE(f);
  EXPECT_EQ(f->colored_count(), 1u);

  Hypergraph edge(2, {vs({1, 2})});
  EXPECT_FALSE(solve_list_cf(SolveInstance::for_hypergraph(edge, true), fx::all(2, {R})));
}

TEST(SolveListCf, OnVariantRejectsIsolatedVertices) {
  EXPECT_THROW(SolveInstance::for_graph(fx::g1(3, {{1, 2}}), Variant::On), InputError);
  EXPECT_NO_THROW(SolveInstance::for_graph(fx::g1(3, {{1, 2}}), Variant::Cn));
}

TEST(SolveListCf, BudgetIsAnErrorNotAnAnswer) {
  SearchBudget tiny;
  tiny.max_nodes = 3;
  auto inst = SolveInstance::for_graph(gen::cycle(10), Variant::CnStar);
  EXPECT_THROW(solve_list_cf(inst, ListAssignment::constant(10, 2), tiny), ResourceExceeded);
}

TEST(SolveListCf, AgreesWithBruteForceOnRandomHypergraphs) {
  gen::Rng rng(1234);
  for (int t = 0; t < 3000; ++t) {
    const std::size_t n = 2 + t % 6;
    auto h = gen::random_hypergraph(n, 1 + t % 7, 1, std::min<std::size_t>(n, 4), rng);
    auto lists = random_lists(n, rng, 3, 4);
    const bool total = t % 3 == 0;
    auto got = solve_list_cf(SolveInstance::for_hypergraph(h, total), lists);
    auto want = oracle::list_cf(n, h.edges(), lists, total);
    ASSERT_EQ(got.has_value(), want.has_value()) << "trial " << t;
    if (got) ASSERT_TRUE(verify_cf(h, *got, &lists, total).valid);
  }
}

TEST(SolveListCf, AgreesWithBruteForceOnNeighborhoodHypergraphs) {
  gen::Rng rng(99);
  for (int t = 0; t < 1500; ++t) {
    const std::size_t n = 3 + t % 5;
    auto g = gen::gnp(n, 0.5, rng);
    auto lists = random_lists(n, rng, 2, 3);
    for (auto v : {Variant::CnStar, Variant::Cn, Variant::OnStar, Variant::On}) {
      if ((v == Variant::OnStar || v == Variant::On) && g.has_isolated_vertex()) continue;
      auto inst = SolveInstance::for_graph(g, v);
      auto got = solve_list_cf(inst, lists);
      auto want = oracle::list_cf(n, inst.target.edges(), lists, inst.require_total);
      ASSERT_EQ(got.has_value(), want.has_value());
      if (got) ASSERT_TRUE(verify_cf(inst.target, *got, &lists, inst.require_total).valid);
    }
  }
}

TEST(ChromaticNumber, Examples) {
  EXPECT_EQ(chromatic_number(SolveInstance::for_graph(fx::c4(), Variant::CnStar)).k, 2u);
  EXPECT_EQ(chromatic_number(SolveInstance::for_graph(fx::c4(), Variant::OnStar)).k, 1u);
  EXPECT_EQ(chromatic_number(SolveInstance::for_graph(fx::g1(2, {{1, 2}}), Variant::OnStar)).k, 1u);
}

TEST(ChromaticNumber, AgreesWithBruteForceAllGraphsUpToFive) {
  for (std::size_t n = 1; n <= 5; ++n) {
    gen::for_each_graph(n, [&](const Graph& g) {
      for (auto v : {Variant::CnStar, Variant::Cn, Variant::OnStar}) {
        if (v == Variant::OnStar && g.has_isolated_vertex()) continue;
        auto inst = SolveInstance::for_graph(g, v);
        auto res = chromatic_number(inst);
        ASSERT_EQ(res.k, oracle::chromatic(n, inst.target.edges(), inst.require_total));
        ASSERT_TRUE(verify_cf(inst.target, res.coloring, nullptr, inst.require_total).valid);
      }
    });
  }
}

TEST(ChromaticNumber, OneIffExactDominationAllGraphsUpToSix) {
  for (std::size_t n = 1; n <= 6; ++n) {
    gen::for_each_graph(n, [&](const Graph& g) {
      auto cn = chromatic_number(SolveInstance::for_graph(g, Variant::CnStar)).k;
      ASSERT_EQ(cn == 1, find_pids(g).has_value());
      if (g.has_isolated_vertex()) return;
      auto on = chromatic_number(SolveInstance::for_graph(g, Variant::OnStar)).k;
      ASSERT_EQ(on == 1, find_pimds(g).has_value());
    });
  }
}

TEST(DecideChoosable, Examples) {
  auto c4 = decide_choosable(SolveInstance::for_graph(fx::c4(), Variant::CnStar), 1);
  EXPECT_FALSE(c4.yes);
  ASSERT_TRUE(c4.witness);
  EXPECT_TRUE(c4.witness->is_k_assignment(1));
  for (Vertex v = 1; v < 4; ++v) EXPECT_EQ((*c4.witness)[v], (*c4.witness)[0]);

  EXPECT_TRUE(decide_choosable(SolveInstance::for_graph(fx::k3(), Variant::CnStar), 1).yes);
  EXPECT_TRUE(decide_choosable(SolveInstance::for_graph(fx::g1(2, {{1, 2}}), Variant::OnStar), 1).yes);
}

TEST(DecideChoosable, NoCertificatesReplay) {
  for (std::size_t n = 2; n <= 4; ++n) {
    gen::for_each_graph(n, [&](const Graph& g) {
      for (std::size_t k = 1; k <= (n <= 3 ? 2u : 1u); ++k) {
        auto inst = SolveInstance::for_graph(g, Variant::CnStar);
        auto cert = decide_choosable(inst, k);
        if (cert.yes) continue;
        ASSERT_TRUE(cert.witness);
        ASSERT_TRUE(cert.witness->is_k_assignment(k));
        ASSERT_FALSE(solve_list_cf(inst, *cert.witness));
      }
    });
  }
}

TEST(DecideChoosable, Monotone) {
  for (std::size_t n = 2; n <= 3; ++n) {
    gen::for_each_graph(n, [&](const Graph& g) {
      for (auto v : {Variant::CnStar, Variant::OnStar}) {
        if (v == Variant::OnStar && g.has_isolated_vertex()) continue;
        auto inst = SolveInstance::for_graph(g, v);
        for (std::size_t k = 1; k <= 2; ++k) {
          if (decide_choosable(inst, k).yes) ASSERT_TRUE(decide_choosable(inst, k + 1).yes);
        }
      }
    });
  }
}

// 1-colorable iff 1-choosable, against the full canonical enumeration rather
// than the k = 1 shortcut.
TEST(DecideChoosable, KOneEqualsColorabilityByEnumeration) {
  for (std::size_t n = 1; n <= 6; ++n) {
    gen::Rng rng(n);
    auto check = [&](const Graph& g) {
      for (auto v : {Variant::CnStar, Variant::OnStar}) {
        if (v == Variant::OnStar && g.has_isolated_vertex()) continue;
        auto inst = SolveInstance::for_graph(g, v);
        const bool colorable = solve_list_cf(inst, ListAssignment::constant(n, 1)).has_value();
        bool every = true;
        for_each_canonical_assignment(n, 1, 1'000'000, [&](const ListAssignment& l) {
          every = every && solve_list_cf(inst, l).has_value();
          return every;
        });
        ASSERT_EQ(colorable, every);
        ASSERT_EQ(colorable, decide_choosable(inst, 1).yes);
      }
    };
    if (n <= 5) {
      gen::for_each_graph(n, check);
    } else {
      for (int t = 0; t < 150; ++t) check(gen::gnp(n, 0.45, rng));
    }
  }
}

// The adversary universe {1..kn} loses nothing against {1..kn+2}.
TEST(DecideChoosable, UniverseBoundMatchesUnrestrictedEnumeration) {
  auto check = [](const Graph& g, std::size_t k) {
    for (auto v : {Variant::CnStar, Variant::OnStar}) {
      if (v == Variant::OnStar && g.has_isolated_vertex()) continue;
      auto inst = SolveInstance::for_graph(g, v);
      const auto n = g.size();
      ASSERT_EQ(decide_choosable(inst, k).yes,
                oracle::choosable(n, inst.target.edges(), inst.require_total, k, k * n + 2));
    }
  };
  for (std::size_t n = 1; n <= 4; ++n) gen::for_each_graph(n, [&](const Graph& g) { check(g, 1); });
  for (std::size_t n = 1; n <= 3; ++n) gen::for_each_graph(n, [&](const Graph& g) { check(g, 2); });
  check(fx::c4(), 2);
  check(fx::p4(), 2);
  check(fx::claw(), 2);
}

TEST(CanonicalAssignments, Counts) {
  EXPECT_EQ(for_each_canonical_assignment(2, 1, 100, [](const ListAssignment&) { return true; }), 2u);
  EXPECT_EQ(for_each_canonical_assignment(2, 2, 100, [](const ListAssignment&) { return true; }), 4u);
  // Bell numbers for k = 1.
  EXPECT_EQ(for_each_canonical_assignment(5, 1, 1000, [](const ListAssignment&) { return true; }), 52u);
  EXPECT_THROW(for_each_canonical_assignment(6, 1, 10, [](const ListAssignment&) { return true; }),
               ResourceExceeded);
}

TEST(FindPimds, Examples) {
  auto p2 = find_pimds(fx::g1(2, {{1, 2}}));
  ASSERT_TRUE(p2);
  EXPECT_EQ(*p2, vs({1, 2}));
  auto c4 = find_pimds(fx::c4());
  ASSERT_TRUE(c4);
  EXPECT_TRUE(is_pimds(fx::c4(), *c4));
  // The claw has the PIMDS {center, leaf}: every leaf sees the center, the
  // center sees the one chosen leaf.
  auto claw = find_pimds(fx::claw());
  ASSERT_TRUE(claw);
  EXPECT_TRUE(is_pimds(fx::claw(), *claw));
  EXPECT_TRUE(is_pimds(fx::claw(), vs({1, 2})));
}

TEST(FindPids, Examples) {
  auto k3 = find_pids(fx::k3());
  ASSERT_TRUE(k3);
  EXPECT_EQ(k3->size(), 1u);
  EXPECT_FALSE(find_pids(fx::c4()));
  EXPECT_EQ(find_pids(fx::p4()), vs({1, 4}));
}

TEST(ExactDomination, AgreesWithBruteForce) {
  for (std::size_t n = 1; n <= 6; ++n) {
    gen::for_each_graph(n, [&](const Graph& g) {
      auto pids = find_pids(g);
      ASSERT_EQ(pids.has_value(), oracle::exact_domination_exists(g, true));
      if (pids) ASSERT_TRUE(is_pids(g, *pids));
      auto pimds = find_pimds(g);
      ASSERT_EQ(pimds.has_value(), oracle::exact_domination_exists(g, false));
      if (pimds) ASSERT_TRUE(is_pimds(g, *pimds));
    });
  }
}

TEST(SolveOneInThree, Examples) {
  auto fig = solve_one_in_three(gen::running_example_formula());
  ASSERT_TRUE(fig);
  EXPECT_EQ(*fig, (TruthAssignment{true, false, false, true, false}));

  Formula single{3, {{0, 1, 2}}};
  EXPECT_EQ(solve_one_in_three(single), (TruthAssignment{true, false, false}));

  Formula unsat{5, {{0, 1, 2}, {0, 1, 3}, {2, 3, 4}, {0, 2, 3}, {1, 2, 3}}};
  EXPECT_FALSE(solve_one_in_three(unsat));
  EXPECT_FALSE(oracle::one_in_three_exists(unsat));
}

TEST(SolveOneInThree, BudgetOnVariables) {
  Formula big{40, {}};
  EXPECT_THROW(solve_one_in_three(big), ResourceExceeded);
}

TEST(SolveOneInThree, AgreesWithBruteForce) {
  gen::Rng rng(8);
  for (int t = 0; t < 500; ++t) {
    auto phi = gen::random_formula(3 + t % 5, t % 7, rng);
    auto a = solve_one_in_three(phi);
    ASSERT_EQ(a.has_value(), oracle::one_in_three_exists(phi));
    if (a) ASSERT_TRUE(is_one_in_three(phi, *a));
  }
}

TEST(Variant, Parse) {
  EXPECT_EQ(parse_variant("on-star"), Variant::OnStar);
  EXPECT_EQ(parse_variant("cn"), Variant::Cn);
  EXPECT_EQ(to_string(Variant::CnStar), "cn-star");
  EXPECT_THROW(parse_variant("xx"), InputError);
}
