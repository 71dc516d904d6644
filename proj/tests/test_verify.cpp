#include <gtest/gtest.h>

#include "cfc/generators.hpp"
#include "cfc/verify.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cfc;
using fx::col;
using fx::R;
using fx::vs;

TEST(VerifyCf, C4ClosedOneColoredVertex) {
  auto h = derived_hypergraph(fx::c4(), Neighborhood::Closed);
  auto rep = verify_cf(h, col(4, {{1, R}}));
  EXPECT_FALSE(rep.valid);
  EXPECT_EQ(rep.edges[2].status, EdgeStatus::NoColoredVertex);
  EXPECT_EQ(rep.edges[0].status, EdgeStatus::Unique);
}

TEST(VerifyCf, K2OpenMonochromatic) {
  auto h = derived_hypergraph(fx::g1(2, {{1, 2}}), Neighborhood::Open);
  EXPECT_TRUE(verify_cf(h, col(2, {{1, R}, {2, R}})).valid);
}

TEST(VerifyCf, RepeatedColorNoUnique) {
  Hypergraph h(3, {vs({1, 2, 3})});
  auto rep = verify_cf(h, col(3, {{1, R}, {2, R}}));
  EXPECT_FALSE(rep.valid);
  EXPECT_EQ(rep.edges[0].status, EdgeStatus::NoUniqueColor);
}

TEST(VerifyCf, WitnessIsSmallestUniqueColor) {
  Hypergraph h(4, {vs({1, 2, 3, 4})});
  auto rep = verify_cf(h, col(4, {{1, 9}, {2, 4}, {3, 7}, {4, 4}}));
  ASSERT_TRUE(rep.valid);
  EXPECT_EQ(rep.edges[0].color->value, 7u);
  EXPECT_EQ(*rep.edges[0].witness, 2u);
}

TEST(VerifyCf, ListsAndTotality) {
  Hypergraph h(2, {vs({1, 2})});
  auto f = col(2, {{1, 5}});
  auto lists = fx::all(2, {1, 2});
  auto rep = verify_cf(h, f, &lists);
  EXPECT_FALSE(rep.valid);
  EXPECT_EQ(rep.list_violations, vs({1}));
  EXPECT_TRUE(rep.uncolored.empty());
  auto total = verify_cf(h, f, nullptr, true);
  EXPECT_FALSE(total.valid);
  EXPECT_EQ(total.uncolored, vs({2}));
}

TEST(VerifyCf, MachineReport) {
  Hypergraph h(3, {vs({1, 2}), vs({3})});
  auto rep = verify_cf(h, col(3, {{1, 4}, {2, 4}}));
  EXPECT_EQ(rep.to_machine(), "edge 1 fail no-unique\nedge 2 fail no-colored\nvalid 0\n");
  auto ok = verify_cf(h, col(3, {{1, 4}, {3, 2}}));
  EXPECT_EQ(ok.to_machine(), "edge 1 ok 1 4\nedge 2 ok 3 2\nvalid 1\n");
}

TEST(VerifyCf, AgreesWithOracleOnRandomColorings) {
  gen::Rng rng(21);
  std::uniform_int_distribution<int> color(0, 3);
  for (int t = 0; t < 2000; ++t) {
    auto h = gen::random_hypergraph(6, 5, 1, 4, rng);
    PartialColoring f(6);
    for (Vertex v = 0; v < 6; ++v) {
      int c = color(rng);
      if (c) f.set(v, ColorId{static_cast<std::uint64_t>(c)});
    }
    const bool total = t % 2;
    auto rep = verify_cf(h, f, nullptr, total);
    ASSERT_EQ(rep.valid, oracle::is_cf(h.edges(), f, total));
    if (!total) {
      ASSERT_TRUE(rep.uncolored.empty());
    }
    if (rep.valid) {
      for (const auto& e : rep.edges) ASSERT_TRUE(e.witness.has_value());
    }
  }
}

TEST(IsPimds, Examples) {
  EXPECT_TRUE(is_pimds(fx::g1(2, {{1, 2}}), vs({1, 2})));
  EXPECT_TRUE(is_pimds(fx::c4(), vs({1, 2})));
  EXPECT_FALSE(is_pimds(fx::c4(), vs({1, 3})));
}

TEST(IsPids, Examples) {
  EXPECT_TRUE(is_pids(fx::k3(), vs({2})));
  EXPECT_FALSE(is_pids(fx::c4(), vs({1, 3})));
  EXPECT_TRUE(is_pids(fx::p4(), vs({1, 4})));
}

// s is a PIMDS / PIDS iff coloring s monochromatically is CFON* / CFCN*.
TEST(Certificates, MonochromaticBridge) {
  for (std::size_t n = 1; n <= 7; ++n) {
    gen::Rng rng(n);
    auto check = [&](const Graph& g) {
      auto closed = derived_hypergraph(g, Neighborhood::Closed);
      std::optional<Hypergraph> open;
      if (!g.has_isolated_vertex()) open = derived_hypergraph(g, Neighborhood::Open);
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        VertexSet s;
        PartialColoring f(n);
        for (Vertex v = 0; v < n; ++v) {
          if (mask >> v & 1) {
            s.push_back(v);
            f.set(v, ColorId{R});
          }
        }
        ASSERT_EQ(is_pids(g, s), verify_cf(closed, f).valid);
        if (open) {
          ASSERT_EQ(is_pimds(g, s), verify_cf(*open, f).valid);
        }
      }
    };
    if (n <= 5) {
      gen::for_each_graph(n, check);
    } else {
      for (int t = 0; t < 60; ++t) check(gen::gnp(n, 0.4, rng));
    }
  }
}
