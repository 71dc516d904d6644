#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "cfc/generators.hpp"
#include "cfc/io.hpp"
#include "cli.hpp"
#include "fixtures.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("cfc_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    auto p = (dir_ / name).string();
    std::ofstream(p) << text;
    return p;
  }
  std::string path(const std::string& name) { return (dir_ / name).string(); }
  static std::string read(const std::string& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }
  static Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cfc::cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string c4() { return file("c4.g", "p graph 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n"); }
  std::string fig1() { return file("fig1.cnf", "p cnf 5 4\n1 2 3 0\n1 2 5 0\n1 3 5 0\n3 4 5 0\n"); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, ChooseC4IsNotOneChoosable) {
  auto r = run({"choose", "--graph", c4(), "--variant", "cn-star", "--k", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("no k=1"), std::string::npos);
  EXPECT_NE(r.out.find("l 4 1"), std::string::npos);
}

TEST_F(Cli, OracleRunningExample) {
  auto r = run({"oracle", "--formula", fig1()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x1 x4\n");
}

TEST_F(Cli, ReduceGPrimeHeader) {
  auto r = run({"reduce", "--formula", fig1(), "--target", "gprime", "--rolemap", path("roles")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "p graph 19 22");
  auto roles = read(path("roles"));
  EXPECT_EQ(roles.substr(0, roles.find('\n')), "1 variable 1");
  EXPECT_NE(roles.find("19 gadget-far 5"), std::string::npos);
  auto dp = run({"reduce", "--formula", fig1(), "--target", "gdoubleprime"});
  EXPECT_EQ(dp.out.substr(0, dp.out.find('\n')), "p graph 14 17");
  auto phi = run({"reduce", "--formula", fig1(), "--target", "gphi"});
  EXPECT_EQ(phi.out.substr(0, phi.out.find('\n')), "p graph 9 12");
}

TEST_F(Cli, InputErrorsExitThreeWithLineNumbers) {
  auto bad = file("bad.g", "p graph 3 1\ne 1 1\n");
  auto r = run({"solve", "--graph", bad, "--k", "1"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("line 2: self-loop"), std::string::npos);
  EXPECT_EQ(run({"solve", "--nonsense"}).code, 3);
  EXPECT_EQ(run({}).code, 3);
  EXPECT_EQ(run({"reduce", "--formula", fig1(), "--target", "other"}).code, 3);
}

TEST_F(Cli, HelpDocumentsFlags) {
  auto r = run({"pipeline", "--help"});
  EXPECT_EQ(r.code, 0);
  for (const char* flag : {"--graph", "--lists", "--seed", "--scaled", "--trace"}) {
    EXPECT_NE(r.out.find(flag), std::string::npos) << flag;
  }
}

TEST_F(Cli, SeedIsRequiredForRandomizedCommands) {
  auto g = file("k3.g", "p graph 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  EXPECT_EQ(run({"pipeline", "--graph", g, "--lists", "RANGE:10"}).code, 3);
  auto h = file("h.hg", "p hgraph 4 1\nh 1 2 3 4\n");
  EXPECT_EQ(run({"lemma", "--hgraph", h, "--alpha", "1"}).code, 3);
  EXPECT_EQ(run({"sweep", "--suite", "lemma"}).code, 3);
}

TEST_F(Cli, SolveOutputReverifies) {
  auto g = c4();
  auto r = run({"solve", "--graph", g, "--variant", "cn", "--k", "2", "--out", path("f")});
  ASSERT_EQ(r.code, 0);
  auto v = run({"verify", "--graph", g, "--variant", "cn", "--coloring", path("f"), "--lists", "RANGE:3",
                "--machine", path("m")});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(read(path("m")).find("valid 1"), std::string::npos);
  auto none = run({"solve", "--graph", g, "--variant", "cn-star", "--k", "1"});
  EXPECT_EQ(none.code, 1);
}

TEST_F(Cli, SolveBudgetExitsTwo) {
  std::ostringstream s;
  cfc::io::write_graph(s, cfc::gen::cycle(12));
  auto g = file("c12.g", s.str());
  EXPECT_EQ(run({"solve", "--graph", g, "--k", "2", "--max-nodes", "2"}).code, 2);
}

TEST_F(Cli, OracleCertificatesReverify) {
  auto g = file("p4.g", "p graph 4 3\ne 1 2\ne 2 3\ne 3 4\n");
  auto r = run({"oracle", "--graph", g, "--pids", "--out", path("s")});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(run({"verify", "--graph", g, "--variant", "cn-star", "--coloring", path("s")}).code, 0);
  auto m = run({"oracle", "--graph", c4(), "--pimds", "--out", path("t")});
  ASSERT_EQ(m.code, 0);
  EXPECT_EQ(run({"verify", "--graph", c4(), "--variant", "on-star", "--coloring", path("t")}).code, 0);
  EXPECT_EQ(run({"oracle", "--graph", c4(), "--pids"}).code, 1);
}

TEST_F(Cli, GadgetAndDoubleCover) {
  auto k2 = file("k2.g", "p graph 2 1\ne 1 2\n");
  auto r = run({"gadget-hg", "--graph", k2, "--rolemap", path("roles")});
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "p graph 28 60");
  EXPECT_NE(read(path("roles")).find("28 hub 4"), std::string::npos);
  EXPECT_NE(read(path("roles")).find("1 copy 1 2 a 1"), std::string::npos);
  auto d = run({"edc", "--graph", k2});
  EXPECT_EQ(d.out, "p graph 4 4\ne 1 3\ne 1 4\ne 2 3\ne 2 4\n");
}

TEST_F(Cli, PipelineIsDeterministicAndReverifies) {
  cfc::gen::Rng rng(4);
  std::ostringstream s;
  auto g = cfc::gen::line_graph(cfc::gen::gnp(12, 0.6, rng));
  cfc::io::write_graph(s, g);
  auto gp = file("line.g", s.str());
  std::vector<std::string> args{"pipeline", "--graph", gp, "--lists", "RANGE:400", "--seed", "5", "--scaled",
                                "--trace", path("trace")};
  auto a = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  const auto trace = read(path("trace"));
  auto b = run(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(read(path("trace")), trace);
  EXPECT_NE(trace.find("[X_u,Y_u]"), std::string::npos);
  std::ofstream(path("f")) << a.out;
  EXPECT_EQ(run({"verify", "--graph", gp, "--variant", "cn-star", "--coloring", path("f"), "--lists", "RANGE:400"})
                .code,
            0);
}

TEST_F(Cli, LemmaRunner) {
  std::ostringstream s;
  cfc::gen::Rng rng(3);
  cfc::io::write_hypergraph(s, cfc::gen::random_hypergraph(300, 20, 16, 24, rng));
  auto h = file("h.hg", s.str());
  auto r = run({"lemma", "--hgraph", h, "--alpha", "16", "--seed", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("rounds ", 0), 0u);
  auto mono = file("mono.hg", "p hgraph 4 1\nh 1 2 3 4\n");
  auto lists = file("mono.l", "l 1 1\nl 2 1\nl 3 1\nl 4 1\n");
  // list size 1 < 32 * 4
  EXPECT_EQ(run({"lemma", "--hgraph", mono, "--lists", lists, "--alpha", "1", "--seed", "1"}).code, 3);
}

TEST_F(Cli, SweepSuites) {
  auto p = run({"sweep", "--suite", "propositions", "--max-n", "3"});
  EXPECT_EQ(p.code, 0) << p.out;
  EXPECT_NE(p.out.find("failures 0"), std::string::npos);
  auto red = run({"sweep", "--suite", "reductions", "--trials", "10", "--seed", "1"});
  EXPECT_EQ(red.code, 0);
  auto lem = run({"sweep", "--suite", "lemma", "--trials", "1", "--edges", "20", "--size", "16..32", "--seed", "9"});
  EXPECT_EQ(lem.code, 0) << lem.out;
  EXPECT_NE(lem.out.find("rounds="), std::string::npos);
  EXPECT_EQ(run({"sweep", "--suite", "nope", "--seed", "1"}).code, 3);
  EXPECT_EQ(run({"sweep", "--suite", "lemma", "--size", "16-32", "--seed", "1"}).code, 3);
}
