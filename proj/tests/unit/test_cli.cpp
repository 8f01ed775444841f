#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "packdom/generators.hpp"
#include "packdom/graph.hpp"

using namespace packdom;
using Json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("packdom_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto p = (dir_ / name).string();
    std::ofstream(p) << text;
    return p;
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, SolveReportsGammaAndWitness) {
  const auto g = write("p5.el", serialize_edge_list(make_path(5)));
  auto r = run({"solve", "--graph", g, "--d", "2", "--p", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["schemaVersion"], 1);
  EXPECT_EQ(j["command"], "solve");
  EXPECT_EQ(j["result"]["gamma"], 1);
  EXPECT_EQ(j["result"]["witness"], Json::array({2}));
  EXPECT_EQ(j["inputDigest"].get<std::string>().rfind("fnv1a64:", 0), 0U);
  EXPECT_TRUE(j.contains("elapsedMs"));
  EXPECT_TRUE(j.contains("version"));

  auto same = run({"tree-solve", "--graph", g, "--d", "2", "--p", "2"});
  ASSERT_EQ(same.code, 0);
  EXPECT_EQ(Json::parse(same.out)["result"]["gamma"], 1);
  EXPECT_EQ(Json::parse(same.out)["inputDigest"], j["inputDigest"]);

  auto brute = run({"solve", "--graph", g, "--d", "2", "--p", "2", "--brute-force"});
  EXPECT_EQ(Json::parse(brute.out)["result"]["witness"], Json::array({2}));
}

TEST_F(CliTest, ExitCodes) {
  const auto g = write("p7.el", serialize_edge_list(make_path(7)));
  EXPECT_EQ(run({"solve", "--graph", g, "--d", "1", "--p", "3"}).code, 2);  // infeasible
  auto above = run({"solve", "--graph", g, "--d", "1", "--p", "0", "--budget", "2"});
  EXPECT_EQ(above.code, 2);
  EXPECT_EQ(Json::parse(above.out)["result"]["status"], "above-budget");
  EXPECT_EQ(run({"solve", "--graph", g, "--d", "1", "--p", "0", "--budget", "3"}).code, 0);

  EXPECT_EQ(run({"solve", "--graph", (dir_ / "missing.el").string(), "--d", "1", "--p", "0"}).code, 1);
  const auto bad = write("bad.el", "3 2\n0 1\n1 q\n");
  auto parse = run({"solve", "--graph", bad, "--d", "1", "--p", "0"});
  EXPECT_EQ(parse.code, 1);
  EXPECT_NE(parse.err.find("line 3"), std::string::npos);
  EXPECT_EQ(run({"solve", "--graph", g, "--d", "x", "--p", "0"}).code, 1);
  EXPECT_EQ(run({"bogus"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"tree-solve", "--graph", write("c.el", serialize_edge_list(make_cycle(5))), "--d",
                 "1", "--p", "0"})
                .code,
            1);

  const auto big = write("big.el", serialize_edge_list(random_connected_graph(150, 40, 5)));
  EXPECT_EQ(run({"solve", "--graph", big, "--d", "1", "--p", "0", "--timeout-ms", "0"}).code, 3);
}

TEST_F(CliTest, TimeoutFromEnvironment) {
  const auto big = write("big.el", serialize_edge_list(random_connected_graph(150, 40, 5)));
  ::setenv("PACKDOM_TIMEOUT_MS", "nonsense", 1);
  EXPECT_EQ(run({"solve", "--graph", big, "--d", "1", "--p", "0"}).code, 1);
  ::setenv("PACKDOM_TIMEOUT_MS", "1", 1);
  EXPECT_EQ(run({"solve", "--graph", big, "--d", "1", "--p", "0"}).code, 3);
  ::unsetenv("PACKDOM_TIMEOUT_MS");
}

TEST_F(CliTest, GenerateAndExportKeepMarkedEdges) {
  auto gen = run({"generate", "gp", "--p", "2"});
  ASSERT_EQ(gen.code, 0);
  EXPECT_NE(gen.out.find("# marked e1 0"), std::string::npos);
  const auto f = write("gp.el", gen.out);
  auto dot = run({"export", "--graph", f, "--format", "dot"});
  ASSERT_EQ(dot.code, 0);
  EXPECT_NE(dot.out.find("e1"), std::string::npos);
  auto js = run({"export", "--graph", f, "--format", "json"});
  Json j = Json::parse(js.out);
  EXPECT_EQ(j["n"], 9);
  EXPECT_EQ(j["marked"][0]["name"], "e1");

  auto t1 = run({"generate", "random-tree", "--n", "12", "--seed", "9"});
  auto t2 = run({"generate", "random-tree", "--n", "12", "--seed", "9"});
  EXPECT_EQ(t1.out, t2.out);
  EXPECT_EQ(parse_edge_list(t1.out), random_tree(12, 9));

  const auto out = (dir_ / "fig3.el").string();
  EXPECT_EQ(run({"generate", "fig3", "--d", "2", "--s", "1", "--out", out}).code, 0);
  EXPECT_TRUE(fs::exists(out));
  EXPECT_EQ(run({"generate", "nothing"}).code, 1);
}

TEST_F(CliTest, ReduceBuildThenSolve) {
  const auto cnf = write("f.cnf", "p cnf 4 2\n1 -2 -3 0\n-1 -2 4 0\n");
  auto built = run({"reduce", "build-gd", "--cnf", cnf, "--d", "2"});
  ASSERT_EQ(built.code, 0) << built.err;
  EXPECT_NE(built.out.find("# role 2 y:1:1"), std::string::npos);
  const auto g = write("g.el", built.out);
  auto solved = run({"solve", "--graph", g, "--d", "2", "--p", "1", "--budget", "4"});
  EXPECT_EQ(solved.code, 0);

  auto verified = run({"reduce", "verify", "--cnf", cnf, "--d", "2", "--p", "4"});
  ASSERT_EQ(verified.code, 0) << verified.err;
  Json j = Json::parse(verified.out);
  EXPECT_TRUE(j["result"]["agree"].get<bool>());
  EXPECT_EQ(j["result"]["regime"], "perfect-code");

  EXPECT_EQ(run({"reduce", "verify", "--cnf", write("bad.cnf", "p cnf 3 1\n1 2 0\n"), "--d", "2",
                 "--p", "0"})
                .code,
            1);
}

TEST_F(CliTest, BoundsAndConstruct) {
  const auto g = write("t.el", serialize_edge_list(random_tree(30, 3)));
  auto b = run({"bounds", "--graph", g, "--d", "3"});
  ASSERT_EQ(b.code, 0) << b.err;
  Json j = Json::parse(b.out);
  EXPECT_TRUE(j["result"]["allHold"].get<bool>());
  EXPECT_EQ(j["result"]["stats"]["n"], 30);

  for (const char* alg : {"peel22", "thm5", "spanning"}) {
    auto c = run({"construct", alg, "--graph", g, "--d", "2"});
    EXPECT_EQ(c.code, 0) << alg << c.err;
  }
  auto split = run({"construct", "split-f2", "--graph", write("p10.el", serialize_edge_list(make_path(10)))});
  ASSERT_EQ(split.code, 0) << split.err;
  auto edge = Json::parse(split.out)["result"]["edge"].get<std::vector<int>>();
  std::sort(edge.begin(), edge.end());
  EXPECT_EQ(edge, (std::vector<int>{4, 5}));
  EXPECT_EQ(run({"construct", "split-f2", "--graph", g}).code, 1);
  EXPECT_EQ(run({"construct", "nope", "--graph", g}).code, 1);
}

TEST_F(CliTest, VerifySuites) {
  auto s6 = run({"verify", "section6-gadgets"});
  ASSERT_EQ(s6.code, 0);
  EXPECT_EQ(Json::parse(s6.out)["result"]["notes"].size(), 2U);

  auto dp = run({"verify", "dp-vs-bruteforce", "--max-n", "5", "--count", "10", "--seed", "3"});
  ASSERT_EQ(dp.code, 0);
  EXPECT_EQ(Json::parse(dp.out)["seed"], 3);

  const auto cex = (dir_ / "cex").string();
  auto conj = run({"verify", "conjecture", "--d", "3", "--p", "3", "--count", "30", "--max-n", "20",
                   "--counterexample-dir", cex});
  Json j = Json::parse(conj.out);
  const auto files = j["result"]["counterexampleFiles"];
  EXPECT_EQ(conj.code, files.empty() ? 0 : 2);
  for (const auto& f : files) EXPECT_TRUE(fs::exists(f.get<std::string>()));
  EXPECT_EQ(run({"verify", "nothing"}).code, 1);
}
