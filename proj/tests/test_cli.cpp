#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "qk/cli.hpp"
#include "test_support.hpp"

using namespace qk;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("qk_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) {
    auto p = (dir_ / name).string();
    io::write_file(p, content);
    return p;
  }
  std::string path(const std::string& name) { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, MinOnPathWithTreeDp) {
  auto f = file("path5.qk", io::emit_digraph(fixtures::path(5)));
  auto r = run({"min", f, "--tree", "--json"});
  EXPECT_EQ(r.code, 0);
  auto j = r.json();
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(j["size"], 2);
  EXPECT_EQ(j["set"], nlohmann::json::parse("[1,4]"));
  EXPECT_EQ(j["predicate"]["value"], true);
  auto exact = run({"--json", "min", f, "--exact"}).json();
  EXPECT_EQ(exact["size"], 2);
  EXPECT_EQ(exact["method"], "exact");
}

TEST_F(Cli, GutinHasNoTwoDisjoint) {
  auto g = path("gutin.qk");
  auto w = run({"gutin", "-o", g, "--json"});
  ASSERT_EQ(w.code, 0);
  EXPECT_TRUE(fs::exists(g + ".labels"));
  auto r = run({"disjoint", g, "-k", "2", "--json"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.json()["status"], "none_exists");
}

TEST_F(Cli, VerifyOnThreeCycle) {
  auto f = file("tri.qk", "qk 3 3\n0 1\n1 2\n2 0\n");
  auto r = run({"verify", f, "--set", "0", "--json"});
  EXPECT_EQ(r.code, 0);
  auto j = r.json();
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(j["is_quasi_kernel"], true);
  auto k = run({"verify", f, "--set", "0", "--kernel", "--json"}).json();
  EXPECT_EQ(k["is_kernel"], false);
  EXPECT_EQ(k["predicate"]["name"], "is_kernel");
}

TEST_F(Cli, HumanOutputIsKeyValueLines) {
  auto f = file("tri.qk", "qk 3 3\n0 1\n1 2\n2 0\n");
  auto r = run({"find", f});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("status: ok\n"), std::string::npos);
  EXPECT_NE(r.out.find("size: 1\n"), std::string::npos);
}

TEST_F(Cli, UsageErrors) {
  auto r = run({"min", "x.qk", "--bogus"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  auto j = run({"--json", "disjoint", "x.qk"});
  EXPECT_EQ(j.code, 2);
  EXPECT_EQ(j.json()["status"], "input_error");
}

TEST_F(Cli, InputErrorsCarryStatus) {
  auto bad = file("bad.qk", "qk 2 1\n0 9\n");
  auto r = run({"min", bad, "--json"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.json()["status"], "input_error");
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run({"min", path("missing.qk")}).code, 2);
  auto tri = file("tri.qk", "qk 3 3\n0 1\n1 2\n2 0\n");
  EXPECT_EQ(run({"min", tri, "--tree"}).code, 2);
  EXPECT_EQ(run({"within-kernel", tri, "--kernel", "0"}).code, 2);
  EXPECT_EQ(run({"disjoint", tri, "-k", "0"}).code, 2);
}

TEST_F(Cli, CapExceeded) {
  auto f = file("c50.qk", io::emit_digraph(fixtures::cycle(50)));
  auto r = run({"min", f, "--json"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.json()["status"], "cap_exceeded");
  EXPECT_EQ(run({"enumerate", f}).code, 3);
  EXPECT_EQ(run({"min", f, "--cap", "64"}).code, 0);
}

TEST_F(Cli, EnumerateAndWithinKernel) {
  auto f = file("p3.qk", io::emit_digraph(fixtures::path(3)));
  auto e = run({"enumerate", f, "--json"}).json();
  EXPECT_EQ(e["count"], 2);
  EXPECT_EQ(e["sets"], nlohmann::json::parse("[[2],[0,2]]"));
  auto w = run({"within-kernel", f, "--kernel", "0,2", "--json"}).json();
  EXPECT_EQ(w["set"], nlohmann::json::parse("[2]"));
}

TEST_F(Cli, ReduceWritesSidecarsForEveryReduction) {
  struct Case {
    std::string kind, input;
  };
  std::vector<Case> cases{{"sat2dqk", "p cnf 3 2\n1 -2 3 0\n-1 2 0\n"},
                          {"col3dqk", "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n"},
                          {"b2sat", "p cnf 3 4\n1 2 3 0\n-1 -2 -3 0\n1 -2 3 0\n-1 2 -3 0\n"},
                          {"setcover", "sc 3 2 1\n2 0 1\n2 1 2\n"},
                          {"vc", io::emit_dimacs_edge(fixtures::complete_graph(4))}};
  for (const auto& c : cases) {
    auto in = file(c.kind + ".in", c.input);
    auto out = path(c.kind + ".qk");
    auto r = run({"reduce", c.kind, in, "-o", out, "--json"});
    ASSERT_EQ(r.code, 0) << c.kind << r.err;
    auto j = r.json();
    EXPECT_EQ(j["predicate"]["value"], true) << c.kind;
    auto d = io::parse_digraph(io::read_file(out));
    EXPECT_EQ(j["vertices"], d.order());
    EXPECT_FALSE(io::read_file(out + ".labels").empty());
    EXPECT_NE(io::read_file(out + ".params").find("expected_vertices="), std::string::npos);
  }
}

TEST_F(Cli, WitnessForwardAndBackward) {
  auto cnf = file("f.cnf", "p cnf 3 2\n1 -2 3 0\n-1 2 0\n");
  auto fw = run({"witness", "sat2dqk", cnf, "--assignment", "1,1,0", "--json"});
  ASSERT_EQ(fw.code, 0) << fw.err;
  auto sets = fw.json()["sets"];
  auto join = [](const nlohmann::json& a) {
    std::string s;
    for (const auto& v : a) s += (s.empty() ? "" : ",") + std::to_string(v.get<int>());
    return s;
  };
  auto bw = run({"witness", "sat2dqk", cnf, "--qk", join(sets[0]) + ";" + join(sets[1]), "--json"}).json();
  EXPECT_EQ(bw["assignment"], nlohmann::json::parse("[1,1,0]"));
  EXPECT_EQ(bw["predicate"]["value"], true);

  EXPECT_EQ(run({"witness", "sat2dqk", cnf, "--assignment", "0,1,0"}).code, 2);
  EXPECT_EQ(run({"witness", "sat2dqk", cnf}).code, 2);

  auto sc = file("s.sc", "sc 3 3 2\n2 0 1\n1 2\n1 0\n");
  auto c = run({"witness", "setcover", sc, "--cover", "0,1", "--json"}).json();
  EXPECT_EQ(c["size"], 3);
  auto back = run({"witness", "setcover", sc, "--qk", join(c["set"]), "--json"}).json();
  EXPECT_EQ(back["cover"], nlohmann::json::parse("[0,1]"));

  auto g = file("k4.edge", io::emit_dimacs_edge(fixtures::complete_graph(4)));
  auto v = run({"witness", "vc", g, "--cover", "0,1,2", "--json"}).json();
  EXPECT_EQ(v["size"], 7);
  auto nv = run({"witness", "vc", g, "--qk", join(v["set"]), "--json"}).json();
  EXPECT_EQ(nv["predicate"]["value"], true);

  auto tri = file("tri.edge", "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  auto col = run({"witness", "col3dqk", tri, "--coloring", "0,1,2", "--json"}).json();
  EXPECT_EQ(col["predicate"]["value"], true);
  auto colback = run({"witness", "col3dqk", tri, "--qk",
                      join(col["sets"][0]) + ";" + join(col["sets"][1]) + ";" + join(col["sets"][2]), "--json"})
                     .json();
  EXPECT_EQ(colback["coloring"], nlohmann::json::parse("[0,1,2]"));
}

TEST_F(Cli, CheckConjecture) {
  auto tri = file("tri.qk", "qk 3 3\n0 1\n1 2\n2 0\n");
  auto j = run({"check-conjecture", tri, "--json"}).json();
  EXPECT_EQ(j["verdict"], "holds");
  EXPECT_EQ(j["min_qk_size"], 1);
  auto p3 = file("p3.qk", io::emit_digraph(fixtures::path(3)));
  EXPECT_EQ(run({"check-conjecture", p3}).code, 2);
}

TEST_F(Cli, SearchReportIsDeterministic) {
  auto a = path("a.json"), b = path("b.json");
  std::vector<std::string> base{"search", "--kind", "tournament", "--n", "7", "--seed", "42", "--trials", "20", "--sink-free", "--json"};
  auto ra = base, rb = base;
  ra.insert(ra.end(), {"--report", a});
  rb.insert(rb.end(), {"--report", b, "--threads", "3"});
  ASSERT_EQ(run(ra).code, 0);
  ASSERT_EQ(run(rb).code, 0);
  EXPECT_EQ(io::read_file(a), io::read_file(b));
  auto rep = nlohmann::json::parse(io::read_file(a));
  EXPECT_EQ(rep["trials"], 20);
  EXPECT_EQ(rep["summary"]["violations"], 0);
  EXPECT_EQ(run({"search", "--kind", "hypercube", "--n", "3", "--seed", "1", "--trials", "1"}).code, 2);
  EXPECT_EQ(run({"search", "--n", "3", "--seed", "1", "--trials", "1", "--targets", "nothing"}).code, 2);
}

TEST_F(Cli, JsonOutputParsesForEverySubcommand) {
  auto tri = file("tri.qk", "qk 3 3\n0 1\n1 2\n2 0\n");
  auto sc = file("s.sc", "sc 2 2 1\n1 0\n1 1\n");
  std::vector<std::vector<std::string>> cmds{
      {"find", tri},
      {"min", tri},
      {"verify", tri, "--set", "1"},
      {"disjoint", tri, "-k", "3"},
      {"enumerate", tri},
      {"within-kernel", tri, "--kernel", "0,1"},
      {"reduce", "setcover", sc, "-o", path("sc.qk")},
      {"witness", "setcover", sc, "--cover", "0,1"},
      {"gutin", "-o", path("g.qk")},
      {"check-conjecture", tri},
      {"search", "--n", "4", "--seed", "3", "--trials", "2"},
  };
  for (auto c : cmds) {
    c.push_back("--json");
    auto r = run(c);
    ASSERT_NO_THROW(nlohmann::json::parse(r.out)) << c[0] << ": " << r.out;
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1) << c[0];
    auto status = r.json()["status"].get<std::string>();
    int expected = status == "ok" ? 0 : status == "none_exists" ? 1 : status == "cap_exceeded" ? 3 : 2;
    EXPECT_EQ(r.code, expected) << c[0];
  }
}
