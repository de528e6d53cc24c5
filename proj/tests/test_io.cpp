#include <gtest/gtest.h>

#include "qk/io.hpp"
#include "test_support.hpp"

using namespace qk;

namespace {

template <class F>
std::size_t error_line(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no parse error";
  return 0;
}

}  // namespace

TEST(DigraphFormat, RoundTrip) {
  const std::string text = "qk 4 3\n0 1\n0 3\n2 1\n";
  auto d = io::parse_digraph(text);
  EXPECT_EQ(d.order(), 4u);
  EXPECT_EQ(io::emit_digraph(d), text);
}

TEST(DigraphFormat, CommentsBlankLinesAndOrderAreNormalised) {
  auto d = io::parse_digraph("c a comment\nqk 3 2\n\n  2   0\nc another\n0 1\n");
  EXPECT_EQ(io::emit_digraph(d), "qk 3 2\n0 1\n2 0\n");
}

TEST(DigraphFormat, RandomRoundTrips) {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto d = fixtures::random_digraph(rng, 1 + rng.below(20), 0.2);
    auto text = io::emit_digraph(d);
    ASSERT_EQ(io::parse_digraph(text), d);
    ASSERT_EQ(io::emit_digraph(io::parse_digraph(text)), text);
  }
}

TEST(DigraphFormat, Errors) {
  EXPECT_EQ(error_line([] { io::parse_digraph("qq 3 0\n"); }), 1u);
  EXPECT_EQ(error_line([] { io::parse_digraph("qk 3 1\n0 5\n"); }), 2u);
  EXPECT_EQ(error_line([] { io::parse_digraph("qk 3 2\n0 1\n"); }), 1u);
  EXPECT_EQ(error_line([] { io::parse_digraph("qk 3 1\n\n1 1\n"); }), 3u);
  EXPECT_EQ(error_line([] { io::parse_digraph("qk 3 1\n0 x\n"); }), 2u);
  EXPECT_EQ(error_line([] { io::parse_digraph("qk 3 1\n0 1 2\n"); }), 2u);
  EXPECT_THROW(io::parse_digraph("qk 3 0"), ParseError);
  EXPECT_THROW(io::parse_digraph(""), ParseError);
}

TEST(DigraphFormat, ErrorMessageCarriesPosition) {
  try {
    io::parse_digraph("qk 2 1\n0 7\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(Cnf, UnitClause) {
  auto f = io::parse_dimacs_cnf("p cnf 1 1\n1 0\n");
  EXPECT_EQ(f.num_vars, 1u);
  ASSERT_EQ(f.clauses.size(), 1u);
  EXPECT_EQ(f.clauses[0], std::vector<int>{1});
}

TEST(Cnf, RoundTripAndMultiLineClauses) {
  const std::string canonical = "p cnf 3 2\n1 -2 3 0\n-1 0\n";
  EXPECT_EQ(io::emit_dimacs_cnf(io::parse_dimacs_cnf(canonical)), canonical);
  auto f = io::parse_dimacs_cnf("c x\np cnf 3 2\n1 -2\n 3 0 -1 0\n");
  EXPECT_EQ(io::emit_dimacs_cnf(f), canonical);
}

TEST(Cnf, Errors) {
  EXPECT_EQ(error_line([] { io::parse_dimacs_cnf("p cnf x 1\n1 0\n"); }), 1u);
  EXPECT_EQ(error_line([] { io::parse_dimacs_cnf("p dnf 1 1\n1 0\n"); }), 1u);
  EXPECT_EQ(error_line([] { io::parse_dimacs_cnf("p cnf 1 1\n2 0\n"); }), 2u);
  EXPECT_EQ(error_line([] { io::parse_dimacs_cnf("p cnf 1 1\n1\n"); }), 2u);
  EXPECT_EQ(error_line([] { io::parse_dimacs_cnf("p cnf 1 2\n1 0\n"); }), 1u);
}

TEST(EdgeFormat, RoundTrip) {
  const std::string canonical = "p edge 3 2\ne 1 2\ne 2 3\n";
  auto g = io::parse_dimacs_edge(canonical);
  EXPECT_EQ(g.n, 3u);
  EXPECT_EQ(g.edges[0], (std::pair<Vertex, Vertex>{0, 1}));
  EXPECT_EQ(io::emit_dimacs_edge(g), canonical);
  EXPECT_EQ(io::emit_dimacs_edge(io::parse_dimacs_edge("p edge 3 2\ne 3 2\ne 2 1\n")), canonical);
  auto pet = fixtures::petersen();
  EXPECT_EQ(io::emit_dimacs_edge(io::parse_dimacs_edge(io::emit_dimacs_edge(pet))), io::emit_dimacs_edge(pet));
}

TEST(EdgeFormat, Errors) {
  EXPECT_EQ(error_line([] { io::parse_dimacs_edge("p edge 2 1\ne 1 3\n"); }), 2u);
  EXPECT_EQ(error_line([] { io::parse_dimacs_edge("p edge 2 1\nf 1 2\n"); }), 2u);
  EXPECT_EQ(error_line([] { io::parse_dimacs_edge("p edge 2 1\ne 0 1\n"); }), 2u);
  EXPECT_EQ(error_line([] { io::parse_dimacs_edge("p graph 2 1\ne 1 2\n"); }), 1u);
}

TEST(SetCoverFormat, RoundTrip) {
  const std::string canonical = "sc 4 3 2\n2 0 1\n1 2\n3 1 2 3\n";
  auto inst = io::parse_set_cover(canonical);
  EXPECT_EQ(inst.universe_size, 4u);
  EXPECT_EQ(inst.k, 2u);
  EXPECT_EQ(inst.family[2], (std::vector<std::uint32_t>{1, 2, 3}));
  EXPECT_EQ(io::emit_set_cover(inst), canonical);
}

TEST(SetCoverFormat, Errors) {
  EXPECT_EQ(error_line([] { io::parse_set_cover("sc 2 1 1\n2 0\n"); }), 2u);
  EXPECT_EQ(error_line([] { io::parse_set_cover("sc 2 1 1\n1 4\n"); }), 2u);
  EXPECT_EQ(error_line([] { io::parse_set_cover("sc 2 2 1\n1 0\n"); }), 1u);
}

TEST(Sidecars, LabelsAndParams) {
  ReductionOutput out;
  out.names = {"a", "b"};
  out.params = {{"z", 2}, {"a", -1}};
  EXPECT_EQ(io::emit_labels(out), "a 0\nb 1\n");
  EXPECT_EQ(io::emit_params(out), "a=-1\nz=2\n");
}

TEST(VertexLists, Parse) {
  EXPECT_EQ(io::parse_vertex_set("0,3,7", 8).members(), (std::vector<Vertex>{0, 3, 7}));
  EXPECT_TRUE(io::parse_vertex_set("", 3).empty());
  EXPECT_THROW(io::parse_vertex_set("0,,1", 3), InputError);
  EXPECT_THROW(io::parse_vertex_set("0,5", 3), InputError);
  EXPECT_THROW(io::parse_vertex_set("a", 3), InputError);
}
