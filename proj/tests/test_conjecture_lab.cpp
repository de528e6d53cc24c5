#include <gtest/gtest.h>

#include <json.hpp>

#include "oracles.hpp"
#include "qk/conjecture_lab.hpp"
#include "qk/reductions/gutin.hpp"
#include "test_support.hpp"

using namespace qk;

namespace {

GeneratorConfig config(GeneratorKind kind, std::size_t n, std::uint64_t seed, bool sink_free = false, double p = 0.5) {
  GeneratorConfig c;
  c.kind = kind;
  c.n = n;
  c.seed = seed;
  c.sink_free_filter = sink_free;
  c.p = p;
  return c;
}

}  // namespace

TEST(Generate, TreeOfOneVertex) {
  auto d = generate(config(GeneratorKind::tree_orientation, 1, 3));
  EXPECT_EQ(d.order(), 1u);
  EXPECT_EQ(d.arc_count(), 0u);
}

TEST(Generate, Deterministic) {
  auto c = config(GeneratorKind::tournament, 7, 12345);
  EXPECT_EQ(generate(c), generate(c));
  c.seed = 12346;
  auto other = generate(c);
  EXPECT_EQ(other.arc_count(), 21u);
}

TEST(Generate, TournamentsAreTournaments) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto d = generate(config(GeneratorKind::tournament, 8, seed));
    for (Vertex u = 0; u < 8; ++u)
      for (Vertex v = u + 1; v < 8; ++v) ASSERT_NE(d.has_arc(u, v), d.has_arc(v, u));
  }
}

TEST(Generate, TreesAreTreeOrientations) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto d = generate(config(GeneratorKind::tree_orientation, 1 + seed % 15, seed));
    auto p = profile(d);
    ASSERT_TRUE(p.underlying_is_tree);
    ASSERT_EQ(d.arc_count() + 1, d.order());
  }
}

TEST(Generate, PruferTreesCoverAllLabelledTreesOnFour) {
  // 4^2 = 16 labelled trees on four vertices; all should show up.
  std::set<std::vector<std::pair<Vertex, Vertex>>> seen;
  SplitMix64 rng(1);
  for (int i = 0; i < 2000; ++i) {
    auto e = detail::random_tree_edges(rng, 4);
    for (auto& [a, b] : e)
      if (a > b) std::swap(a, b);
    std::sort(e.begin(), e.end());
    seen.insert(e);
  }
  EXPECT_EQ(seen.size(), 16u);
}

TEST(Generate, SinkFreeGridProfile) {
  auto d = generate(config(GeneratorKind::grid_orientation, 9, 77, true));
  auto p = profile(d);
  EXPECT_TRUE(p.is_sink_free);
  EXPECT_EQ(d.order(), 9u);
}

TEST(Generate, GridWithoutDiagonalsIsBipartite) {
  auto d = generate(config(GeneratorKind::grid_orientation, 12, 5, false, 0.0));
  auto p = profile(d);
  EXPECT_TRUE(p.underlying_is_bipartite);
  // 4x3 grid: 3*3 horizontal + 2*4 vertical... width is ceil(sqrt(12)) = 4.
  EXPECT_EQ(d.arc_count(), 3u * 3u + 4u * 2u);
}

TEST(Generate, RetryBudgetExhausted) {
  auto c = config(GeneratorKind::tree_orientation, 5, 1, true);
  c.max_retries = 10;
  EXPECT_THROW(generate(c), RetryBudgetExhausted);
}

TEST(Generate, InvalidConfig) {
  auto c = config(GeneratorKind::random_digraph, 5, 1, false, 1.5);
  EXPECT_THROW(generate(c), InputError);
  c.p = 0.5;
  c.n = 0;
  EXPECT_THROW(generate(c), InputError);
  EXPECT_THROW(parse_generator_kind("petersen"), InputError);
}

TEST(SmallQkConjecture, SpecExamples) {
  auto c3 = check_small_qk_conjecture(fixtures::cycle(3));
  EXPECT_EQ(c3.min_qk_size, 1u);
  EXPECT_TRUE(c3.holds);
  EXPECT_DOUBLE_EQ(c3.margin, 0.5);
  auto digon = check_small_qk_conjecture(build_digraph(2, {{0, 1}, {1, 0}}));
  EXPECT_EQ(digon.min_qk_size, 1u);
  EXPECT_TRUE(digon.holds);
  auto g = check_small_qk_conjecture(gutin_gadget());
  EXPECT_TRUE(g.holds);
  EXPECT_LE(g.min_qk_size, 7u);
  EXPECT_EQ(g.min_qk_size, oracle::min_qk_size(gutin_gadget()));
}

TEST(SmallQkConjecture, RejectsSinks) { EXPECT_THROW(check_small_qk_conjecture(fixtures::path(3)), InputError); }

TEST(SmallQkConjecture, CapExceeded) {
  auto v = check_small_qk_conjecture(fixtures::cycle(50));
  EXPECT_EQ(v.status, SearchStatus::cap_exceeded);
}

TEST(Search, ZeroTrialsGivesEmptyReport) {
  auto r = search_counterexamples(config(GeneratorKind::tournament, 5, 9), 0, {SearchTarget::two_disjoint});
  EXPECT_TRUE(r.stats.empty());
  EXPECT_TRUE(r.violations.empty());
  auto j = nlohmann::json::parse(r.dump());
  EXPECT_EQ(j["trials"], 0);
}

TEST(Search, TournamentsHaveTwoDisjoint) {
  auto r = search_counterexamples(config(GeneratorKind::tournament, 8, 2024, true), 100, {SearchTarget::two_disjoint});
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.cap_exceeded, 0u);
  for (const auto& s : r.stats) EXPECT_EQ(s.two_disjoint, "yes");
}

TEST(Search, GridsSatisfySmallQk) {
  auto r = search_counterexamples(config(GeneratorKind::grid_orientation, 12, 7, true, 0.5), 100, {SearchTarget::small_qk});
  EXPECT_TRUE(r.violations.empty());
  for (const auto& s : r.stats) {
    ASSERT_TRUE(s.min_qk_size.has_value());
    EXPECT_GE(*s.margin, 0.0);
  }
}

TEST(Search, ReportIndependentOfThreadCount) {
  auto c = config(GeneratorKind::random_digraph, 9, 555, true, 0.3);
  std::vector<SearchTarget> t{SearchTarget::small_qk, SearchTarget::two_disjoint};
  auto a = search_counterexamples(c, 60, t, 1).dump();
  auto b = search_counterexamples(c, 60, t, 4).dump();
  EXPECT_EQ(a, b);
}

TEST(Search, FindsKnownNonDisjointInstancesInRandomDigraphs) {
  // Sparse random sink-free digraphs without two disjoint quasi-kernels do
  // occur; every flagged one must re-verify.
  auto c = config(GeneratorKind::random_digraph, 7, 99, true, 0.25);
  auto r = search_counterexamples(c, 300, {SearchTarget::two_disjoint});
  std::size_t no = 0;
  for (const auto& s : r.stats) no += s.two_disjoint == "no";
  EXPECT_EQ(no, r.violations.size());
  for (const auto& v : r.violations) {
    auto d = io::parse_digraph(v.instance);
    EXPECT_FALSE(oracle::has_disjoint(d, 2));
  }
}

TEST(Reverify, Gutin) {
  auto text = io::emit_digraph(gutin_gadget());
  EXPECT_TRUE(reverify(text, "two_disjoint"));
  EXPECT_FALSE(reverify(text, "small_qk"));
  EXPECT_FALSE(reverify(io::emit_digraph(fixtures::cycle(4)), "two_disjoint"));
}
