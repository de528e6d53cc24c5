#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qk/digraph.hpp"
#include "test_support.hpp"

using namespace qk;

TEST(VertexSet, BasicOperations) {
  VertexSet s(70, {0, 3, 69});
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.contains(69));
  EXPECT_FALSE(s.contains(68));
  EXPECT_EQ(s.to_string(), "0,3,69");
  s.erase(3);
  EXPECT_EQ(s.members(), (std::vector<Vertex>{0, 69}));
  EXPECT_THROW(s.insert(70), InputError);
  VertexSet t(70, {69, 5});
  EXPECT_TRUE(s.intersects(t));
  EXPECT_EQ((s & t).members(), std::vector<Vertex>{69});
  EXPECT_EQ((s | t).size(), 3u);
  EXPECT_EQ((s - t).members(), std::vector<Vertex>{0});
  EXPECT_TRUE((s & t).is_subset_of(s));
}

TEST(Digraph, BuildSortsAndDeduplicates) {
  auto d = build_digraph(3, {{2, 0}, {0, 1}, {2, 0}});
  EXPECT_EQ(d.order(), 3u);
  EXPECT_EQ(d.arc_count(), 2u);
  EXPECT_EQ(d.arcs()[0], (Arc{0, 1}));
  EXPECT_TRUE(d.has_arc(2, 0));
  EXPECT_FALSE(d.has_arc(0, 2));
  EXPECT_EQ(d.in_degree(0), 1u);
  EXPECT_EQ(d.out_degree(2), 1u);
}

TEST(Digraph, RejectsSelfLoopsAndRange) {
  EXPECT_THROW(build_digraph(2, {{1, 1}}), InputError);
  EXPECT_THROW(build_digraph(2, {{0, 2}}), InputError);
}

TEST(Predicates, ThreeCycleSingletonIsQuasiKernelNotKernel) {
  auto c3 = fixtures::cycle(3);
  VertexSet q(3, {0});
  EXPECT_TRUE(is_quasi_kernel(c3, q));
  EXPECT_FALSE(is_kernel(c3, q));
}

TEST(Predicates, PathExamples) {
  auto p = fixtures::path(5);
  EXPECT_TRUE(is_quasi_kernel(p, VertexSet(5, {1, 4})));
  EXPECT_TRUE(is_kernel(p, VertexSet(5, {0, 2, 4})));
  EXPECT_FALSE(is_quasi_kernel(p, VertexSet(5, {3, 4})));
  EXPECT_FALSE(is_quasi_kernel(p, VertexSet(5, {1})));
  EXPECT_EQ(sinks(p).members(), std::vector<Vertex>{4});
}

TEST(Predicates, EmptySetOnEmptyDigraph) {
  auto d = build_digraph(0, {});
  EXPECT_TRUE(is_quasi_kernel(d, VertexSet(0)));
}

TEST(Predicates, UniverseMismatchIsInputError) {
  auto p = fixtures::path(3);
  EXPECT_THROW(is_quasi_kernel(p, VertexSet(4, {0})), InputError);
}

TEST(Predicates, MatchOracleOnRandomDigraphs) {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng.below(8);
    auto d = fixtures::random_digraph(rng, n, rng.unit());
    oracle::Matrix m(d);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      VertexSet q(n);
      for (Vertex v = 0; v < n; ++v)
        if (s >> v & 1) q.insert(v);
      ASSERT_EQ(is_independent(d, q), oracle::independent(m, s));
      ASSERT_EQ(is_quasi_kernel(d, q), oracle::quasi_kernel(m, s));
      ASSERT_EQ(is_kernel(d, q), oracle::kernel(m, s));
    }
  }
}

TEST(Profile, ClassifiesShapes) {
  auto p = profile(fixtures::path(4));
  EXPECT_TRUE(p.is_acyclic);
  EXPECT_FALSE(p.is_sink_free);
  EXPECT_TRUE(p.underlying_is_tree);
  EXPECT_TRUE(p.underlying_is_bipartite);
  EXPECT_EQ(p.max_in_degree, 1u);

  auto c = profile(fixtures::cycle(3));
  EXPECT_FALSE(c.is_acyclic);
  EXPECT_TRUE(c.is_sink_free);
  EXPECT_FALSE(c.underlying_is_tree);
  EXPECT_FALSE(c.underlying_is_bipartite);

  // K4 oriented transitively: cubic underlying graph.
  auto k4 = build_digraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  auto q = profile(k4);
  EXPECT_TRUE(q.underlying_is_cubic);
  EXPECT_EQ(q.max_in_degree, 3u);
  EXPECT_EQ(q.underlying_edges, 6u);
}

TEST(Profile, DigonCountsAsOneEdge) {
  auto d = build_digraph(2, {{0, 1}, {1, 0}});
  auto p = profile(d);
  EXPECT_EQ(p.underlying_edges, 1u);
  EXPECT_TRUE(p.underlying_is_tree);
  EXPECT_FALSE(p.is_acyclic);
}

TEST(DigraphExamples, Construction) {
  EXPECT_EQ(build_digraph(1, {}).arc_count(), 0u);
  auto digon = build_digraph(2, {{0, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(digon.arc_count(), 2u);
  for (Vertex v = 0; v < 2; ++v) {
    EXPECT_EQ(digon.out(v).size(), 1u);
    EXPECT_EQ(digon.in(v).size(), 1u);
  }
}

TEST(DigraphExamples, DistanceAtMostTwo) {
  EXPECT_TRUE(dist_at_most_two(fixtures::cycle(3), 0, VertexSet(3, {2})));
  EXPECT_FALSE(dist_at_most_two(fixtures::path(4), 0, VertexSet(4, {3})));
  EXPECT_TRUE(dist_at_most_two(fixtures::path(4), 3, VertexSet(4, {3})));
}

TEST(DigraphExamples, IndependenceAndKernels) {
  auto digon = build_digraph(2, {{0, 1}, {1, 0}});
  EXPECT_FALSE(is_independent(digon, VertexSet(2, {0, 1})));
  EXPECT_TRUE(is_independent(digon, VertexSet(2)));
  EXPECT_TRUE(is_independent(fixtures::cycle(3), VertexSet(3, {0})));
  EXPECT_FALSE(is_quasi_kernel(fixtures::path(5), VertexSet(5, {4})));
  EXPECT_TRUE(is_kernel(fixtures::path(2), VertexSet(2, {1})));
  for (Vertex v = 0; v < 3; ++v) EXPECT_FALSE(is_kernel(fixtures::cycle(3), VertexSet(3, {v})));
}

TEST(DigraphExamples, Sinks) {
  EXPECT_EQ(sinks(fixtures::path(3)).members(), std::vector<Vertex>{2});
  EXPECT_TRUE(sinks(fixtures::cycle(3)).empty());
  EXPECT_EQ(sinks(build_digraph(4, {{0, 1}, {0, 2}, {0, 3}})).members(), (std::vector<Vertex>{1, 2, 3}));
  auto p = profile(fixtures::cycle(3));
  EXPECT_EQ(p.max_in_degree, 1u);
  EXPECT_EQ(p.max_out_degree, 1u);
}

TEST(DigraphExamples, KernelsAreQuasiKernels) {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + rng.below(8);
    auto d = fixtures::random_digraph(rng, n, 0.3);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      VertexSet q(n);
      for (Vertex v = 0; v < n; ++v)
        if (s >> v & 1) q.insert(v);
      if (is_kernel(d, q)) {
        ASSERT_TRUE(is_quasi_kernel(d, q));
      }
    }
  }
}
