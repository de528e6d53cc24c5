#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "qk/instances.hpp"

namespace qk {

// Set cover -> quasi-kernel in an acyclic orientation of a bipartite graph.
// Vertices F_1..F_m (0..m-1), u_1..u_n (m..m+n-1), then s and t.
// Arcs u -> F for every u in F, F -> s for every set, and s -> t.

inline ReductionOutput setcover_to_qk(const SetCoverInstance& inst) {
  inst.validate();
  detail::LabeledBuilder b;
  const std::size_t m = inst.family.size();
  const std::size_t n = inst.universe_size;
  for (std::size_t j = 0; j < m; ++j) b.add("F_" + std::to_string(j + 1));
  for (std::size_t i = 0; i < n; ++i) b.add("u_" + std::to_string(i + 1));
  Vertex s = b.add("s");
  Vertex t = b.add("t");
  for (std::size_t j = 0; j < m; ++j) {
    std::vector<std::uint32_t> elems = inst.family[j];
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    for (auto e : elems) b.arc(static_cast<Vertex>(m + e), static_cast<Vertex>(j));
    b.arc(static_cast<Vertex>(j), s);
  }
  b.arc(s, t);
  const auto mm = static_cast<std::int64_t>(m);
  const auto nn = static_cast<std::int64_t>(n);
  return b.finish({{"universe_size", nn},
                   {"num_sets", mm},
                   {"k", static_cast<std::int64_t>(inst.k)},
                   {"k_prime", static_cast<std::int64_t>(inst.k) + 1},
                   {"expected_vertices", mm + nn + 2}});
}

/// The kernel F ∪ {t} of the generated digraph.
inline VertexSet setcover_kernel(const ReductionOutput& out) {
  VertexSet k(out.digraph.order());
  for (std::int64_t j = 0; j < out.param("num_sets"); ++j) k.insert(static_cast<Vertex>(j));
  k.insert(out.at("t"));
  return k;
}

/// Sub-family (0-based set indices) -> quasi-kernel {F_j : j in cover} ∪ {t}.
inline VertexSet cover_to_qk(const ReductionOutput& out, const std::vector<std::size_t>& cover) {
  const auto m = static_cast<std::size_t>(out.param("num_sets"));
  const auto n = static_cast<std::size_t>(out.param("universe_size"));
  VertexSet q(out.digraph.order());
  for (auto j : cover) {
    if (j >= m) throw InputError("set index " + std::to_string(j) + " out of range");
    q.insert(static_cast<Vertex>(j));
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto o = out.digraph.out(static_cast<Vertex>(m + i));
    if (std::none_of(o.begin(), o.end(), [&](Vertex f) { return q.contains(f); }))
      throw InputError("sub-family does not cover element " + std::to_string(i));
  }
  q.insert(out.at("t"));
  return q;
}

/// Exchange step: while some universe vertex u is in Q, pick its first set
/// F_j, drop every in-neighbour of F_j from Q and add F_j. The size never
/// grows; the result is Q ∩ F (0-based set indices, ascending).
inline std::vector<std::size_t> qk_to_cover(const ReductionOutput& out, const VertexSet& q_in) {
  const Digraph& d = out.digraph;
  if (!is_quasi_kernel(d, q_in)) throw InputError("set is not a quasi-kernel");
  const auto m = static_cast<std::size_t>(out.param("num_sets"));
  const auto n = static_cast<std::size_t>(out.param("universe_size"));
  VertexSet q = q_in;
  for (;;) {
    std::optional<Vertex> u;
    for (std::size_t i = 0; i < n && !u; ++i)
      if (q.contains(static_cast<Vertex>(m + i))) u = static_cast<Vertex>(m + i);
    if (!u) break;
    if (d.out(*u).empty()) detail::internal_defect("qk_to_cover", "universe vertex without a set");
    Vertex f = d.out(*u).front();
    for (Vertex x : d.in(f)) q.erase(x);
    q.insert(f);
    if (!is_quasi_kernel(d, q)) detail::internal_defect("qk_to_cover", "exchange broke the quasi-kernel property");
  }
  std::vector<std::size_t> cover;
  for (std::size_t j = 0; j < m; ++j)
    if (q.contains(static_cast<Vertex>(j))) cover.push_back(j);
  return cover;
}

}  // namespace qk
