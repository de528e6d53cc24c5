#pragma once

#include <string>
#include <vector>

#include "qk/instances.hpp"

namespace qk {

// Vertex cover on cubic graphs -> quasi-kernel in acyclic digraphs of maximum
// in-degree three. Per vertex i (1-based labels): w_i -> w'_i -> w''_i.
// Per edge e = ij (1-based in sorted edge order): z'_e -> z_e, z_e -> w_i, z_e -> w_j.
// Numbering: all w-triples first, then the (z_e, z'_e) pairs.

namespace detail {
inline std::string vc_w(std::size_t i, const char* primes) { return std::string("w") + primes + "_" + std::to_string(i + 1); }
inline std::string vc_z(std::size_t e, const char* primes) { return std::string("z") + primes + "_" + std::to_string(e + 1); }
}  // namespace detail

inline ReductionOutput vc_to_qk(const UndirectedGraph& g) {
  auto deg = g.degrees();
  for (std::size_t i = 0; i < g.n; ++i)
    if (deg[i] != 3) throw InputError("graph is not cubic: vertex " + std::to_string(i) + " has degree " + std::to_string(deg[i]));
  detail::LabeledBuilder b;
  for (std::size_t i = 0; i < g.n; ++i) {
    b.add(detail::vc_w(i, ""));
    b.add(detail::vc_w(i, "'"));
    b.add(detail::vc_w(i, "''"));
    b.arc(detail::vc_w(i, ""), detail::vc_w(i, "'"));
    b.arc(detail::vc_w(i, "'"), detail::vc_w(i, "''"));
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [u, v] = g.edges[e];
    b.add(detail::vc_z(e, ""));
    b.add(detail::vc_z(e, "'"));
    b.arc(detail::vc_z(e, "'"), detail::vc_z(e, ""));
    b.arc(detail::vc_z(e, ""), detail::vc_w(u, ""));
    b.arc(detail::vc_z(e, ""), detail::vc_w(v, ""));
  }
  const auto n = static_cast<std::int64_t>(g.n);
  const auto m = static_cast<std::int64_t>(g.edges.size());
  return b.finish({{"source_vertices", n},
                   {"source_edges", m},
                   {"expected_vertices", 3 * n + 2 * m},
                   {"expected_arcs", 2 * n + 3 * m},
                   {"alpha", 5},
                   {"beta", 1}});
}

/// Vertex cover C (0-based) -> {w''_i : all i} ∪ {w_i : i in C}, of size |C| + n.
inline VertexSet vc_set_to_qk(const ReductionOutput& out, const std::vector<std::size_t>& cover) {
  const auto n = static_cast<std::size_t>(out.param("source_vertices"));
  const auto m = static_cast<std::size_t>(out.param("source_edges"));
  const Digraph& d = out.digraph;
  VertexSet q(d.order());
  for (auto i : cover) {
    if (i >= n) throw InputError("vertex " + std::to_string(i) + " out of range");
    q.insert(out.at(detail::vc_w(i, "")));
  }
  for (std::size_t e = 0; e < m; ++e) {
    auto ends = d.out(out.at(detail::vc_z(e, "")));
    if (!q.contains(ends[0]) && !q.contains(ends[1]))
      throw InputError("not a vertex cover: edge " + std::to_string(e + 1) + " is uncovered");
  }
  for (std::size_t i = 0; i < n; ++i) q.insert(out.at(detail::vc_w(i, "''")));
  return q;
}

struct NormalizedCover {
  VertexSet normalized_qk;          // no z or z' vertices, never larger than the input
  std::vector<std::size_t> cover;   // 0-based vertices i with w_i in the normalized set
};

/// Applies the two normalisation rules until neither fires:
///   (1) drop any z'_e from Q;
///   (2) for a vertex i with some incident z_e in Q, replace all of them by w_i.
inline NormalizedCover normalize_qk_to_vc(const ReductionOutput& out, const VertexSet& q_in) {
  const Digraph& d = out.digraph;
  if (!is_quasi_kernel(d, q_in)) throw InputError("set is not a quasi-kernel");
  const auto n = static_cast<std::size_t>(out.param("source_vertices"));
  const auto m = static_cast<std::size_t>(out.param("source_edges"));
  VertexSet q = q_in;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t e = 0; e < m; ++e) {
      Vertex zp = out.at(detail::vc_z(e, "'"));
      if (q.contains(zp)) {
        q.erase(zp);
        changed = true;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      Vertex w = out.at(detail::vc_w(i, ""));
      bool any = false;
      for (Vertex z : d.in(w))
        if (q.contains(z)) {
          q.erase(z);
          any = true;
        }
      if (any) {
        q.insert(w);
        changed = true;
      }
    }
    if (!is_quasi_kernel(d, q)) detail::internal_defect("normalize_qk_to_vc", "normalisation broke the quasi-kernel property");
  }
  NormalizedCover r{q, {}};
  for (std::size_t i = 0; i < n; ++i)
    if (q.contains(out.at(detail::vc_w(i, "")))) r.cover.push_back(i);
  return r;
}

}  // namespace qk
