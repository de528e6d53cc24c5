#pragma once

#include <array>
#include <string>
#include <vector>

#include "qk/instances.hpp"

namespace qk {

// 3-colouring -> three disjoint quasi-kernels.
//
// Vertex v_i of G (0-based i) becomes w_<i+1> with a directed triangle
// w -> z_<i+1>.1 -> z_<i+1>.2 -> w; each edge becomes a digon between the w's.
// Vertex numbering: w_1, z_1.1, z_1.2, w_2, ...

namespace detail {
inline std::string w_label(std::size_t i) { return "w_" + std::to_string(i + 1); }
inline std::string z_label(std::size_t i, int k) { return "z_" + std::to_string(i + 1) + "." + std::to_string(k); }
}  // namespace detail

/// Colours are 0, 1, 2; index i is the colour of vertex i.
using Coloring = std::vector<int>;

inline ReductionOutput coloring_to_three_disjoint_qk(const UndirectedGraph& g) {
  auto deg = g.degrees();
  for (std::size_t i = 0; i < g.n; ++i)
    if (deg[i] == 0) throw InputError("vertex " + std::to_string(i) + " is isolated");
  detail::LabeledBuilder b;
  for (std::size_t i = 0; i < g.n; ++i) {
    Vertex w = b.add(detail::w_label(i));
    Vertex z1 = b.add(detail::z_label(i, 1));
    Vertex z2 = b.add(detail::z_label(i, 2));
    b.arc(w, z1);
    b.arc(z1, z2);
    b.arc(z2, w);
  }
  for (auto [u, v] : g.edges) {
    b.arc(detail::w_label(u), detail::w_label(v));
    b.arc(detail::w_label(v), detail::w_label(u));
  }
  const auto n = static_cast<std::int64_t>(g.n);
  const auto m = static_cast<std::int64_t>(g.edges.size());
  return b.finish({{"source_vertices", n}, {"source_edges", m}, {"expected_vertices", 3 * n}, {"expected_arcs", 2 * m + 3 * n}});
}

/// Colour class c receives w_i for vertices of colour c, and the triangle
/// vertices z_i.1, z_i.2 of vertices coloured c-1 and c-2 respectively.
/// The three classes partition the vertex set.
inline std::array<VertexSet, 3> coloring_to_qk_triple(const ReductionOutput& out, const Coloring& colour) {
  const auto n = static_cast<std::size_t>(out.param("source_vertices"));
  if (colour.size() != n) throw InputError("colouring length does not match the number of vertices");
  for (int c : colour)
    if (c < 0 || c > 2) throw InputError("colours must be 0, 1 or 2");
  const Digraph& d = out.digraph;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (colour[i] == colour[j] && d.has_arc(out.at(detail::w_label(i)), out.at(detail::w_label(j))))
        throw InputError("colouring is not proper: vertices " + std::to_string(i) + " and " + std::to_string(j));
  std::array<VertexSet, 3> sets{VertexSet(d.order()), VertexSet(d.order()), VertexSet(d.order())};
  for (std::size_t i = 0; i < n; ++i) {
    const int c = colour[i];
    sets[c].insert(out.at(detail::w_label(i)));
    sets[(c + 1) % 3].insert(out.at(detail::z_label(i, 1)));
    sets[(c + 2) % 3].insert(out.at(detail::z_label(i, 2)));
  }
  return sets;
}

/// Every w_i lies in exactly one of three disjoint quasi-kernels; its index is the colour.
inline Coloring qk_triple_to_coloring(const ReductionOutput& out, const std::array<VertexSet, 3>& triple) {
  const Digraph& d = out.digraph;
  for (int a = 0; a < 3; ++a) {
    if (!is_quasi_kernel(d, triple[a])) throw InputError("set " + std::to_string(a) + " is not a quasi-kernel");
    for (int b = a + 1; b < 3; ++b)
      if (triple[a].intersects(triple[b])) throw InputError("quasi-kernels are not pairwise disjoint");
  }
  const auto n = static_cast<std::size_t>(out.param("source_vertices"));
  Coloring colour(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    Vertex w = out.at(detail::w_label(i));
    for (int a = 0; a < 3; ++a)
      if (triple[a].contains(w)) colour[i] = a;
    if (colour[i] < 0) detail::internal_defect("qk_triple_to_coloring", detail::w_label(i) + " lies in none of the quasi-kernels");
  }
  return colour;
}

}  // namespace qk
