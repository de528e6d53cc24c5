#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "qk/digraph.hpp"

namespace qk::detail {

using Mask = std::uint64_t;

constexpr Mask bit(Vertex v) { return Mask{1} << v; }

inline Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (Vertex v : s.members()) m |= bit(v);
  return m;
}

inline VertexSet from_mask(std::size_t n, Mask m) {
  VertexSet s(n);
  for (; m != 0; m &= m - 1) s.insert(static_cast<Vertex>(std::countr_zero(m)));
  return s;
}

template <class F>
void for_each_bit(Mask m, F&& f) {
  for (; m != 0; m &= m - 1) f(static_cast<Vertex>(std::countr_zero(m)));
}

/// Bitmask view of a digraph with at most 64 vertices, used by the exact searches.
struct MaskGraph {
  std::size_t n = 0;
  Mask all = 0;
  Mask sinks = 0;
  std::vector<Mask> adj;      // in- and out-neighbours
  std::vector<Mask> reach2;   // vertices whose membership absorbs v: {v} ∪ N+(v) ∪ N+(N+(v))
  std::vector<Mask> absorbs;  // vertices absorbed by w: {w} ∪ N-(w) ∪ N-(N-(w))

  explicit MaskGraph(const Digraph& d) : n(d.order()), adj(n), reach2(n), absorbs(n) {
    if (n > kMaxExactVertices) throw InputError("exact search supports at most 64 vertices");
    all = n == 64 ? ~Mask{0} : (bit(static_cast<Vertex>(n)) - 1);
    std::vector<Mask> out(n);
    for (const Arc& a : d.arcs()) {
      out[a.tail] |= bit(a.head);
      adj[a.tail] |= bit(a.head);
      adj[a.head] |= bit(a.tail);
    }
    for (Vertex v = 0; v < n; ++v) {
      if (out[v] == 0) sinks |= bit(v);
      Mask r = bit(v) | out[v];
      for_each_bit(out[v], [&](Vertex w) { r |= out[w]; });
      reach2[v] = r;
    }
    for (Vertex v = 0; v < n; ++v) for_each_bit(reach2[v], [&](Vertex w) { absorbs[w] |= bit(v); });
  }

  bool independent(Mask s) const {
    bool ok = true;
    for_each_bit(s, [&](Vertex v) { ok = ok && (adj[v] & s) == 0; });
    return ok;
  }

  Mask absorbed_by(Mask s) const {
    Mask r = 0;
    for_each_bit(s, [&](Vertex v) { r |= absorbs[v]; });
    return r;
  }

  bool quasi_kernel(Mask s) const { return independent(s) && absorbed_by(s) == all; }
};

}  // namespace qk::detail
