#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "qk/error.hpp"
#include "qk/vertex_set.hpp"

namespace qk {

struct Arc {
  Vertex tail;
  Vertex head;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Immutable simple digraph on the vertices 0..n-1. Digons are allowed,
/// self-loops and parallel arcs are not. Arcs are kept in lexicographic order
/// and both adjacency directions are sorted.
class Digraph {
 public:
  Digraph() = default;

  std::size_t order() const noexcept { return out_.size(); }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  std::span<const Vertex> out(Vertex v) const { return out_.at(v); }
  std::span<const Vertex> in(Vertex v) const { return in_.at(v); }
  std::size_t out_degree(Vertex v) const { return out_.at(v).size(); }
  std::size_t in_degree(Vertex v) const { return in_.at(v).size(); }

  bool has_arc(Vertex u, Vertex v) const {
    const auto& o = out_.at(u);
    return std::binary_search(o.begin(), o.end(), v);
  }
  bool adjacent(Vertex u, Vertex v) const { return has_arc(u, v) || has_arc(v, u); }

  friend bool operator==(const Digraph& a, const Digraph& b) { return a.arcs_ == b.arcs_ && a.order() == b.order(); }

 private:
  friend Digraph build_digraph(std::size_t n, std::span<const Arc> arcs);

  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

/// Builds a digraph, silently merging repeated arcs.
/// Throws InputError for endpoints >= n and for self-loops.
inline Digraph build_digraph(std::size_t n, std::span<const Arc> arcs) {
  Digraph d;
  d.arcs_.assign(arcs.begin(), arcs.end());
  for (const Arc& a : d.arcs_) {
    if (a.tail >= n || a.head >= n)
      throw InputError("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                       ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    if (a.tail == a.head) throw InputError("self-loop (" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")");
  }
  std::sort(d.arcs_.begin(), d.arcs_.end());
  d.arcs_.erase(std::unique(d.arcs_.begin(), d.arcs_.end()), d.arcs_.end());
  d.out_.assign(n, {});
  d.in_.assign(n, {});
  for (const Arc& a : d.arcs_) {
    d.out_[a.tail].push_back(a.head);
    d.in_[a.head].push_back(a.tail);
  }
  // arcs_ is sorted by (tail, head), so out_ lists are already sorted; in_ lists
  // receive tails in ascending order as well.
  return d;
}

inline Digraph build_digraph(std::size_t n, std::initializer_list<Arc> arcs) {
  return build_digraph(n, std::span<const Arc>(arcs.begin(), arcs.size()));
}

inline Digraph build_digraph(std::size_t n, const std::vector<Arc>& arcs) {
  return build_digraph(n, std::span<const Arc>(arcs));
}

namespace detail {

inline void check_vertex(const Digraph& d, Vertex v) {
  if (v >= d.order())
    throw InputError("vertex " + std::to_string(v) + " out of range for a digraph on " + std::to_string(d.order()) +
                     " vertices");
}

inline void check_universe(const Digraph& d, const VertexSet& s) {
  if (s.universe() != d.order())
    throw InputError("vertex set universe " + std::to_string(s.universe()) + " does not match digraph order " +
                     std::to_string(d.order()));
}

}  // namespace detail

/// True iff v is in `set` or reaches it by a directed path of length one or two.
inline bool dist_at_most_two(const Digraph& d, Vertex v, const VertexSet& set) {
  detail::check_vertex(d, v);
  detail::check_universe(d, set);
  if (set.contains(v)) return true;
  for (Vertex w : d.out(v)) {
    if (set.contains(w)) return true;
    for (Vertex x : d.out(w))
      if (set.contains(x)) return true;
  }
  return false;
}

inline bool is_independent(const Digraph& d, const VertexSet& set) {
  detail::check_universe(d, set);
  for (Vertex u : set.members())
    for (Vertex w : d.out(u))
      if (set.contains(w)) return false;
  return true;
}

inline bool is_quasi_kernel(const Digraph& d, const VertexSet& set) {
  if (!is_independent(d, set)) return false;
  for (Vertex v = 0; v < d.order(); ++v)
    if (!dist_at_most_two(d, v, set)) return false;
  return true;
}

inline bool is_kernel(const Digraph& d, const VertexSet& set) {
  if (!is_independent(d, set)) return false;
  for (Vertex v = 0; v < d.order(); ++v) {
    if (set.contains(v)) continue;
    auto o = d.out(v);
    if (std::none_of(o.begin(), o.end(), [&](Vertex w) { return set.contains(w); })) return false;
  }
  return true;
}

inline VertexSet sinks(const Digraph& d) {
  VertexSet s(d.order());
  for (Vertex v = 0; v < d.order(); ++v)
    if (d.out_degree(v) == 0) s.insert(v);
  return s;
}

/// Underlying simple undirected graph; a digon becomes a single edge.
/// Neighbour lists are sorted.
inline std::vector<std::vector<Vertex>> underlying_graph(const Digraph& d) {
  std::vector<std::vector<Vertex>> adj(d.order());
  for (const Arc& a : d.arcs()) {
    adj[a.tail].push_back(a.head);
    adj[a.head].push_back(a.tail);
  }
  for (auto& l : adj) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  return adj;
}

struct DigraphProfile {
  bool is_acyclic = true;
  bool is_sink_free = true;
  std::size_t max_in_degree = 0;
  std::size_t max_out_degree = 0;
  bool underlying_is_tree = false;
  bool underlying_is_cubic = false;
  bool underlying_is_bipartite = true;
  std::size_t underlying_edges = 0;
};

inline bool is_acyclic(const Digraph& d) {
  // Kahn's algorithm: every vertex gets peeled iff there is no directed cycle.
  std::vector<std::size_t> indeg(d.order());
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < d.order(); ++v)
    if ((indeg[v] = d.in_degree(v)) == 0) ready.push_back(v);
  std::size_t peeled = 0;
  while (!ready.empty()) {
    Vertex v = ready.back();
    ready.pop_back();
    ++peeled;
    for (Vertex w : d.out(v))
      if (--indeg[w] == 0) ready.push_back(w);
  }
  return peeled == d.order();
}

inline DigraphProfile profile(const Digraph& d) {
  DigraphProfile p;
  const std::size_t n = d.order();
  p.is_acyclic = is_acyclic(d);
  for (Vertex v = 0; v < n; ++v) {
    p.max_in_degree = std::max(p.max_in_degree, d.in_degree(v));
    p.max_out_degree = std::max(p.max_out_degree, d.out_degree(v));
    if (d.out_degree(v) == 0) p.is_sink_free = false;
  }

  auto adj = underlying_graph(d);
  std::size_t degree_sum = 0;
  p.underlying_is_cubic = n > 0;
  for (const auto& l : adj) {
    degree_sum += l.size();
    if (l.size() != 3) p.underlying_is_cubic = false;
  }
  p.underlying_edges = degree_sum / 2;

  // BFS 2-colouring doubles as the connectivity count.
  std::vector<int> colour(n, -1);
  std::size_t components = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    ++components;
    colour[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : adj[v]) {
        if (colour[w] == -1) {
          colour[w] = 1 - colour[v];
          q.push(w);
        } else if (colour[w] == colour[v]) {
          p.underlying_is_bipartite = false;
        }
      }
    }
  }
  p.underlying_is_tree = n > 0 && components == 1 && p.underlying_edges == n - 1;
  return p;
}

}  // namespace qk
