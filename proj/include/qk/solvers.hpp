#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qk/detail/mask_graph.hpp"
#include "qk/digraph.hpp"
#include "qk/error.hpp"

namespace qk {

/// Polynomial-time quasi-kernel construction.
///
/// Peel phase: repeatedly pick the smallest remaining vertex x and delete x
/// together with its remaining in-neighbours. Build phase: walk the picked
/// vertices backwards and keep x unless it has an arc into the set built so
/// far. A dropped x reaches a kept vertex in one step, so everything peeled
/// with it is within distance two; a kept x absorbs its peeled in-neighbours
/// directly, and no later-picked vertex can be an in-neighbour of x.
inline VertexSet chvatal_lovasz_qk(const Digraph& d) {
  const std::size_t n = d.order();
  std::vector<char> removed(n, 0);
  std::vector<Vertex> picked;
  for (Vertex x = 0; x < n; ++x) {
    if (removed[x]) continue;
    picked.push_back(x);
    removed[x] = 1;
    for (Vertex u : d.in(x)) removed[u] = 1;
  }
  VertexSet q(n);
  for (auto it = picked.rbegin(); it != picked.rend(); ++it) {
    auto o = d.out(*it);
    if (std::none_of(o.begin(), o.end(), [&](Vertex w) { return q.contains(w); })) q.insert(*it);
  }
  if (!is_quasi_kernel(d, q)) detail::internal_defect("chvatal_lovasz_qk", "output {" + q.to_string() + "} is not a quasi-kernel");
  return q;
}

/// Shrinks a quasi-kernel to an inclusion-wise minimal one. Vertices are tried
/// in ascending order and the scan restarts after every successful removal.
inline VertexSet greedy_minimal_qk(const Digraph& d, const VertexSet& seed) {
  if (!is_quasi_kernel(d, seed)) throw InputError("greedy_minimal_qk: seed {" + seed.to_string() + "} is not a quasi-kernel");
  VertexSet q = seed;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v : q.members()) {
      VertexSet t = q;
      t.erase(v);
      if (is_quasi_kernel(d, t)) {
        q = std::move(t);
        changed = true;
        break;
      }
    }
  }
  return q;
}

namespace detail {

class QkEnumerator {
 public:
  explicit QkEnumerator(const MaskGraph& g) : g_(g) {}

  std::vector<Mask> run() {
    out_.clear();
    visit(0, 0, 0);
    return std::move(out_);
  }

 private:
  // Every vertex must keep at least one absorber that is chosen or still open.
  bool viable(Vertex next, Mask chosen, Mask blocked) const {
    Mask undecided = g_.all & ~(next == 64 ? ~Mask{0} : bit(next) - 1);
    Mask possible = chosen | (undecided & ~blocked);
    for (Vertex v = 0; v < g_.n; ++v)
      if ((g_.reach2[v] & possible) == 0) return false;
    return true;
  }

  void visit(Vertex next, Mask chosen, Mask blocked) {
    if (!viable(next, chosen, blocked)) return;
    if (next == g_.n) {
      out_.push_back(chosen);
      return;
    }
    // Excluding first yields ascending order of the 0/1 membership vector.
    if ((g_.sinks & bit(next)) == 0) visit(next + 1, chosen, blocked);
    if ((blocked & bit(next)) == 0) visit(next + 1, chosen | bit(next), blocked | g_.adj[next]);
  }

  const MaskGraph& g_;
  std::vector<Mask> out_;
};

/// Branch and bound for quasi-kernels of bounded size drawn from `permitted`.
/// Branches on the unabsorbed vertex with the fewest candidate absorbers; a
/// greedy packing of unabsorbed vertices with disjoint candidate sets gives
/// the lower bound.
class BoundedQkSearch {
 public:
  BoundedQkSearch(const MaskGraph& g, Mask permitted) : g_(g), permitted_(permitted) {}

  bool feasible(std::size_t budget, Mask forced_in, Mask forced_out, Mask* witness = nullptr) {
    Mask chosen = g_.sinks | forced_in;
    if ((chosen & ~permitted_) != 0 || (chosen & forced_out) != 0 || !g_.independent(chosen)) return false;
    Mask blocked = 0;
    for_each_bit(chosen, [&](Vertex v) { blocked |= g_.adj[v]; });
    budget_ = budget;
    Mask found = 0;
    bool ok = solve(chosen, blocked, g_.absorbed_by(chosen), forced_out, found);
    if (ok && witness) *witness = found;
    return ok;
  }

  /// Lexicographically smallest (ascending member sequence) solution of
  /// minimum size. Always exists when the permitted set contains a quasi-kernel.
  std::optional<Mask> minimum() {
    std::size_t k = static_cast<std::size_t>(std::popcount(g_.sinks));
    while (k <= g_.n && !feasible(k, 0, 0)) ++k;
    if (k > g_.n) return std::nullopt;
    Mask in = 0, out = 0;
    for (Vertex v = 0; v < g_.n; ++v) {
      if ((g_.sinks & bit(v)) != 0) continue;
      Mask found = 0;
      if (feasible(k, in | bit(v), out, &found)) {
        in |= bit(v);
        if (found == (in | g_.sinks)) break;
      } else {
        out |= bit(v);
      }
    }
    Mask result = 0;
    if (!feasible(k, in, out, &result)) detail::internal_defect("BoundedQkSearch::minimum", "lost feasibility during tie-breaking");
    return result;
  }

 private:
  bool solve(Mask chosen, Mask blocked, Mask absorbed, Mask forbidden, Mask& found) {
    const std::size_t count = static_cast<std::size_t>(std::popcount(chosen));
    if (count > budget_) return false;
    const Mask unabsorbed = g_.all & ~absorbed;
    if (unabsorbed == 0) {
      found = chosen;
      return true;
    }
    if (count == budget_) return false;
    const Mask allowed = permitted_ & ~blocked & ~forbidden & ~chosen;

    Vertex pivot = 0;
    int fewest = 65;
    Mask packed = 0;
    std::size_t lower = 0;
    for (Mask m = unabsorbed; m != 0; m &= m - 1) {
      Vertex v = static_cast<Vertex>(std::countr_zero(m));
      Mask cand = g_.reach2[v] & allowed;
      int c = std::popcount(cand);
      if (c == 0) return false;
      if (c < fewest) {
        fewest = c;
        pivot = v;
      }
      if ((cand & packed) == 0) {
        packed |= cand;
        ++lower;
      }
    }
    if (count + lower > budget_) return false;

    Mask tried = 0;
    for (Mask m = g_.reach2[pivot] & allowed; m != 0; m &= m - 1) {
      Vertex w = static_cast<Vertex>(std::countr_zero(m));
      if (solve(chosen | bit(w), blocked | g_.adj[w], absorbed | g_.absorbs[w], forbidden | tried, found)) return true;
      tried |= bit(w);
    }
    return false;
  }

  const MaskGraph& g_;
  Mask permitted_;
  std::size_t budget_ = 0;
};

}  // namespace detail

/// Every quasi-kernel, each once, in ascending lexicographic order of the 0/1
/// membership vector (vertex 0 is the most significant position).
inline Outcome<std::vector<VertexSet>> enumerate_quasi_kernels(const Digraph& d, std::size_t cap = SearchCaps{}.enumeration) {
  if (d.order() > cap || d.order() > kMaxExactVertices) return Outcome<std::vector<VertexSet>>::refused();
  detail::MaskGraph g(d);
  std::vector<VertexSet> out;
  for (auto m : detail::QkEnumerator(g).run()) out.push_back(detail::from_mask(d.order(), m));
  return Outcome<std::vector<VertexSet>>::found(std::move(out));
}

/// Minimum-cardinality quasi-kernel; among those, the one whose ascending
/// member sequence is lexicographically smallest.
inline Outcome<VertexSet> min_quasi_kernel(const Digraph& d, std::size_t cap = SearchCaps{}.exact) {
  if (d.order() > cap || d.order() > kMaxExactVertices) return Outcome<VertexSet>::refused();
  detail::MaskGraph g(d);
  auto m = detail::BoundedQkSearch(g, g.all).minimum();
  if (!m) detail::internal_defect("min_quasi_kernel", "no quasi-kernel found");
  VertexSet q = detail::from_mask(d.order(), *m);
  if (!is_quasi_kernel(d, q)) detail::internal_defect("min_quasi_kernel", "result is not a quasi-kernel");
  return Outcome<VertexSet>::found(std::move(q));
}

/// Minimum quasi-kernel contained in the kernel `kernel`.
inline Outcome<VertexSet> min_qk_within_kernel(const Digraph& d, const VertexSet& kernel, std::size_t cap = SearchCaps{}.exact) {
  if (!is_kernel(d, kernel)) throw InputError("min_qk_within_kernel: {" + kernel.to_string() + "} is not a kernel");
  if (d.order() > cap || d.order() > kMaxExactVertices) return Outcome<VertexSet>::refused();
  detail::MaskGraph g(d);
  auto m = detail::BoundedQkSearch(g, detail::to_mask(kernel)).minimum();
  if (!m) detail::internal_defect("min_qk_within_kernel", "the kernel itself should be feasible");
  VertexSet q = detail::from_mask(d.order(), *m);
  if (!is_quasi_kernel(d, q) || !q.is_subset_of(kernel)) detail::internal_defect("min_qk_within_kernel", "invalid result");
  return Outcome<VertexSet>::found(std::move(q));
}

/// Searches for k pairwise-disjoint quasi-kernels. `none_exists` is a proof
/// by exhaustion; `cap_exceeded` means the enumeration was refused.
inline Outcome<std::vector<VertexSet>> disjoint_quasi_kernels(const Digraph& d, std::size_t k,
                                                              std::size_t cap = SearchCaps{}.enumeration) {
  using Result = Outcome<std::vector<VertexSet>>;
  if (k == 0) throw InputError("disjoint_quasi_kernels: k must be at least 1");
  if (d.order() > cap || d.order() > kMaxExactVertices) return Result::refused();
  detail::MaskGraph g(d);
  // Sinks lie in every quasi-kernel, so two disjoint ones cannot coexist with a sink.
  if (k >= 2 && g.sinks != 0) return Result::none();
  auto all = detail::QkEnumerator(g).run();

  std::vector<std::size_t> pick;
  auto search = [&](auto&& self, std::size_t from, detail::Mask used) -> bool {
    if (pick.size() == k) return true;
    for (std::size_t i = from; i < all.size(); ++i) {
      if ((all[i] & used) != 0) continue;
      pick.push_back(i);
      if (self(self, i + 1, used | all[i])) return true;
      pick.pop_back();
    }
    return false;
  };
  if (!search(search, 0, 0)) return Result::none();
  std::vector<VertexSet> sets;
  for (auto i : pick) sets.push_back(detail::from_mask(d.order(), all[i]));
  return Result::found(std::move(sets));
}

/// Size certificate for a quasi-kernel in a digraph of maximum in-degree d:
/// each member absorbs at most d^2 + d + 1 vertices.
struct ApproxCertificate {
  std::size_t max_in_degree = 0;
  std::size_t qk_size = 0;
  std::size_t n = 0;
  std::uint64_t ratio_bound = 1;  // d^2 + d + 1
  bool bound_holds = false;
  // Constants of the vertex-cover L-reduction on cubic graphs.
  static constexpr int alpha = 5;
  static constexpr int beta = 1;
};

inline ApproxCertificate approx_ratio_certificate(const Digraph& d, const VertexSet& q) {
  if (!is_quasi_kernel(d, q)) throw InputError("approx_ratio_certificate: {" + q.to_string() + "} is not a quasi-kernel");
  ApproxCertificate c;
  for (Vertex v = 0; v < d.order(); ++v) c.max_in_degree = std::max(c.max_in_degree, d.in_degree(v));
  c.qk_size = q.size();
  c.n = d.order();
  const std::uint64_t deg = c.max_in_degree;
  c.ratio_bound = deg * deg + deg + 1;
  c.bound_holds = c.ratio_bound * c.qk_size >= c.n;
  return c;
}

}  // namespace qk
