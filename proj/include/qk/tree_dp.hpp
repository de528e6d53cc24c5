#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "qk/digraph.hpp"
#include "qk/error.hpp"

namespace qk {

/// Natural number or +infinity; addition saturates at infinity.
class Cost {
 public:
  constexpr Cost() = default;
  constexpr explicit Cost(std::uint64_t v) : v_(v) {}
  static constexpr Cost infinity() { return Cost(kInf); }

  constexpr bool finite() const { return v_ != kInf; }
  constexpr std::uint64_t value() const { return v_; }

  friend constexpr Cost operator+(Cost a, Cost b) {
    if (!a.finite() || !b.finite()) return infinity();
    return Cost(a.v_ + b.v_);
  }
  Cost& operator+=(Cost o) { return *this = *this + o; }
  friend constexpr auto operator<=>(Cost, Cost) = default;

  std::string to_string() const { return finite() ? std::to_string(v_) : "inf"; }

 private:
  static constexpr std::uint64_t kInf = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t v_ = 0;
};

/// Per-vertex values for the subtree T_v of a rooted tree orientation:
///   pi0: min quasi-kernel of T_v containing v
///   pi1: min quasi-kernel of T_v where v is at distance exactly one from it
///   pi2: same with distance exactly two
///   rho: min independent set of T_v absorbing every vertex except possibly v
/// In-/out-neighbourhoods are restricted to the children of v.
struct TreeDpTable {
  Vertex root = 0;
  std::vector<Cost> pi0, pi1, pi2, rho;
  std::vector<Vertex> parent;  // parent[root] == root
  std::vector<std::vector<Vertex>> in_children;   // child -> v
  std::vector<std::vector<Vertex>> out_children;  // v -> child
  std::vector<Vertex> post_order;

  // Reconstruction bookkeeping.
  std::vector<Vertex> pi1_child;  // out-child placed at distance one for pi1
  std::vector<Vertex> pi2_child;  // out-child at distance one from Q for pi2
  std::vector<std::uint8_t> rho_choice;  // 0,1,2 = pi_i; 3 = v left unabsorbed

  Cost best(Vertex v) const { return std::min({pi0[v], pi1[v], pi2[v]}); }
  Cost best12(Vertex v) const { return std::min(pi1[v], pi2[v]); }
};

namespace detail {

inline void require_tree_orientation(const Digraph& t) {
  auto p = profile(t);
  if (!p.underlying_is_tree || t.arc_count() + 1 != t.order())
    throw InputError("tree DP requires an orientation of a tree (connected, n-1 arcs, no digons)");
}

constexpr Vertex kNone = std::numeric_limits<Vertex>::max();

// Sum of costs that can report the total minus one of its terms.
struct ExclusiveSum {
  std::uint64_t finite = 0;
  std::size_t infinite = 0;

  void add(Cost c) {
    if (c.finite()) finite += c.value();
    else ++infinite;
  }
  Cost without(Cost c) const {
    if (c.finite()) return infinite > 0 ? Cost::infinity() : Cost(finite - c.value());
    return infinite > 1 ? Cost::infinity() : Cost(finite);
  }
};

}  // namespace detail

/// Bottom-up evaluation of the subtree recurrences with an iterative traversal.
inline TreeDpTable tree_dp_tables(const Digraph& t, Vertex root) {
  detail::require_tree_orientation(t);
  detail::check_vertex(t, root);
  const std::size_t n = t.order();
  TreeDpTable tab;
  tab.root = root;
  tab.pi0.assign(n, Cost{});
  tab.pi1.assign(n, Cost::infinity());
  tab.pi2.assign(n, Cost::infinity());
  tab.rho.assign(n, Cost{});
  tab.parent.assign(n, detail::kNone);
  tab.in_children.assign(n, {});
  tab.out_children.assign(n, {});
  tab.pi1_child.assign(n, detail::kNone);
  tab.pi2_child.assign(n, detail::kNone);
  tab.rho_choice.assign(n, 0);

  // Preorder by explicit stack, then reverse for a post-order.
  std::vector<Vertex> order;
  order.reserve(n);
  std::vector<Vertex> stack{root};
  tab.parent[root] = root;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (Vertex w : t.out(v)) {
      if (tab.parent[w] != detail::kNone) continue;
      tab.parent[w] = v;
      tab.out_children[v].push_back(w);
      stack.push_back(w);
    }
    for (Vertex u : t.in(v)) {
      if (tab.parent[u] != detail::kNone) continue;
      tab.parent[u] = v;
      tab.in_children[v].push_back(u);
      stack.push_back(u);
    }
  }
  for (auto& c : tab.in_children) std::sort(c.begin(), c.end());
  for (auto& c : tab.out_children) std::sort(c.begin(), c.end());
  tab.post_order.assign(order.rbegin(), order.rend());

  for (Vertex v : tab.post_order) {
    const auto& ins = tab.in_children[v];
    const auto& outs = tab.out_children[v];

    Cost p0{1};
    for (Vertex u : ins) {
      for (Vertex s : tab.in_children[u]) p0 += tab.rho[s];
      for (Vertex s : tab.out_children[u]) p0 += tab.best(s);
    }
    for (Vertex w : outs) p0 += tab.best12(w);
    tab.pi0[v] = p0;

    // min over w of (pi0(w) + sum of best(w') over the other out-children), and
    // the pi2 analogue; infinite terms are counted rather than subtracted.
    detail::ExclusiveSum others_best, others_best12;
    for (Vertex w : outs) {
      others_best.add(tab.best(w));
      others_best12.add(tab.best12(w));
    }
    Cost p1 = Cost::infinity();
    Cost p2 = Cost::infinity();
    for (Vertex w : outs) {
      Cost c1 = tab.pi0[w] + others_best.without(tab.best(w));
      Cost c2 = tab.pi1[w] + others_best12.without(tab.best12(w));
      if (c1 < p1) {
        p1 = c1;
        tab.pi1_child[v] = w;
      }
      if (c2 < p2) {
        p2 = c2;
        tab.pi2_child[v] = w;
      }
    }
    Cost in_rho{0}, in_best{0};
    for (Vertex u : ins) {
      in_rho += tab.rho[u];
      in_best += tab.best(u);
    }
    tab.pi1[v] = in_rho + p1;
    tab.pi2[v] = in_best + p2;

    Cost free_cost = in_best;
    for (Vertex w : outs) free_cost += tab.pi2[w];
    std::array<Cost, 4> options{tab.pi0[v], tab.pi1[v], tab.pi2[v], free_cost};
    auto it = std::min_element(options.begin(), options.end());
    tab.rho[v] = *it;
    tab.rho_choice[v] = static_cast<std::uint8_t>(it - options.begin());
  }
  return tab;
}

struct TreeQkResult {
  std::size_t size = 0;
  VertexSet witness;
};

namespace detail {

enum class TreeState : std::uint8_t { pi0, pi1, pi2, rho_free, best, best12 };

/// Replays the recorded argmin choices top-down to rebuild a witness set.
inline VertexSet replay_tree_witness(const TreeDpTable& tab, std::size_t n) {
  VertexSet q(n);
  auto resolve_best = [&](Vertex v) {
    if (tab.pi0[v] <= tab.pi1[v] && tab.pi0[v] <= tab.pi2[v]) return TreeState::pi0;
    return tab.pi1[v] <= tab.pi2[v] ? TreeState::pi1 : TreeState::pi2;
  };
  auto resolve_best12 = [&](Vertex v) { return tab.pi1[v] <= tab.pi2[v] ? TreeState::pi1 : TreeState::pi2; };

  std::vector<std::pair<Vertex, TreeState>> stack{{tab.root, TreeState::best}};
  while (!stack.empty()) {
    auto [v, s] = stack.back();
    stack.pop_back();
    if (s == TreeState::best) s = resolve_best(v);
    if (s == TreeState::best12) s = resolve_best12(v);
    const auto& ins = tab.in_children[v];
    const auto& outs = tab.out_children[v];
    switch (s) {
      case TreeState::pi0:
        q.insert(v);
        for (Vertex u : ins) {
          for (Vertex x : tab.in_children[u]) stack.emplace_back(x, TreeState::rho_free);
          for (Vertex x : tab.out_children[u]) stack.emplace_back(x, TreeState::best);
        }
        for (Vertex w : outs) stack.emplace_back(w, TreeState::best12);
        break;
      case TreeState::pi1:
        for (Vertex u : ins) stack.emplace_back(u, TreeState::rho_free);
        for (Vertex w : outs) stack.emplace_back(w, w == tab.pi1_child[v] ? TreeState::pi0 : TreeState::best);
        break;
      case TreeState::pi2:
        for (Vertex u : ins) stack.emplace_back(u, TreeState::best);
        for (Vertex w : outs) stack.emplace_back(w, w == tab.pi2_child[v] ? TreeState::pi1 : TreeState::best12);
        break;
      case TreeState::rho_free:
        switch (tab.rho_choice[v]) {
          case 0: stack.emplace_back(v, TreeState::pi0); break;
          case 1: stack.emplace_back(v, TreeState::pi1); break;
          case 2: stack.emplace_back(v, TreeState::pi2); break;
          default:
            for (Vertex u : ins) stack.emplace_back(u, TreeState::best);
            for (Vertex w : outs) stack.emplace_back(w, TreeState::pi2);
        }
        break;
      default: break;
    }
  }
  return q;
}

}  // namespace detail

/// Minimum quasi-kernel of a tree orientation, rooted at `root`.
inline TreeQkResult min_qk_tree(const Digraph& t, Vertex root = 0) {
  auto tab = tree_dp_tables(t, root);
  Cost best = tab.best(root);
  if (!best.finite()) detail::internal_defect("min_qk_tree", "root value is infinite");
  TreeQkResult r;
  r.size = static_cast<std::size_t>(best.value());
  r.witness = detail::replay_tree_witness(tab, t.order());
  if (r.witness.size() != r.size || !is_quasi_kernel(t, r.witness))
    detail::internal_defect("min_qk_tree", "reconstructed witness {" + r.witness.to_string() + "} does not match size " +
                                               std::to_string(r.size));
  return r;
}

}  // namespace qk
