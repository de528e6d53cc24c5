#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "qk/detail/mask_graph.hpp"
#include "qk/digraph.hpp"
#include "qk/io.hpp"
#include "qk/rng.hpp"
#include "qk/solvers.hpp"

namespace qk {

enum class GeneratorKind { random_digraph, tournament, tree_orientation, grid_orientation };

inline const char* to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::random_digraph: return "random_digraph";
    case GeneratorKind::tournament: return "tournament";
    case GeneratorKind::tree_orientation: return "tree_orientation";
    case GeneratorKind::grid_orientation: return "grid_orientation";
  }
  return "?";
}

inline GeneratorKind parse_generator_kind(const std::string& s) {
  for (auto k : {GeneratorKind::random_digraph, GeneratorKind::tournament, GeneratorKind::tree_orientation,
                 GeneratorKind::grid_orientation})
    if (s == to_string(k)) return k;
  throw InputError("unknown generator kind '" + s + "'");
}

/// `p` is the arc probability for random digraphs and the probability of a
/// diagonal in each grid face; tournaments and trees ignore it.
struct GeneratorConfig {
  GeneratorKind kind = GeneratorKind::random_digraph;
  std::size_t n = 1;
  double p = 0.5;
  std::uint64_t seed = 0;
  bool sink_free_filter = false;
  std::size_t max_retries = 1000;

  void validate() const {
    if (n < 1) throw InputError("generator: n must be at least 1");
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("generator: p must lie in [0, 1]");
    if (max_retries < 1) throw InputError("generator: max_retries must be at least 1");
  }
};

class RetryBudgetExhausted : public std::runtime_error {
 public:
  explicit RetryBudgetExhausted(std::size_t tries)
      : std::runtime_error("no sink-free instance after " + std::to_string(tries) + " attempts") {}
};

namespace detail {

inline Arc random_orientation(SplitMix64& rng, Vertex u, Vertex v) { return rng.coin() ? Arc{u, v} : Arc{v, u}; }

/// Uniform labelled tree decoded from a random Prüfer sequence.
inline std::vector<std::pair<Vertex, Vertex>> random_tree_edges(SplitMix64& rng, std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  if (n < 2) return edges;
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(rng.below(n));
  std::vector<std::size_t> degree(n, 1);
  for (auto c : code) ++degree[c];
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  for (auto c : code) {
    Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.insert(c);
  }
  Vertex a = *leaves.begin();
  Vertex b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return edges;
}

/// Row-major grid of width ceil(sqrt(n)); the last row may be partial.
inline std::vector<std::pair<Vertex, Vertex>> grid_edges(SplitMix64& rng, std::size_t n, double p) {
  const auto w = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  std::vector<std::pair<Vertex, Vertex>> edges;
  auto id = [&](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * w + c); };
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t r = v / w, c = v % w;
    if (c + 1 < w && v + 1 < n) edges.emplace_back(id(r, c), id(r, c + 1));
    if (v + w < n) edges.emplace_back(id(r, c), id(r + 1, c));
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t r = v / w, c = v % w;
    if (c + 1 >= w || id(r + 1, c + 1) >= n) continue;
    if (!rng.bernoulli(p)) continue;
    if (rng.coin())
      edges.emplace_back(id(r, c), id(r + 1, c + 1));
    else
      edges.emplace_back(id(r, c + 1), id(r + 1, c));
  }
  return edges;
}

inline Digraph generate_once(const GeneratorConfig& cfg, SplitMix64& rng) {
  const std::size_t n = cfg.n;
  std::vector<Arc> arcs;
  switch (cfg.kind) {
    case GeneratorKind::random_digraph:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
          if (u != v && rng.bernoulli(cfg.p)) arcs.push_back({u, v});
      break;
    case GeneratorKind::tournament:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) arcs.push_back(random_orientation(rng, u, v));
      break;
    case GeneratorKind::tree_orientation:
      for (auto [u, v] : random_tree_edges(rng, n)) arcs.push_back(random_orientation(rng, u, v));
      break;
    case GeneratorKind::grid_orientation:
      for (auto [u, v] : grid_edges(rng, n, cfg.p)) arcs.push_back(random_orientation(rng, u, v));
      break;
  }
  return build_digraph(n, arcs);
}

}  // namespace detail

/// Deterministic in the config. With the sink-free filter, draws are repeated
/// from the same stream until one is sink-free.
inline Digraph generate(const GeneratorConfig& cfg) {
  cfg.validate();
  SplitMix64 rng(cfg.seed);
  for (std::size_t attempt = 0; attempt < cfg.max_retries; ++attempt) {
    Digraph d = detail::generate_once(cfg, rng);
    if (!cfg.sink_free_filter || sinks(d).empty()) return d;
  }
  throw RetryBudgetExhausted(cfg.max_retries);
}

struct ConjectureVerdict {
  SearchStatus status = SearchStatus::cap_exceeded;
  std::size_t n = 0;
  std::size_t min_qk_size = 0;
  double bound = 0.0;   // n / 2
  double margin = 0.0;  // bound - min_qk_size; negative means violated
  bool holds = true;
  VertexSet witness;
};

/// Exact check of "minimum quasi-kernel size <= n/2" on a sink-free digraph.
inline ConjectureVerdict check_small_qk_conjecture(const Digraph& d, std::size_t cap = SearchCaps{}.exact) {
  if (!sinks(d).empty()) throw InputError("check_small_qk_conjecture: digraph has a sink");
  ConjectureVerdict v;
  v.n = d.order();
  v.bound = static_cast<double>(d.order()) / 2.0;
  auto r = min_quasi_kernel(d, cap);
  v.status = r.status;
  if (!r.ok()) return v;
  v.min_qk_size = r->size();
  v.margin = v.bound - static_cast<double>(v.min_qk_size);
  v.holds = 2 * v.min_qk_size <= v.n;
  v.witness = *r;
  return v;
}

enum class SearchTarget { small_qk, two_disjoint };

inline const char* to_string(SearchTarget t) { return t == SearchTarget::small_qk ? "small_qk" : "two_disjoint"; }

inline SearchTarget parse_search_target(const std::string& s) {
  if (s == "small_qk") return SearchTarget::small_qk;
  if (s == "two_disjoint") return SearchTarget::two_disjoint;
  throw InputError("unknown search target '" + s + "'");
}

struct TrialStats {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  bool generated = false;  // false when the retry budget ran out
  std::size_t n = 0;
  std::size_t arcs = 0;
  bool sink_free = false;
  std::optional<std::size_t> min_qk_size;
  std::optional<double> margin;
  std::string two_disjoint = "not_checked";  // yes | no | cap_exceeded | not_applicable | not_checked
  bool capped = false;
};

struct Violation {
  std::size_t trial = 0;
  std::string kind;
  std::string instance;  // digraph text format
};

struct SearchReport {
  GeneratorConfig config;
  std::uint64_t master_seed = 0;
  std::size_t trials = 0;
  std::vector<SearchTarget> targets;
  std::vector<TrialStats> stats;
  std::vector<Violation> violations;
  std::size_t cap_exceeded = 0;
  std::size_t generation_failed = 0;
  std::size_t unverified = 0;  // flagged by the search but not confirmed by reverify

  nlohmann::ordered_json to_json() const;
  std::string dump(int indent = 2) const { return to_json().dump(indent); }
};

/// Re-checks a serialized violation from scratch by enumerating every
/// quasi-kernel, independently of the branch-and-bound search.
inline bool reverify(const std::string& instance, const std::string& kind, std::size_t cap = SearchCaps{}.enumeration) {
  Digraph d = io::parse_digraph(instance);
  if (!sinks(d).empty() || d.order() > cap) return false;
  auto all = enumerate_quasi_kernels(d, cap);
  if (!all.ok()) return false;
  for (const auto& q : *all)
    if (!is_quasi_kernel(d, q)) return false;
  if (kind == "small_qk")
    return std::all_of(all->begin(), all->end(), [&](const VertexSet& q) { return 2 * q.size() > d.order(); });
  if (kind == "two_disjoint") {
    for (std::size_t i = 0; i < all->size(); ++i)
      for (std::size_t j = i + 1; j < all->size(); ++j)
        if (!(*all)[i].intersects((*all)[j])) return false;
    return true;
  }
  return false;
}

namespace detail {

inline void run_trial(const GeneratorConfig& base, const std::vector<SearchTarget>& targets, TrialStats& st,
                      std::optional<Violation>& small, std::optional<Violation>& disjoint) {
  GeneratorConfig cfg = base;
  cfg.seed = st.seed;
  std::optional<Digraph> d;
  try {
    d = generate(cfg);
  } catch (const RetryBudgetExhausted&) {
    return;
  }
  st.generated = true;
  st.n = d->order();
  st.arcs = d->arc_count();
  st.sink_free = sinks(*d).empty();
  auto wants = [&](SearchTarget t) { return std::find(targets.begin(), targets.end(), t) != targets.end(); };
  if (wants(SearchTarget::small_qk) && st.sink_free) {
    auto v = check_small_qk_conjecture(*d);
    if (v.status == SearchStatus::found) {
      st.min_qk_size = v.min_qk_size;
      st.margin = v.margin;
      if (!v.holds) small = Violation{st.index, "small_qk", io::emit_digraph(*d)};
    } else {
      st.capped = true;
    }
  }
  if (wants(SearchTarget::two_disjoint)) {
    if (!st.sink_free) {
      st.two_disjoint = "not_applicable";
    } else {
      auto r = disjoint_quasi_kernels(*d, 2);
      if (r.status == SearchStatus::cap_exceeded) {
        st.two_disjoint = "cap_exceeded";
        st.capped = true;
      } else {
        st.two_disjoint = r.ok() ? "yes" : "no";
        if (!r.ok()) disjoint = Violation{st.index, "two_disjoint", io::emit_digraph(*d)};
      }
    }
  }
}

}  // namespace detail

/// Runs `trials` independent trials; trial i draws from derive_seed(config.seed, i).
/// The report does not depend on `threads`.
inline SearchReport search_counterexamples(const GeneratorConfig& config, std::size_t trials,
                                           std::vector<SearchTarget> targets, unsigned threads = 1) {
  config.validate();
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  SearchReport rep;
  rep.config = config;
  rep.master_seed = config.seed;
  rep.trials = trials;
  rep.targets = targets;
  rep.stats.resize(trials);
  std::vector<std::optional<Violation>> small(trials), disjoint(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    rep.stats[i].index = i;
    rep.stats[i].seed = derive_seed(config.seed, i);
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < trials; i = next++) detail::run_trial(config, targets, rep.stats[i], small[i], disjoint[i]);
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(trials, 1))));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (std::size_t i = 0; i < trials; ++i) {
    if (!rep.stats[i].generated) ++rep.generation_failed;
    if (rep.stats[i].capped) ++rep.cap_exceeded;
    for (auto* v : {&small[i], &disjoint[i]})
      if (*v) {
        if (reverify((*v)->instance, (*v)->kind))
          rep.violations.push_back(**v);
        else
          ++rep.unverified;
      }
  }
  return rep;
}

inline nlohmann::ordered_json SearchReport::to_json() const {
  using nlohmann::ordered_json;
  ordered_json j;
  j["master_seed"] = std::to_string(master_seed);
  j["config"] = {{"kind", to_string(config.kind)},
                 {"n", config.n},
                 {"p", config.p},
                 {"sink_free_filter", config.sink_free_filter},
                 {"max_retries", config.max_retries}};
  j["trials"] = trials;
  ordered_json ts = ordered_json::array();
  for (auto t : targets) ts.push_back(to_string(t));
  j["targets"] = ts;
  j["summary"] = {{"violations", violations.size()}, {"cap_exceeded", cap_exceeded}, {"generation_failed", generation_failed},
                    {"unverified", unverified}};
  ordered_json vs = ordered_json::array();
  for (const auto& v : violations) vs.push_back({{"trial", v.trial}, {"kind", v.kind}, {"instance", v.instance}});
  j["violations"] = vs;
  ordered_json ss = ordered_json::array();
  for (const auto& s : stats) {
    ordered_json o;
    o["trial"] = s.index;
    o["seed"] = std::to_string(s.seed);
    o["generated"] = s.generated;
    if (s.generated) {
      o["n"] = s.n;
      o["arcs"] = s.arcs;
      o["sink_free"] = s.sink_free;
      o["min_qk_size"] = s.min_qk_size ? ordered_json(*s.min_qk_size) : ordered_json(nullptr);
      o["margin"] = s.margin ? ordered_json(*s.margin) : ordered_json(nullptr);
      o["two_disjoint"] = s.two_disjoint;
    }
    ss.push_back(o);
  }
  j["stats"] = ss;
  return j;
}

}  // namespace qk
