#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qk/digraph.hpp"
#include "qk/error.hpp"

namespace qk {

/// CNF formula; a literal is a nonzero variable index, negative when negated.
struct CnfFormula {
  std::size_t num_vars = 0;
  std::vector<std::vector<int>> clauses;

  void validate() const {
    for (std::size_t j = 0; j < clauses.size(); ++j)
      for (int l : clauses[j])
        if (l == 0 || static_cast<std::size_t>(std::abs(l)) > num_vars)
          throw InputError("clause " + std::to_string(j + 1) + " has literal " + std::to_string(l) +
                           " outside 1.." + std::to_string(num_vars));
  }
};

/// Truth value per variable; index 0 is variable 1.
using Assignment = std::vector<bool>;

inline bool literal_true(int lit, const Assignment& phi) {
  bool v = phi.at(static_cast<std::size_t>(std::abs(lit)) - 1);
  return lit > 0 ? v : !v;
}

inline bool satisfies(const CnfFormula& f, const Assignment& phi) {
  if (phi.size() != f.num_vars) return false;
  return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const std::vector<int>& c) {
    return std::any_of(c.begin(), c.end(), [&](int l) { return literal_true(l, phi); });
  });
}

/// Simple undirected graph; edges stored once as (u, v) with u < v, sorted.
struct UndirectedGraph {
  std::size_t n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;

  static UndirectedGraph make(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges) {
    for (auto& [u, v] : edges) {
      if (u >= n || v >= n) throw InputError("edge endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
      if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return UndirectedGraph{n, std::move(edges)};
  }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(n, 0);
    for (auto [u, v] : edges) ++d[u], ++d[v];
    return d;
  }
};

struct SetCoverInstance {
  std::size_t universe_size = 0;
  std::vector<std::vector<std::uint32_t>> family;
  std::size_t k = 0;

  void validate() const {
    std::vector<char> hit(universe_size, 0);
    for (std::size_t j = 0; j < family.size(); ++j)
      for (auto e : family[j]) {
        if (e >= universe_size)
          throw InputError("set " + std::to_string(j + 1) + " has element " + std::to_string(e) + " outside the universe");
        hit[e] = 1;
      }
    for (std::size_t e = 0; e < universe_size; ++e)
      if (!hit[e]) throw InputError("element " + std::to_string(e) + " is not covered by the family");
  }
};

/// A generated digraph with symbolic vertex names and size parameters.
struct ReductionOutput {
  Digraph digraph;
  std::vector<std::string> names;             // index -> name
  std::map<std::string, Vertex> labels;       // name -> index
  std::map<std::string, std::int64_t> params;

  Vertex at(const std::string& name) const {
    auto it = labels.find(name);
    if (it == labels.end()) throw InputError("no vertex labelled '" + name + "'");
    return it->second;
  }
  bool has(const std::string& name) const { return labels.count(name) != 0; }
  std::int64_t param(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) throw InputError("reduction output lacks parameter '" + key + "'");
    return it->second;
  }
  VertexSet set_of(std::initializer_list<std::string> names_in) const {
    VertexSet s(digraph.order());
    for (const auto& n : names_in) s.insert(at(n));
    return s;
  }
};

namespace detail {

/// Incrementally names vertices and collects arcs for a ReductionOutput.
class LabeledBuilder {
 public:
  Vertex add(const std::string& name) {
    if (labels_.count(name)) detail::internal_defect("LabeledBuilder", "duplicate label " + name);
    auto v = static_cast<Vertex>(names_.size());
    names_.push_back(name);
    labels_.emplace(name, v);
    return v;
  }
  Vertex at(const std::string& name) const {
    auto it = labels_.find(name);
    if (it == labels_.end()) detail::internal_defect("LabeledBuilder", "unknown label " + name);
    return it->second;
  }
  void arc(Vertex u, Vertex v) { arcs_.push_back({u, v}); }
  void arc(const std::string& u, const std::string& v) { arc(at(u), at(v)); }

  ReductionOutput finish(std::map<std::string, std::int64_t> params) {
    ReductionOutput out;
    out.digraph = build_digraph(names_.size(), arcs_);
    if (out.digraph.arc_count() != arcs_.size()) detail::internal_defect("LabeledBuilder", "generator emitted a repeated arc");
    out.names = std::move(names_);
    out.labels = std::move(labels_);
    params["vertices"] = static_cast<std::int64_t>(out.digraph.order());
    params["arcs"] = static_cast<std::int64_t>(out.digraph.arc_count());
    out.params = std::move(params);
    return out;
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, Vertex> labels_;
  std::vector<Arc> arcs_;
};

}  // namespace detail
}  // namespace qk
