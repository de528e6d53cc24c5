#pragma once

#include <array>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>

#include "qk/instances.hpp"

namespace qk {

// (3,B2)-SAT -> quasi-kernel of size 5m + 4n in an acyclic digraph whose
// gadget vertices all have underlying degree three.
//
// Variable gadget X<i> (14 vertices, 19 arcs): literal vertices "x", "nx",
// sinks "d1", "d4", selectors "d2", "d3" and eight unnamed helpers "v3",
// "v7", "v8", "v11", "v12", "v13", "v14", "v15".
//
// Clause gadget C<j> (21 vertices, 30 arcs): "c1", "c2", "c3" receive arcs
// from three spokes "h1", "h3", "h5"; spoke h has a tail "h<h>b" fed by a
// four-vertex fan "h<h>.1".."h<h>.4" whose vertex .4 is a sink (named "t",
// "t'", "t''" for the three spokes).
//
// Occurrence k of a literal in clause j is wired C<j>.c<k> -> M<j>.<k> -> literal.

namespace detail {

struct GadgetArc {
  const char* tail;
  const char* head;
};

inline constexpr std::array<const char*, 14> kVariableVertices = {
    "x", "nx", "d1", "d2", "d3", "d4", "v3", "v7", "v8", "v11", "v12", "v13", "v14", "v15"};

inline constexpr std::array<GadgetArc, 19> kVariableArcs = {{
    {"nx", "d3"}, {"v3", "d2"},  {"v3", "d3"},  {"x", "d2"},    {"d2", "v7"},  {"d3", "v8"},  {"v7", "d1"},
    {"v8", "d1"}, {"v13", "v3"}, {"v12", "v7"}, {"v12", "v8"},  {"v12", "d1"}, {"v11", "v15"}, {"v11", "v14"},
    {"v11", "d4"}, {"v15", "d4"}, {"v14", "d4"}, {"v15", "v13"}, {"v14", "v13"},
}};

struct Spoke {
  const char* name;
  const char* sink;
  const char* first_target;
  const char* second_target;
};

inline constexpr std::array<Spoke, 3> kClauseSpokes = {{
    {"h1", "t", "c2", "c3"},
    {"h3", "t'", "c2", "c1"},
    {"h5", "t''", "c1", "c3"},
}};

inline std::string b2_var(std::size_t i, const std::string& local) { return "X" + std::to_string(i) + "." + local; }
inline std::string b2_clause(std::size_t j, const std::string& local) { return "C" + std::to_string(j) + "." + local; }

inline void validate_b2(const CnfFormula& f) {
  f.validate();
  std::map<int, int> occurrences;
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const auto& c = f.clauses[j];
    if (c.size() != 3 || c[0] == c[1] || c[0] == c[2] || c[1] == c[2])
      throw InputError("(3,B2) violation: clause " + std::to_string(j + 1) + " must have exactly three distinct literals");
    for (int l : c) ++occurrences[l];
  }
  for (std::size_t i = 1; i <= f.num_vars; ++i)
    for (int l : {static_cast<int>(i), -static_cast<int>(i)})
      if (occurrences[l] != 2)
        throw InputError("(3,B2) violation: literal " + std::to_string(l) + " occurs " + std::to_string(occurrences[l]) +
                         " times instead of twice");
}

}  // namespace detail

inline ReductionOutput b2sat_to_qk(const CnfFormula& f) {
  detail::validate_b2(f);
  detail::LabeledBuilder b;
  for (std::size_t i = 1; i <= f.num_vars; ++i) {
    for (const char* v : detail::kVariableVertices) b.add(detail::b2_var(i, v));
    for (auto a : detail::kVariableArcs) b.arc(detail::b2_var(i, a.tail), detail::b2_var(i, a.head));
  }
  for (std::size_t j = 1; j <= f.clauses.size(); ++j) {
    auto C = [&](const std::string& s) { return detail::b2_clause(j, s); };
    for (const char* c : {"c1", "c2", "c3"}) b.add(C(c));
    for (const auto& sp : detail::kClauseSpokes) {
      const std::string h = sp.name;
      b.add(C(h));
      b.add(C(h + "b"));
      b.add(C(h + ".1"));
      b.add(C(h + ".2"));
      b.add(C(h + ".3"));
      b.add(C(sp.sink));
      b.arc(C(h + "b"), C(h));
      b.arc(C(h), C(sp.first_target));
      b.arc(C(h), C(sp.second_target));
      b.arc(C(h + ".1"), C(h + "b"));
      b.arc(C(h + ".3"), C(h + "b"));
      b.arc(C(h + ".1"), C(sp.sink));
      b.arc(C(h + ".3"), C(sp.sink));
      b.arc(C(h + ".2"), C(h + ".1"));
      b.arc(C(h + ".2"), C(sp.sink));
      b.arc(C(h + ".2"), C(h + ".3"));
    }
  }
  for (std::size_t j = 1; j <= f.clauses.size(); ++j) {
    for (std::size_t k = 1; k <= 3; ++k) {
      const int lit = f.clauses[j - 1][k - 1];
      const std::string mid = "M" + std::to_string(j) + "." + std::to_string(k);
      b.add(mid);
      b.arc(detail::b2_clause(j, "c" + std::to_string(k)), mid);
      b.arc(mid, detail::b2_var(static_cast<std::size_t>(std::abs(lit)), lit > 0 ? "x" : "nx"));
    }
  }
  const auto n = static_cast<std::int64_t>(f.num_vars);
  const auto m = static_cast<std::int64_t>(f.clauses.size());
  return b.finish({{"num_vars", n},
                   {"num_clauses", m},
                   {"expected_vertices", 14 * n + 24 * m},
                   {"expected_arcs", 19 * n + 36 * m},
                   {"target_qk_size", 5 * m + 4 * n}});
}

/// Quasi-kernel of size 5m + 4n from a satisfying assignment. Each clause
/// keeps its first satisfied literal's vertex c<k> out of Q.
inline VertexSet assignment_to_qk_b2(const ReductionOutput& out, const CnfFormula& f, const Assignment& phi) {
  if (phi.size() != f.num_vars) throw InputError("assignment length does not match the number of variables");
  if (!satisfies(f, phi)) throw InputError("assignment does not satisfy the formula");
  VertexSet q(out.digraph.order());
  for (std::size_t j = 1; j <= f.clauses.size(); ++j) {
    const auto& c = f.clauses[j - 1];
    std::size_t sat = 0;
    while (!literal_true(c[sat], phi)) ++sat;
    for (std::size_t k = 0; k < 3; ++k)
      if (k != sat) q.insert(out.at(detail::b2_clause(j, "c" + std::to_string(k + 1))));
    for (const char* t : {"t", "t'", "t''"}) q.insert(out.at(detail::b2_clause(j, t)));
  }
  for (std::size_t i = 1; i <= f.num_vars; ++i) {
    q.insert(out.at(detail::b2_var(i, phi[i - 1] ? "x" : "nx")));
    q.insert(out.at(detail::b2_var(i, phi[i - 1] ? "d3" : "d2")));
    q.insert(out.at(detail::b2_var(i, "d1")));
    q.insert(out.at(detail::b2_var(i, "d4")));
  }
  return q;
}

/// Assignment from a quasi-kernel of size at most 5m + 4n: x_i is false iff
/// the vertex nx of its gadget is in Q.
inline Assignment qk_to_assignment_b2(const ReductionOutput& out, const VertexSet& q) {
  if (!is_quasi_kernel(out.digraph, q)) throw InputError("set is not a quasi-kernel");
  if (static_cast<std::int64_t>(q.size()) > out.param("target_qk_size"))
    throw InputError("quasi-kernel is larger than 5m + 4n");
  const auto n = static_cast<std::size_t>(out.param("num_vars"));
  Assignment phi(n);
  for (std::size_t i = 1; i <= n; ++i) phi[i - 1] = !q.contains(out.at(detail::b2_var(i, "nx")));
  return phi;
}

}  // namespace qk
