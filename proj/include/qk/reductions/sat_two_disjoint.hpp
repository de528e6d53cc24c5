#pragma once

#include <cstdlib>
#include <set>
#include <string>
#include <utility>

#include "qk/instances.hpp"
#include "qk/reductions/gutin.hpp"

namespace qk {

// 3-SAT -> two disjoint quasi-kernels.
//
// Labels: "D0.a" .. "D0.c'" for the base gadget; "D<i>.A", "D<i>.A'",
// "D<i>.A''", "D<i>.B", "D<i>.t", "D<i>.f" per variable (1-based); "C<j>.k1"..
// "C<j>.s7" per clause (1-based). Vertices are numbered in that order.

namespace detail {

inline std::string var_label(std::size_t i, const char* local) { return "D" + std::to_string(i) + "." + local; }
inline std::string clause_label(std::size_t j, const std::string& local) { return "C" + std::to_string(j) + "." + local; }

/// Distinct literals of a clause, in first-occurrence order.
inline std::vector<int> distinct_literals(const std::vector<int>& clause) {
  std::vector<int> out;
  for (int l : clause)
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
  return out;
}

}  // namespace detail

inline ReductionOutput sat_to_two_disjoint_qk(const CnfFormula& f) {
  f.validate();
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    auto lits = detail::distinct_literals(f.clauses[j]);
    if (lits.empty() || lits.size() > 3)
      throw InputError("clause " + std::to_string(j + 1) + " must have between one and three distinct literals");
  }
  detail::LabeledBuilder b;
  for (const char* name : {"a", "b", "c", "a'", "b'", "c'"}) b.add(std::string("D0.") + name);
  b.arc("D0.a", "D0.b");
  b.arc("D0.b", "D0.c");
  b.arc("D0.c", "D0.a");
  b.arc("D0.a'", "D0.b'");
  b.arc("D0.b'", "D0.c'");
  b.arc("D0.c'", "D0.a'");
  b.arc("D0.a'", "D0.a");
  b.arc("D0.a'", "D0.b");
  b.arc("D0.a'", "D0.c");

  for (std::size_t i = 1; i <= f.num_vars; ++i) {
    for (const char* name : {"A", "A'", "A''", "B", "t", "f"}) b.add(detail::var_label(i, name));
    auto L = [&](const char* s) { return detail::var_label(i, s); };
    b.arc(L("A"), L("A'"));
    b.arc(L("A'"), L("A''"));
    b.arc(L("A''"), L("A"));
    b.arc(L("B"), L("t"));
    b.arc(L("t"), L("f"));
    b.arc(L("f"), L("B"));
    b.arc(L("B"), L("A"));
    b.arc(L("B"), L("A'"));
    b.arc(L("B"), L("A''"));
    b.arc(L("f"), "D0.b'");
    b.arc(L("t"), "D0.b'");
  }

  std::int64_t literal_arcs = 0;
  for (std::size_t j = 1; j <= f.clauses.size(); ++j) {
    const std::string prefix = "C" + std::to_string(j) + ".";
    detail::add_gutin_gadget(b, prefix);
    for (int l : detail::distinct_literals(f.clauses[j - 1])) {
      auto i = static_cast<std::size_t>(std::abs(l));
      b.arc(prefix + "k1", detail::var_label(i, l > 0 ? "t" : "f"));
      ++literal_arcs;
    }
  }

  const auto n = static_cast<std::int64_t>(f.num_vars);
  const auto m = static_cast<std::int64_t>(f.clauses.size());
  return b.finish({{"num_vars", n},
                   {"num_clauses", m},
                   {"literal_arcs", literal_arcs},
                   {"expected_vertices", 14 * m + 6 * n + 6},
                   {"expected_arcs", 28 * m + literal_arcs + 11 * n + 9}});
}

/// Two disjoint quasi-kernels built from a satisfying assignment.
inline std::pair<VertexSet, VertexSet> assignment_to_qk_pair(const ReductionOutput& out, const CnfFormula& f, const Assignment& phi) {
  if (phi.size() != f.num_vars) throw InputError("assignment length does not match the number of variables");
  if (!satisfies(f, phi)) throw InputError("assignment does not satisfy the formula");
  const std::size_t n = out.digraph.order();
  VertexSet q1(n), q2(n);
  q1.insert(out.at("D0.b"));
  q1.insert(out.at("D0.b'"));
  q2.insert(out.at("D0.c"));
  q2.insert(out.at("D0.c'"));
  for (std::size_t i = 1; i <= f.num_vars; ++i) {
    q1.insert(out.at(detail::var_label(i, "A'")));
    q2.insert(out.at(detail::var_label(i, "A''")));
    q2.insert(out.at(detail::var_label(i, phi[i - 1] ? "t" : "f")));
  }
  for (std::size_t j = 1; j <= f.clauses.size(); ++j) {
    for (const char* s : {"k6", "s1", "s3", "s7"}) q1.insert(out.at(detail::clause_label(j, s)));
    for (const char* s : {"k7", "s2", "s4"}) q2.insert(out.at(detail::clause_label(j, s)));
  }
  return {std::move(q1), std::move(q2)};
}

/// Reads an assignment back from two disjoint quasi-kernels: after naming
/// the set containing b' as the first one, x_i is true iff t_i lies in the
/// second set.
inline Assignment qk_pair_to_assignment(const ReductionOutput& out, std::size_t num_vars, const VertexSet& first,
                                        const VertexSet& second) {
  const Digraph& d = out.digraph;
  if (!is_quasi_kernel(d, first) || !is_quasi_kernel(d, second) || first.intersects(second))
    throw InputError("expected two disjoint quasi-kernels");
  const bool swap = second.contains(out.at("D0.b'"));
  const VertexSet& q2 = swap ? first : second;
  Assignment phi(num_vars);
  for (std::size_t i = 1; i <= num_vars; ++i) phi[i - 1] = q2.contains(out.at(detail::var_label(i, "t")));
  return phi;
}

}  // namespace qk
