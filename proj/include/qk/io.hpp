#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qk/digraph.hpp"
#include "qk/error.hpp"
#include "qk/instances.hpp"

namespace qk::io {

// Text formats:
//   digraph    "qk <n> <m>" then m lines "<u> <v>" (0-based); "c " lines are comments.
//   DIMACS CNF "p cnf <vars> <clauses>" then zero-terminated clauses.
//   DIMACS edge "p edge <n> <m>" then m lines "e <u> <v>" (1-based).
//   set cover  "sc <n> <m> <k>" then m lines "<size> <elements...>" (0-based).
// Emitters produce the canonical form that the parsers accept byte-for-byte.

namespace detail {

struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

/// Splits text into lines of whitespace-separated tokens, dropping blank
/// lines and lines whose first token is "c".
inline std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
      if (i > start) toks.push_back({line.substr(start, i - start), line_no, start + 1});
    }
    if (!toks.empty() && toks.front().text != "c") lines.push_back(std::move(toks));
    pos = end + 1;
  }
  return lines;
}

template <class Int>
Int parse_int(const Token& t, const char* what) {
  Int value{};
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size())
    throw ParseError(t.line, t.column, std::string("expected ") + what + ", found '" + std::string(t.text) + "'");
  return value;
}

inline void expect_count(const std::vector<Token>& line, std::size_t count, const char* what) {
  if (line.size() != count) {
    const detail::Token& t = line.size() > count ? line[count] : line.back();
    throw ParseError(t.line, t.column, std::string("expected ") + std::to_string(count) + " fields in " + what);
  }
}

inline void expect_keyword(const Token& t, std::string_view kw) {
  if (t.text != kw) throw ParseError(t.line, t.column, "expected '" + std::string(kw) + "', found '" + std::string(t.text) + "'");
}

inline std::size_t last_line(std::string_view text) {
  std::size_t n = 1;
  for (char c : text) n += c == '\n';
  return n;
}

}  // namespace detail

inline Digraph parse_digraph(std::string_view text) {
  if (text.empty() || text.back() != '\n') throw ParseError(detail::last_line(text), 1, "missing trailing newline");
  auto lines = detail::tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "missing 'qk <n> <m>' header");
  const auto& hdr = lines.front();
  detail::expect_keyword(hdr[0], "qk");
  detail::expect_count(hdr, 3, "header");
  auto n = detail::parse_int<std::uint32_t>(hdr[1], "vertex count");
  auto m = detail::parse_int<std::size_t>(hdr[2], "arc count");
  if (lines.size() - 1 != m) {
    const detail::Token& t = lines.size() - 1 > m ? lines[m + 1][0] : hdr[2];
    throw ParseError(t.line, t.column, "header announces " + std::to_string(m) + " arcs, file has " + std::to_string(lines.size() - 1));
  }
  std::vector<Arc> arcs;
  arcs.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    detail::expect_count(l, 2, "arc line");
    Arc a{detail::parse_int<Vertex>(l[0], "vertex"), detail::parse_int<Vertex>(l[1], "vertex")};
    if (a.tail >= n) throw ParseError(l[0].line, l[0].column, "vertex " + std::to_string(a.tail) + " out of range");
    if (a.head >= n) throw ParseError(l[1].line, l[1].column, "vertex " + std::to_string(a.head) + " out of range");
    if (a.tail == a.head) throw ParseError(l[0].line, l[0].column, "self-loop");
    arcs.push_back(a);
  }
  return build_digraph(n, arcs);
}

inline std::string emit_digraph(const Digraph& d) {
  std::string s = "qk " + std::to_string(d.order()) + " " + std::to_string(d.arc_count()) + "\n";
  for (const Arc& a : d.arcs()) s += std::to_string(a.tail) + " " + std::to_string(a.head) + "\n";
  return s;
}

inline CnfFormula parse_dimacs_cnf(std::string_view text) {
  auto lines = detail::tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "missing 'p cnf' header");
  const auto& hdr = lines.front();
  detail::expect_keyword(hdr[0], "p");
  detail::expect_count(hdr, 4, "header");
  detail::expect_keyword(hdr[1], "cnf");
  CnfFormula f;
  f.num_vars = detail::parse_int<std::size_t>(hdr[2], "variable count");
  auto m = detail::parse_int<std::size_t>(hdr[3], "clause count");
  std::vector<int> current;
  const detail::Token* last = &hdr[3];
  for (std::size_t i = 1; i < lines.size(); ++i)
    for (const auto& t : lines[i]) {
      last = &t;
      int lit = detail::parse_int<int>(t, "literal");
      if (lit == 0) {
        f.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (static_cast<std::size_t>(lit < 0 ? -static_cast<long long>(lit) : lit) > f.num_vars)
        throw ParseError(t.line, t.column, "literal " + std::to_string(lit) + " exceeds the variable count");
      current.push_back(lit);
    }
  if (!current.empty()) throw ParseError(last->line, last->column, "last clause is not terminated by 0");
  if (f.clauses.size() != m)
    throw ParseError(hdr[3].line, hdr[3].column, "header announces " + std::to_string(m) + " clauses, file has " + std::to_string(f.clauses.size()));
  return f;
}

inline std::string emit_dimacs_cnf(const CnfFormula& f) {
  std::string s = "p cnf " + std::to_string(f.num_vars) + " " + std::to_string(f.clauses.size()) + "\n";
  for (const auto& c : f.clauses) {
    for (int l : c) s += std::to_string(l) + " ";
    s += "0\n";
  }
  return s;
}

inline UndirectedGraph parse_dimacs_edge(std::string_view text) {
  auto lines = detail::tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "missing 'p edge' header");
  const auto& hdr = lines.front();
  detail::expect_keyword(hdr[0], "p");
  detail::expect_count(hdr, 4, "header");
  detail::expect_keyword(hdr[1], "edge");
  auto n = detail::parse_int<std::size_t>(hdr[2], "vertex count");
  auto m = detail::parse_int<std::size_t>(hdr[3], "edge count");
  if (lines.size() - 1 != m)
    throw ParseError(hdr[3].line, hdr[3].column, "header announces " + std::to_string(m) + " edges, file has " + std::to_string(lines.size() - 1));
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    detail::expect_keyword(l[0], "e");
    detail::expect_count(l, 3, "edge line");
    auto u = detail::parse_int<Vertex>(l[1], "vertex");
    auto v = detail::parse_int<Vertex>(l[2], "vertex");
    if (u < 1 || u > n) throw ParseError(l[1].line, l[1].column, "vertex out of range 1.." + std::to_string(n));
    if (v < 1 || v > n) throw ParseError(l[2].line, l[2].column, "vertex out of range 1.." + std::to_string(n));
    if (u == v) throw ParseError(l[1].line, l[1].column, "self-loop");
    edges.emplace_back(u - 1, v - 1);
  }
  return UndirectedGraph::make(n, std::move(edges));
}

inline std::string emit_dimacs_edge(const UndirectedGraph& g) {
  std::string s = "p edge " + std::to_string(g.n) + " " + std::to_string(g.edges.size()) + "\n";
  for (auto [u, v] : g.edges) s += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return s;
}

inline SetCoverInstance parse_set_cover(std::string_view text) {
  auto lines = detail::tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "missing 'sc <n> <m> <k>' header");
  const auto& hdr = lines.front();
  detail::expect_keyword(hdr[0], "sc");
  detail::expect_count(hdr, 4, "header");
  SetCoverInstance inst;
  inst.universe_size = detail::parse_int<std::size_t>(hdr[1], "universe size");
  auto m = detail::parse_int<std::size_t>(hdr[2], "set count");
  inst.k = detail::parse_int<std::size_t>(hdr[3], "budget");
  if (lines.size() - 1 != m)
    throw ParseError(hdr[2].line, hdr[2].column, "header announces " + std::to_string(m) + " sets, file has " + std::to_string(lines.size() - 1));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    auto size = detail::parse_int<std::size_t>(l[0], "set size");
    detail::expect_count(l, size + 1, "set line");
    std::vector<std::uint32_t> set;
    for (std::size_t k = 1; k < l.size(); ++k) {
      auto e = detail::parse_int<std::uint32_t>(l[k], "element");
      if (e >= inst.universe_size) throw ParseError(l[k].line, l[k].column, "element " + std::to_string(e) + " outside the universe");
      set.push_back(e);
    }
    inst.family.push_back(std::move(set));
  }
  return inst;
}

inline std::string emit_set_cover(const SetCoverInstance& inst) {
  std::string s = "sc " + std::to_string(inst.universe_size) + " " + std::to_string(inst.family.size()) + " " + std::to_string(inst.k) + "\n";
  for (const auto& set : inst.family) {
    s += std::to_string(set.size());
    for (auto e : set) s += " " + std::to_string(e);
    s += "\n";
  }
  return s;
}

/// "<name> <index>" per vertex, in index order.
inline std::string emit_labels(const ReductionOutput& out) {
  std::string s;
  for (std::size_t v = 0; v < out.names.size(); ++v) s += out.names[v] + " " + std::to_string(v) + "\n";
  return s;
}

/// "key=value" per parameter, keys sorted.
inline std::string emit_params(const ReductionOutput& out) {
  std::string s;
  for (const auto& [k, v] : out.params) s += k + "=" + std::to_string(v) + "\n";
  return s;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
  if (!out) throw InputError("failed writing '" + path + "'");
}

/// Comma-separated 0-based vertex list, e.g. "0,3,7". An empty string is the empty set.
inline std::vector<std::uint64_t> parse_index_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    std::uint64_t v{};
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
      throw ParseError(1, pos + 1, "expected a non-negative integer, found '" + std::string(item) + "'");
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

inline VertexSet parse_vertex_set(std::string_view text, std::size_t universe) {
  VertexSet s(universe);
  for (auto v : parse_index_list(text)) {
    if (v >= universe) throw InputError("vertex " + std::to_string(v) + " out of range for " + std::to_string(universe) + " vertices");
    s.insert(static_cast<Vertex>(v));
  }
  return s;
}

}  // namespace qk::io
