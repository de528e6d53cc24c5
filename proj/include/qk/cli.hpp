#pragma once

#include <array>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qk/conjecture_lab.hpp"
#include "qk/io.hpp"
#include "qk/reductions.hpp"
#include "qk/solvers.hpp"
#include "qk/tree_dp.hpp"

namespace qk::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNoneExists = 1;
inline constexpr int kInputError = 2;
inline constexpr int kCapExceeded = 3;

using Json = nlohmann::ordered_json;

struct CommandResult {
  std::string status = "ok";  // ok | none_exists | cap_exceeded | input_error
  Json payload = Json::object();

  int exit_code() const {
    if (status == "ok") return kOk;
    if (status == "none_exists") return kNoneExists;
    if (status == "cap_exceeded") return kCapExceeded;
    return kInputError;
  }
};

namespace detail {

inline Json set_json(const VertexSet& s) {
  Json a = Json::array();
  for (auto v : s.members()) a.push_back(v);
  return a;
}

inline Json predicate(const char* name, bool value) { return {{"name", name}, {"value", value}}; }

inline CommandResult from_status(SearchStatus s) {
  CommandResult r;
  if (s == SearchStatus::none_exists) r.status = "none_exists";
  if (s == SearchStatus::cap_exceeded) r.status = "cap_exceeded";
  return r;
}

inline Digraph load_digraph(const std::string& path) { return io::parse_digraph(io::read_file(path)); }

/// "1,0,1" -> assignment. Accepts 0/1 only.
inline Assignment parse_bits(const std::string& text, std::size_t expected) {
  Assignment a;
  for (auto b : io::parse_index_list(text)) {
    if (b > 1) throw InputError("assignment entries must be 0 or 1");
    a.push_back(b == 1);
  }
  if (a.size() != expected)
    throw InputError("assignment has " + std::to_string(a.size()) + " entries, expected " + std::to_string(expected));
  return a;
}

inline std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  for (auto v : io::parse_index_list(text)) out.push_back(static_cast<std::size_t>(v));
  return out;
}

/// "0,3;1,4" -> vertex sets separated by semicolons.
inline std::vector<VertexSet> parse_set_list(const std::string& text, std::size_t universe) {
  std::vector<VertexSet> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string::npos) end = text.size();
    out.push_back(io::parse_vertex_set(text.substr(pos, end - pos), universe));
    pos = end + 1;
  }
  return out;
}

inline Json assignment_json(const Assignment& a) {
  Json j = Json::array();
  for (bool b : a) j.push_back(b ? 1 : 0);
  return j;
}

inline ReductionOutput build_reduction(const std::string& kind, const std::string& text) {
  if (kind == "sat2dqk") return sat_to_two_disjoint_qk(io::parse_dimacs_cnf(text));
  if (kind == "col3dqk") return coloring_to_three_disjoint_qk(io::parse_dimacs_edge(text));
  if (kind == "b2sat") return b2sat_to_qk(io::parse_dimacs_cnf(text));
  if (kind == "setcover") return setcover_to_qk(io::parse_set_cover(text));
  if (kind == "vc") return vc_to_qk(io::parse_dimacs_edge(text));
  throw InputError("unknown reduction '" + kind + "'");
}

inline Json params_json(const ReductionOutput& out) {
  Json p = Json::object();
  for (const auto& [k, v] : out.params) p[k] = v;
  return p;
}

inline bool size_formula_holds(const ReductionOutput& out) {
  bool ok = !out.params.count("expected_vertices") ||
            out.param("expected_vertices") == static_cast<std::int64_t>(out.digraph.order());
  if (out.params.count("expected_arcs"))
    ok = ok && out.param("expected_arcs") == static_cast<std::int64_t>(out.digraph.arc_count());
  return ok;
}

/// Options gathered by the subcommand parsers.
struct Options {
  std::string file;
  std::string set;
  std::string kernel;
  std::string output;
  std::string reduction;
  std::string assignment;
  std::string coloring;
  std::string cover;
  std::string qk;
  std::string kind = "random_digraph";
  std::string targets = "small_qk,two_disjoint";
  std::string report;
  bool tree = false;
  bool exact = false;
  bool check_kernel = false;
  bool sink_free = false;
  std::size_t cap = 0;
  std::size_t k = 2;
  std::size_t n = 8;
  std::size_t trials = 0;
  std::size_t max_retries = 1000;
  unsigned threads = 1;
  double p = 0.5;
  std::uint64_t seed = 0;
  Vertex root = 0;
};

inline CommandResult cmd_find(const Options& o) {
  Digraph d = load_digraph(o.file);
  VertexSet q = chvatal_lovasz_qk(d);
  CommandResult r;
  r.payload["algorithm"] = "chvatal_lovasz";
  r.payload["size"] = q.size();
  r.payload["set"] = set_json(q);
  r.payload["predicate"] = predicate("is_quasi_kernel", is_quasi_kernel(d, q));
  return r;
}

inline CommandResult cmd_min(const Options& o) {
  Digraph d = load_digraph(o.file);
  if (o.tree && o.exact) throw InputError("--tree and --exact are mutually exclusive");
  const auto prof = profile(d);
  const bool tree = o.tree || (!o.exact && prof.underlying_is_tree && d.arc_count() + 1 == d.order());
  CommandResult r;
  VertexSet q;
  if (tree) {
    auto t = min_qk_tree(d, o.root);
    q = t.witness;
    r.payload["method"] = "tree_dp";
  } else {
    auto m = min_quasi_kernel(d, o.cap ? o.cap : SearchCaps{}.exact);
    r = from_status(m.status);
    r.payload["method"] = "exact";
    if (!m.ok()) return r;
    q = *m;
  }
  r.payload["size"] = q.size();
  r.payload["set"] = set_json(q);
  r.payload["predicate"] = predicate("is_quasi_kernel", is_quasi_kernel(d, q));
  return r;
}

inline CommandResult cmd_verify(const Options& o) {
  Digraph d = load_digraph(o.file);
  VertexSet s = io::parse_vertex_set(o.set, d.order());
  CommandResult r;
  r.payload["set"] = set_json(s);
  r.payload["is_independent"] = is_independent(d, s);
  const bool qk = is_quasi_kernel(d, s);
  r.payload["is_quasi_kernel"] = qk;
  if (o.check_kernel) {
    const bool k = is_kernel(d, s);
    r.payload["is_kernel"] = k;
    r.payload["predicate"] = predicate("is_kernel", k);
  } else {
    r.payload["predicate"] = predicate("is_quasi_kernel", qk);
  }
  return r;
}

inline CommandResult cmd_disjoint(const Options& o) {
  Digraph d = load_digraph(o.file);
  auto res = disjoint_quasi_kernels(d, o.k, o.cap ? o.cap : SearchCaps{}.enumeration);
  CommandResult r = from_status(res.status);
  r.payload["k"] = o.k;
  if (!res.ok()) return r;
  Json sets = Json::array();
  bool ok = true;
  for (std::size_t i = 0; i < res->size(); ++i) {
    sets.push_back(set_json((*res)[i]));
    ok = ok && is_quasi_kernel(d, (*res)[i]);
    for (std::size_t j = i + 1; j < res->size(); ++j) ok = ok && !(*res)[i].intersects((*res)[j]);
  }
  r.payload["sets"] = sets;
  r.payload["predicate"] = predicate("pairwise_disjoint_quasi_kernels", ok);
  return r;
}

inline CommandResult cmd_enumerate(const Options& o) {
  Digraph d = load_digraph(o.file);
  auto res = enumerate_quasi_kernels(d, o.cap ? o.cap : SearchCaps{}.enumeration);
  CommandResult r = from_status(res.status);
  if (!res.ok()) return r;
  Json sets = Json::array();
  bool ok = true;
  for (const auto& q : *res) {
    sets.push_back(set_json(q));
    ok = ok && is_quasi_kernel(d, q);
  }
  r.payload["count"] = res->size();
  r.payload["sets"] = sets;
  r.payload["predicate"] = predicate("is_quasi_kernel", ok);
  return r;
}

inline CommandResult cmd_within_kernel(const Options& o) {
  Digraph d = load_digraph(o.file);
  VertexSet k = io::parse_vertex_set(o.kernel, d.order());
  auto res = min_qk_within_kernel(d, k, o.cap ? o.cap : SearchCaps{}.exact);
  CommandResult r = from_status(res.status);
  if (!res.ok()) return r;
  r.payload["size"] = res->size();
  r.payload["set"] = set_json(*res);
  r.payload["predicate"] = predicate("is_quasi_kernel", is_quasi_kernel(d, *res) && res->is_subset_of(k));
  return r;
}

inline void write_reduction(const ReductionOutput& out, const std::string& path) {
  io::write_file(path, io::emit_digraph(out.digraph));
  io::write_file(path + ".labels", io::emit_labels(out));
  io::write_file(path + ".params", io::emit_params(out));
}

inline CommandResult cmd_reduce(const Options& o) {
  auto out = build_reduction(o.reduction, io::read_file(o.file));
  write_reduction(out, o.output);
  CommandResult r;
  r.payload["reduction"] = o.reduction;
  r.payload["vertices"] = out.digraph.order();
  r.payload["arcs"] = out.digraph.arc_count();
  r.payload["params"] = params_json(out);
  r.payload["files"] = {o.output, o.output + ".labels", o.output + ".params"};
  r.payload["predicate"] = predicate("size_formula", size_formula_holds(out));
  return r;
}

inline CommandResult cmd_gutin(const Options& o) {
  auto out = gutin_gadget_labeled();
  write_reduction(out, o.output);
  CommandResult r;
  r.payload["vertices"] = out.digraph.order();
  r.payload["arcs"] = out.digraph.arc_count();
  r.payload["files"] = {o.output, o.output + ".labels", o.output + ".params"};
  r.payload["predicate"] = predicate("is_sink_free", sinks(out.digraph).empty());
  return r;
}

/// Forward direction with --assignment / --coloring / --cover; backward with --qk.
inline CommandResult cmd_witness(const Options& o) {
  const std::string text = io::read_file(o.file);
  auto out = build_reduction(o.reduction, text);
  const Digraph& d = out.digraph;
  CommandResult r;
  r.payload["reduction"] = o.reduction;
  const bool forward = !o.assignment.empty() || !o.coloring.empty() || !o.cover.empty();
  if (forward == !o.qk.empty()) throw InputError("witness needs exactly one of --assignment/--coloring/--cover or --qk");

  if (o.reduction == "sat2dqk") {
    auto f = io::parse_dimacs_cnf(text);
    if (forward) {
      auto [q1, q2] = assignment_to_qk_pair(out, f, parse_bits(o.assignment, f.num_vars));
      r.payload["sets"] = {set_json(q1), set_json(q2)};
      r.payload["predicate"] =
          predicate("pairwise_disjoint_quasi_kernels", is_quasi_kernel(d, q1) && is_quasi_kernel(d, q2) && !q1.intersects(q2));
    } else {
      auto sets = parse_set_list(o.qk, d.order());
      if (sets.size() != 2) throw InputError("--qk needs two sets separated by ';'");
      auto phi = qk_pair_to_assignment(out, f.num_vars, sets[0], sets[1]);
      r.payload["assignment"] = assignment_json(phi);
      r.payload["predicate"] = predicate("satisfies", satisfies(f, phi));
    }
  } else if (o.reduction == "col3dqk") {
    if (forward) {
      Coloring c;
      for (auto v : io::parse_index_list(o.coloring)) c.push_back(static_cast<int>(std::min<std::uint64_t>(v, 3)));
      auto t = coloring_to_qk_triple(out, c);
      bool ok = true;
      for (int a = 0; a < 3; ++a) {
        ok = ok && is_quasi_kernel(d, t[a]);
        for (int b = a + 1; b < 3; ++b) ok = ok && !t[a].intersects(t[b]);
      }
      r.payload["sets"] = {set_json(t[0]), set_json(t[1]), set_json(t[2])};
      r.payload["predicate"] = predicate("pairwise_disjoint_quasi_kernels", ok);
    } else {
      auto g = io::parse_dimacs_edge(text);
      auto sets = parse_set_list(o.qk, d.order());
      if (sets.size() != 3) throw InputError("--qk needs three sets separated by ';'");
      auto c = qk_triple_to_coloring(out, {sets[0], sets[1], sets[2]});
      bool proper = true;
      for (auto [u, v] : g.edges) proper = proper && c[u] != c[v];
      r.payload["coloring"] = c;
      r.payload["predicate"] = predicate("proper_coloring", proper);
    }
  } else if (o.reduction == "b2sat") {
    auto f = io::parse_dimacs_cnf(text);
    if (forward) {
      auto q = assignment_to_qk_b2(out, f, parse_bits(o.assignment, f.num_vars));
      r.payload["size"] = q.size();
      r.payload["set"] = set_json(q);
      r.payload["predicate"] = predicate("is_quasi_kernel", is_quasi_kernel(d, q));
    } else {
      auto phi = qk_to_assignment_b2(out, io::parse_vertex_set(o.qk, d.order()));
      r.payload["assignment"] = assignment_json(phi);
      r.payload["predicate"] = predicate("satisfies", satisfies(f, phi));
    }
  } else if (o.reduction == "setcover") {
    if (forward) {
      auto q = cover_to_qk(out, parse_sizes(o.cover));
      r.payload["size"] = q.size();
      r.payload["set"] = set_json(q);
      r.payload["predicate"] = predicate("is_quasi_kernel", is_quasi_kernel(d, q));
    } else {
      auto cover = qk_to_cover(out, io::parse_vertex_set(o.qk, d.order()));
      r.payload["cover"] = cover;
      r.payload["size"] = cover.size();
      auto inst = io::parse_set_cover(text);
      std::vector<char> hit(inst.universe_size, 0);
      for (auto j : cover)
        for (auto e : inst.family[j]) hit[e] = 1;
      r.payload["predicate"] = predicate("covers_universe", std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; }));
    }
  } else if (o.reduction == "vc") {
    if (forward) {
      auto q = vc_set_to_qk(out, parse_sizes(o.cover));
      r.payload["size"] = q.size();
      r.payload["set"] = set_json(q);
      r.payload["predicate"] = predicate("is_quasi_kernel", is_quasi_kernel(d, q));
    } else {
      auto q = io::parse_vertex_set(o.qk, d.order());
      auto norm = normalize_qk_to_vc(out, q);
      r.payload["normalized_set"] = set_json(norm.normalized_qk);
      r.payload["cover"] = norm.cover;
      r.payload["size"] = norm.cover.size();
      auto g = io::parse_dimacs_edge(text);
      std::vector<char> in_cover(g.n, 0);
      for (auto i : norm.cover) in_cover[i] = 1;
      bool covers = std::all_of(g.edges.begin(), g.edges.end(), [&](auto e) { return in_cover[e.first] || in_cover[e.second]; });
      r.payload["predicate"] = predicate("is_vertex_cover", covers && norm.normalized_qk.size() <= q.size());
    }
  }
  return r;
}

inline CommandResult cmd_check_conjecture(const Options& o) {
  Digraph d = load_digraph(o.file);
  auto v = check_small_qk_conjecture(d, o.cap ? o.cap : SearchCaps{}.exact);
  CommandResult r = from_status(v.status);
  if (v.status != SearchStatus::found) return r;
  r.payload["n"] = v.n;
  r.payload["min_qk_size"] = v.min_qk_size;
  r.payload["bound"] = v.bound;
  r.payload["margin"] = v.margin;
  r.payload["verdict"] = v.holds ? "holds" : "violated";
  r.payload["set"] = set_json(v.witness);
  if (!v.holds) r.payload["instance"] = io::emit_digraph(d);
  r.payload["predicate"] = predicate("is_quasi_kernel", is_quasi_kernel(d, v.witness));
  return r;
}

inline CommandResult cmd_search(const Options& o) {
  GeneratorConfig cfg;
  cfg.kind = parse_generator_kind(o.kind);
  cfg.n = o.n;
  cfg.p = o.p;
  cfg.seed = o.seed;
  cfg.sink_free_filter = o.sink_free;
  cfg.max_retries = o.max_retries;
  std::vector<SearchTarget> targets;
  std::stringstream ss(o.targets);
  for (std::string t; std::getline(ss, t, ',');) targets.push_back(parse_search_target(t));
  auto rep = search_counterexamples(cfg, o.trials, targets, o.threads);
  CommandResult r;
  Json full = rep.to_json();
  r.payload["summary"] = full["summary"];
  if (!o.report.empty()) {
    io::write_file(o.report, rep.dump(2) + "\n");
    r.payload["report"] = o.report;
  } else {
    r.payload["report"] = full;
  }
  bool all_verified = true;
  for (const auto& v : rep.violations) all_verified = all_verified && reverify(v.instance, v.kind);
  r.payload["predicate"] = predicate("violations_reverified", all_verified);
  return r;
}

inline void print(const CommandResult& r, const std::string& command, bool json, std::ostream& out) {
  Json j;
  j["command"] = command;
  j["status"] = r.status;
  for (auto it = r.payload.begin(); it != r.payload.end(); ++it) j[it.key()] = it.value();
  if (json) {
    out << j.dump() << "\n";
    return;
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    out << it.key() << ": ";
    if (it.value().is_string())
      out << it.value().get<std::string>();
    else
      out << it.value().dump();
    out << "\n";
  }
}

}  // namespace detail

/// Runs one invocation; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using detail::Options;
  Options o;
  bool json = false;
  CLI::App app{"Quasi-kernel toolkit", "qk"};
  app.add_flag("--json", json, "Single-line JSON result on standard output");
  app.require_subcommand(1);
  app.fallthrough();
  auto file_arg = [&](CLI::App* sub) { sub->add_option("file", o.file, "Digraph file")->required(); };
  auto cap_opt = [&](CLI::App* sub) { sub->add_option("--cap", o.cap, "Vertex limit of the exponential search"); };

  auto* find = app.add_subcommand("find", "Quasi-kernel by the Chvatal-Lovasz construction");
  file_arg(find);
  auto* min = app.add_subcommand("min", "Minimum quasi-kernel");
  file_arg(min);
  min->add_flag("--tree", o.tree, "Use the tree dynamic program");
  min->add_flag("--exact", o.exact, "Use the exact branch and bound");
  min->add_option("--root", o.root, "Root for the tree dynamic program");
  cap_opt(min);
  auto* verify = app.add_subcommand("verify", "Check a vertex set");
  file_arg(verify);
  verify->add_option("--set", o.set, "Comma-separated 0-based vertices")->required();
  verify->add_flag("--kernel", o.check_kernel, "Check the kernel property instead");
  auto* disjoint = app.add_subcommand("disjoint", "Search for k disjoint quasi-kernels");
  file_arg(disjoint);
  disjoint->add_option("-k", o.k, "Number of sets")->required()->check(CLI::PositiveNumber);
  cap_opt(disjoint);
  auto* enumerate = app.add_subcommand("enumerate", "List every quasi-kernel");
  file_arg(enumerate);
  cap_opt(enumerate);
  auto* within = app.add_subcommand("within-kernel", "Minimum quasi-kernel inside a kernel");
  file_arg(within);
  within->add_option("--kernel", o.kernel, "Comma-separated 0-based kernel")->required();
  cap_opt(within);
  const std::vector<std::string> reductions{"sat2dqk", "col3dqk", "b2sat", "setcover", "vc"};
  auto* reduce = app.add_subcommand("reduce", "Build a reduction instance");
  reduce->add_option("reduction", o.reduction)->required()->check(CLI::IsMember(reductions));
  reduce->add_option("input", o.file)->required();
  reduce->add_option("-o,--output", o.output)->required();
  auto* witness = app.add_subcommand("witness", "Map a solution through a reduction");
  witness->add_option("reduction", o.reduction)->required()->check(CLI::IsMember(reductions));
  witness->add_option("input", o.file)->required();
  witness->add_option("--assignment", o.assignment, "Comma-separated 0/1 values");
  witness->add_option("--coloring", o.coloring, "Comma-separated colours 0..2");
  witness->add_option("--cover", o.cover, "Comma-separated 0-based indices");
  witness->add_option("--qk", o.qk, "Quasi-kernel(s), sets separated by ';'");
  auto* gutin = app.add_subcommand("gutin", "Write the 14-vertex digraph without two disjoint quasi-kernels");
  gutin->add_option("-o,--output", o.output)->required();
  auto* conj = app.add_subcommand("check-conjecture", "Compare the minimum quasi-kernel with n/2");
  file_arg(conj);
  cap_opt(conj);
  auto* search = app.add_subcommand("search", "Seeded counterexample search");
  search->add_option("--kind", o.kind)->check(
      CLI::IsMember({"random_digraph", "tournament", "tree_orientation", "grid_orientation"}));
  search->add_option("--n", o.n)->required();
  search->add_option("--p", o.p)->check(CLI::Range(0.0, 1.0));
  search->add_option("--seed", o.seed)->required();
  search->add_option("--trials", o.trials)->required();
  search->add_option("--targets", o.targets, "Comma-separated: small_qk,two_disjoint");
  search->add_flag("--sink-free", o.sink_free);
  search->add_option("--max-retries", o.max_retries);
  search->add_option("--threads", o.threads);
  search->add_option("--report", o.report, "Write the full JSON report here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    if (std::find(args.begin(), args.end(), "--json") != args.end())
      out << Json{{"command", args.empty() ? "" : args.front()}, {"status", "input_error"}, {"error", e.what()}}.dump() << "\n";
    return kInputError;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  CommandResult r;
  try {
    if (name == "find") r = detail::cmd_find(o);
    else if (name == "min") r = detail::cmd_min(o);
    else if (name == "verify") r = detail::cmd_verify(o);
    else if (name == "disjoint") r = detail::cmd_disjoint(o);
    else if (name == "enumerate") r = detail::cmd_enumerate(o);
    else if (name == "within-kernel") r = detail::cmd_within_kernel(o);
    else if (name == "reduce") r = detail::cmd_reduce(o);
    else if (name == "witness") r = detail::cmd_witness(o);
    else if (name == "gutin") r = detail::cmd_gutin(o);
    else if (name == "check-conjecture") r = detail::cmd_check_conjecture(o);
    else r = detail::cmd_search(o);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    r = CommandResult{"input_error", {{"error", e.what()}}};
  }
  detail::print(r, name, json, out);
  return r.exit_code();
}

inline int run(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace qk::cli
