#pragma once

// Command-line front end: build, verify, analyze, export.
//
// Exit codes: 0 ok, 1 parse or usage error, 2 disconnected graph, 3 capacity
// limit, 4 axiom failure, 5 internal inconsistency.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphicahedron/cayley.hpp"
#include "graphicahedron/classify.hpp"
#include "graphicahedron/error.hpp"
#include "graphicahedron/graph.hpp"
#include "graphicahedron/polytope.hpp"
#include "graphicahedron/poset.hpp"
#include "graphicahedron/symmetry.hpp"
#include "report.hpp"

namespace graphicahedron::cli {

enum ExitCode : int {
  kOk = 0,
  kParse = 1,
  kDisconnected = 2,
  kCapacity = 3,
  kAxiomFailure = 4,
  kInternal = 5,
};

inline int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse:
    case ErrorKind::invalid_argument: return kParse;
    case ErrorKind::disconnected: return kDisconnected;
    case ErrorKind::capacity: return kCapacity;
    case ErrorKind::size_mismatch:
    case ErrorKind::internal_inconsistency: return kInternal;
  }
  return kInternal;
}

struct Options {
  std::string file;
  std::string edges;
  std::string preset;
  std::uint64_t max_perms = 0;  // 0: per-command default
  std::size_t max_flags = 0;    // 0: per-command default
  unsigned threads = 0;         // 0: all hardware threads
  bool timings = false;
  bool human = false;
  std::string inject_fault;
  std::string what = "cayley";
  std::string format = "json";
};

inline constexpr std::uint64_t kBuildMaxPerms = 5040;
inline constexpr std::uint64_t kVerifyMaxPerms = 720;

namespace detail {

inline SimpleGraph load_graph(const Options& o) {
  const int sources = !o.file.empty() + !o.edges.empty() + !o.preset.empty();
  if (sources != 1) fail(ErrorKind::invalid_argument, "give exactly one of --file, --edges, --preset");
  if (!o.edges.empty()) return parse_inline_edges(o.edges);
  if (!o.preset.empty()) return parse_preset(o.preset);
  std::ostringstream text;
  if (o.file == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream in(o.file, std::ios::binary);
    if (!in) fail(ErrorKind::parse, "cannot open " + o.file);
    text << in.rdbuf();
  }
  return parse_graph(text.str());
}

class Stopwatch {
 public:
  void lap(const std::string& name) {
    const auto now = std::chrono::steady_clock::now();
    laps_[name] = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
  }
  const report::Json& laps() const { return laps_; }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
  report::Json laps_ = report::Json::object();
};

inline bool use_color(const Options& o) {
  const char* no_color = std::getenv("NO_COLOR");
  return o.human && (no_color == nullptr || *no_color == '\0');
}

/// Indented "key: value" rendering of a report for --human.
inline void print_human(std::ostream& out, const report::Json& j, bool color, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const report::Json& v = it.value();
    const std::string key = j.is_object() ? it.key() : "-";
    if (v.is_object() || (v.is_array() && !v.empty() && v.front().is_object())) {
      out << pad << key << ":\n";
      print_human(out, v, color, indent + 2);
    } else if (v.is_string() && (v == "pass" || v == "fail") && color) {
      out << pad << key << ": " << (v == "pass" ? "\x1b[32m" : "\x1b[31m") << v.get<std::string>() << "\x1b[0m\n";
    } else if (v.is_string()) {
      out << pad << key << ": " << v.get<std::string>() << "\n";
    } else {
      out << pad << key << ": " << v.dump() << "\n";
    }
  }
}

inline void emit(std::ostream& out, const Options& o, report::Json doc, const Stopwatch& clock) {
  if (o.timings) doc["timings_ms"] = clock.laps();
  if (o.human) {
    print_human(out, doc, use_color(o));
  } else {
    out << doc.dump(2) << "\n";
  }
}

inline BuildOptions build_options(const Options& o, std::uint64_t default_perms) {
  BuildOptions b;
  b.max_perms = o.max_perms ? o.max_perms : default_perms;
  b.threads = o.threads;
  return b;
}

}  // namespace detail

inline int cmd_build(const Options& o, std::ostream& out) {
  detail::Stopwatch clock;
  const SimpleGraph g = detail::load_graph(o);
  const Graphicahedron P = Graphicahedron::build(g, detail::build_options(o, kBuildMaxPerms));
  clock.lap("build");
  const std::uint64_t flags = flag_count(P);
  clock.lap("flags");
  report::Json doc = {{"graph", report::graph_json(g)}};
  doc.update(report::structure_json(P, flags));
  detail::emit(out, o, doc, clock);
  return kOk;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  detail::Stopwatch clock;
  const SimpleGraph g = detail::load_graph(o);
  const Graphicahedron P = Graphicahedron::build(g, detail::build_options(o, kVerifyMaxPerms));
  clock.lap("build");

  RankedPoset hasse = hasse_poset(P);
  if (o.inject_fault == "remove-face") hasse.remove(0);
  const DiamondReport diamond = verify_diamond(hasse);
  clock.lap("diamond");

  FlagGraph flags = build_flag_graph(hasse, o.max_flags ? o.max_flags : kDefaultMaxFlags);
  if (o.inject_fault == "remove-flag-edge" && flags.rank() > 0) flags.remove_adjacency(0, 0);
  const FlagConnectivityReport connectivity = verify_strong_flag_connectedness(flags);
  clock.lap("strong_flag_connectedness");

  const auto vertices = P.faces_of_rank(0);
  std::vector<char> simple(vertices.size(), 0);
  graphicahedron::detail::parallel_for(vertices.size(), o.threads, [&](std::size_t v) {
    simple[v] = vertex_figure_is_simplex(P, P.first_of_rank(0) + v) ? 1 : 0;
  });
  std::optional<FaceId> not_simple;
  for (std::size_t v = 0; v < simple.size() && !not_simple; ++v) {
    if (!simple[v]) not_simple = P.first_of_rank(0) + v;
  }
  clock.lap("vertex_figures");

  report::Json doc = {{"graph", report::graph_json(g)}};
  doc.update(report::structure_json(P, hasse.count_flags()));
  doc["axioms"] = {{"diamond", report::diamond_json(P, diamond)},
                   {"strong_flag_connected", report::flag_connectivity_json(flags, connectivity)},
                   {"simple", report::simple_json(!not_simple, vertices.size(), not_simple, P)}};
  detail::emit(out, o, doc, clock);
  return diamond.pass && connectivity.pass && !not_simple ? kOk : kAxiomFailure;
}

inline int cmd_analyze(const Options& o, std::ostream& out) {
  detail::Stopwatch clock;
  const SimpleGraph g = detail::load_graph(o);
  const Graphicahedron P = Graphicahedron::build(g, detail::build_options(o, kBuildMaxPerms));
  clock.lap("build");
  const AutGroupSummary symmetry =
      summarize_automorphisms(P, o.max_flags ? o.max_flags : kDefaultAutMaxFlags, o.threads);
  clock.lap("symmetry");

  report::Json doc = {{"graph", report::graph_json(g)}};
  doc.update(report::structure_json(P, flag_count(P)));
  doc["symmetry"] = report::symmetry_json(symmetry);
  if (P.rank() >= 1) {
    doc["facet_census"] = report::census_json(P, facet_census(P, o.threads));
  } else {
    doc["facet_census"] = nullptr;
  }
  clock.lap("census");
  detail::emit(out, o, doc, clock);
  return kOk;
}

inline int cmd_export(const Options& o, std::ostream& out) {
  if (o.format != "dot" && o.format != "json") fail(ErrorKind::invalid_argument, "--format must be dot or json");
  const SimpleGraph g = detail::load_graph(o);
  if (o.what == "cayley") {
    const CayleyGraph c = build_cayley(g, o.max_perms ? o.max_perms : kDefaultCayleyMaxVertices);
    if (o.format == "dot") {
      out << export_dot(c);
    } else {
      std::vector<std::uint64_t> nodes(c.vertex_count());
      for (std::uint64_t v = 0; v < nodes.size(); ++v) nodes[v] = v;
      out << report::vertex_graph_json(c.degree(), c.generator_count(), nodes, c.edges()).dump(2) << "\n";
    }
    return kOk;
  }
  const std::string prefix = "skeleton:";
  if (o.what.rfind(prefix, 0) != 0) fail(ErrorKind::invalid_argument, "--what must be cayley or skeleton:k");
  const auto k = graphicahedron::detail::parse_integer(std::string_view(o.what).substr(prefix.size()));
  if (!k || *k < 0 || *k > 64) fail(ErrorKind::invalid_argument, "bad skeleton rank in --what " + o.what);

  const Graphicahedron P = Graphicahedron::build(g, detail::build_options(o, kBuildMaxPerms));
  const Skeleton s = skeleton(P, static_cast<int>(*k));
  if (o.format == "json") {
    out << report::skeleton_json(P, s).dump(2) << "\n";
  } else if (s.k <= 1) {
    out << vertex_graph_dot("skeleton", P.degree(), s.vertices, s.vertex_edges);
  } else {
    out << report::skeleton_hasse_dot(P, s);
  }
  return kOk;
}

/// Runs one invocation; args exclude the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graphicahedra of connected graphs: build, verify, analyze, export"};
  app.name("graphicahedron");
  app.require_subcommand(1, 1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--file", o.file, "edge-list file ('-' for stdin)");
    sub->add_option("--edges", o.edges, "inline edges, e.g. \"1-2,2-3\"");
    sub->add_option("--preset", o.preset, "path:n | cycle:n | star:n | paw | fork");
    sub->add_option("--max-perms", o.max_perms, "limit on p!");
    sub->add_option("--threads", o.threads, "worker threads (0 = all)");
  };
  auto add_report = [&](CLI::App* sub) {
    sub->add_flag("--timings", o.timings, "include stage timings");
    sub->add_flag("--human", o.human, "plain-text output (coloured unless NO_COLOR is set)");
  };

  CLI::App* build = app.add_subcommand("build", "face counts and flag count");
  add_common(build);
  add_report(build);

  CLI::App* verify = app.add_subcommand("verify", "check the polytope axioms");
  add_common(verify);
  add_report(verify);
  verify->add_option("--max-flags", o.max_flags, "limit on the flag graph size");
  verify->add_option("--inject-fault", o.inject_fault)
      ->check(CLI::IsMember({"remove-face", "remove-flag-edge"}))
      ->group("");

  CLI::App* analyze = app.add_subcommand("analyze", "automorphism group and facet census");
  add_common(analyze);
  add_report(analyze);
  analyze->add_option("--max-flags", o.max_flags, "limit on flags for the automorphism search");

  CLI::App* exp = app.add_subcommand("export", "Cayley graph or skeleton as DOT or JSON");
  add_common(exp);
  exp->add_option("--what", o.what, "cayley | skeleton:k");
  exp->add_option("--format", o.format, "dot | json")->check(CLI::IsMember({"dot", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*build) return cmd_build(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*analyze) return cmd_analyze(o, out);
    return cmd_export(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace graphicahedron::cli
