#pragma once

// JSON sections of the CLI report. Key order is fixed (ordered_json) so the
// same input always produces the same bytes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphicahedron/cayley.hpp"
#include "graphicahedron/classify.hpp"
#include "graphicahedron/polytope.hpp"
#include "graphicahedron/poset.hpp"
#include "graphicahedron/symmetry.hpp"

namespace graphicahedron::report {

using Json = nlohmann::ordered_json;

inline const char* verdict(bool pass) { return pass ? "pass" : "fail"; }

inline Json graph_json(const SimpleGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u + 1, e.v + 1});
  return {{"p", g.vertex_count()}, {"q", g.edge_count()}, {"edges", edges}};
}

inline Json face_json(const Face& f) {
  Json edges = Json::array();
  for (std::size_t e : f.edges.members()) edges.push_back(e + 1);
  return {{"rank", f.rank()}, {"edges", edges}, {"rep", f.rep.images_one_based()}};
}

/// Face reference used inside witnesses: the id in the face order, or
/// "least" for the implicit rank -1 face.
inline Json poset_face_json(const Graphicahedron& P, RankedPoset::Id id) {
  if (static_cast<std::size_t>(id) >= P.face_count()) return "least";
  Json out = face_json(P.face(static_cast<FaceId>(id)));
  out["id"] = id;
  return out;
}

inline Json structure_json(const Graphicahedron& P, std::uint64_t flags) {
  const int q = P.rank();
  return {{"f_vector", P.f_vector().counts},
          {"flag_count", flags},
          {"improper_faces",
           {{"least", {{"rank", -1}, {"in_f_vector", false}}}, {"greatest", {{"rank", q}, {"in_f_vector", true}}}}}};
}

inline Json diamond_json(const Graphicahedron& P, const DiamondReport& r) {
  Json out = {{"verdict", verdict(r.pass)}, {"pairs_checked", r.pairs_checked}};
  if (r.violation) {
    out["witness"] = {{"lower", poset_face_json(P, r.violation->lower)},
                      {"upper", poset_face_json(P, r.violation->upper)},
                      {"faces_between", r.violation->between}};
  }
  return out;
}

inline Json flag_connectivity_json(const FlagGraph& flags, const FlagConnectivityReport& r) {
  Json out = {{"verdict", verdict(r.pass)}, {"flags", r.flags}, {"rank_sets_checked", r.rank_sets_checked}};
  if (r.violation) {
    auto chain = [&](std::size_t f) {
      Json faces = Json::array();
      for (int j = 0; j < flags.rank(); ++j) faces.push_back(flags.face(f, j));
      return faces;
    };
    out["witness"] = {{"fixed_ranks", r.violation->fixed_ranks},
                      {"flag_a", chain(r.violation->flag_a)},
                      {"flag_b", chain(r.violation->flag_b)}};
  }
  return out;
}

inline Json simple_json(bool pass, std::size_t checked, std::optional<FaceId> failed, const Graphicahedron& P) {
  Json out = {{"verdict", verdict(pass)}, {"vertices_checked", checked}};
  if (failed) out["witness"] = poset_face_json(P, static_cast<RankedPoset::Id>(*failed));
  return out;
}

inline Json symmetry_json(const AutGroupSummary& s) {
  return {{"constructed_order", s.constructed_order},
          {"theorem_excluded", s.theorem_excluded},
          {"sp_order", s.sp_order},
          {"graph_part_order", s.graph_part_order},
          {"flag_aut_order", s.order ? Json(*s.order) : Json(nullptr)},
          {"regular", s.regular},
          {"regular_method", s.regular_from_flags ? "flags" : "closed_form"},
          {"vertex_transitive", s.vertex_transitive}};
}

inline Json certificate_json(const Certificate& c) {
  Json gonality = Json::array();
  for (auto [sides, count] : c.gonality) gonality.push_back({{"vertices", sides}, {"count", count}});
  return {{"f_vector", c.f_vector}, {"gonality", gonality}, {"euler", c.euler ? Json(*c.euler) : Json(nullptr)}};
}

inline Json census_json(const Graphicahedron& P, const FacetCensus& c) {
  Json entries = Json::array();
  for (const CensusEntry& e : c.entries) {
    Json entry = {{"type", e.type.name()}, {"count", e.count}, {"sample_facet_id", e.sample},
                  {"sample_facet", face_json(P.face(e.sample))}};
    if (e.type.certificate) entry["certificate"] = certificate_json(*e.type.certificate);
    entries.push_back(entry);
  }
  return {{"total", c.total}, {"cross_checked", c.cross_checked}, {"entries", entries}};
}

// ---------------------------------------------------------------------------
// Exports

inline Json vertex_graph_json(std::size_t p, std::size_t q, const std::vector<std::uint64_t>& nodes,
                              const std::vector<ColoredEdge>& edges) {
  Json node_list = Json::array();
  for (std::uint64_t v : nodes) {
    node_list.push_back({{"id", v}, {"perm", Permutation::from_lex_rank(p, v).images_one_based()}});
  }
  Json edge_list = Json::array();
  for (const ColoredEdge& e : edges) {
    edge_list.push_back({{"a", e.a}, {"b", e.b}, {"generator", e.color + 1}, {"color", edge_color(e.color)}});
  }
  return {{"p", p}, {"generators", q}, {"nodes", node_list}, {"edges", edge_list}};
}

inline Json skeleton_json(const Graphicahedron& P, const Skeleton& s) {
  Json faces = Json::array();
  for (FaceId id : s.faces) {
    Json f = face_json(P.face(id));
    f["id"] = id;
    faces.push_back(f);
  }
  Json covers = Json::array();
  for (auto [lo, hi] : s.covers) covers.push_back({lo, hi});
  Json out = {{"k", s.k}, {"faces", faces}, {"covers", covers}};
  out["vertex_graph"] = vertex_graph_json(P.degree(), P.graph().edge_count(), s.vertices, s.vertex_edges);
  return out;
}

/// Hasse diagram of a skeleton, bottom to top.
inline std::string skeleton_hasse_dot(const Graphicahedron& P, const Skeleton& s) {
  std::string out = "digraph skeleton {\n  rankdir=BT;\n  node [shape=box];\n";
  for (FaceId id : s.faces) {
    out += "  f" + std::to_string(id) + " [label=\"" + describe(P.face(id)) + "\"];\n";
  }
  for (auto [lo, hi] : s.covers) out += "  f" + std::to_string(lo) + " -> f" + std::to_string(hi) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace graphicahedron::report
