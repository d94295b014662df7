#pragma once

/**
 * @file symmetry.hpp
 * @brief The two automorphism actions on faces, and the full automorphism
 * group computed independently on the flag graph.
 *
 * S_p acts by right multiplication, (K, a) -> (K, a g). A graph automorphism
 * k acts by (K, a) -> (k(K), k a k^-1). Left multiplication does not respect
 * incidence, so it is deliberately absent.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphicahedron/detail/parallel.hpp"
#include "graphicahedron/error.hpp"
#include "graphicahedron/graph.hpp"
#include "graphicahedron/permutation.hpp"
#include "graphicahedron/polytope.hpp"
#include "graphicahedron/poset.hpp"

namespace graphicahedron {

inline Face apply_right(const Graphicahedron& P, const Permutation& gamma, const Face& f) {
  if (gamma.degree() != P.degree()) fail(ErrorKind::size_mismatch, "apply_right: degree mismatch");
  return {f.edges, canonical_rep(P.partition(f.edges), compose(f.rep, gamma))};
}

inline Face apply_graph_aut(const Graphicahedron& P, const GraphAutomorphism& kappa, const Face& f) {
  EdgeSubset image;
  for (std::size_t e : f.edges.members()) image = image.with(kappa.edge_map(e));
  return {image, canonical_rep(P.partition(image), conjugate(f.rep, kappa.vertex_map))};
}

/// The element g.k of S_p x| Aut(G): apply k, then right-multiply by g.
struct PolytopeAutomorphism {
  Permutation gamma;
  GraphAutomorphism kappa;

  Face operator()(const Graphicahedron& P, const Face& f) const {
    return apply_right(P, gamma, apply_graph_aut(P, kappa, f));
  }
};

/// Images of every face id under a face map.
template <class Map>
std::vector<FaceId> face_permutation(const Graphicahedron& P, Map&& map) {
  std::vector<FaceId> out(P.face_count());
  for (FaceId id = 0; id < P.face_count(); ++id) {
    const auto image = P.id_of(map(P.face(id)));
    if (!image) fail(ErrorKind::internal_inconsistency, "face map left the polytope");
    out[id] = *image;
  }
  return out;
}

struct ConstructedOrder {
  std::uint64_t order = 0;
  bool theorem_excluded = false;  // q = 1: the segment, whose group has order 2
};

/// p! |Aut(G)|, the order of S_p x| Aut(G).
inline ConstructedOrder constructed_group_order(const SimpleGraph& g) {
  if (g.edge_count() == 1) return {2, true};
  return {factorial(g.vertex_count()) * automorphisms(g).size(), false};
}

inline constexpr std::size_t kDefaultAutMaxFlags = 5000;

/// Automorphisms act freely on flags, so the group order is the number of
/// flags that a fixed base flag extends to.
inline std::uint64_t full_aut_order_via_flags(const Graphicahedron& P, std::size_t max_flags = kDefaultAutMaxFlags,
                                              unsigned threads = 1) {
  return count_flag_automorphisms(build_flag_graph(hasse_poset(P), max_flags), threads);
}

/// C_3, or a star K_{1,q} (q >= 0).
inline bool is_triangle_or_star(const SimpleGraph& g) {
  const std::size_t p = g.vertex_count();
  if (p == 3 && g.edge_count() == 3) return true;
  if (g.edge_count() + 1 != p) return false;
  for (std::size_t v = 0; v < p; ++v) {
    if (g.valency(v) + 1 == p) return true;
  }
  return p == 1;
}

/// Regularity from a known automorphism order, cross-checked against the
/// closed form; a disagreement is an internal inconsistency.
inline bool regular_from_order(const Graphicahedron& P, std::uint64_t aut_order) {
  const bool by_flags = aut_order == flag_count(P);
  if (by_flags != is_triangle_or_star(P.graph())) {
    fail(ErrorKind::internal_inconsistency, "flag-graph regularity disagrees with the triangle-or-star criterion for " +
                                                describe(P.graph()));
  }
  return by_flags;
}

/// Aut order equals flag count.
inline bool is_regular(const Graphicahedron& P, std::size_t max_flags = kDefaultAutMaxFlags, unsigned threads = 1) {
  return regular_from_order(P, full_aut_order_via_flags(P, max_flags, threads));
}

/// Above this degree only transporters from the identity vertex are
/// counted; for a group action that already settles transitivity.
inline constexpr std::size_t kAllPairsTransitivityDegree = 6;

/// For each source vertex v (every vertex up to degree 6, else the identity
/// vertex only), g -> v g must hit every vertex exactly once.
inline bool is_vertex_transitive(const Graphicahedron& P, unsigned threads = 1) {
  const auto vertices = P.faces_of_rank(0);
  const std::size_t sources = P.degree() <= kAllPairsTransitivityDegree ? vertices.size() : 1;
  const auto group = all_permutations(P.degree());
  std::vector<char> ok(sources, 0);
  detail::parallel_for(sources, threads, [&](std::size_t s) {
    std::vector<std::uint32_t> hits(vertices.size(), 0);
    for (const Permutation& gamma : group) {
      const auto id = P.id_of(apply_right(P, gamma, vertices[s]));
      if (!id || *id >= vertices.size()) return;
      ++hits[*id];
    }
    ok[s] = std::all_of(hits.begin(), hits.end(), [](std::uint32_t h) { return h == 1; }) ? 1 : 0;
  });
  return std::all_of(ok.begin(), ok.end(), [](char c) { return c == 1; });
}

struct AutGroupSummary {
  std::optional<std::uint64_t> order;  // from the flag graph; empty when over the flag limit
  std::uint64_t constructed_order = 0;
  bool theorem_excluded = false;
  std::uint64_t sp_order = 0;
  std::uint64_t graph_part_order = 0;
  bool regular = false;
  bool regular_from_flags = false;  // false: decided by the closed form alone
  bool vertex_transitive = false;
};

inline AutGroupSummary summarize_automorphisms(const Graphicahedron& P, std::size_t max_flags = kDefaultAutMaxFlags,
                                               unsigned threads = 1) {
  AutGroupSummary s;
  const auto constructed = constructed_group_order(P.graph());
  s.constructed_order = constructed.order;
  s.theorem_excluded = constructed.theorem_excluded;
  s.sp_order = factorial(P.degree());
  s.graph_part_order = automorphisms(P.graph()).size();
  const std::uint64_t flags = factorial(P.degree()) * factorial(P.graph().edge_count());
  if (flags <= max_flags) {
    s.order = full_aut_order_via_flags(P, max_flags, threads);
    s.regular = regular_from_order(P, *s.order);
    s.regular_from_flags = true;
  } else {
    s.regular = is_triangle_or_star(P.graph());
  }
  s.vertex_transitive = is_vertex_transitive(P, threads);
  return s;
}

}  // namespace graphicahedron
