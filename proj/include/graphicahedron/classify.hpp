#pragma once

/**
 * @file classify.hpp
 * @brief Face types: squares and hexagons, named facets, and facet censuses.
 *
 * Two classifiers run side by side. classify_by_construction reads the type
 * off the components of the spanning subgraph K; classify_intrinsic_rank3
 * looks only at the section below a rank-3 face. The census demands that
 * they agree.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "graphicahedron/error.hpp"
#include "graphicahedron/graph.hpp"
#include "graphicahedron/permutation.hpp"
#include "graphicahedron/polytope.hpp"
#include "graphicahedron/poset.hpp"

namespace graphicahedron {

/// Everything needed to tell an unrecognized face type from another.
struct Certificate {
  std::vector<std::uint64_t> f_vector;               // ranks 0 .. rank-1 of the section
  std::map<std::uint64_t, std::uint64_t> gonality;   // vertices per 2-face -> number of such 2-faces
  std::optional<std::int64_t> euler;                 // v - e + f2, rank 3 only

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct FaceType {
  enum class Kind {
    point,
    segment,
    square,
    hexagon,
    permutahedron,
    toroid_63_11,
    toroid_63_22,
    hexagonal_prism,
    cube,
    product,
    unrecognized,
  };

  Kind kind = Kind::unrecognized;
  int n = 0;                       // permutahedron(n), cube(n)
  std::vector<FaceType> factors;   // product
  std::optional<Certificate> certificate;

  static FaceType of(Kind k, int n = 0) {
    FaceType t;
    t.kind = k;
    t.n = n;
    return t;
  }

  std::string name() const {
    switch (kind) {
      case Kind::point: return "point";
      case Kind::segment: return "segment";
      case Kind::square: return "square";
      case Kind::hexagon: return "hexagon";
      case Kind::permutahedron: return "permutahedron(" + std::to_string(n) + ")";
      case Kind::toroid_63_11: return "toroid_63_11";
      case Kind::toroid_63_22: return "toroid_63_22";
      case Kind::hexagonal_prism: return "hexagonal_prism";
      case Kind::cube: return "cube(" + std::to_string(n) + ")";
      case Kind::product: {
        std::string out = "product(";
        for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "," : "") + factors[i].name();
        return out + ")";
      }
      case Kind::unrecognized: return "unrecognized";
    }
    return "unrecognized";
  }

  friend bool operator==(const FaceType& a, const FaceType& b) {
    return a.name() == b.name() && (a.kind != Kind::unrecognized || a.certificate == b.certificate);
  }
};

// ---------------------------------------------------------------------------
// 2-faces

/// Hexagon when the two edges share a vertex, square when they are disjoint.
/// Cross-checked against the number of vertices below the face.
inline FaceType classify_2face(const Graphicahedron& P, const Face& f) {
  if (f.rank() != 2) fail(ErrorKind::invalid_argument, "classify_2face needs a rank-2 face");
  const auto edges = f.edges.members();
  const Edge& a = P.graph().edge(edges[0]);
  const Edge& b = P.graph().edge(edges[1]);
  const bool share = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;

  std::size_t below = 0;
  for (const Face& v : P.faces_of_rank(0)) below += is_incident(P, v, f) ? 1 : 0;
  if (below != (share ? 6U : 4U)) {
    fail(ErrorKind::internal_inconsistency,
         "2-face " + describe(f) + " has " + std::to_string(below) + " vertices");
  }
  return FaceType::of(share ? FaceType::Kind::hexagon : FaceType::Kind::square);
}

// ---------------------------------------------------------------------------
// By construction

/// Section certificate computed from coset sizes alone: below (K, a) there
/// are |T_K| / |T_L| faces over each L inside K.
inline Certificate construction_certificate(const SimpleGraph& g, EdgeSubset k) {
  const std::uint64_t top = coset_size(components(g, k));
  Certificate c;
  c.f_vector.assign(k.size(), 0);
  const auto members = k.members();
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << members.size()); ++sub) {
    EdgeSubset l;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if ((sub >> i) & 1U) l = l.with(members[i]);
    }
    if (l == k) continue;
    const std::uint64_t cosets = top / coset_size(components(g, l));
    c.f_vector[l.size()] += cosets;
    if (l.size() == 2) c.gonality[coset_size(components(g, l))] += cosets;
  }
  if (k.size() == 3) {
    c.euler = static_cast<std::int64_t>(c.f_vector[0]) - static_cast<std::int64_t>(c.f_vector[1]) +
              static_cast<std::int64_t>(c.f_vector[2]);
  }
  return c;
}

namespace detail {

inline FaceType component_type(const SimpleGraph& component) {
  const std::size_t q = component.edge_count();
  if (are_isomorphic(component, preset_graph("path", q))) {
    if (q == 1) return FaceType::of(FaceType::Kind::segment);
    if (q == 2) return FaceType::of(FaceType::Kind::hexagon);
    return FaceType::of(FaceType::Kind::permutahedron, static_cast<int>(q));
  }
  if (q == 3 && are_isomorphic(component, preset_graph("cycle", 3))) return FaceType::of(FaceType::Kind::toroid_63_11);
  if (q == 3 && are_isomorphic(component, preset_graph("star", 3))) return FaceType::of(FaceType::Kind::toroid_63_22);
  return FaceType::of(FaceType::Kind::unrecognized);
}

}  // namespace detail

/// Type of the faces over K, read off the nontrivial components of K.
inline FaceType classify_by_construction(const SimpleGraph& g, EdgeSubset k) {
  using Kind = FaceType::Kind;
  const VertexPartition part = components(g, k);
  std::vector<FaceType> factors;
  for (const auto& block : part.blocks()) {
    if (block.size() < 2) continue;
    factors.push_back(detail::component_type(component_subgraph(g, k, block)));
  }
  auto unrecognized = [&] {
    FaceType t = FaceType::of(Kind::unrecognized);
    t.certificate = construction_certificate(g, k);
    return t;
  };
  if (factors.empty()) return FaceType::of(Kind::point);
  for (const FaceType& f : factors) {
    if (f.kind == Kind::unrecognized) return unrecognized();
  }
  if (factors.size() == 1) return factors.front();

  std::sort(factors.begin(), factors.end(), [](const FaceType& a, const FaceType& b) { return a.name() < b.name(); });
  const auto segments = static_cast<int>(
      std::count_if(factors.begin(), factors.end(), [](const FaceType& f) { return f.kind == Kind::segment; }));
  if (segments == static_cast<int>(factors.size())) {
    return segments == 2 ? FaceType::of(Kind::square) : FaceType::of(Kind::cube, segments);
  }
  if (factors.size() == 2 && segments == 1 &&
      std::any_of(factors.begin(), factors.end(), [](const FaceType& f) { return f.kind == Kind::hexagon; })) {
    return FaceType::of(Kind::hexagonal_prism);
  }
  FaceType t = FaceType::of(Kind::product);
  t.factors = std::move(factors);
  return t;
}

// ---------------------------------------------------------------------------
// Reference polytopes

/// Faces are ordered set partitions of {1..n+1}, stored as block-index words;
/// a cover merges two consecutive blocks. Rank = n + 1 - (number of blocks).
/// Includes the least face (rank -1) and the single-block greatest face.
inline RankedPoset permutahedron_oracle(int n) {
  if (n < 0 || n > 5) fail(ErrorKind::capacity, "permutahedron oracle is limited to n <= 5");
  const std::size_t m = static_cast<std::size_t>(n) + 1;
  RankedPoset poset(n);
  std::map<std::vector<int>, RankedPoset::Id> index;
  std::vector<std::vector<int>> words;

  for (std::size_t blocks = 1; blocks <= m; ++blocks) {
    std::vector<int> word(m, 0);
    while (true) {
      std::vector<bool> hit(blocks, false);
      for (int b : word) hit[static_cast<std::size_t>(b)] = true;
      if (std::all_of(hit.begin(), hit.end(), [](bool h) { return h; })) {
        index.emplace(word, poset.add(static_cast<int>(m - blocks)));
        words.push_back(word);
      }
      std::size_t i = 0;
      while (i < m && word[i] == static_cast<int>(blocks) - 1) word[i++] = 0;
      if (i == m) break;
      ++word[i];
    }
  }
  const RankedPoset::Id least = poset.add(-1);
  for (std::size_t id = 0; id < words.size(); ++id) {
    const auto& word = words[id];
    const int blocks = *std::max_element(word.begin(), word.end()) + 1;
    if (blocks == static_cast<int>(m)) poset.add_cover(least, static_cast<RankedPoset::Id>(id));
    for (int j = 0; j + 1 < blocks; ++j) {
      std::vector<int> merged = word;
      for (int& b : merged) {
        if (b > j) --b;
      }
      poset.add_cover(static_cast<RankedPoset::Id>(id), index.at(merged));
    }
  }
  poset.finalize();
  return poset;
}

/// Freshly built graphicahedra of C_3 and K_{1,3}, the anchors for naming
/// the two toroids.
class ReferencePolytopes {
 public:
  ReferencePolytopes()
      : c3_(hasse_poset(Graphicahedron::build(preset_graph("cycle", 3)))),
        k13_(hasse_poset(Graphicahedron::build(preset_graph("star", 3)))),
        c3_flags_(build_flag_graph(c3_)),
        k13_flags_(build_flag_graph(k13_)) {}

  bool is_toroid_11(const RankedPoset& section) const { return matches(section, c3_, c3_flags_); }
  bool is_toroid_22(const RankedPoset& section) const { return matches(section, k13_, k13_flags_); }

 private:
  static bool matches(const RankedPoset& section, const RankedPoset& ref, const FlagGraph& ref_flags) {
    if (section.rank_counts() != ref.rank_counts()) return false;
    return find_isomorphism(section, build_flag_graph(section), ref, ref_flags).has_value();
  }

  RankedPoset c3_;
  RankedPoset k13_;
  FlagGraph c3_flags_;
  FlagGraph k13_flags_;
};

// ---------------------------------------------------------------------------
// Intrinsic rank 3

/// Certificate of a rank-3 section (re-ranked so its greatest face has rank 3).
inline Certificate section_certificate(const RankedPoset& section) {
  Certificate c;
  auto counts = section.rank_counts();
  counts.pop_back();
  c.f_vector = counts;
  for (RankedPoset::Id x : section.elements_of_rank(2)) {
    std::vector<RankedPoset::Id> vertices;
    for (RankedPoset::Id y : section.down(x)) {
      for (RankedPoset::Id z : section.down(y)) vertices.push_back(z);
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    ++c.gonality[vertices.size()];
  }
  if (section.rank() == 3) {
    c.euler = static_cast<std::int64_t>(c.f_vector[0]) - static_cast<std::int64_t>(c.f_vector[1]) +
              static_cast<std::int64_t>(c.f_vector[2]);
  }
  return c;
}

/// Names a rank-3 section from its own structure only.
inline FaceType classify_section_rank3(const RankedPoset& section, const ReferencePolytopes& refs) {
  using Kind = FaceType::Kind;
  const Certificate c = section_certificate(section);
  const std::vector<std::uint64_t>& f = c.f_vector;
  const bool all_hexagons = c.gonality.size() == 1 && c.gonality.begin()->first == 6;
  const bool all_squares = c.gonality.size() == 1 && c.gonality.begin()->first == 4;
  const std::map<std::uint64_t, std::uint64_t> perm3{{4, 6}, {6, 8}}, prism{{4, 6}, {6, 2}};

  if (c.euler == 2 && f == std::vector<std::uint64_t>{24, 36, 14} && c.gonality == perm3) {
    return FaceType::of(Kind::permutahedron, 3);
  }
  if (c.euler == 2 && f == std::vector<std::uint64_t>{12, 18, 8} && c.gonality == prism) {
    return FaceType::of(Kind::hexagonal_prism);
  }
  if (c.euler == 2 && f == std::vector<std::uint64_t>{8, 12, 6} && all_squares) return FaceType::of(Kind::cube, 3);
  if (c.euler == 0 && all_hexagons && f[0] == 6 && refs.is_toroid_11(section)) {
    return FaceType::of(Kind::toroid_63_11);
  }
  if (c.euler == 0 && all_hexagons && f[0] == 24 && refs.is_toroid_22(section)) {
    return FaceType::of(Kind::toroid_63_22);
  }
  FaceType t = FaceType::of(Kind::unrecognized);
  t.certificate = c;
  return t;
}

inline FaceType classify_intrinsic_rank3(const Graphicahedron& P, const RankedPoset& hasse, FaceId f,
                                         const ReferencePolytopes& refs) {
  if (P.face(f).rank() != 3) fail(ErrorKind::invalid_argument, "intrinsic classification needs a rank-3 face");
  const auto section = hasse.interval(hasse.least(), static_cast<RankedPoset::Id>(f));
  return classify_section_rank3(section.poset, refs);
}

inline FaceType classify_intrinsic_rank3(const Graphicahedron& P, FaceId f) {
  return classify_intrinsic_rank3(P, hasse_poset(P), f, ReferencePolytopes());
}

// ---------------------------------------------------------------------------
// Census

struct CensusEntry {
  FaceType type;
  std::uint64_t count = 0;
  FaceId sample = 0;  // lowest facet id of this type
};

struct FacetCensus {
  std::vector<CensusEntry> entries;  // in order of first occurrence
  std::uint64_t total = 0;
  bool cross_checked = false;        // intrinsic classifier ran (facets of rank 3)

  std::optional<std::uint64_t> count_of(const std::string& name) const {
    for (const auto& e : entries) {
      if (e.type.name() == name) return e.count;
    }
    return std::nullopt;
  }
};

/// Classifies every facet by construction; for rank-3 facets the intrinsic
/// classifier must agree, or an internal-inconsistency error names the facet.
inline FacetCensus facet_census(const Graphicahedron& P, unsigned threads = 1) {
  if (P.rank() < 1) fail(ErrorKind::invalid_argument, "facet census needs q >= 1");
  const int facet_rank = P.rank() - 1;
  const auto facets = P.faces_of_rank(facet_rank);
  const FaceId first = P.first_of_rank(facet_rank);

  std::unordered_map<std::uint64_t, FaceType> by_mask;
  for (const Face& f : facets) {
    if (!by_mask.count(f.edges.mask())) by_mask.emplace(f.edges.mask(), classify_by_construction(P.graph(), f.edges));
  }

  FacetCensus census;
  if (facet_rank == 3) {
    const RankedPoset hasse = hasse_poset(P);
    const ReferencePolytopes refs;
    std::vector<std::optional<FaceType>> intrinsic(facets.size());
    detail::parallel_for(facets.size(), threads, [&](std::size_t i) {
      intrinsic[i] = classify_intrinsic_rank3(P, hasse, first + i, refs);
    });
    for (std::size_t i = 0; i < facets.size(); ++i) {
      FaceType expected = by_mask.at(facets[i].edges.mask());
      if (expected.kind == FaceType::Kind::unrecognized) {
        // the intrinsic side cannot know where the facet came from; compare certificates only
        if (intrinsic[i]->kind != FaceType::Kind::unrecognized || intrinsic[i]->certificate != expected.certificate) {
          fail(ErrorKind::internal_inconsistency, "classifiers disagree on facet " + describe(facets[i]));
        }
      } else if (!(*intrinsic[i] == expected)) {
        fail(ErrorKind::internal_inconsistency, "classifiers disagree on facet " + describe(facets[i]) + ": " +
                                                    expected.name() + " by construction, " + intrinsic[i]->name() +
                                                    " intrinsically");
      }
    }
    census.cross_checked = true;
  }

  for (std::size_t i = 0; i < facets.size(); ++i) {
    const FaceType& t = by_mask.at(facets[i].edges.mask());
    auto it = std::find_if(census.entries.begin(), census.entries.end(),
                           [&](const CensusEntry& e) { return e.type == t; });
    if (it == census.entries.end()) {
      census.entries.push_back({t, 1, first + i});
    } else {
      ++it->count;
    }
    ++census.total;
  }
  return census;
}

}  // namespace graphicahedron
