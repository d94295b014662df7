#pragma once

/**
 * @file polytope.hpp
 * @brief The graphicahedron of a connected graph G as a ranked face poset.
 *
 * A face is a pair (K, T_K alpha) with K a subset of E(G); its rank is |K|.
 * Faces are stored once per coset, keyed by (K, lexicographically least
 * coset member), so equivalence of pairs is plain key equality. The face
 * (K, a) lies below (L, b) iff K is a subset of L and T_L a = T_L b.
 *
 * Face ids are dense: ordered by rank, then by edge mask, then by
 * representative. The least face (rank -1) is never stored; it appears only
 * in the Hasse poset, where it takes id face_count().
 */

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "graphicahedron/cayley.hpp"
#include "graphicahedron/coset.hpp"
#include "graphicahedron/detail/parallel.hpp"
#include "graphicahedron/error.hpp"
#include "graphicahedron/graph.hpp"
#include "graphicahedron/permutation.hpp"
#include "graphicahedron/poset.hpp"

namespace graphicahedron {

struct Face {
  EdgeSubset edges;
  Permutation rep;  // canonical representative of T_K alpha

  int rank() const noexcept { return static_cast<int>(edges.size()); }

  friend bool operator==(const Face&, const Face&) = default;
};

using FaceId = std::size_t;

struct FVector {
  std::vector<std::uint64_t> counts;  // f_0 .. f_q

  friend bool operator==(const FVector&, const FVector&) = default;
};

struct BuildOptions {
  std::uint64_t max_perms = 5040;     // p! bound (7! by default)
  std::uint64_t max_faces = 1000000;  // total proper faces
  unsigned threads = 1;               // 0 = hardware concurrency
};

inline constexpr std::size_t kMaxBuildDegree = 12;
inline constexpr std::size_t kMaxBuildEdges = 24;

class Graphicahedron {
 public:
  static Graphicahedron build(const SimpleGraph& g, const BuildOptions& options = {});

  const SimpleGraph& graph() const noexcept { return graph_; }
  std::size_t degree() const noexcept { return graph_.vertex_count(); }
  int rank() const noexcept { return static_cast<int>(graph_.edge_count()); }

  const std::vector<Face>& faces() const noexcept { return faces_; }
  std::size_t face_count() const noexcept { return faces_.size(); }
  const Face& face(FaceId id) const { return faces_.at(id); }

  std::span<const Face> faces_of_rank(int i) const {
    return std::span<const Face>(faces_).subspan(rank_begin_.at(i), rank_begin_.at(i + 1) - rank_begin_.at(i));
  }
  FaceId first_of_rank(int i) const { return rank_begin_.at(i); }
  FaceId greatest() const noexcept { return faces_.size() - 1; }

  /// Components of the spanning subgraph with edge set K (cached for every K).
  const VertexPartition& partition(EdgeSubset k) const { return partitions_.at(k.mask()); }

  /// The face (K, T_K member).
  FaceId find(EdgeSubset k, const Permutation& member) const {
    const Permutation rep = canonical_rep(partition(k), member);
    return index_.at(key(k, rep));
  }

  std::optional<FaceId> id_of(const Face& f) const {
    if (f.edges.mask() >= partitions_.size() || f.rep.degree() != degree()) return std::nullopt;
    auto it = index_.find(key(f.edges, f.rep));
    if (it == index_.end() || faces_[it->second] != f) return std::nullopt;
    return it->second;
  }

  FVector f_vector() const {
    FVector out;
    for (int i = 0; i <= rank(); ++i) out.counts.push_back(faces_of_rank(i).size());
    return out;
  }

 private:
  std::uint64_t key(EdgeSubset k, const Permutation& rep) const { return k.mask() * perm_count_ + rep.lex_rank(); }

  SimpleGraph graph_;
  std::uint64_t perm_count_ = 0;
  std::vector<VertexPartition> partitions_;
  std::vector<Face> faces_;
  std::vector<FaceId> rank_begin_;
  std::unordered_map<std::uint64_t, FaceId> index_;
};

inline Graphicahedron Graphicahedron::build(const SimpleGraph& g, const BuildOptions& options) {
  const std::size_t p = g.vertex_count();
  const std::size_t q = g.edge_count();
  if (!is_connected(g)) {
    fail(ErrorKind::disconnected, "the graphicahedron is defined for connected graphs only");
  }
  if (p > kMaxBuildDegree || factorial(p) > options.max_perms) {
    fail(ErrorKind::capacity, "p! = " + (p <= 20 ? std::to_string(factorial(p)) : std::string("huge")) +
                                  " exceeds the limit of " + std::to_string(options.max_perms));
  }
  if (q > kMaxBuildEdges || (std::uint64_t{1} << q) > options.max_faces) {
    fail(ErrorKind::capacity, "2^" + std::to_string(q) + " edge subsets exceed the face limit of " +
                                  std::to_string(options.max_faces));
  }

  Graphicahedron P;
  P.graph_ = g;
  P.perm_count_ = factorial(p);
  const std::size_t subsets = std::size_t{1} << q;
  P.partitions_.resize(subsets);
  std::uint64_t total = 0;
  for (std::size_t m = 0; m < subsets; ++m) {
    P.partitions_[m] = components(g, EdgeSubset(m));
    total += P.perm_count_ / coset_size(P.partitions_[m]);
  }
  if (total > options.max_faces) {
    fail(ErrorKind::capacity, std::to_string(total) + " faces exceed the limit of " + std::to_string(options.max_faces));
  }

  std::vector<std::vector<Permutation>> reps(subsets);
  detail::parallel_for(subsets, options.threads,
                       [&](std::size_t m) { reps[m] = coset_representatives(P.partitions_[m]); });

  std::vector<std::size_t> order(subsets);
  for (std::size_t m = 0; m < subsets; ++m) order[m] = m;
  std::stable_sort(order.begin(), order.end(),
                   [](std::size_t a, std::size_t b) { return std::popcount(a) < std::popcount(b); });

  P.faces_.reserve(total);
  P.rank_begin_.assign(q + 2, 0);
  for (std::size_t m : order) {
    for (const Permutation& rep : reps[m]) {
      const FaceId id = P.faces_.size();
      P.faces_.push_back({EdgeSubset(m), rep});
      P.index_.emplace(P.key(EdgeSubset(m), rep), id);
    }
    P.rank_begin_[static_cast<std::size_t>(std::popcount(m)) + 1] = P.faces_.size();
  }
  for (std::size_t i = 1; i < P.rank_begin_.size(); ++i) {
    P.rank_begin_[i] = std::max(P.rank_begin_[i], P.rank_begin_[i - 1]);
  }
  return P;
}

/// Closed form: sum over |K| = i of p! / |T_K|. Needs no face enumeration.
inline std::uint64_t face_count(const SimpleGraph& g, int i) {
  const std::size_t q = g.edge_count();
  if (i < 0 || static_cast<std::size_t>(i) > q) fail(ErrorKind::invalid_argument, "rank out of range");
  if (q > kMaxBuildEdges) fail(ErrorKind::capacity, "too many edges to enumerate subsets");
  const std::uint64_t perms = factorial(g.vertex_count());
  std::uint64_t total = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << q); ++m) {
    if (std::popcount(m) == i) total += perms / coset_size(components(g, EdgeSubset(m)));
  }
  return total;
}

/// (K1, a) <= (K2, b): K1 inside K2 and a in T_{K2} b.
inline bool is_incident(const Graphicahedron& P, const Face& lower, const Face& upper) {
  return lower.edges.is_subset_of(upper.edges) && same_coset(P.partition(upper.edges), lower.rep, upper.rep);
}

inline bool is_incident(const Graphicahedron& P, FaceId lower, FaceId upper) {
  return is_incident(P, P.face(lower), P.face(upper));
}

/// Hasse diagram with face ids as element ids; the least face is id face_count().
inline RankedPoset hasse_poset(const Graphicahedron& P) {
  RankedPoset poset(P.rank());
  for (const Face& f : P.faces()) poset.add(f.rank());
  const auto least = poset.add(-1);
  for (FaceId id = 0; id < P.face_count(); ++id) {
    const Face& f = P.face(id);
    if (f.rank() == 0) poset.add_cover(least, static_cast<RankedPoset::Id>(id));
    for (std::size_t e = 0; e < P.graph().edge_count(); ++e) {
      if (f.edges.contains(e)) continue;
      poset.add_cover(static_cast<RankedPoset::Id>(id),
                      static_cast<RankedPoset::Id>(P.find(f.edges.with(e), f.rep)));
    }
  }
  poset.finalize();
  return poset;
}

// ---------------------------------------------------------------------------
// Flags

/// A flag as an edge ordering (f_1, ..., f_q) plus a base permutation alpha:
/// its faces are ({f_1..f_i}, alpha) for i = 0..q.
struct Flag {
  Permutation edge_order;  // edge_order(i) = f_{i+1}
  Permutation base;

  friend bool operator==(const Flag&, const Flag&) = default;
};

/// Faces of the flag at ranks 0..q.
inline std::vector<FaceId> flag_faces(const Graphicahedron& P, const Flag& flag) {
  std::vector<FaceId> out;
  EdgeSubset k;
  out.push_back(P.find(k, flag.base));
  for (int i = 0; i < P.rank(); ++i) {
    k = k.with(flag.edge_order(static_cast<std::size_t>(i)));
    out.push_back(P.find(k, flag.base));
  }
  return out;
}

/// Counts maximal chains in the Hasse diagram; equals p! q!.
inline std::uint64_t flag_count(const Graphicahedron& P) { return hasse_poset(P).count_flags(); }

/// All p! q! flags, lexicographic on the base, then on the edge ordering.
template <class Fn>
void for_each_flag(const Graphicahedron& P, Fn&& fn) {
  const std::size_t q = P.graph().edge_count();
  for_each_permutation(P.degree(), [&](const Permutation& base) {
    for_each_permutation(q, [&](const Permutation& order) { fn(Flag{order, base}); });
  });
}

inline std::vector<Flag> flags(const Graphicahedron& P, std::uint64_t max_flags = kDefaultMaxFlags) {
  const std::uint64_t total = factorial(P.degree()) * factorial(P.graph().edge_count());
  if (total > max_flags) {
    fail(ErrorKind::capacity, std::to_string(total) + " flags exceed the limit of " + std::to_string(max_flags));
  }
  std::vector<Flag> out;
  out.reserve(total);
  for_each_flag(P, [&](Flag f) { out.push_back(std::move(f)); });
  return out;
}

/// The unique flag differing from `flag` only in its j-face.
inline Flag adjacent_flag(const Graphicahedron& P, const Flag& flag, int j) {
  if (j < 0 || j >= P.rank()) fail(ErrorKind::invalid_argument, "adjacency rank out of range");
  Flag out = flag;
  if (j == 0) {
    out.base = compose(P.graph().transposition(flag.edge_order(0)), flag.base);
  } else {
    std::vector<int> order = flag.edge_order.images();
    std::swap(order[static_cast<std::size_t>(j) - 1], order[static_cast<std::size_t>(j)]);
    out.edge_order = Permutation::from_images(order);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Axiom verifiers

inline DiamondReport verify_diamond(const Graphicahedron& P) { return verify_diamond(hasse_poset(P)); }

inline FlagConnectivityReport verify_strong_flag_connectedness(const Graphicahedron& P,
                                                               std::size_t max_flags = kDefaultMaxFlags) {
  return verify_strong_flag_connectedness(build_flag_graph(hasse_poset(P), max_flags));
}

/// Faces above vertex v form a Boolean lattice on the q edges: exactly one
/// face per edge subset, ordered by inclusion. Checked against the order
/// definition over all faces.
inline bool vertex_figure_is_simplex(const Graphicahedron& P, FaceId v) {
  const Face& vertex = P.face(v);
  if (vertex.rank() != 0) fail(ErrorKind::invalid_argument, "vertex figure needs a rank-0 face");
  const std::size_t subsets = std::size_t{1} << P.graph().edge_count();
  std::vector<FaceId> above(subsets, P.face_count());
  for (FaceId id = 0; id < P.face_count(); ++id) {
    if (!is_incident(P, vertex, P.face(id))) continue;
    const std::uint64_t m = P.face(id).edges.mask();
    if (above[m] != P.face_count()) return false;  // two faces over one subset
    above[m] = id;
  }
  for (std::size_t m = 0; m < subsets; ++m) {
    if (above[m] == P.face_count()) return false;
  }
  for (std::size_t a = 0; a < subsets; ++a) {
    for (std::size_t b = 0; b < subsets; ++b) {
      const bool subset = (a & ~b) == 0;
      if (is_incident(P, above[a], above[b]) != subset) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Skeleta

struct Skeleton {
  int k = 0;
  std::vector<FaceId> faces;                       // rank <= k, in id order
  std::vector<std::pair<FaceId, FaceId>> covers;   // (lower, upper), both of rank <= k
  std::vector<std::uint64_t> vertices;             // lex ranks of vertex representatives
  std::vector<ColoredEdge> vertex_edges;           // k >= 1: the vertex-edge graph
};

inline Skeleton skeleton(const Graphicahedron& P, int k) {
  if (k < 0 || k > std::max(0, P.rank() - 1)) fail(ErrorKind::invalid_argument, "skeleton rank out of range");
  const RankedPoset poset = hasse_poset(P);
  Skeleton s;
  s.k = k;
  for (FaceId id = 0; id < P.face_count(); ++id) {
    if (P.face(id).rank() > k) continue;
    s.faces.push_back(id);
    for (auto upper : poset.up(static_cast<RankedPoset::Id>(id))) {
      if (P.face(static_cast<FaceId>(upper)).rank() <= k) s.covers.emplace_back(id, static_cast<FaceId>(upper));
    }
    if (P.face(id).rank() == 0) s.vertices.push_back(P.face(id).rep.lex_rank());
  }
  std::sort(s.vertices.begin(), s.vertices.end());
  if (k >= 1) {
    for (FaceId id : s.faces) {
      const Face& f = P.face(id);
      if (f.rank() != 1) continue;
      const auto& below = poset.down(static_cast<RankedPoset::Id>(id));
      if (below.size() != 2) fail(ErrorKind::internal_inconsistency, "edge face without two vertices");
      std::uint64_t a = P.face(static_cast<FaceId>(below[0])).rep.lex_rank();
      std::uint64_t b = P.face(static_cast<FaceId>(below[1])).rep.lex_rank();
      if (a > b) std::swap(a, b);
      s.vertex_edges.push_back({a, b, f.edges.members().front()});
    }
    std::sort(s.vertex_edges.begin(), s.vertex_edges.end());
  }
  return s;
}

/// The map (empty, alpha) -> alpha carries the 1-skeleton onto the Cayley
/// graph, colour for colour.
inline bool one_skeleton_equals_cayley(const Graphicahedron& P, const CayleyGraph& c) {
  if (c.degree() != P.degree() || c.generator_count() != P.graph().edge_count()) return false;
  if (P.rank() == 0) return c.vertex_count() == 1 && c.edges().empty();
  if (P.rank() == 1) {
    // the only edge is the segment itself, which is not a proper face
    const ColoredEdge e{P.face(0).rep.lex_rank(), P.face(1).rep.lex_rank(), 0};
    return c.vertex_count() == 2 && e.a == 0 && e.b == 1 && c.edges() == std::vector<ColoredEdge>{e};
  }
  const Skeleton s = skeleton(P, 1);
  if (s.vertices.size() != c.vertex_count()) return false;
  for (std::uint64_t i = 0; i < s.vertices.size(); ++i) {
    if (s.vertices[i] != i) return false;
  }
  return s.vertex_edges == c.edges();
}

// ---------------------------------------------------------------------------
// Order versus coset inclusion

struct CosetOrderReport {
  bool holds = true;
  std::optional<std::pair<FaceId, FaceId>> witness;  // coset inclusion without incidence
};

/// T_K a inside T_L b  iff  T_K inside T_L (partition refinement) and a in T_L b.
inline bool coset_included(const Graphicahedron& P, const Face& lower, const Face& upper) {
  const VertexPartition& pl = P.partition(upper.edges);
  return P.partition(lower.edges).refines(pl) && same_coset(pl, lower.rep, upper.rep);
}

/// Compares the face order with inclusion of cosets on every ordered pair.
inline CosetOrderReport tree_order_equals_coset_inclusion(const Graphicahedron& P, std::size_t max_faces = 5000) {
  if (P.face_count() > max_faces) {
    fail(ErrorKind::capacity, "pairwise order comparison is limited to " + std::to_string(max_faces) + " faces");
  }
  CosetOrderReport report;
  for (FaceId a = 0; a < P.face_count(); ++a) {
    for (FaceId b = 0; b < P.face_count(); ++b) {
      if (coset_included(P, P.face(a), P.face(b)) != is_incident(P, a, b)) {
        report.holds = false;
        report.witness = std::make_pair(a, b);
        return report;
      }
    }
  }
  return report;
}

inline std::string describe(const Face& f) {
  return "(" + f.edges.to_string() + ", " + f.rep.to_string() + ")";
}

}  // namespace graphicahedron
