#pragma once

/**
 * @file cayley.hpp
 * @brief The Cayley colour graph of S_p generated by the edge transpositions
 * of a graph: alpha and tau_e alpha are joined by an edge of colour e.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "graphicahedron/error.hpp"
#include "graphicahedron/graph.hpp"
#include "graphicahedron/permutation.hpp"

namespace graphicahedron {

struct ColoredEdge {
  std::uint64_t a = 0;  // lex rank, a < b
  std::uint64_t b = 0;
  std::size_t color = 0;  // edge index of the generating transposition

  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
  friend auto operator<=>(const ColoredEdge&, const ColoredEdge&) = default;
};

/// Vertices are all of S_p, indexed by lexicographic rank.
class CayleyGraph {
 public:
  std::size_t degree() const noexcept { return p_; }
  std::size_t generator_count() const noexcept { return q_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  const std::vector<Permutation>& vertices() const noexcept { return vertices_; }
  const Permutation& vertex(std::uint64_t rank) const { return vertices_.at(rank); }

  /// Undirected edges sorted by (a, b, color).
  const std::vector<ColoredEdge>& edges() const noexcept { return edges_; }

  /// neighbor(v, e) = lex rank of tau_e * vertex(v).
  std::uint64_t neighbor(std::uint64_t v, std::size_t color) const { return neighbor_[v * q_ + color]; }

 private:
  friend CayleyGraph build_cayley(const SimpleGraph&, std::uint64_t);

  std::size_t p_ = 0;
  std::size_t q_ = 0;
  std::vector<Permutation> vertices_;
  std::vector<std::uint64_t> neighbor_;
  std::vector<ColoredEdge> edges_;
};

inline constexpr std::uint64_t kDefaultCayleyMaxVertices = 40320;  // 8!

inline CayleyGraph build_cayley(const SimpleGraph& g, std::uint64_t max_vertices = kDefaultCayleyMaxVertices) {
  if (g.vertex_count() > 20 || factorial(g.vertex_count()) > max_vertices) {
    fail(ErrorKind::capacity, "Cayley graph on " + std::to_string(g.vertex_count()) +
                                  "! vertices exceeds the limit of " + std::to_string(max_vertices));
  }
  CayleyGraph c;
  c.p_ = g.vertex_count();
  c.q_ = g.edge_count();
  c.vertices_ = all_permutations(c.p_);
  c.neighbor_.resize(c.vertices_.size() * c.q_);
  for (std::size_t e = 0; e < c.q_; ++e) {
    const Permutation tau = g.transposition(e);
    for (std::uint64_t v = 0; v < c.vertices_.size(); ++v) {
      const std::uint64_t w = compose(tau, c.vertices_[v]).lex_rank();
      c.neighbor_[v * c.q_ + e] = w;
      if (v < w) c.edges_.push_back({v, w, e});
    }
  }
  std::sort(c.edges_.begin(), c.edges_.end());
  return c;
}

/// The connected component of `a` in the Cayley graph restricted to colours in K,
/// i.e. the coset T_K a, found by breadth-first search. Sorted.
inline std::vector<Permutation> component_of(const SimpleGraph& g, EdgeSubset k, const Permutation& a) {
  if (a.degree() != g.vertex_count()) fail(ErrorKind::size_mismatch, "component_of: degree mismatch");
  std::vector<Permutation> generators;
  for (std::size_t e : k.members()) generators.push_back(g.transposition(e));
  std::unordered_set<Permutation> seen{a};
  std::deque<Permutation> queue{a};
  while (!queue.empty()) {
    const Permutation x = queue.front();
    queue.pop_front();
    for (const Permutation& tau : generators) {
      Permutation y = compose(tau, x);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

/// True when every vertex is reachable from the identity.
inline bool is_connected(const CayleyGraph& c) {
  if (c.vertex_count() == 0) return false;
  std::vector<bool> seen(c.vertex_count(), false);
  std::vector<std::uint64_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::uint64_t v = stack.back();
    stack.pop_back();
    for (std::size_t e = 0; e < c.generator_count(); ++e) {
      const std::uint64_t w = c.neighbor(v, e);
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == c.vertex_count();
}

inline constexpr std::array<const char*, 8> kEdgePalette = {
    "red", "blue", "forestgreen", "orange", "purple", "brown", "magenta", "cyan"};

inline const char* edge_color(std::size_t generator) { return kEdgePalette[generator % kEdgePalette.size()]; }

/// DOT text for a vertex graph on permutations. Node "v<rank>" carries the
/// one-line image sequence; edges carry the palette colour of their generator.
inline std::string vertex_graph_dot(const std::string& name, std::size_t p,
                                    const std::vector<std::uint64_t>& nodes,
                                    const std::vector<ColoredEdge>& edges) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  out << "  node [shape=circle];\n";
  for (std::uint64_t v : nodes) {
    out << "  v" << v << " [label=\"" << Permutation::from_lex_rank(p, v).to_string() << "\"];\n";
  }
  for (const ColoredEdge& e : edges) {
    out << "  v" << e.a << " -- v" << e.b << " [color=\"" << edge_color(e.color) << "\", label=\"e"
        << e.color + 1 << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

inline std::string export_dot(const CayleyGraph& c) {
  std::vector<std::uint64_t> nodes(c.vertex_count());
  for (std::uint64_t v = 0; v < nodes.size(); ++v) nodes[v] = v;
  return vertex_graph_dot("cayley", c.degree(), nodes, c.edges());
}

}  // namespace graphicahedron
