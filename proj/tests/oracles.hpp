#pragma once

// Brute-force reference implementations used only by the tests. None of
// them calls the library's coset, component or isomorphism code.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "graphicahedron/graph.hpp"
#include "graphicahedron/permutation.hpp"
#include "graphicahedron/poset.hpp"

namespace oracle {

using graphicahedron::Permutation;
using graphicahedron::RankedPoset;
using graphicahedron::SimpleGraph;

using Images = std::vector<int>;  // zero-based image sequence
using EdgeList = std::vector<std::pair<int, int>>;

inline std::vector<Images> symmetric_group(int p) {
  Images a(static_cast<std::size_t>(p));
  std::iota(a.begin(), a.end(), 0);
  std::vector<Images> out;
  do out.push_back(a);
  while (std::next_permutation(a.begin(), a.end()));
  return out;
}

inline Images compose(const Images& a, const Images& b) {
  Images out(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) out[x] = a[static_cast<std::size_t>(b[x])];
  return out;
}

inline Images images(const Permutation& p) { return p.images(); }

/// Block label per vertex from the edges in `mask`, by repeated relaxation.
inline std::vector<int> component_labels(int p, const EdgeList& edges, std::uint64_t mask) {
  std::vector<int> label(static_cast<std::size_t>(p));
  std::iota(label.begin(), label.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (!((mask >> e) & 1U)) continue;
      auto& a = label[static_cast<std::size_t>(edges[e].first)];
      auto& b = label[static_cast<std::size_t>(edges[e].second)];
      if (a != b) {
        a = b = std::min(a, b);
        changed = true;
      }
    }
  }
  return label;
}

inline EdgeList edge_list(const SimpleGraph& g) {
  EdgeList out;
  for (const auto& e : g.edges()) out.emplace_back(static_cast<int>(e.u), static_cast<int>(e.v));
  return out;
}

/// T_K: permutations fixing every block setwise, found by filtering S_p.
inline std::vector<Images> young_subgroup(const std::vector<int>& labels) {
  std::vector<Images> out;
  for (const Images& t : symmetric_group(static_cast<int>(labels.size()))) {
    bool keeps = true;
    for (std::size_t x = 0; x < t.size(); ++x) keeps = keeps && labels[static_cast<std::size_t>(t[x])] == labels[x];
    if (keeps) out.push_back(t);
  }
  return out;
}

/// The right coset T a, as a sorted set.
inline std::set<Images> coset(const std::vector<Images>& subgroup, const Images& a) {
  std::set<Images> out;
  for (const Images& t : subgroup) out.insert(compose(t, a));
  return out;
}

/// Number of distinct right cosets T_K a over all a, for every K, by listing them.
inline std::vector<std::uint64_t> f_vector(const SimpleGraph& g) {
  const int p = static_cast<int>(g.vertex_count());
  const EdgeList edges = edge_list(g);
  const auto group = symmetric_group(p);
  std::vector<std::uint64_t> counts(edges.size() + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    const auto subgroup = young_subgroup(component_labels(p, edges, mask));
    std::set<std::set<Images>> cosets;
    for (const Images& a : group) cosets.insert(coset(subgroup, a));
    counts[static_cast<std::size_t>(std::popcount(mask))] += cosets.size();
  }
  return counts;
}

// ---------------------------------------------------------------------------
// Graph enumeration

/// Smallest sorted edge list over all relabellings.
inline EdgeList canonical_form(int p, const EdgeList& edges) {
  EdgeList best;
  bool first = true;
  for (const Images& s : symmetric_group(p)) {
    EdgeList mapped;
    for (auto [a, b] : edges) {
      int x = s[static_cast<std::size_t>(a)], y = s[static_cast<std::size_t>(b)];
      mapped.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(mapped.begin(), mapped.end());
    if (first || mapped < best) best = mapped;
    first = false;
  }
  return best;
}

/// Connected graphs with 1..max_q edges and no isolated vertices, one per
/// isomorphism class, as (p, edges) with zero-based labels.
inline std::vector<std::pair<int, EdgeList>> connected_graphs(int max_q) {
  std::set<std::pair<int, EdgeList>> seen;
  std::vector<std::pair<int, EdgeList>> out;
  for (int p = 2; p <= max_q + 1; ++p) {
    EdgeList all;
    for (int a = 0; a < p; ++a) {
      for (int b = a + 1; b < p; ++b) all.emplace_back(a, b);
    }
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << all.size()); ++mask) {
      if (std::popcount(mask) > max_q) continue;
      EdgeList edges;
      for (std::size_t e = 0; e < all.size(); ++e) {
        if ((mask >> e) & 1U) edges.push_back(all[e]);
      }
      const auto labels = component_labels(p, edges, (std::uint64_t{1} << edges.size()) - 1);
      if (std::any_of(labels.begin(), labels.end(), [](int l) { return l != 0; })) continue;
      auto key = std::make_pair(p, canonical_form(p, edges));
      if (seen.insert(key).second) out.push_back(key);
    }
  }
  return out;
}

inline bool same_graph(const SimpleGraph& g, int p, const EdgeList& canonical) {
  return static_cast<int>(g.vertex_count()) == p && canonical_form(p, edge_list(g)) == canonical;
}

// ---------------------------------------------------------------------------
// Toroidal maps {6,3}_(b,c)

/// The hexagonal map on the torus C / L, where L is spanned by b + c w and
/// w (b + c w) in the Eisenstein integers (w = e^{i pi / 3}, w^2 = w - 1).
/// Built as the dual of the triangulated torus: vertices are triangles,
/// edges are lattice edges, hexagons are lattice points.
inline RankedPoset toroidal_map_63(int b, int c) {
  const int n = b * b + b * c + c * c;
  auto in_lattice = [&](int x, int y) {
    const int s = x * (b + c) + y * c;
    const int t = y * b - x * c;
    return s % n == 0 && t % n == 0;
  };
  std::vector<std::pair<int, int>> reps;
  for (int x = 0; x < n && static_cast<int>(reps.size()) < n; ++x) {
    for (int y = 0; y < n && static_cast<int>(reps.size()) < n; ++y) {
      bool fresh = true;
      for (auto [rx, ry] : reps) fresh = fresh && !in_lattice(x - rx, y - ry);
      if (fresh) reps.emplace_back(x, y);
    }
  }
  auto cls = [&](int x, int y) {
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (in_lattice(x - reps[i].first, y - reps[i].second)) return static_cast<int>(i);
    }
    return -1;
  };
  const std::pair<int, int> dir[3] = {{1, 0}, {0, 1}, {-1, 1}};  // 1, w, w - 1

  RankedPoset poset(3);
  std::vector<RankedPoset::Id> triangle(2 * static_cast<std::size_t>(n)), edge(3 * static_cast<std::size_t>(n)),
      point(static_cast<std::size_t>(n));
  for (auto& t : triangle) t = poset.add(0);
  for (auto& e : edge) e = poset.add(1);
  for (auto& v : point) v = poset.add(2);
  const auto greatest = poset.add(3);
  const auto least = poset.add(-1);
  auto edge_id = [&](int x, int y, int d) { return edge[static_cast<std::size_t>(3 * cls(x, y) + d)]; };

  for (int i = 0; i < n; ++i) {
    const auto [x, y] = reps[static_cast<std::size_t>(i)];
    const auto up = triangle[2 * static_cast<std::size_t>(i)];
    const auto down = triangle[2 * static_cast<std::size_t>(i) + 1];
    poset.add_cover(least, up);
    poset.add_cover(least, down);
    for (auto e : {edge_id(x, y, 0), edge_id(x, y, 1), edge_id(x + 1, y, 2)}) poset.add_cover(up, e);
    for (auto e : {edge_id(x + 1, y, 2), edge_id(x + 1, y, 1), edge_id(x, y + 1, 0)}) poset.add_cover(down, e);
    for (int d = 0; d < 3; ++d) {
      const auto e = edge[static_cast<std::size_t>(3 * i + d)];
      poset.add_cover(e, point[static_cast<std::size_t>(i)]);
      poset.add_cover(e, point[static_cast<std::size_t>(cls(x + dir[d].first, y + dir[d].second))]);
    }
    poset.add_cover(point[static_cast<std::size_t>(i)], greatest);
  }
  poset.finalize();
  return poset;
}

// ---------------------------------------------------------------------------
// Products

/// Face lattice of the product P x Q of two polytopes: proper faces are pairs
/// of nonempty faces (ranks add), plus a new least face.
inline RankedPoset product(const RankedPoset& a, const RankedPoset& b) {
  RankedPoset out(a.rank() + b.rank());
  std::map<std::pair<int, int>, RankedPoset::Id> id;
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < b.size(); ++y) {
      if (a.rank_of(static_cast<int>(x)) < 0 || b.rank_of(static_cast<int>(y)) < 0) continue;
      id[{static_cast<int>(x), static_cast<int>(y)}] =
          out.add(a.rank_of(static_cast<int>(x)) + b.rank_of(static_cast<int>(y)));
    }
  }
  const auto least = out.add(-1);
  for (auto [key, i] : id) {
    const auto [x, y] = key;
    if (a.rank_of(x) == 0 && b.rank_of(y) == 0) out.add_cover(least, i);
    for (int x2 : a.up(x)) out.add_cover(i, id.at({x2, y}));
    for (int y2 : b.up(y)) out.add_cover(i, id.at({x, y2}));
  }
  out.finalize();
  return out;
}

}  // namespace oracle
