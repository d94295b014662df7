#pragma once

/**
 * @file graph.hpp
 * @brief Simple graphs, edge subsets, spanning-subgraph components and
 * brute-force graph automorphisms.
 *
 * Vertices and edges are zero-based internally; edge i is the i-th edge of
 * the input list. Text I/O uses 1-based vertex labels.
 */

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphicahedron/coset.hpp"
#include "graphicahedron/error.hpp"
#include "graphicahedron/permutation.hpp"

namespace graphicahedron {

/// A set of edge indices, stored as a bit mask (q <= 64).
class EdgeSubset {
 public:
  static constexpr std::size_t kMaxEdges = 64;

  constexpr EdgeSubset() = default;
  constexpr explicit EdgeSubset(std::uint64_t mask) : mask_(mask) {}

  static EdgeSubset full(std::size_t q) {
    if (q > kMaxEdges) fail(ErrorKind::capacity, "too many edges");
    return EdgeSubset(q == kMaxEdges ? ~std::uint64_t{0} : (std::uint64_t{1} << q) - 1);
  }

  static EdgeSubset of(std::initializer_list<std::size_t> edges) {
    EdgeSubset out;
    for (std::size_t e : edges) out = out.with(e);
    return out;
  }

  constexpr std::uint64_t mask() const noexcept { return mask_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }
  bool empty() const noexcept { return mask_ == 0; }
  bool contains(std::size_t e) const noexcept { return (mask_ >> e) & 1U; }
  EdgeSubset with(std::size_t e) const noexcept { return EdgeSubset(mask_ | (std::uint64_t{1} << e)); }
  EdgeSubset without(std::size_t e) const noexcept {
    return EdgeSubset(mask_ & ~(std::uint64_t{1} << e));
  }
  bool is_subset_of(EdgeSubset other) const noexcept { return (mask_ & ~other.mask_) == 0; }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
      out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    }
    return out;
  }

  /// "{1,3}" with 1-based edge indices.
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (std::size_t e : members()) {
      if (!first) out += ',';
      out += std::to_string(e + 1);
      first = false;
    }
    return out + "}";
  }

  friend constexpr bool operator==(EdgeSubset, EdgeSubset) = default;
  friend constexpr auto operator<=>(EdgeSubset, EdgeSubset) = default;

 private:
  std::uint64_t mask_ = 0;
};

struct Edge {
  std::size_t u = 0;  // u < v
  std::size_t v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class SimpleGraph {
 public:
  SimpleGraph() = default;

  /// Zero-based endpoints. Rejects loops, duplicates and out-of-range labels.
  SimpleGraph(std::size_t p, const std::vector<std::pair<std::size_t, std::size_t>>& edges) : p_(p) {
    if (p > Permutation::kMaxDegree) fail(ErrorKind::capacity, "too many vertices");
    if (edges.size() > EdgeSubset::kMaxEdges) fail(ErrorKind::capacity, "too many edges");
    for (auto [a, b] : edges) {
      if (a >= p || b >= p) fail(ErrorKind::invalid_argument, "edge endpoint out of range");
      if (a == b) {
        fail(ErrorKind::invalid_argument, "loop edge at vertex " + std::to_string(a + 1));
      }
      Edge e{std::min(a, b), std::max(a, b)};
      if (std::find(edges_.begin(), edges_.end(), e) != edges_.end()) {
        fail(ErrorKind::invalid_argument, "duplicate edge {" + std::to_string(e.u + 1) + "," +
                                              std::to_string(e.v + 1) + "}");
      }
      edges_.push_back(e);
    }
  }

  /// Same, with 1-based endpoints.
  static SimpleGraph from_one_based(std::size_t p,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::pair<std::size_t, std::size_t>> zero;
    for (auto [a, b] : edges) {
      if (a == 0 || b == 0) fail(ErrorKind::invalid_argument, "vertex labels start at 1");
      zero.emplace_back(a - 1, b - 1);
    }
    return SimpleGraph(p, zero);
  }

  std::size_t vertex_count() const noexcept { return p_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  std::optional<std::size_t> edge_index(std::size_t a, std::size_t b) const {
    const Edge e{std::min(a, b), std::max(a, b)};
    auto it = std::find(edges_.begin(), edges_.end(), e);
    if (it == edges_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  bool adjacent(std::size_t a, std::size_t b) const { return edge_index(a, b).has_value(); }

  std::size_t valency(std::size_t v) const {
    return static_cast<std::size_t>(std::count_if(
        edges_.begin(), edges_.end(), [v](const Edge& e) { return e.u == v || e.v == v; }));
  }

  EdgeSubset all_edges() const { return EdgeSubset::full(edges_.size()); }

  /// tau_e as a permutation of the vertices.
  Permutation transposition(std::size_t e) const {
    return Permutation::transposition(p_, edge(e).u, edge(e).v);
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::size_t p_ = 0;
  std::vector<Edge> edges_;
};

/// tau_e = (i j) on p points, for a 1-based edge {i, j}.
inline Permutation transposition_of_edge(std::size_t p, std::size_t i, std::size_t j) {
  if (i == j) fail(ErrorKind::invalid_argument, "loop edge has no transposition");
  if (i == 0 || j == 0 || i > p || j > p) {
    fail(ErrorKind::invalid_argument, "edge endpoint out of range");
  }
  return Permutation::transposition(p, i - 1, j - 1);
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

inline std::optional<long long> parse_integer(std::string_view token) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

inline std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] inline void parse_failure(std::size_t line, const std::string& why) {
  fail(ErrorKind::parse, "line " + std::to_string(line) + ": " + why);
}

}  // namespace detail

/// Edge-list text: optional "p <count>" header, then "i j" per line, '#' comments.
inline SimpleGraph parse_graph(std::string_view text) {
  std::optional<std::size_t> declared;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::size_t> edge_lines;
  std::size_t max_label = 0;
  std::size_t line_no = 0;
  bool seen_content = false;

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    for (char c : line) {
      if (static_cast<unsigned char>(c) > 0x7F) detail::parse_failure(line_no, "non-ASCII byte");
    }
    const auto tokens = detail::split_whitespace(line);
    if (tokens.empty()) continue;

    if (tokens[0] == "p") {
      if (seen_content) detail::parse_failure(line_no, "header must precede edges");
      if (tokens.size() != 2) detail::parse_failure(line_no, "expected 'p <count>'");
      auto n = detail::parse_integer(tokens[1]);
      if (!n || *n < 1) detail::parse_failure(line_no, "vertex count must be a positive integer");
      declared = static_cast<std::size_t>(*n);
      seen_content = true;
      continue;
    }
    seen_content = true;
    if (tokens.size() != 2) detail::parse_failure(line_no, "expected two vertex labels");
    auto a = detail::parse_integer(tokens[0]);
    auto b = detail::parse_integer(tokens[1]);
    if (!a || !b) detail::parse_failure(line_no, "vertex labels must be integers");
    if (*a < 1 || *b < 1) detail::parse_failure(line_no, "vertex labels must be positive");
    if (*a == *b) detail::parse_failure(line_no, "loop edge at vertex " + std::to_string(*a));
    if (*a > static_cast<long long>(Permutation::kMaxDegree) ||
        *b > static_cast<long long>(Permutation::kMaxDegree)) {
      detail::parse_failure(line_no, "vertex label exceeds " + std::to_string(Permutation::kMaxDegree));
    }
    const auto ua = static_cast<std::size_t>(*a);
    const auto ub = static_cast<std::size_t>(*b);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (std::minmax(ua, ub) == std::minmax(edges[i].first, edges[i].second)) {
        detail::parse_failure(line_no, "duplicate edge (first given on line " +
                                           std::to_string(edge_lines[i]) + ")");
      }
    }
    edges.emplace_back(ua, ub);
    edge_lines.push_back(line_no);
    max_label = std::max({max_label, ua, ub});
  }

  if (declared && *declared < max_label) {
    fail(ErrorKind::parse, "declared vertex count " + std::to_string(*declared) +
                               " is below label " + std::to_string(max_label));
  }
  const std::size_t p = declared.value_or(max_label);
  if (p == 0) fail(ErrorKind::parse, "graph has no vertices");
  if (edges.size() > EdgeSubset::kMaxEdges) fail(ErrorKind::capacity, "too many edges");
  return SimpleGraph::from_one_based(p, edges);
}

/// Inline form used on the command line: "1-2,2-3".
inline SimpleGraph parse_inline_edges(std::string_view spec) {
  std::string text;
  std::size_t item = 0;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t end = spec.find(',', start);
    if (end == std::string_view::npos) end = spec.size();
    std::string_view token = spec.substr(start, end - start);
    start = end + 1;
    ++item;
    const auto dash = token.find('-');
    if (dash == std::string_view::npos) {
      fail(ErrorKind::parse, "edge " + std::to_string(item) + ": expected 'i-j'");
    }
    text += std::string(token.substr(0, dash)) + " " + std::string(token.substr(dash + 1)) + "\n";
  }
  try {
    return parse_graph(text);
  } catch (const Error& e) {
    // one edge per line internally; report positions as edge numbers
    std::string what = e.what();
    if (what.rfind("line ", 0) == 0) what.replace(0, 5, "edge ");
    auto pos = what.find("first given on line ");
    if (pos != std::string::npos) what.replace(pos, 20, "first given as edge ");
    fail(e.kind(), what);
  }
}

// ---------------------------------------------------------------------------
// Presets

/// path n (P_n, n+1 vertices), cycle n, star n (K_{1,n}, center 1), paw, fork.
inline SimpleGraph preset_graph(std::string_view name, std::optional<std::size_t> n = std::nullopt) {
  using Edges = std::vector<std::pair<std::size_t, std::size_t>>;
  auto need = [&](std::size_t lo) {
    if (!n) fail(ErrorKind::invalid_argument, std::string(name) + " needs a size");
    if (*n < lo) {
      fail(ErrorKind::invalid_argument,
           std::string(name) + " size must be at least " + std::to_string(lo));
    }
    if (*n + 1 > Permutation::kMaxDegree) fail(ErrorKind::capacity, "preset too large");
    return *n;
  };
  auto none = [&] {
    if (n) fail(ErrorKind::invalid_argument, std::string(name) + " takes no size");
  };

  Edges edges;
  if (name == "path") {
    const std::size_t len = need(1);
    for (std::size_t i = 1; i <= len; ++i) edges.emplace_back(i, i + 1);
    return SimpleGraph::from_one_based(len + 1, edges);
  }
  if (name == "cycle") {
    const std::size_t len = need(3);
    for (std::size_t i = 1; i < len; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(1, len);
    return SimpleGraph::from_one_based(len, edges);
  }
  if (name == "star") {
    const std::size_t len = need(1);
    for (std::size_t i = 2; i <= len + 1; ++i) edges.emplace_back(1, i);
    return SimpleGraph::from_one_based(len + 1, edges);
  }
  if (name == "paw") {
    none();
    return SimpleGraph::from_one_based(4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}});
  }
  if (name == "fork") {
    none();
    return SimpleGraph::from_one_based(5, {{1, 2}, {2, 3}, {3, 4}, {3, 5}});
  }
  fail(ErrorKind::invalid_argument, "unknown preset '" + std::string(name) + "'");
}

/// "path:3", "cycle:4", "star:3", "paw", "fork".
inline SimpleGraph parse_preset(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) return preset_graph(spec);
  auto n = detail::parse_integer(spec.substr(colon + 1));
  if (!n || *n < 0) fail(ErrorKind::parse, "preset size must be a non-negative integer");
  return preset_graph(spec.substr(0, colon), static_cast<std::size_t>(*n));
}

// ---------------------------------------------------------------------------
// Connectivity

/// Components of the spanning subgraph with edge set K.
inline VertexPartition components(const SimpleGraph& g, EdgeSubset k) {
  if (g.edge_count() < EdgeSubset::kMaxEdges && (k.mask() >> g.edge_count()) != 0) {
    fail(ErrorKind::invalid_argument, "edge subset references a missing edge");
  }
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (std::size_t e : k.members()) {
    const int a = find(static_cast<int>(g.edge(e).u));
    const int b = find(static_cast<int>(g.edge(e).v));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> labels(g.vertex_count());
  for (std::size_t v = 0; v < labels.size(); ++v) labels[v] = find(static_cast<int>(v));
  return VertexPartition::from_labels(labels);
}

inline bool is_connected(const SimpleGraph& g) {
  return g.vertex_count() >= 1 && components(g, g.all_edges()).block_count() == 1;
}

// ---------------------------------------------------------------------------
// Automorphisms

struct GraphAutomorphism {
  Permutation vertex_map;
  Permutation edge_map;  // edge e -> edge_map(e), induced by vertex_map

  friend bool operator==(const GraphAutomorphism&, const GraphAutomorphism&) = default;
};

inline constexpr std::size_t kMaxAutomorphismVertices = 10;

/// Edge permutation induced by a vertex map; nullopt unless it preserves edges.
inline std::optional<Permutation> induced_edge_map(const SimpleGraph& g, const Permutation& vertex_map) {
  std::vector<int> images(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto image = g.edge_index(vertex_map(g.edge(e).u), vertex_map(g.edge(e).v));
    if (!image) return std::nullopt;
    images[e] = static_cast<int>(*image);
  }
  return Permutation::from_images(images);
}

namespace detail {

/// Backtracking search for adjacency-preserving bijections V(a) -> V(b).
/// Calls fn(vertex_map) for each; stops early when fn returns false.
template <class Fn>
void for_each_graph_isomorphism(const SimpleGraph& a, const SimpleGraph& b, Fn&& fn) {
  const std::size_t p = a.vertex_count();
  if (p != b.vertex_count() || a.edge_count() != b.edge_count()) return;
  std::vector<std::vector<bool>> adj_a(p, std::vector<bool>(p)), adj_b(p, std::vector<bool>(p));
  for (const Edge& e : a.edges()) adj_a[e.u][e.v] = adj_a[e.v][e.u] = true;
  for (const Edge& e : b.edges()) adj_b[e.u][e.v] = adj_b[e.v][e.u] = true;
  std::vector<std::size_t> deg_a(p), deg_b(p);
  for (std::size_t v = 0; v < p; ++v) {
    deg_a[v] = a.valency(v);
    deg_b[v] = b.valency(v);
  }

  std::vector<int> image(p, -1);
  std::vector<bool> used(p, false);
  bool stop = false;
  auto extend = [&](auto&& self, std::size_t v) -> void {
    if (stop) return;
    if (v == p) {
      if (!fn(Permutation::from_images(image))) stop = true;
      return;
    }
    for (std::size_t w = 0; w < p && !stop; ++w) {
      if (used[w] || deg_a[v] != deg_b[w]) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) {
        ok = adj_a[u][v] == adj_b[static_cast<std::size_t>(image[u])][w];
      }
      if (!ok) continue;
      image[v] = static_cast<int>(w);
      used[w] = true;
      self(self, v + 1);
      used[w] = false;
    }
    image[v] = -1;
  };
  extend(extend, 0);
}

}  // namespace detail

/// All graph automorphisms with their induced edge permutations, sorted by
/// vertex map (identity first). Brute force with prefix pruning; p <= 10.
inline std::vector<GraphAutomorphism> automorphisms(const SimpleGraph& g) {
  if (g.vertex_count() > kMaxAutomorphismVertices) {
    fail(ErrorKind::capacity, "automorphism search is limited to " +
                                  std::to_string(kMaxAutomorphismVertices) + " vertices");
  }
  std::vector<GraphAutomorphism> out;
  detail::for_each_graph_isomorphism(g, g, [&](const Permutation& vm) {
    out.push_back({vm, *induced_edge_map(g, vm)});
    return true;
  });
  std::sort(out.begin(), out.end(),
            [](const GraphAutomorphism& x, const GraphAutomorphism& y) { return x.vertex_map < y.vertex_map; });
  return out;
}

inline bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.vertex_count() > kMaxAutomorphismVertices) {
    fail(ErrorKind::capacity, "isomorphism search is limited to " +
                                  std::to_string(kMaxAutomorphismVertices) + " vertices");
  }
  bool found = false;
  detail::for_each_graph_isomorphism(a, b, [&](const Permutation&) {
    found = true;
    return false;
  });
  return found;
}

/// The subgraph formed by the edges of K inside one block of its components,
/// relabelled onto 0..|block|-1 with edges in increasing index order.
inline SimpleGraph component_subgraph(const SimpleGraph& g, EdgeSubset k, const std::vector<int>& block) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  auto local = [&](std::size_t v) {
    return static_cast<std::size_t>(std::find(block.begin(), block.end(), static_cast<int>(v)) - block.begin());
  };
  for (std::size_t e : k.members()) {
    const Edge& ed = g.edge(e);
    if (std::find(block.begin(), block.end(), static_cast<int>(ed.u)) != block.end()) {
      edges.emplace_back(local(ed.u), local(ed.v));
    }
  }
  return SimpleGraph(block.size(), edges);
}

inline std::string describe(const SimpleGraph& g) {
  std::ostringstream out;
  out << "p=" << g.vertex_count() << " q=" << g.edge_count() << " edges:";
  for (const Edge& e : g.edges()) out << " {" << e.u + 1 << "," << e.v + 1 << "}";
  return out.str();
}

}  // namespace graphicahedron
