#pragma once

/**
 * @file poset.hpp
 * @brief Ranked posets given by their Hasse diagram, and the flag machinery
 * built on them: flag graphs, the diamond condition, strong
 * flag-connectedness, and flag-graph isomorphism / automorphism search.
 *
 * Nothing here knows about graphs or permutations. The graphicahedron, the
 * ordered-set-partition permutahedron and the intervals used by the facet
 * classifier are all fed through the same code.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphicahedron/detail/parallel.hpp"
#include "graphicahedron/error.hpp"

namespace graphicahedron {

class RankedPoset {
 public:
  using Id = int;

  RankedPoset() = default;
  explicit RankedPoset(int top_rank) : top_rank_(top_rank) {}

  Id add(int rank) {
    if (rank < -1 || rank > top_rank_) fail(ErrorKind::invalid_argument, "rank out of range");
    rank_.push_back(rank);
    present_.push_back(true);
    up_.emplace_back();
    down_.emplace_back();
    return static_cast<Id>(rank_.size() - 1);
  }

  void add_cover(Id lower, Id upper) {
    if (rank_of(upper) != rank_of(lower) + 1) {
      fail(ErrorKind::invalid_argument, "cover relation must raise rank by one");
    }
    up_[lower].push_back(upper);
    down_[upper].push_back(lower);
  }

  /// Sort cover lists; call once after construction for deterministic traversal.
  void finalize() {
    for (auto& v : up_) std::sort(v.begin(), v.end());
    for (auto& v : down_) std::sort(v.begin(), v.end());
  }

  /// Deletes an element together with its cover relations (used to build
  /// corrupted fixtures for the verifiers). Ids of other elements are kept.
  void remove(Id x) {
    for (Id y : up_[x]) std::erase(down_[y], x);
    for (Id y : down_[x]) std::erase(up_[y], x);
    up_[x].clear();
    down_[x].clear();
    present_[x] = false;
  }

  int rank() const noexcept { return top_rank_; }
  std::size_t size() const noexcept { return rank_.size(); }
  int rank_of(Id x) const { return rank_.at(static_cast<std::size_t>(x)); }
  bool present(Id x) const { return present_.at(static_cast<std::size_t>(x)); }
  const std::vector<Id>& up(Id x) const { return up_.at(static_cast<std::size_t>(x)); }
  const std::vector<Id>& down(Id x) const { return down_.at(static_cast<std::size_t>(x)); }

  std::vector<Id> elements_of_rank(int r) const {
    std::vector<Id> out;
    for (std::size_t x = 0; x < rank_.size(); ++x) {
      if (present_[x] && rank_[x] == r) out.push_back(static_cast<Id>(x));
    }
    return out;
  }

  Id least() const { return unique_of_rank(-1); }
  Id greatest() const { return unique_of_rank(top_rank_); }

  bool is_cover(Id lower, Id upper) const {
    const auto& u = up(lower);
    return std::binary_search(u.begin(), u.end(), upper) || std::find(u.begin(), u.end(), upper) != u.end();
  }

  /// x <= y, by walking up the Hasse diagram.
  bool less_equal(Id x, Id y) const {
    if (x == y) return true;
    if (rank_of(x) >= rank_of(y)) return false;
    std::vector<bool> seen(size(), false);
    std::vector<Id> stack{x};
    while (!stack.empty()) {
      const Id z = stack.back();
      stack.pop_back();
      for (Id w : up(z)) {
        if (w == y) return true;
        if (!seen[w] && rank_of(w) < rank_of(y)) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    return false;
  }

  /// Face counts for ranks 0..n.
  std::vector<std::uint64_t> rank_counts() const {
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(top_rank_ + 1), 0);
    for (std::size_t x = 0; x < rank_.size(); ++x) {
      if (present_[x] && rank_[x] >= 0) ++counts[static_cast<std::size_t>(rank_[x])];
    }
    return counts;
  }

  /// Number of maximal chains from the least to the greatest element.
  std::uint64_t count_flags() const {
    std::vector<std::uint64_t> ways(size(), 0);
    ways[least()] = 1;
    for (int r = 0; r <= top_rank_; ++r) {
      for (Id x : elements_of_rank(r)) {
        for (Id y : down(x)) ways[x] += ways[y];
      }
    }
    return ways[greatest()];
  }

  struct Interval;

  /// The closed interval [lo, hi], re-ranked so that lo has rank -1.
  Interval interval(Id lo, Id hi) const;

 private:
  Id unique_of_rank(int r) const {
    Id found = -1;
    for (std::size_t x = 0; x < rank_.size(); ++x) {
      if (present_[x] && rank_[x] == r) {
        if (found != -1) fail(ErrorKind::invalid_argument, "rank " + std::to_string(r) + " is not a singleton");
        found = static_cast<Id>(x);
      }
    }
    if (found == -1) fail(ErrorKind::invalid_argument, "rank " + std::to_string(r) + " is empty");
    return found;
  }

  int top_rank_ = 0;
  std::vector<int> rank_;
  std::vector<bool> present_;
  std::vector<std::vector<Id>> up_;
  std::vector<std::vector<Id>> down_;
};

struct RankedPoset::Interval {
  RankedPoset poset;
  std::vector<Id> original;  // new id -> id in the source poset
};

inline RankedPoset::Interval RankedPoset::interval(Id lo, Id hi) const {
  auto closure = [&](Id start, bool upward) {
    std::vector<bool> mark(size(), false);
    std::vector<Id> stack{start};
    mark[start] = true;
    while (!stack.empty()) {
      const Id z = stack.back();
      stack.pop_back();
      for (Id w : upward ? up(z) : down(z)) {
        if (!mark[w]) {
          mark[w] = true;
          stack.push_back(w);
        }
      }
    }
    return mark;
  };
  const auto above = closure(lo, true);
  const auto below = closure(hi, false);
  const int shift = rank_of(lo) + 1;

  Interval out{RankedPoset(rank_of(hi) - shift), {}};
  std::vector<Id> renumber(size(), -1);
  for (std::size_t x = 0; x < size(); ++x) {
    if (present_[x] && above[x] && below[x]) {
      renumber[x] = out.poset.add(rank_[x] - shift);
      out.original.push_back(static_cast<Id>(x));
    }
  }
  for (Id x : out.original) {
    for (Id y : up(x)) {
      if (renumber[y] != -1) out.poset.add_cover(renumber[x], renumber[y]);
    }
  }
  out.poset.finalize();
  return out;
}

// ---------------------------------------------------------------------------
// Flags

/// Flags are maximal chains, stored by their proper faces at ranks 0..n-1.
/// neighbor(f, j) is the j-adjacent flag, or -1 when the diamond condition
/// fails at that spot.
class FlagGraph {
 public:
  int rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return count_; }
  /// One past the largest face id that can appear in a flag.
  std::size_t face_bound() const noexcept { return face_bound_; }
  int face(std::size_t f, int j) const { return faces_[f * stride() + static_cast<std::size_t>(j)]; }
  int neighbor(std::size_t f, int j) const { return adjacent_[f * stride() + static_cast<std::size_t>(j)]; }

  /// Drops one j-adjacency (both directions); test fixture for the verifiers.
  void remove_adjacency(std::size_t f, int j) {
    const int g = neighbor(f, j);
    adjacent_[f * stride() + static_cast<std::size_t>(j)] = -1;
    if (g >= 0) adjacent_[static_cast<std::size_t>(g) * stride() + static_cast<std::size_t>(j)] = -1;
  }

  /// Drops every adjacency of colour j.
  void remove_color(int j) {
    for (std::size_t f = 0; f < count_; ++f) adjacent_[f * stride() + static_cast<std::size_t>(j)] = -1;
  }

  std::optional<std::size_t> find(const std::vector<int>& chain) const {
    auto it = index_.find(chain);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  friend FlagGraph build_flag_graph(const RankedPoset&, std::size_t);

  std::size_t stride() const noexcept { return static_cast<std::size_t>(rank_); }

  int rank_ = 0;
  std::size_t count_ = 0;
  std::size_t face_bound_ = 0;
  std::vector<int> faces_;
  std::vector<int> adjacent_;
  std::map<std::vector<int>, std::size_t> index_;
};

inline constexpr std::size_t kDefaultMaxFlags = 50000;

/// Enumerates maximal chains depth-first (lowest ids first) and links j-adjacent flags.
inline FlagGraph build_flag_graph(const RankedPoset& poset, std::size_t max_flags = kDefaultMaxFlags) {
  FlagGraph g;
  g.rank_ = poset.rank();
  g.face_bound_ = poset.size();
  const int n = poset.rank();
  const RankedPoset::Id least = poset.least();
  const RankedPoset::Id greatest = poset.greatest();

  std::vector<int> chain;
  auto descend = [&](auto&& self, RankedPoset::Id x) -> void {
    if (poset.rank_of(x) == n - 1) {
      if (!poset.is_cover(x, greatest)) return;
      if (g.count_ >= max_flags) {
        fail(ErrorKind::capacity, "flag count exceeds the limit of " + std::to_string(max_flags));
      }
      g.index_.emplace(chain, g.count_++);
      g.faces_.insert(g.faces_.end(), chain.begin(), chain.end());
      return;
    }
    for (RankedPoset::Id y : poset.up(x)) {
      chain.push_back(y);
      self(self, y);
      chain.pop_back();
    }
  };
  if (n == 0) {
    g.index_.emplace(chain, 0);
    g.count_ = 1;
  } else {
    descend(descend, least);
  }

  g.adjacent_.assign(g.count_ * static_cast<std::size_t>(n), -1);
  std::vector<int> other;
  for (std::size_t f = 0; f < g.count_; ++f) {
    for (int j = 0; j < n; ++j) {
      const RankedPoset::Id below = j == 0 ? least : g.face(f, j - 1);
      const RankedPoset::Id above = j == n - 1 ? greatest : g.face(f, j + 1);
      const RankedPoset::Id current = g.face(f, j);
      int replacement = -1;
      int candidates = 0;
      for (RankedPoset::Id y : poset.up(below)) {
        if (y != current && poset.is_cover(y, above)) {
          replacement = y;
          ++candidates;
        }
      }
      if (candidates != 1) continue;
      other.assign(g.faces_.begin() + static_cast<std::ptrdiff_t>(f * static_cast<std::size_t>(n)),
                   g.faces_.begin() + static_cast<std::ptrdiff_t>((f + 1) * static_cast<std::size_t>(n)));
      other[static_cast<std::size_t>(j)] = replacement;
      if (auto idx = g.find(other)) g.adjacent_[f * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] = static_cast<int>(*idx);
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Verifiers

struct DiamondViolation {
  RankedPoset::Id lower = -1;
  RankedPoset::Id upper = -1;
  std::size_t between = 0;  // faces strictly between; the condition wants 2
};

struct DiamondReport {
  bool pass = true;
  std::size_t pairs_checked = 0;
  std::optional<DiamondViolation> violation;
};

/// Every incident pair two ranks apart, including (least, edge) and
/// (rank n-2, greatest), must have exactly two faces between it.
inline DiamondReport verify_diamond(const RankedPoset& poset) {
  DiamondReport report;
  std::map<RankedPoset::Id, std::size_t> between;
  for (std::size_t xi = 0; xi < poset.size(); ++xi) {
    const auto x = static_cast<RankedPoset::Id>(xi);
    if (!poset.present(x) || poset.rank_of(x) > poset.rank() - 2) continue;
    between.clear();
    for (RankedPoset::Id y : poset.up(x)) {
      for (RankedPoset::Id z : poset.up(y)) ++between[z];
    }
    for (auto [z, count] : between) {
      ++report.pairs_checked;
      if (count != 2 && report.pass) {
        report.pass = false;
        report.violation = DiamondViolation{x, z, count};
      }
    }
  }
  return report;
}

struct FlagConnectivityViolation {
  std::vector<int> fixed_ranks;  // ranks the two flags share
  std::size_t flag_a = 0;
  std::size_t flag_b = 0;
};

struct FlagConnectivityReport {
  bool pass = true;
  std::size_t flags = 0;
  std::size_t rank_sets_checked = 0;
  std::optional<FlagConnectivityViolation> violation;
};

/// Strong flag-connectedness, checked straight from its definition: for every
/// set R of ranks, flags that agree on the faces at ranks in R must be joined
/// by adjacencies of colours outside R. R = {} is plain flag-connectedness.
inline FlagConnectivityReport verify_strong_flag_connectedness(const FlagGraph& flags) {
  FlagConnectivityReport report;
  report.flags = flags.size();
  const int n = flags.rank();
  const std::size_t count = flags.size();
  std::vector<std::size_t> parent(count);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };

  for (std::uint64_t fixed = 0; fixed + 1 < (std::uint64_t{1} << n); ++fixed) {
    ++report.rank_sets_checked;
    for (std::size_t f = 0; f < count; ++f) parent[f] = f;
    for (std::size_t f = 0; f < count; ++f) {
      for (int j = 0; j < n; ++j) {
        if ((fixed >> j) & 1U) continue;
        const int g = flags.neighbor(f, j);
        if (g < 0) continue;
        const std::size_t a = find(f), b = find(static_cast<std::size_t>(g));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    std::map<std::vector<int>, std::size_t> class_root;  // shared faces -> (root, first flag)
    std::map<std::vector<int>, std::size_t> class_first;
    std::vector<int> key;
    for (std::size_t f = 0; f < count; ++f) {
      key.clear();
      for (int j = 0; j < n; ++j) {
        if ((fixed >> j) & 1U) key.push_back(flags.face(f, j));
      }
      auto [it, inserted] = class_root.emplace(key, find(f));
      if (inserted) {
        class_first.emplace(key, f);
      } else if (it->second != find(f)) {
        report.pass = false;
        FlagConnectivityViolation v;
        for (int j = 0; j < n; ++j) {
          if ((fixed >> j) & 1U) v.fixed_ranks.push_back(j);
        }
        v.flag_a = class_first.at(key);
        v.flag_b = f;
        report.violation = v;
        return report;
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Flag-graph morphisms

/// Extends flag `base` of `a` -> flag `image` of `b` along j-adjacencies.
/// Succeeds only if the result is a colour-preserving bijection of flag graphs
/// that also induces a well-defined bijection on the faces of every rank,
/// i.e. an isomorphism of the underlying polytopes.
inline std::optional<std::vector<int>> extend_flag_map(const FlagGraph& a, const FlagGraph& b,
                                                       std::size_t base, std::size_t image) {
  if (a.rank() != b.rank() || a.size() != b.size()) return std::nullopt;
  const int n = a.rank();
  std::vector<int> map(a.size(), -1);
  std::vector<bool> used(b.size(), false);
  map[base] = static_cast<int>(image);
  used[image] = true;
  std::deque<std::size_t> queue{base};
  std::size_t mapped = 1;
  while (!queue.empty()) {
    const std::size_t f = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      const int fa = a.neighbor(f, j);
      const int fb = b.neighbor(static_cast<std::size_t>(map[f]), j);
      if ((fa < 0) != (fb < 0)) return std::nullopt;
      if (fa < 0) continue;
      if (map[fa] == -1) {
        if (used[fb]) return std::nullopt;
        map[fa] = fb;
        used[fb] = true;
        ++mapped;
        queue.push_back(static_cast<std::size_t>(fa));
      } else if (map[fa] != fb) {
        return std::nullopt;
      }
    }
  }
  if (mapped != a.size()) return std::nullopt;

  // Face ids of different ranks are distinct, so one table serves all ranks.
  std::vector<int> forward(a.face_bound(), -1), backward(b.face_bound(), -1);
  for (int j = 0; j < n; ++j) {
    for (std::size_t f = 0; f < a.size(); ++f) {
      const int x = a.face(f, j);
      const int y = b.face(static_cast<std::size_t>(map[f]), j);
      if (forward[x] == -1 && backward[y] == -1) {
        forward[x] = y;
        backward[y] = x;
      } else if (forward[x] != y || backward[y] != x) {
        return std::nullopt;
      }
    }
  }
  return map;
}

/// Number of automorphisms: automorphisms act freely on flags, so this is
/// the number of flags that flag 0 can be sent to.
inline std::size_t count_flag_automorphisms(const FlagGraph& g, unsigned threads = 1) {
  if (g.size() == 0) return 0;
  std::vector<char> ok(g.size(), 0);
  detail::parallel_for(g.size(), threads, [&](std::size_t image) {
    ok[image] = extend_flag_map(g, g, 0, image).has_value() ? 1 : 0;
  });
  return static_cast<std::size_t>(std::count(ok.begin(), ok.end(), 1));
}

/// Rank-preserving, cover-preserving bijection a -> b (indexed by ids of a;
/// -1 for removed elements), or nullopt.
inline std::optional<std::vector<RankedPoset::Id>> find_isomorphism(const RankedPoset& a, const FlagGraph& fa,
                                                                    const RankedPoset& b, const FlagGraph& fb) {
  if (a.rank() != b.rank() || a.rank_counts() != b.rank_counts() || fa.size() != fb.size() || fa.size() == 0) {
    return std::nullopt;
  }
  for (std::size_t image = 0; image < fb.size(); ++image) {
    auto flag_map = extend_flag_map(fa, fb, 0, image);
    if (!flag_map) continue;
    std::vector<RankedPoset::Id> face_map(a.size(), -1);
    face_map[a.least()] = b.least();
    face_map[a.greatest()] = b.greatest();
    for (std::size_t f = 0; f < fa.size(); ++f) {
      for (int j = 0; j < a.rank(); ++j) {
        face_map[fa.face(f, j)] = fb.face(static_cast<std::size_t>((*flag_map)[f]), j);
      }
    }
    // Every face lies on a flag in a polytope; anything unmapped means a is not one.
    bool ok = true;
    std::size_t covers_a = 0, covers_b = 0;
    for (std::size_t x = 0; x < a.size() && ok; ++x) {
      if (!a.present(static_cast<RankedPoset::Id>(x))) continue;
      if (face_map[x] < 0) ok = false;
      for (RankedPoset::Id y : a.up(static_cast<RankedPoset::Id>(x))) {
        ++covers_a;
        ok = ok && face_map[y] >= 0 && b.is_cover(face_map[x], face_map[y]);
      }
    }
    for (std::size_t y = 0; y < b.size(); ++y) {
      if (b.present(static_cast<RankedPoset::Id>(y))) covers_b += b.up(static_cast<RankedPoset::Id>(y)).size();
    }
    if (ok && covers_a == covers_b) return face_map;
  }
  return std::nullopt;
}

inline std::optional<std::vector<RankedPoset::Id>> find_isomorphism(const RankedPoset& a, const RankedPoset& b,
                                                                    std::size_t max_flags = kDefaultMaxFlags) {
  if (a.rank() != b.rank() || a.rank_counts() != b.rank_counts()) return std::nullopt;
  return find_isomorphism(a, build_flag_graph(a, max_flags), b, build_flag_graph(b, max_flags));
}

}  // namespace graphicahedron
