#pragma once

/**
 * @file coset.hpp
 * @brief Young-subgroup cosets T_K alpha without materializing T_K.
 *
 * A vertex partition determines the Young subgroup T_K (the product of the
 * symmetric groups on its blocks). T_K acts on the left, so the right coset
 * T_K alpha is exactly the set of beta with beta(y) in the block of alpha(y)
 * for every y. Everything here is built on that membership test.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "graphicahedron/error.hpp"
#include "graphicahedron/permutation.hpp"

namespace graphicahedron {

class VertexPartition {
 public:
  VertexPartition() = default;

  /// Any labelling of blocks; ids are renumbered by smallest member vertex.
  static VertexPartition from_labels(std::span<const int> labels) {
    if (labels.size() > Permutation::kMaxDegree) {
      fail(ErrorKind::capacity, "partition degree too large");
    }
    VertexPartition out;
    out.degree_ = labels.size();
    std::vector<int> renumber;
    std::vector<int> seen_labels;
    for (std::size_t v = 0; v < labels.size(); ++v) {
      auto it = std::find(seen_labels.begin(), seen_labels.end(), labels[v]);
      std::size_t id;
      if (it == seen_labels.end()) {
        id = seen_labels.size();
        seen_labels.push_back(labels[v]);
        out.blocks_.emplace_back();
      } else {
        id = static_cast<std::size_t>(it - seen_labels.begin());
      }
      out.block_of_[v] = static_cast<std::uint8_t>(id);
      out.blocks_[id].push_back(static_cast<int>(v));
    }
    return out;
  }

  static VertexPartition from_labels(std::initializer_list<int> labels) {
    return from_labels(std::span<const int>(labels.begin(), labels.size()));
  }

  static VertexPartition singletons(std::size_t degree) {
    std::vector<int> labels(degree);
    for (std::size_t v = 0; v < degree; ++v) labels[v] = static_cast<int>(v);
    return from_labels(labels);
  }

  static VertexPartition whole(std::size_t degree) {
    return from_labels(std::vector<int>(degree, 0));
  }

  std::size_t degree() const noexcept { return degree_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }
  std::size_t block_of(std::size_t v) const noexcept { return block_of_[v]; }

  /// Sorted zero-based member lists, ordered by smallest member.
  const std::vector<std::vector<int>>& blocks() const noexcept { return blocks_; }

  /// True when every block of this partition lies inside a block of `coarser`.
  bool refines(const VertexPartition& coarser) const {
    for (const auto& block : blocks_) {
      for (int v : block) {
        if (coarser.block_of(v) != coarser.block_of(block.front())) return false;
      }
    }
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (const auto& block : blocks_) {
      out += '{';
      for (std::size_t i = 0; i < block.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(block[i] + 1);
      }
      out += '}';
    }
    return out;
  }

  friend bool operator==(const VertexPartition& a, const VertexPartition& b) {
    return a.degree_ == b.degree_ && a.block_of_ == b.block_of_;
  }

 private:
  std::array<std::uint8_t, Permutation::kMaxDegree> block_of_{};
  std::vector<std::vector<int>> blocks_;
  std::size_t degree_ = 0;
};

/// Order of the Young subgroup: product of |block|!.
inline std::uint64_t coset_size(const VertexPartition& part) {
  std::uint64_t size = 1;
  for (const auto& block : part.blocks()) size *= factorial(block.size());
  return size;
}

/// Lexicographically least member of T_K a. Greedy: position y takes the
/// smallest unused vertex of the block containing a(y).
inline Permutation canonical_rep(const VertexPartition& part, const Permutation& a) {
  if (part.degree() != a.degree()) {
    fail(ErrorKind::size_mismatch, "canonical_rep: partition and permutation degrees differ");
  }
  std::array<std::uint8_t, Permutation::kMaxDegree> next{};
  std::vector<int> images(a.degree());
  for (std::size_t y = 0; y < a.degree(); ++y) {
    const std::size_t b = part.block_of(a(y));
    images[y] = part.blocks()[b][next[b]++];
  }
  return Permutation::from_images(images);
}

/// T_K a == T_K b.
inline bool same_coset(const VertexPartition& part, const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree() || part.degree() != a.degree()) {
    fail(ErrorKind::size_mismatch, "same_coset: degrees differ");
  }
  for (std::size_t y = 0; y < a.degree(); ++y) {
    if (part.block_of(a(y)) != part.block_of(b(y))) return false;
  }
  return true;
}

/// Every canonical representative of a coset of T_K, in lexicographic order.
/// Enumerates block-assignment words instead of all of S_p, so the cost is
/// proportional to the number of cosets.
inline std::vector<Permutation> coset_representatives(const VertexPartition& part) {
  std::vector<int> word;
  for (std::size_t b = 0; b < part.block_count(); ++b) {
    word.insert(word.end(), part.blocks()[b].size(), static_cast<int>(b));
  }
  std::vector<Permutation> reps;
  std::vector<int> images(part.degree());
  do {
    std::array<std::uint8_t, Permutation::kMaxDegree> next{};
    for (std::size_t y = 0; y < word.size(); ++y) {
      const auto b = static_cast<std::size_t>(word[y]);
      images[y] = part.blocks()[b][next[b]++];
    }
    reps.push_back(Permutation::from_images(images));
  } while (std::next_permutation(word.begin(), word.end()));
  std::sort(reps.begin(), reps.end());
  return reps;
}

}  // namespace graphicahedron
