#pragma once

/**
 * @file permutation.hpp
 * @brief Permutations of {0, ..., p-1} stored as image arrays.
 *
 * Internally every index is zero-based. Vertex labels only become 1-based
 * when they cross an I/O boundary (see images_one_based / from_one_based).
 *
 * Composition convention: compose(a, b)(x) = a(b(x)), i.e. b acts first.
 * With this convention the Cayley edges tau_e * alpha are left
 * multiplications and the vertex-transitive automorphisms alpha * gamma are
 * right multiplications, both read literally.
 */

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "graphicahedron/error.hpp"

namespace graphicahedron {

class Permutation {
 public:
  static constexpr std::size_t kMaxDegree = 64;

  Permutation() = default;

  static Permutation identity(std::size_t degree) {
    check_degree(degree);
    Permutation result;
    result.degree_ = static_cast<std::uint8_t>(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      result.image_[i] = static_cast<std::uint8_t>(i);
    }
    return result;
  }

  /// Zero-based images; throws invalid_argument unless they form a bijection.
  static Permutation from_images(std::span<const int> images) {
    check_degree(images.size());
    Permutation result;
    result.degree_ = static_cast<std::uint8_t>(images.size());
    std::array<bool, kMaxDegree> seen{};
    for (std::size_t i = 0; i < images.size(); ++i) {
      const int v = images[i];
      if (v < 0 || static_cast<std::size_t>(v) >= images.size() || seen[v]) {
        fail(ErrorKind::invalid_argument, "images do not form a permutation");
      }
      seen[v] = true;
      result.image_[i] = static_cast<std::uint8_t>(v);
    }
    return result;
  }

  static Permutation from_images(std::initializer_list<int> images) {
    return from_images(std::span<const int>(images.begin(), images.size()));
  }

  /// One-based images, e.g. {2, 1, 3} is the transposition (1 2) on three points.
  static Permutation from_one_based(std::span<const int> images) {
    std::vector<int> zero(images.begin(), images.end());
    for (int& v : zero) --v;
    return from_images(zero);
  }

  static Permutation from_one_based(std::initializer_list<int> images) {
    return from_one_based(std::span<const int>(images.begin(), images.size()));
  }

  /// The transposition swapping zero-based points i and j.
  static Permutation transposition(std::size_t degree, std::size_t i, std::size_t j) {
    if (i >= degree || j >= degree) {
      fail(ErrorKind::invalid_argument, "transposition point out of range");
    }
    if (i == j) fail(ErrorKind::invalid_argument, "transposition of a point with itself");
    Permutation result = identity(degree);
    std::swap(result.image_[i], result.image_[j]);
    return result;
  }

  std::size_t degree() const noexcept { return degree_; }

  /// Zero-based image of zero-based point x.
  std::size_t operator()(std::size_t x) const noexcept { return image_[x]; }

  std::vector<int> images() const {
    return std::vector<int>(image_.begin(), image_.begin() + degree_);
  }

  std::vector<int> images_one_based() const {
    std::vector<int> out = images();
    for (int& v : out) ++v;
    return out;
  }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < degree_; ++i) {
      if (image_[i] != i) return false;
    }
    return true;
  }

  Permutation inverse() const {
    Permutation result;
    result.degree_ = degree_;
    for (std::size_t i = 0; i < degree_; ++i) {
      result.image_[image_[i]] = static_cast<std::uint8_t>(i);
    }
    return result;
  }

  /// Rank of the image sequence in lexicographic order of S_p (p <= 20).
  std::uint64_t lex_rank() const {
    std::uint64_t rank = 0;
    std::uint64_t used = 0;
    for (std::size_t i = 0; i < degree_; ++i) {
      const std::uint64_t below = image_[i] == 0 ? 0 : used & ((std::uint64_t{1} << image_[i]) - 1);
      const auto smaller_unused = static_cast<std::uint64_t>(image_[i]) -
                                  static_cast<std::uint64_t>(std::popcount(below));
      rank = rank * (degree_ - i) + smaller_unused;
      used |= std::uint64_t{1} << image_[i];
    }
    return rank;
  }

  static Permutation from_lex_rank(std::size_t degree, std::uint64_t rank) {
    check_degree(degree);
    std::vector<int> pool(degree);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<std::uint64_t> radix(degree);
    for (std::size_t i = degree; i-- > 0;) {
      const std::uint64_t base = degree - i;
      radix[i] = rank % base;
      rank /= base;
    }
    std::vector<int> images(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      images[i] = pool[radix[i]];
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(radix[i]));
    }
    return from_images(images);
  }

  /// One-line notation with 1-based labels: "213", or "2,1,3,...,10" once p > 9.
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < degree_; ++i) {
      if (degree_ > 9 && i > 0) out += ',';
      out += std::to_string(image_[i] + 1);
    }
    return out;
  }

  friend Permutation compose(const Permutation& a, const Permutation& b);

  // Lexicographic on image sequences for equal degree.
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.image_ <=> b.image_;
  }

 private:
  static void check_degree(std::size_t degree) {
    if (degree > kMaxDegree) {
      fail(ErrorKind::capacity, "permutation degree exceeds " + std::to_string(kMaxDegree));
    }
  }

  std::array<std::uint8_t, kMaxDegree> image_{};
  std::uint8_t degree_ = 0;
};

/// (a o b)(x) = a(b(x)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    fail(ErrorKind::size_mismatch, "compose: degrees " + std::to_string(a.degree()) + " and " +
                                       std::to_string(b.degree()) + " differ");
  }
  Permutation result;
  result.degree_ = a.degree_;
  for (std::size_t x = 0; x < a.degree_; ++x) result.image_[x] = a.image_[b.image_[x]];
  return result;
}

/// k a k^-1.
inline Permutation conjugate(const Permutation& a, const Permutation& k) {
  return compose(k, compose(a, k.inverse()));
}

inline std::uint64_t factorial(std::size_t n) {
  if (n > 20) fail(ErrorKind::capacity, "factorial overflows 64 bits");
  std::uint64_t out = 1;
  for (std::size_t i = 2; i <= n; ++i) out *= i;
  return out;
}

/// Visits every permutation of the given degree in lexicographic order.
template <class Fn>
void for_each_permutation(std::size_t degree, Fn&& fn) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  do {
    fn(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
}

inline std::vector<Permutation> all_permutations(std::size_t degree) {
  std::vector<Permutation> out;
  out.reserve(factorial(degree));
  for_each_permutation(degree, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

}  // namespace graphicahedron

template <>
struct std::hash<graphicahedron::Permutation> {
  std::size_t operator()(const graphicahedron::Permutation& p) const noexcept {
    std::size_t h = p.degree();
    for (std::size_t i = 0; i < p.degree(); ++i) h = h * 131 + p(i);
    return h;
  }
};
