#pragma once

// Small elements, valleys, valley-blocks, the valley-boundary and the
// half-decreasing predicate. All functions expect standard permutations.

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "stacksort/permutation.hpp"

namespace stacksort {

/// ⌊(n−1)/2⌋, the number of small values in S_n.
constexpr std::size_t half_floor(std::size_t n) noexcept { return n == 0 ? 0 : (n - 1) / 2; }

inline void require_standard(const Permutation& p) {
  if (!p.is_standard()) throw DomainError("expected a standard permutation, got " + to_string(p));
}

/// π_i is small iff its value is at most ⌊(n−1)/2⌋.
inline bool is_small(const Permutation& p, std::size_t pos) {
  return p.at(pos) <= half_floor(p.size());
}

/// Closed 1-based position interval [first, last].
struct Block {
  std::size_t first = 0;
  std::size_t last = 0;
  std::size_t length() const noexcept { return last - first + 1; }
  friend bool operator==(const Block&, const Block&) = default;
};

/// Whether a valley-region may end with a bare valley-block (no trailing
/// element). `allow_trailing_block` is the reading under which valley-block
/// elements never leave the region; `strict` is kept for comparison.
enum class BoundaryRule { allow_trailing_block, strict };

struct ValleyDecomposition {
  std::vector<std::size_t> valleys;  // positions
  std::vector<Block> blocks;         // maximal valley-blocks, left to right
  std::size_t boundary = 0;          // 𝔅(π); n when no qualifying index exists
  bool has_region = false;           // a qualifying index was found

  /// True when position `pos` lies in a valley-block inside the valley-region.
  bool in_region_block(std::size_t pos) const noexcept {
    if (!has_region || pos < boundary) return false;
    for (const auto& b : blocks)
      if (pos >= b.first && pos <= b.last) return true;
    return false;
  }
};

namespace detail {

inline std::vector<char> ltr_flags(const Permutation& p) {
  std::vector<char> flags(p.size());
  Element running = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    flags[i] = (i == 0 || p.elements()[i] < running);
    if (flags[i]) running = p.elements()[i];
  }
  return flags;
}

// 0-based valley test on precomputed ltr-min flags.
inline bool valley_at(const std::vector<char>& ltr, std::size_t i) {
  const std::size_t n = ltr.size();
  return ltr[i] && !(i + 1 < n && ltr[i + 1]) && !(i + 2 < n && !ltr[i + 2]);
}

// Tries to read π_[start:n] as block, element, block, element, ... (0-based start).
inline bool parses_as_region(const std::vector<char>& ltr, std::size_t start, BoundaryRule rule) {
  const std::size_t n = ltr.size();
  std::size_t pos = start;
  while (true) {
    if (pos >= n || !ltr[pos]) return false;
    // A block is a run of consecutive ltr-minima (automatically the smallest
    // values of the prefix, descending) ending at a valley.
    std::size_t q = pos;
    while (q + 1 < n && ltr[q + 1]) ++q;
    if (!valley_at(ltr, q)) return false;
    if (q == n - 1) return rule == BoundaryRule::allow_trailing_block;
    if (q + 1 == n - 1) return true;
    pos = q + 2;
  }
}

}  // namespace detail

/// π_i is an ltr-min, π_{i+1} is not (if it exists) and π_{i+2} is (if it exists).
inline bool is_valley(const Permutation& p, std::size_t pos) {
  if (pos < 1 || pos > p.size()) throw DomainError("valley position out of range");
  return detail::valley_at(detail::ltr_flags(p), pos - 1);
}

inline ValleyDecomposition decompose(const Permutation& p,
                                     BoundaryRule rule = BoundaryRule::allow_trailing_block) {
  require_standard(p);
  ValleyDecomposition d;
  const std::size_t n = p.size();
  if (n == 0) return d;
  const auto ltr = detail::ltr_flags(p);
  for (std::size_t i = 0; i < n; ++i) {
    if (!detail::valley_at(ltr, i)) continue;
    d.valleys.push_back(i + 1);
    std::size_t first = i;
    while (first > 0 && ltr[first - 1]) --first;
    d.blocks.push_back(Block{first + 1, i + 1});
  }
  d.boundary = n;
  for (std::size_t start = 0; start < n; ++start) {
    if (detail::parses_as_region(ltr, start, rule)) {
      d.boundary = start + 1;
      d.has_region = true;
      break;
    }
  }
  return d;
}

/// 𝔅(π).
inline std::size_t valley_boundary(const Permutation& p,
                                   BoundaryRule rule = BoundaryRule::allow_trailing_block) {
  return decompose(p, rule).boundary;
}

/// π_{n−1} = 1, π_{n−3} = 2, …, π_{n−2k+1} = k for k = ⌊(n−1)/2⌋.
inline bool is_half_decreasing(std::span<const Element> p) noexcept {
  const std::size_t n = p.size();
  const std::size_t k = half_floor(n);
  for (std::size_t j = 1; j <= k; ++j)
    if (p[n - 2 * j] != j) return false;  // 0-based index of position n−2j+1
  return true;
}

inline bool is_half_decreasing(const Permutation& p) { return is_half_decreasing(p.elements()); }

/// "11 12 | [7 5] 8 [4 3] 6 [2] 9 [1] 10": maximal valley-blocks bracketed,
/// the valley-boundary marked with '|' when a region exists.
inline std::string format_decomposition(const Permutation& p, const ValleyDecomposition& d) {
  std::ostringstream os;
  bool first_token = true;
  auto sep = [&] {
    if (!first_token) os << ' ';
    first_token = false;
  };
  std::size_t b = 0;
  for (std::size_t pos = 1; pos <= p.size(); ++pos) {
    if (d.has_region && pos == d.boundary) {
      sep();
      os << '|';
    }
    while (b < d.blocks.size() && d.blocks[b].last < pos) ++b;
    const bool opens = b < d.blocks.size() && d.blocks[b].first == pos;
    const bool closes = b < d.blocks.size() && d.blocks[b].last == pos;
    sep();
    if (opens) os << '[';
    os << p.at(pos);
    if (closes) os << ']';
  }
  return os.str();
}

inline std::string format_decomposition(const Permutation& p) {
  return format_decomposition(p, decompose(p));
}

}  // namespace stacksort
