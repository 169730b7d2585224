#pragma once

// The extremal family γ_n, its reversed slice δ_n, and the minimally-sorted
// set 𝔐_n under s_{123,132}.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "stacksort/dynamics.hpp"
#include "stacksort/machine.hpp"
#include "stacksort/permutation.hpp"
#include "stacksort/structure.hpp"

namespace stacksort {

enum class FamilyKind { gamma, delta };

struct FamilyElement {
  std::size_t n = 0;
  Permutation value;
  FamilyKind kind = FamilyKind::gamma;
};

/// Odd n ≥ 5: ((n+1)/2, 2, 3, …, (n−1)/2, (n+3)/2, …, n−2, 1, n−1, n).
/// Even n ≥ 6: γ_{n−1} · n.
inline Permutation gamma_family(std::size_t n) {
  if (n < 5) throw DomainError("gamma is defined for n >= 5, got " + std::to_string(n));
  if (n % 2 == 0) return concat(gamma_family(n - 1), Permutation{static_cast<Element>(n)});
  std::vector<Element> v;
  v.reserve(n);
  v.push_back(static_cast<Element>((n + 1) / 2));
  for (std::size_t x = 2; x <= (n - 1) / 2; ++x) v.push_back(static_cast<Element>(x));
  for (std::size_t x = (n + 3) / 2; x <= n - 2; ++x) v.push_back(static_cast<Element>(x));
  v.push_back(1);
  v.push_back(static_cast<Element>(n - 1));
  v.push_back(static_cast<Element>(n));
  return Permutation(std::move(v));
}

/// rev(γ_n[2:n−3]) for odd n, rev(γ_n[2:n−4]) for even n. Generally not standard.
inline Permutation delta_family(std::size_t n) {
  if (n < 5) throw DomainError("delta is defined for n >= 5, got " + std::to_string(n));
  if (n % 2 == 0 && n < 6) throw DomainError("delta is defined for even n >= 6");
  const std::size_t last = n % 2 ? n - 3 : n - 4;
  return reverse(slice(gamma_family(n), 2, last));
}

inline FamilyElement family_element(FamilyKind kind, std::size_t n) {
  return FamilyElement{n, kind == FamilyKind::gamma ? gamma_family(n) : delta_family(n), kind};
}

/// 2⌊(n−1)/2⌋, the maximal ord over S_n under s_{123,132}.
constexpr std::size_t max_ord_123_132(std::size_t n) noexcept { return 2 * half_floor(n); }

/// Smallest k with s^k_{123,132}(π) half-decreasing, found by direct iteration.
inline std::size_t first_half_decreasing_iterate(const Permutation& p, std::size_t limit = 1000) {
  StackSorter sorter(patterns_123_132());
  std::vector<Element> cur(p.begin(), p.end()), next(p.size());
  for (std::size_t k = 0; k <= limit; ++k) {
    if (is_half_decreasing(std::span<const Element>(cur))) return k;
    sorter.apply(cur, next);
    std::swap(cur, next);
  }
  throw std::logic_error("no half-decreasing iterate within limit");
}

/// Streams 𝔐_n (π ∈ S_n with ord = 2⌊(n−1)/2⌋ under s_{123,132}) to `sink`
/// in lexicographic order. Shards are buffered one at a time, so memory is
/// bounded by the largest shard's share of 𝔐_n rather than by |𝔐_n|.
inline std::uint64_t for_each_minimally_sorted(std::size_t n, const EnumerationOptions& opts,
                                               const std::function<void(const Permutation&)>& sink) {
  if (n == 0) throw DomainError("n must be positive");
  check_ceiling(n, opts);
  const std::size_t target = max_ord_123_132(n);
  const auto t = patterns_123_132();
  std::uint64_t total = 0;
  // Shards run in parallel in groups of `threads`, and each group is flushed
  // in order before the next starts.
  const std::size_t group = std::max<std::size_t>(1, effective_threads(opts));
  for (std::size_t base = 0; base < n; base += group) {
    const std::size_t count = std::min(group, n - base);
    EnumerationOptions sub = opts;
    sub.ceiling = std::max(opts.ceiling, n);
    auto shards = map_shards(count, sub, [&](Element idx) {
      const Element first = static_cast<Element>(base + idx);
      OrbitTracker tracker(t);
      std::vector<Permutation> out;
      for_each_in_shard(n, first, [&](std::span<const Element> p) {
        if (tracker.trace(p).tail_length == target) out.push_back(Permutation::from_trusted(p));
      });
      return out;
    });
    for (const auto& shard : shards)
      for (const auto& p : shard) {
        sink(p);
        ++total;
      }
  }
  return total;
}

inline std::vector<Permutation> minimally_sorted_set(std::size_t n, const EnumerationOptions& opts = {}) {
  std::vector<Permutation> out;
  for_each_minimally_sorted(n, opts, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

inline std::uint64_t minimally_sorted_count(std::size_t n, const EnumerationOptions& opts = {}) {
  const auto target = max_ord_123_132(n);
  return count_if(n, patterns_123_132(), opts,
                  [target](OrbitTracker& tr, std::span<const Element> p) { return tr.trace(p).tail_length == target; });
}

}  // namespace stacksort
