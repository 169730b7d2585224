#pragma once

// Orbits of s_T: tail length (ord), cycle length, periodic points, and the
// exhaustive S_n enumerations built on top of them.
//
// Enumeration splits S_n into n shards by first element. Shards run on a
// small thread pool; results are always merged in shard order, so every
// aggregate is independent of the thread count.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "stacksort/machine.hpp"
#include "stacksort/permutation.hpp"
#include "stacksort/structure.hpp"

namespace stacksort {

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultCeiling = 11;

struct EnumerationOptions {
  std::size_t threads = 0;  // 0: hardware concurrency
  std::size_t ceiling = kDefaultCeiling;
};

inline void check_ceiling(std::size_t n, const EnumerationOptions& opts) {
  if (n > opts.ceiling)
    throw ResourceLimitError("n = " + std::to_string(n) + " exceeds the enumeration ceiling " +
                             std::to_string(opts.ceiling) + " (raise it with --ceiling)");
}

inline std::size_t effective_threads(const EnumerationOptions& opts) {
  if (opts.threads) return opts.threads;
  const auto hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// ---------------------------------------------------------------------------
// Enumeration

/// Visits every permutation of [n] with π_1 = first, in lexicographic order.
/// `visit` receives a span that is only valid during the call.
template <typename Visit>
void for_each_in_shard(std::size_t n, Element first, Visit&& visit) {
  std::vector<Element> p;
  p.reserve(n);
  p.push_back(first);
  for (Element v = 1; v <= n; ++v)
    if (v != first) p.push_back(v);
  do {
    visit(std::span<const Element>(p));
  } while (std::next_permutation(p.begin() + 1, p.end()));
}

/// Visits all of S_n in lexicographic order, serially.
template <typename Visit>
void for_each_permutation(std::size_t n, Visit&& visit) {
  if (n == 0) return;
  for (Element first = 1; first <= n; ++first) for_each_in_shard(n, first, visit);
}

/// Runs `shard_fn(first)` for first = 1..n on up to `opts.threads` threads and
/// returns the results indexed by first − 1.
template <typename ShardFn>
auto map_shards(std::size_t n, const EnumerationOptions& opts, ShardFn shard_fn)
    -> std::vector<decltype(shard_fn(Element{1}))> {
  using Result = decltype(shard_fn(Element{1}));
  check_ceiling(n, opts);
  std::vector<Result> results(n);
  const std::size_t workers = std::min(effective_threads(opts), std::max<std::size_t>(n, 1));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        results[i] = shard_fn(static_cast<Element>(i + 1));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

// ---------------------------------------------------------------------------
// Orbits

struct OrbitSummary {
  Permutation start;
  std::size_t tail_length = 0;   // ord of start
  std::size_t cycle_length = 1;
  Permutation entry_point;       // first periodic permutation on the orbit
};

struct OrbitShape {
  std::size_t tail_length = 0;
  std::size_t cycle_length = 1;
  friend bool operator==(const OrbitShape&, const OrbitShape&) = default;
};

/// Iterate-and-record cycle detector for the enumeration hot loop. Visited
/// states live in one flat buffer indexed by an open-addressing table on a
/// 64-bit hash; nothing is reallocated between orbits once warmed up.
class OrbitTracker {
 public:
  explicit OrbitTracker(PatternSet patterns) : sorter_(std::move(patterns)) {}

  const PatternSet& patterns() const noexcept { return sorter_.patterns(); }
  StackSorter& sorter() noexcept { return sorter_; }

  OrbitShape trace(std::span<const Element> start) {
    n_ = start.size();
    count_ = 0;
    ++generation_;
    if (generation_ == 0) {  // wrapped: clear stamps
      std::fill(slots_.begin(), slots_.end(), Slot{});
      generation_ = 1;
    }
    if (slots_.empty()) slots_.resize(64);
    std::size_t cur = append(start);
    while (true) {
      const std::size_t next_index = count_;
      ensure_state_capacity(count_ + 1);
      sorter_.apply(state(cur), mutable_state(next_index));
      const std::uint64_t h = hash(state(next_index));
      const std::size_t found = find(h, next_index);
      if (found != npos) return OrbitShape{found, next_index - found};
      insert(h, next_index);
      ++count_;
      cur = next_index;
    }
  }

  /// The k-th state of the last traced orbit (0 = start).
  std::span<const Element> state(std::size_t k) const {
    return {states_.data() + k * n_, n_};
  }

 private:
  struct Slot {
    std::uint32_t generation = 0;
    std::uint32_t index = 0;
    std::uint64_t hash = 0;
  };
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::span<Element> mutable_state(std::size_t k) { return {states_.data() + k * n_, n_}; }

  void ensure_state_capacity(std::size_t count) {
    if (states_.size() < (count + 1) * n_) states_.resize(std::max((count + 1) * n_, states_.size() * 2));
  }

  std::size_t append(std::span<const Element> s) {
    ensure_state_capacity(count_ + 1);
    std::copy(s.begin(), s.end(), states_.begin() + static_cast<std::ptrdiff_t>(count_ * n_));
    insert(hash(s), count_);
    return count_++;
  }

  static std::uint64_t hash(std::span<const Element> s) {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto e : s) {
      h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h * 0xff51afd7ed558ccdull;
  }

  std::size_t find(std::uint64_t h, std::size_t probe_index) const {
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t i = h & mask;; i = (i + 1) & mask) {
      const Slot& s = slots_[i];
      if (s.generation != generation_) return npos;
      if (s.hash == h && std::equal(state(s.index).begin(), state(s.index).end(), state(probe_index).begin()))
        return s.index;
    }
  }

  void insert(std::uint64_t h, std::size_t index) {
    if ((count_ + 1) * 2 > slots_.size()) rehash(slots_.size() * 2);
    const std::size_t mask = slots_.size() - 1;
    std::size_t i = h & mask;
    while (slots_[i].generation == generation_) i = (i + 1) & mask;
    slots_[i] = Slot{generation_, static_cast<std::uint32_t>(index), h};
  }

  void rehash(std::size_t new_size) {
    std::vector<Slot> old;
    old.swap(slots_);
    slots_.assign(new_size, Slot{});
    const std::size_t mask = new_size - 1;
    for (const Slot& s : old) {
      if (s.generation != generation_) continue;
      std::size_t i = s.hash & mask;
      while (slots_[i].generation == generation_) i = (i + 1) & mask;
      slots_[i] = s;
    }
  }

  StackSorter sorter_;
  std::vector<Element> states_;
  std::vector<Slot> slots_;
  std::size_t n_ = 0;
  std::size_t count_ = 0;
  std::uint32_t generation_ = 0;
};

inline OrbitSummary orbit(const Permutation& p, const PatternSet& t) {
  require_standard(p);
  OrbitTracker tracker(t);
  const OrbitShape shape = tracker.trace(p.elements());
  return OrbitSummary{p, shape.tail_length, shape.cycle_length,
                      Permutation::from_trusted(tracker.state(shape.tail_length))};
}

/// Constant-memory alternative (Brent's power-of-two search). Same result
/// as `orbit`, used to cross-check it.
inline OrbitSummary orbit_brent(const Permutation& p, const PatternSet& t) {
  require_standard(p);
  StackSorter sorter(t);
  const std::size_t n = p.size();
  std::vector<Element> tortoise(p.begin(), p.end()), hare(n), tmp(n);
  sorter.apply(tortoise, hare);
  std::size_t power = 1, lambda = 1;
  while (tortoise != hare) {
    if (power == lambda) {
      tortoise = hare;
      power *= 2;
      lambda = 0;
    }
    sorter.apply(hare, tmp);
    std::swap(hare, tmp);
    ++lambda;
  }
  // Find the tail: advance one pointer lambda steps, then both together.
  std::vector<Element> a(p.begin(), p.end()), b(p.begin(), p.end());
  for (std::size_t i = 0; i < lambda; ++i) {
    sorter.apply(b, tmp);
    std::swap(b, tmp);
  }
  std::size_t mu = 0;
  while (a != b) {
    sorter.apply(a, tmp);
    std::swap(a, tmp);
    sorter.apply(b, tmp);
    std::swap(b, tmp);
    ++mu;
  }
  return OrbitSummary{p, mu, lambda, Permutation::from_trusted(a)};
}

inline std::size_t ord_of(const Permutation& p, const PatternSet& t) { return orbit(p, t).tail_length; }

inline bool is_periodic(const Permutation& p, const PatternSet& t) { return ord_of(p, t) == 0; }

/// Histogram of ord over S_n: result[k] = #{π : ord(π) = k}.
inline std::vector<std::uint64_t> ord_distribution(std::size_t n, const PatternSet& t,
                                                   const EnumerationOptions& opts = {}) {
  if (n == 0) throw DomainError("n must be positive");
  auto shards = map_shards(n, opts, [&](Element first) {
    OrbitTracker tracker(t);
    std::vector<std::uint64_t> hist;
    for_each_in_shard(n, first, [&](std::span<const Element> p) {
      const auto tail = tracker.trace(p).tail_length;
      if (hist.size() <= tail) hist.resize(tail + 1);
      ++hist[tail];
    });
    return hist;
  });
  std::vector<std::uint64_t> total;
  for (const auto& h : shards) {
    if (total.size() < h.size()) total.resize(h.size());
    for (std::size_t k = 0; k < h.size(); ++k) total[k] += h[k];
  }
  return total;
}

/// ord_{s_T}(S_n): the largest tail length over S_n.
inline std::size_t ord_of_Sn(std::size_t n, const PatternSet& t, const EnumerationOptions& opts = {}) {
  const auto hist = ord_distribution(n, t, opts);
  return hist.empty() ? 0 : hist.size() - 1;
}

/// How "t-stack-sortable" is read. `periodic`: s^t(π) lies on a cycle.
/// `identity`: s^t(π) is the identity. The two agree for T = {21}.
enum class SortableReading { periodic, identity };

/// Collects every π ∈ S_n for which `pred(tracker, π)` holds, in lexicographic order.
template <typename Pred>
std::vector<Permutation> collect(std::size_t n, const PatternSet& t, const EnumerationOptions& opts, Pred pred) {
  if (n == 0) throw DomainError("n must be positive");
  auto shards = map_shards(n, opts, [&](Element first) {
    OrbitTracker tracker(t);
    std::vector<Permutation> out;
    for_each_in_shard(n, first, [&](std::span<const Element> p) {
      if (pred(tracker, p)) out.push_back(Permutation::from_trusted(p));
    });
    return out;
  });
  std::vector<Permutation> all;
  for (auto& s : shards) all.insert(all.end(), std::make_move_iterator(s.begin()), std::make_move_iterator(s.end()));
  return all;
}

/// Counts every π ∈ S_n for which `pred(tracker, π)` holds.
template <typename Pred>
std::uint64_t count_if(std::size_t n, const PatternSet& t, const EnumerationOptions& opts, Pred pred) {
  if (n == 0) throw DomainError("n must be positive");
  auto shards = map_shards(n, opts, [&](Element first) {
    OrbitTracker tracker(t);
    std::uint64_t c = 0;
    for_each_in_shard(n, first, [&](std::span<const Element> p) {
      if (pred(tracker, p)) ++c;
    });
    return c;
  });
  return std::accumulate(shards.begin(), shards.end(), std::uint64_t{0});
}

namespace detail {

inline auto sortable_predicate(std::size_t passes, SortableReading reading) {
  return [passes, reading](OrbitTracker& tracker, std::span<const Element> p) {
    const OrbitShape shape = tracker.trace(p);
    if (reading == SortableReading::periodic) return shape.tail_length <= passes;
    // s^t(π) is state t of the orbit, folded onto the cycle when t runs past it.
    std::size_t k = passes;
    if (k > shape.tail_length) k = shape.tail_length + (k - shape.tail_length) % shape.cycle_length;
    const auto s = tracker.state(k);
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] != i + 1) return false;
    return true;
  };
}

}  // namespace detail

/// Sort_{t,n}(T) under the given reading.
inline std::vector<Permutation> sortable_set(std::size_t passes, std::size_t n, const PatternSet& t,
                                             SortableReading reading = SortableReading::periodic,
                                             const EnumerationOptions& opts = {}) {
  return collect(n, t, opts, detail::sortable_predicate(passes, reading));
}

inline std::uint64_t sortable_count(std::size_t passes, std::size_t n, const PatternSet& t,
                                    SortableReading reading = SortableReading::periodic,
                                    const EnumerationOptions& opts = {}) {
  return count_if(n, t, opts, detail::sortable_predicate(passes, reading));
}

enum class PeriodicMethod {
  generic,          // cycle detection on every π
  half_decreasing,  // T = {123,132} only: filter by the half-decreasing predicate
};

/// All π ∈ S_n lying on a cycle of s_T, lexicographic order. The
/// half-decreasing fast path still confirms every hit with the detector.
inline std::vector<Permutation> periodic_points(std::size_t n, const PatternSet& t,
                                                PeriodicMethod method = PeriodicMethod::generic,
                                                const EnumerationOptions& opts = {}) {
  if (method == PeriodicMethod::generic)
    return collect(n, t, opts, [](OrbitTracker& tr, std::span<const Element> p) { return tr.trace(p).tail_length == 0; });
  if (!(t == patterns_123_132()))
    throw DomainError("half-decreasing fast path only applies to T = {123,132}");
  return collect(n, t, opts, [](OrbitTracker& tr, std::span<const Element> p) {
    if (!is_half_decreasing(p)) return false;
    if (tr.trace(p).tail_length != 0)
      throw std::logic_error("half-decreasing permutation " + to_string(Permutation::from_trusted(p)) +
                             " is not periodic");
    return true;
  });
}

}  // namespace stacksort
