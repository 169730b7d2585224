#pragma once

// Permutation values and the elementary operations every other module uses:
// reduction, pattern containment, reverse/concatenation, left-to-right minima
// and the text format.
//
// Positions are 1-based throughout. `at(i)` is checked and never wraps;
// `wrapped(i)` reduces i modulo n into [1..n] and must be asked for explicitly.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stacksort {

using Element = std::uint32_t;

/// Thrown when an operation is called outside its domain (empty input,
/// absent element, malformed text, out-of-range length, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A sequence of distinct positive integers. Not necessarily standard:
/// 57816 is a perfectly good Permutation whose reduction is 24513.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<Element> elements) : elements_(std::move(elements)) {
    validate();
  }

  Permutation(std::initializer_list<Element> elements) : elements_(elements) { validate(); }

  static Permutation identity(std::size_t n) {
    std::vector<Element> v(n);
    std::iota(v.begin(), v.end(), Element{1});
    return Permutation(std::move(v), trusted{});
  }

  static Permutation reverse_identity(std::size_t n) {
    std::vector<Element> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Element>(n - i);
    return Permutation(std::move(v), trusted{});
  }

  /// Builds from elements already known to be distinct and positive
  /// (enumeration output, machine output). Skips validation.
  static Permutation from_trusted(std::span<const Element> elements) {
    return Permutation(std::vector<Element>(elements.begin(), elements.end()), trusted{});
  }

  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }

  /// 1-based checked access.
  Element at(std::size_t pos) const {
    if (pos < 1 || pos > elements_.size())
      throw DomainError("position " + std::to_string(pos) + " outside [1.." +
                        std::to_string(elements_.size()) + "]");
    return elements_[pos - 1];
  }

  /// Access with the index taken modulo n, so wrapped(0) = π_n and wrapped(n+1) = π_1.
  Element wrapped(std::int64_t pos) const {
    if (elements_.empty()) throw DomainError("wrapped access on empty permutation");
    const auto n = static_cast<std::int64_t>(elements_.size());
    auto r = ((pos - 1) % n + n) % n;
    return elements_[static_cast<std::size_t>(r)];
  }

  std::span<const Element> elements() const noexcept { return elements_; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  /// True iff the element set is exactly {1..n}.
  bool is_standard() const noexcept {
    const auto n = elements_.size();
    return std::all_of(elements_.begin(), elements_.end(),
                       [n](Element e) { return e >= 1 && e <= n; });
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct trusted {};
  Permutation(std::vector<Element> elements, trusted) : elements_(std::move(elements)) {}

  void validate() const {
    std::vector<Element> sorted(elements_);
    std::sort(sorted.begin(), sorted.end());
    if (!sorted.empty() && sorted.front() == 0)
      throw DomainError("permutation elements must be positive");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw DomainError("permutation elements must be distinct");
  }

  std::vector<Element> elements_;
};

/// Pattern: a standard permutation used as a containment target.
class Pattern {
 public:
  explicit Pattern(Permutation p) : perm_(std::move(p)) {
    if (perm_.empty()) throw DomainError("pattern must be nonempty");
    if (!perm_.is_standard()) throw DomainError("pattern must be standard (elements 1..k)");
  }
  Pattern(std::initializer_list<Element> elements) : Pattern(Permutation(elements)) {}

  const Permutation& permutation() const noexcept { return perm_; }
  std::size_t size() const noexcept { return perm_.size(); }
  std::span<const Element> elements() const noexcept { return perm_.elements(); }

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern&, const Pattern&) = default;

 private:
  Permutation perm_;
};

// ---------------------------------------------------------------------------
// Reduction

/// Rank-replaces each element, writing the standard result into `out`.
inline void reduce_into(std::span<const Element> values, std::span<Element> out) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  for (std::size_t rank = 0; rank < order.size(); ++rank)
    out[order[rank]] = static_cast<Element>(rank + 1);
}

inline Permutation reduce(const Permutation& p) {
  if (p.empty()) throw DomainError("reduce of empty permutation");
  std::vector<Element> out(p.size());
  reduce_into(p.elements(), out);
  return Permutation::from_trusted(out);
}

// ---------------------------------------------------------------------------
// Containment

namespace detail {

// Extends a partial occurrence of `pattern` (first `depth` letters matched at
// values `chosen[0..depth)`) using letters of `text` from index `from` on.
inline bool extend_occurrence(std::span<const Element> text, std::span<const Element> pattern,
                              std::size_t from, std::size_t depth, Element* chosen) {
  if (depth == pattern.size()) return true;
  const std::size_t remaining = pattern.size() - depth;
  for (std::size_t i = from; i + remaining <= text.size(); ++i) {
    const Element w = text[i];
    bool consistent = true;
    for (std::size_t j = 0; j < depth; ++j) {
      if ((chosen[j] < w) != (pattern[j] < pattern[depth])) {
        consistent = false;
        break;
      }
    }
    if (!consistent) continue;
    chosen[depth] = w;
    if (extend_occurrence(text, pattern, i + 1, depth + 1, chosen)) return true;
  }
  return false;
}

inline constexpr std::size_t kMaxPatternLength = 16;

}  // namespace detail

/// True iff some subsequence of `text` is order-isomorphic to `pattern`.
inline bool contains(std::span<const Element> text, std::span<const Element> pattern) {
  if (pattern.size() > text.size()) return false;
  if (pattern.empty()) return true;
  if (pattern.size() > detail::kMaxPatternLength)
    throw DomainError("pattern longer than supported maximum");
  Element chosen[detail::kMaxPatternLength];
  return detail::extend_occurrence(text, pattern, 0, 0, chosen);
}

/// True iff some subsequence of `text` that starts at text[0] is
/// order-isomorphic to `pattern`.
inline bool contains_anchored(std::span<const Element> text, std::span<const Element> pattern) {
  if (pattern.size() > text.size() || pattern.empty()) return false;
  if (pattern.size() > detail::kMaxPatternLength)
    throw DomainError("pattern longer than supported maximum");
  Element chosen[detail::kMaxPatternLength];
  chosen[0] = text[0];
  return detail::extend_occurrence(text, pattern, 1, 1, chosen);
}

inline bool contains(const Permutation& p, const Pattern& sigma) {
  return contains(p.elements(), sigma.elements());
}

inline bool avoids(const Permutation& p, const Pattern& sigma) { return !contains(p, sigma); }

// ---------------------------------------------------------------------------
// Elementary operations

/// Position j with π_j = v.
inline std::size_t index_of(const Permutation& p, Element v) {
  auto it = std::find(p.begin(), p.end(), v);
  if (it == p.end()) throw DomainError("element " + std::to_string(v) + " not in permutation");
  return static_cast<std::size_t>(it - p.begin()) + 1;
}

inline Permutation reverse(const Permutation& p) {
  std::vector<Element> v(p.begin(), p.end());
  std::reverse(v.begin(), v.end());
  return Permutation::from_trusted(v);
}

/// π · τ. Throws if the two share an element.
inline Permutation concat(const Permutation& a, const Permutation& b) {
  std::vector<Element> v(a.begin(), a.end());
  v.insert(v.end(), b.begin(), b.end());
  return Permutation(std::move(v));
}

/// π_[i:j], inclusive 1-based window. Empty when j < i.
inline Permutation slice(const Permutation& p, std::size_t first, std::size_t last) {
  if (last < first) return {};
  if (first < 1 || last > p.size())
    throw DomainError("slice [" + std::to_string(first) + ":" + std::to_string(last) +
                      "] outside [1.." + std::to_string(p.size()) + "]");
  return Permutation::from_trusted(p.elements().subspan(first - 1, last - first + 1));
}

/// Marks, for each 0-based index, whether that element is a left-to-right minimum.
inline void ltr_min_flags(std::span<const Element> values, std::span<bool> out) {
  Element running = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[i] = (i == 0 || values[i] < running);
    if (out[i]) running = values[i];
  }
}

inline std::vector<std::size_t> ltr_minima(const Permutation& p) {
  std::vector<std::size_t> positions;
  Element running = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Element v = p.elements()[i];
    if (i == 0 || v < running) {
      running = v;
      positions.push_back(i + 1);
    }
  }
  return positions;
}

inline bool is_ltr_min(const Permutation& p, std::size_t pos) {
  const Element v = p.at(pos);
  return std::all_of(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(pos - 1),
                     [v](Element u) { return u > v; });
}

inline std::size_t descent_count(const Permutation& p) {
  std::size_t d = 0;
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p.elements()[i - 1] > p.elements()[i]) ++d;
  return d;
}

// ---------------------------------------------------------------------------
// Text format
//
// Emitter: comma-separated decimal ("5,2,4,3,1"). Parser: comma-separated
// decimal, or a compact digit string ("52431") for at most 9 elements.
// Surrounding whitespace and one pair of parentheses are tolerated.

inline std::string to_string(const Permutation& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.elements()[i]);
  }
  return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace detail

inline Permutation parse_permutation(std::string_view text) {
  auto s = detail::trim(text);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = detail::trim(s.substr(1, s.size() - 2));
  if (s.empty()) throw DomainError("empty permutation text");

  std::vector<Element> values;
  if (s.find(',') == std::string_view::npos) {
    if (s.size() > 9) throw DomainError("compact digit form is limited to 9 elements: '" + std::string(s) + "'");
    for (char c : s) {
      if (c < '1' || c > '9') throw DomainError("invalid digit in permutation '" + std::string(s) + "'");
      values.push_back(static_cast<Element>(c - '0'));
    }
  } else {
    std::size_t start = 0;
    while (start <= s.size()) {
      auto comma = s.find(',', start);
      if (comma == std::string_view::npos) comma = s.size();
      auto token = detail::trim(s.substr(start, comma - start));
      Element v = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
        throw DomainError("invalid element '" + std::string(token) + "' in permutation");
      values.push_back(v);
      start = comma + 1;
    }
  }
  return Permutation(std::move(values));
}

}  // namespace stacksort

template <>
struct std::hash<stacksort::Permutation> {
  std::size_t operator()(const stacksort::Permutation& p) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto e : p) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};
