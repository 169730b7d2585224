#pragma once

// The right-greedy pattern-avoiding stack-sorting pass s_T.
//
// Input is read left to right. Before the next element x is pushed, the top of
// the stack is popped to the output for as long as the stack with x on top,
// read top to bottom, would contain some pattern of T. Then x is pushed. When
// the input is exhausted the stack is emptied.
//
// Only occurrences that start at the new top can be new: the stack below it
// was already legal. The push test therefore only searches subsequences
// anchored at x.

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stacksort/permutation.hpp"

namespace stacksort {

/// The set T of forbidden top-to-bottom stack patterns. Sorted, deduplicated,
/// every pattern standard and of length at least 2.
class PatternSet {
 public:
  explicit PatternSet(std::vector<Pattern> patterns) : patterns_(std::move(patterns)) {
    if (patterns_.empty()) throw DomainError("pattern set must be nonempty");
    for (const auto& p : patterns_)
      if (p.size() < 2)
        throw DomainError("patterns of length 1 forbid every push; use length >= 2");
    std::sort(patterns_.begin(), patterns_.end());
    patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
  }

  PatternSet(std::initializer_list<Pattern> patterns)
      : PatternSet(std::vector<Pattern>(patterns)) {}

  /// "123,132" or "21". Each pattern is written in compact digit form.
  static PatternSet parse(std::string_view text) {
    std::vector<Pattern> out;
    auto s = detail::trim(text);
    if (s.empty()) throw DomainError("empty pattern set");
    std::size_t start = 0;
    while (start <= s.size()) {
      auto comma = s.find(',', start);
      if (comma == std::string_view::npos) comma = s.size();
      auto token = detail::trim(s.substr(start, comma - start));
      if (token.empty()) throw DomainError("empty pattern in set '" + std::string(s) + "'");
      if (token.find_first_not_of("123456789") != std::string_view::npos)
        throw DomainError("invalid pattern '" + std::string(token) + "'");
      out.emplace_back(parse_permutation(token));
      start = comma + 1;
    }
    return PatternSet(std::move(out));
  }

  const std::vector<Pattern>& patterns() const noexcept { return patterns_; }
  std::size_t size() const noexcept { return patterns_.size(); }

  std::size_t max_length() const noexcept {
    std::size_t k = 0;
    for (const auto& p : patterns_) k = std::max(k, p.size());
    return k;
  }

  friend bool operator==(const PatternSet&, const PatternSet&) = default;

 private:
  std::vector<Pattern> patterns_;
};

inline std::string to_string(const PatternSet& t) {
  std::string out;
  for (const auto& p : t.patterns()) {
    if (!out.empty()) out += ',';
    for (auto e : p.elements()) out += std::to_string(e);
  }
  return out;
}

enum class StackAction { push, pop };

struct TraceEvent {
  std::size_t step = 0;
  StackAction action = StackAction::push;
  Element element = 0;
  std::vector<Element> stack_after;  // top to bottom

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

struct MachineTrace {
  std::vector<TraceEvent> events;
};

/// Line-oriented golden format: "step action element stack", the stack read
/// top to bottom as comma-separated values, "-" when empty.
inline std::string to_string(const MachineTrace& trace) {
  std::ostringstream os;
  for (const auto& e : trace.events) {
    os << e.step << ' ' << (e.action == StackAction::push ? "push" : "pop") << ' ' << e.element << ' ';
    if (e.stack_after.empty()) {
      os << '-';
    } else {
      for (std::size_t i = 0; i < e.stack_after.size(); ++i) os << (i ? "," : "") << e.stack_after[i];
    }
    os << '\n';
  }
  return os.str();
}

/// Reusable s_T evaluator. Owns the scratch stack, so one instance per thread.
class StackSorter {
 public:
  explicit StackSorter(PatternSet patterns) : patterns_(std::move(patterns)) {}

  const PatternSet& patterns() const noexcept { return patterns_; }

  /// Writes s_T(input) into `output` (same length). No allocation once the
  /// scratch buffer has grown to the input length.
  void apply(std::span<const Element> input, std::span<Element> output) {
    run(input, output, nullptr);
  }

  Permutation apply(const Permutation& p) {
    std::vector<Element> out(p.size());
    run(p.elements(), out, nullptr);
    return Permutation::from_trusted(out);
  }

  std::pair<Permutation, MachineTrace> apply_traced(const Permutation& p) {
    std::vector<Element> out(p.size());
    MachineTrace trace;
    trace.events.reserve(2 * p.size());
    run(p.elements(), out, &trace);
    return {Permutation::from_trusted(out), std::move(trace)};
  }

 private:
  // buf_[top, bottom) is the stack read top to bottom; buf_[top - 1] is where the
  // next element goes.
  bool push_would_violate(std::size_t top, std::size_t bottom) const {
    std::span<const Element> candidate(buf_.data() + top - 1, bottom - top + 1);
    for (const auto& sigma : patterns_.patterns())
      if (contains_anchored(candidate, sigma.elements())) return true;
    return false;
  }

  void record(MachineTrace* trace, StackAction action, Element e, std::size_t top, std::size_t bottom) {
    if (!trace) return;
    trace->events.push_back(TraceEvent{trace->events.size() + 1, action, e,
                                       std::vector<Element>(buf_.begin() + static_cast<std::ptrdiff_t>(top),
                                                            buf_.begin() + static_cast<std::ptrdiff_t>(bottom))});
  }

  void run(std::span<const Element> input, std::span<Element> output, MachineTrace* trace) {
    const std::size_t n = input.size();
    if (buf_.size() < n + 1) buf_.resize(n + 1);
    const std::size_t bottom = n + 1;
    std::size_t top = bottom;
    std::size_t out = 0;
    for (const Element x : input) {
      buf_[top - 1] = x;
      while (top != bottom && push_would_violate(top, bottom)) {
        const Element popped = buf_[top];
        output[out++] = popped;
        ++top;
        record(trace, StackAction::pop, popped, top, bottom);
        buf_[top - 1] = x;
      }
      --top;
      record(trace, StackAction::push, x, top, bottom);
    }
    while (top != bottom) {
      const Element popped = buf_[top];
      output[out++] = popped;
      ++top;
      record(trace, StackAction::pop, popped, top, bottom);
    }
  }

  PatternSet patterns_;
  std::vector<Element> buf_;
};

inline Permutation apply(const Permutation& p, const PatternSet& t) { return StackSorter(t).apply(p); }

inline std::pair<Permutation, MachineTrace> apply_traced(const Permutation& p, const PatternSet& t) {
  return StackSorter(t).apply_traced(p);
}

/// The classical stack-sorting map: the stack must increase from top to bottom, i.e. s_{21}.
inline Permutation classical_sort_pass(const Permutation& p) { return apply(p, PatternSet{Pattern{2, 1}}); }

/// s_T applied `passes` times.
inline Permutation apply_n(const Permutation& p, const PatternSet& t, std::size_t passes) {
  StackSorter sorter(t);
  std::vector<Element> next(p.size());
  std::vector<Element> curv(p.begin(), p.end());
  for (std::size_t i = 0; i < passes; ++i) {
    sorter.apply(curv, next);
    std::swap(curv, next);
  }
  return Permutation::from_trusted(curv);
}

inline PatternSet patterns_21() { return PatternSet{Pattern{2, 1}}; }
inline PatternSet patterns_123_132() { return PatternSet{Pattern{1, 2, 3}, Pattern{1, 3, 2}}; }

}  // namespace stacksort
