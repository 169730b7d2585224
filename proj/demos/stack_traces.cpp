// Prints the push/pop logs of s_{21} on 2143 and of s_{123,132} on 52431,
// followed by the orbit of gamma_9.

#include <iostream>

#include "stacksort/stacksort.hpp"

int main() {
  using namespace stacksort;

  for (auto [perm, patterns] : {std::pair{"2143", "21"}, std::pair{"52431", "123,132"}}) {
    const auto p = parse_permutation(perm);
    const auto t = PatternSet::parse(patterns);
    auto [out, trace] = apply_traced(p, t);
    std::cout << "s_{" << to_string(t) << "}(" << to_string(p) << ") = " << to_string(out) << '\n'
              << to_string(trace) << '\n';
  }

  const auto g = gamma_family(9);
  const auto o = orbit(g, patterns_123_132());
  std::cout << "gamma_9 = " << to_string(g) << ": tail " << o.tail_length << ", cycle " << o.cycle_length
            << ", entry " << to_string(o.entry_point) << '\n';
}
