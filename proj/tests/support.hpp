#pragma once

#include <vector>

#include "wlp/diagram.hpp"
#include "wlp/matroid.hpp"

namespace wlp::test {

// Four propagators on eight vertices; the running example for necklace,
// Le-diagram and denominator checks.
inline WilsonLoopDiagram w8() { return {8, {{1, 4}, {2, 4}, {5, 7}, {5, 8}}}; }

// Fan of three propagators on edge 1 of a heptagon.
inline WilsonLoopDiagram w7() { return {7, {{1, 6}, {1, 5}, {1, 4}}}; }

// Row order used for the heptagon checks: (1,6), (1,5), (1,4).
inline std::vector<Propagator> w7_rows() { return {{1, 6}, {1, 5}, {1, 4}}; }

// Independent filter over all k-subsets of all edge pairs, adjacent ones
// included; the reference for the pruning enumerator.
inline std::vector<WilsonLoopDiagram> brute_force_admissible(int k, int n) {
  std::vector<Propagator> pairs;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) pairs.emplace_back(a, b);
  }
  std::vector<WilsonLoopDiagram> out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k == 0) {
    WilsonLoopDiagram w(n, {});
    if (is_admissible(w).ok) out.push_back(w);
    return out;
  }
  const int total = static_cast<int>(pairs.size());
  for (;;) {
    std::vector<Propagator> chosen;
    for (int i : idx) chosen.push_back(pairs[i]);
    WilsonLoopDiagram w(n, chosen);
    if (is_admissible(w).ok) out.push_back(w);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == total - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

template <typename Fn>
void for_each_admissible_up_to(int max_n, Fn&& fn) {
  for (int n = 4; n <= max_n; ++n) {
    for (int k = 0; k <= n - 4; ++k) {
      for (const WilsonLoopDiagram& w : enumerate_admissible(k, n)) fn(w);
    }
  }
}

}  // namespace wlp::test
