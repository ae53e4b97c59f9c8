#pragma once

// Cyclic index arithmetic on the vertex/edge set [1..n].  All reductions map
// into [1..n], never [0..n-1].

namespace wlp {

// Reduce x into [1..n].
constexpr int cyc(int x, int n) {
  int r = x % n;
  return r <= 0 ? r + n : r;
}

// 0-based position of x in the shifted total order i < i+1 < ... < i-1.
constexpr int cyc_key(int x, int i, int n) { return ((x - i) % n + n) % n; }

constexpr bool cyc_less(int a, int b, int i, int n) {
  return cyc_key(a, i, n) < cyc_key(b, i, n);
}

constexpr bool cyc_leq(int a, int b, int i, int n) {
  return cyc_key(a, i, n) <= cyc_key(b, i, n);
}

// Number of elements of the cyclic interval [lo..hi].
constexpr int cyc_interval_size(int lo, int hi, int n) {
  return cyc_key(hi, lo, n) + 1;
}

// Membership of x in the cyclic interval [lo..hi].
constexpr bool cyc_contains(int lo, int hi, int x, int n) {
  return cyc_key(x, lo, n) <= cyc_key(hi, lo, n);
}

}  // namespace wlp
