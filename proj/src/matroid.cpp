#include "wlp/matroid.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wlp {

namespace {

bool augment(const WilsonLoopDiagram& w, int vertex,
             const std::vector<Propagator>& props, std::vector<int>& owner,
             std::vector<char>& seen) {
  const int n = w.vertex_count();
  for (int t = 0; t < static_cast<int>(props.size()); ++t) {
    if (seen[t] || !supports_vertex(props[t], vertex, n)) continue;
    seen[t] = 1;
    if (owner[t] == 0 || augment(w, owner[t], props, owner, seen)) {
      owner[t] = vertex;
      return true;
    }
  }
  return false;
}

void check_subset(const WilsonLoopDiagram& w, const std::vector<int>& subset) {
  for (int v : subset) {
    if (v < 1 || v > w.vertex_count())
      throw std::invalid_argument("vertex out of range [1..n]");
  }
}

std::vector<std::vector<int>> k_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  for (;;) {
    out.push_back(cur);
    int pos = k - 1;
    while (pos >= 0 && cur[pos] == n - k + pos + 1) --pos;
    if (pos < 0) break;
    ++cur[pos];
    for (int i = pos + 1; i < k; ++i) cur[i] = cur[i - 1] + 1;
  }
  return out;
}

}  // namespace

bool is_independent(const WilsonLoopDiagram& w, const std::vector<int>& subset) {
  check_subset(w, subset);
  const auto& props = w.propagators();
  if (subset.size() > props.size()) return false;
  std::vector<int> owner(props.size(), 0);  // propagator -> matched vertex
  for (int v : subset) {
    std::vector<char> seen(props.size(), 0);
    if (!augment(w, v, props, owner, seen)) return false;
  }
  return true;
}

bool is_independent_by_counting(const WilsonLoopDiagram& w,
                                const std::vector<int>& subset) {
  check_subset(w, subset);
  const int m = static_cast<int>(subset.size());
  if (m > 25) throw std::invalid_argument("subset too large for counting test");
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> u;
    for (int i = 0; i < m; ++i) {
      if (mask & (1u << i)) u.push_back(subset[i]);
    }
    if (props_on(w, u).size() < u.size()) return false;
  }
  return true;
}

std::vector<std::vector<int>> bases(const WilsonLoopDiagram& w) {
  std::vector<std::vector<int>> out;
  for (const auto& j : k_subsets(w.vertex_count(), w.propagator_count())) {
    if (is_independent(w, j)) out.push_back(j);
  }
  return out;
}

std::vector<int> lexmin_basis(const WilsonLoopDiagram& w, int i) {
  const int n = w.vertex_count();
  if (i < 1 || i > n) throw std::invalid_argument("vertex out of range [1..n]");
  const int k = w.propagator_count();
  std::vector<int> kept;
  for (int step = 0; step < n && static_cast<int>(kept.size()) < k; ++step) {
    const int v = cyc(i + step, n);
    kept.push_back(v);
    if (!is_independent(w, kept)) kept.pop_back();
  }
  return kept;
}

std::vector<int> lexmin_basis_by_enumeration(const WilsonLoopDiagram& w, int i) {
  const int n = w.vertex_count();
  auto all = bases(w);
  auto sort_key = [&](std::vector<int> b) {
    std::sort(b.begin(), b.end(),
              [&](int x, int y) { return cyc_key(x, i, n) < cyc_key(y, i, n); });
    return b;
  };
  std::vector<int> best;
  std::vector<int> best_keyed;
  for (const auto& b : all) {
    auto keyed = sort_key(b);
    std::vector<int> keys;
    for (int x : keyed) keys.push_back(cyc_key(x, i, n));
    if (best.empty() || keys < best_keyed) {
      best = keyed;
      best_keyed = keys;
    }
  }
  return best;
}

bool gale_leq(const std::vector<int>& a, const std::vector<int>& b, int j, int n) {
  if (a.size() != b.size()) throw std::invalid_argument("size mismatch");
  auto keyed = [&](std::vector<int> v) {
    std::sort(v.begin(), v.end(),
              [&](int x, int y) { return cyc_key(x, j, n) < cyc_key(y, j, n); });
    return v;
  };
  auto sa = keyed(a), sb = keyed(b);
  for (size_t r = 0; r < sa.size(); ++r) {
    if (!cyc_leq(sa[r], sb[r], j, n)) return false;
  }
  return true;
}

std::vector<std::vector<int>> bases_from_necklace(const GrassmannNecklace& neck) {
  std::vector<std::vector<int>> out;
  for (const auto& j : k_subsets(neck.n, neck.k)) {
    bool ok = true;
    for (int i = 1; i <= neck.n && ok; ++i)
      ok = gale_leq(neck.terms[i - 1], j, i, neck.n);
    if (ok) out.push_back(j);
  }
  return out;
}

std::int64_t count_saturating_bijections(const WilsonLoopDiagram& w,
                                         const std::vector<Propagator>& props,
                                         const std::vector<int>& vertices) {
  if (props.size() != vertices.size())
    throw std::invalid_argument("size mismatch");
  const int n = w.vertex_count();
  const int m = static_cast<int>(props.size());
  std::vector<char> used(m, 0);
  std::int64_t count = 0;
  auto rec = [&](auto&& self, int r) -> void {
    if (r == m) {
      ++count;
      return;
    }
    for (int c = 0; c < m; ++c) {
      if (used[c] || !supports_vertex(props[r], vertices[c], n)) continue;
      used[c] = 1;
      self(self, r + 1);
      used[c] = 0;
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace wlp
