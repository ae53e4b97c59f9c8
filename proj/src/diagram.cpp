#include "wlp/diagram.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace wlp {

Propagator::Propagator(int i, int j) : a(std::min(i, j)), b(std::max(i, j)) {
  if (i == j) throw std::invalid_argument("propagator needs two distinct edges");
}

int Propagator::other_edge(int e) const {
  if (e == a) return b;
  if (e == b) return a;
  throw std::invalid_argument("edge does not belong to propagator");
}

DirectedPropagator::DirectedPropagator(Propagator p, int start_edge)
    : prop(p), start(start_edge) {
  if (!p.has_edge(start_edge))
    throw std::invalid_argument("direction must start at an edge of the propagator");
}

WilsonLoopDiagram::WilsonLoopDiagram(int n, std::vector<Propagator> props) : n_(n) {
  if (n < 1) throw std::invalid_argument("vertex count must be positive");
  std::set<Propagator> dedup;
  for (const Propagator& p : props) {
    if (p.a < 1 || p.b > n)
      throw std::invalid_argument("propagator edge out of range [1..n]");
    dedup.insert(p);
  }
  props_.assign(dedup.begin(), dedup.end());
}

bool WilsonLoopDiagram::contains(const Propagator& p) const {
  return std::binary_search(props_.begin(), props_.end(), p);
}

bool supports_vertex(const Propagator& p, int v, int n) {
  return v == p.a || v == cyc(p.a + 1, n) || v == p.b || v == cyc(p.b + 1, n);
}

std::vector<int> vertex_support(const WilsonLoopDiagram& w, const Propagator& p) {
  if (!w.contains(p)) throw std::invalid_argument("propagator not in diagram");
  const int n = w.vertex_count();
  std::set<int> s{p.a, cyc(p.a + 1, n), p.b, cyc(p.b + 1, n)};
  return {s.begin(), s.end()};
}

std::vector<int> support_of_set(const WilsonLoopDiagram& w,
                                const std::vector<Propagator>& subset) {
  std::set<int> s;
  for (const Propagator& p : subset) {
    for (int v : vertex_support(w, p)) s.insert(v);
  }
  return {s.begin(), s.end()};
}

std::vector<Propagator> props_on(const WilsonLoopDiagram& w,
                                 const std::vector<int>& vertices) {
  const int n = w.vertex_count();
  for (int v : vertices) {
    if (v < 1 || v > n) throw std::invalid_argument("vertex out of range [1..n]");
  }
  std::vector<Propagator> out;
  for (const Propagator& p : w.propagators()) {
    for (int v : vertices) {
      if (supports_vertex(p, v, n)) {
        out.push_back(p);
        break;
      }
    }
  }
  return out;
}

namespace {

bool crossing(const Propagator& p, const Propagator& q) {
  // With both stored as (a<b): chords cross iff one end of q lies strictly
  // between the ends of p and the other does not.
  return (p.a < q.a && q.a < p.b && p.b < q.b) ||
         (q.a < p.a && p.a < q.b && q.b < p.b);
}

int support_size(const WilsonLoopDiagram& w, const std::vector<Propagator>& set) {
  const int n = w.vertex_count();
  std::set<int> s;
  for (const Propagator& p : set) {
    s.insert(p.a);
    s.insert(cyc(p.a + 1, n));
    s.insert(p.b);
    s.insert(cyc(p.b + 1, n));
  }
  return static_cast<int>(s.size());
}

// Smallest subset Q with |V(Q)| < |Q|+3, scanning sizes upward.
std::optional<std::vector<Propagator>> smallest_dense_subset(
    const WilsonLoopDiagram& w) {
  const auto& props = w.propagators();
  const int k = static_cast<int>(props.size());
  for (int size = 1; size <= k; ++size) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      std::vector<Propagator> q;
      for (int i : idx) q.push_back(props[i]);
      if (support_size(w, q) < size + 3) return q;
      int pos = size - 1;
      while (pos >= 0 && idx[pos] == k - size + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace

AdmissibilityReport is_admissible(const WilsonLoopDiagram& w) {
  AdmissibilityReport report;
  const auto& props = w.propagators();
  const int k = static_cast<int>(props.size());
  if (w.vertex_count() < k + 4)
    report.violations.push_back({ViolationKind::TooManyProps, props});
  if (auto q = smallest_dense_subset(w))
    report.violations.push_back({ViolationKind::DenseSubset, *q});
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (crossing(props[i], props[j]))
        report.violations.push_back({ViolationKind::Crossing, {props[i], props[j]}});
    }
  }
  report.ok = report.violations.empty();
  return report;
}

bool is_weakly_admissible(const WilsonLoopDiagram& w) {
  const auto& props = w.propagators();
  const int k = static_cast<int>(props.size());
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (crossing(props[i], props[j])) return false;
    }
  }
  return !smallest_dense_subset(w).has_value();
}

std::vector<Propagator> props_inside(const WilsonLoopDiagram& w,
                                     const DirectedPropagator& dp) {
  const int n = w.vertex_count();
  const int lo = dp.start;
  const int hi = dp.end();
  std::vector<Propagator> out;
  for (const Propagator& q : w.propagators()) {
    // Both edges of q ordered along the lo..hi traversal must fit inside.
    int ka = cyc_key(q.a, lo, n), kb = cyc_key(q.b, lo, n);
    int first = std::min(ka, kb), second = std::max(ka, kb);
    if (first == second) continue;  // cannot happen: edges distinct
    if (second <= cyc_key(hi, lo, n)) out.push_back(q);
  }
  return out;
}

int propagator_length(const WilsonLoopDiagram& w, const Propagator& p) {
  if (!w.contains(p)) throw std::invalid_argument("propagator not in diagram");
  const int n = w.vertex_count();
  int side1 = cyc_interval_size(cyc(p.a + 1, n), p.b, n);
  int side2 = cyc_interval_size(cyc(p.b + 1, n), p.a, n);
  return std::min(side1, side2);
}

bool is_config_long_short(const WilsonLoopDiagram& w, const Propagator& longer,
                          const Propagator& shorter) {
  if (!w.contains(longer) || !w.contains(shorter) || longer == shorter) return false;
  if (propagator_length(w, shorter) != 2) return false;
  const int n = w.vertex_count();
  for (int start : {longer.a, longer.b}) {
    if (cyc_key(longer.other_edge(start), start, n) > 6) continue;
    auto inside = props_inside(w, DirectedPropagator(longer, start));
    if (inside.size() == 2 &&
        ((inside[0] == longer && inside[1] == shorter) ||
         (inside[0] == shorter && inside[1] == longer)))
      return true;
  }
  return false;
}

namespace {

// Starting edges i with p == (i, i+2) cyclically.
std::vector<int> length2_starts(const Propagator& p, int n) {
  std::vector<int> out;
  if (cyc(p.a + 2, n) == p.b) out.push_back(p.a);
  if (cyc(p.b + 2, n) == p.a) out.push_back(p.b);
  return out;
}

}  // namespace

bool is_config_short_pair(const WilsonLoopDiagram& w, const Propagator& first,
                          const Propagator& second) {
  if (!w.contains(first) || !w.contains(second) || first == second) return false;
  const int n = w.vertex_count();
  for (int i : length2_starts(first, n)) {
    for (int j : length2_starts(second, n)) {
      bool near = false;
      for (int d = 2; d <= 4; ++d) near = near || (j == cyc(i + d, n));
      if (!near) continue;
      bool clear = true;
      for (const Propagator& r : w.propagators()) {
        if (r == first || r == second) continue;
        if (cyc_contains(cyc(i + 2, n), j, r.a, n) ||
            cyc_contains(cyc(i + 2, n), j, r.b, n))
          clear = false;
      }
      if (clear) return true;
    }
  }
  return false;
}

std::optional<SmallConfig> find_small_config(const WilsonLoopDiagram& w) {
  const auto& props = w.propagators();
  for (const Propagator& first : props) {
    for (const Propagator& second : props) {
      if (is_config_short_pair(w, first, second))
        return SmallConfig{SmallConfig::Kind::ShortPair, first, second};
    }
  }
  for (const Propagator& longer : props) {
    for (const Propagator& shorter : props) {
      if (is_config_long_short(w, longer, shorter))
        return SmallConfig{SmallConfig::Kind::LongShort, longer, shorter};
    }
  }
  return std::nullopt;
}

WilsonLoopDiagram rotate(const WilsonLoopDiagram& w, int s) {
  const int n = w.vertex_count();
  std::vector<Propagator> out;
  for (const Propagator& p : w.propagators())
    out.emplace_back(cyc(p.a + s, n), cyc(p.b + s, n));
  return {n, out};
}

WilsonLoopDiagram reflect(const WilsonLoopDiagram& w, int c) {
  const int n = w.vertex_count();
  std::vector<Propagator> out;
  for (const Propagator& p : w.propagators())
    out.emplace_back(cyc(c - p.a - 1, n), cyc(c - p.b - 1, n));
  return {n, out};
}

std::vector<int> nonsupporting_vertices(const WilsonLoopDiagram& w) {
  const int n = w.vertex_count();
  std::vector<int> out;
  for (int v = 1; v <= n; ++v) {
    bool supported = false;
    for (const Propagator& p : w.propagators())
      supported = supported || supports_vertex(p, v, n);
    if (!supported) out.push_back(v);
  }
  return out;
}

WilsonLoopDiagram remove_nonsupporting_vertex(const WilsonLoopDiagram& w, int v) {
  const int n = w.vertex_count();
  if (v < 1 || v > n) throw std::invalid_argument("vertex out of range [1..n]");
  for (const Propagator& p : w.propagators()) {
    if (supports_vertex(p, v, n))
      throw std::invalid_argument("vertex supports a propagator");
  }
  // No propagator ends on edges v-1 or v, so edges below v keep their index
  // and edges above shift down by one.
  std::vector<Propagator> out;
  for (const Propagator& p : w.propagators())
    out.emplace_back(p.a > v ? p.a - 1 : p.a, p.b > v ? p.b - 1 : p.b);
  return {n - 1, out};
}

namespace {

std::vector<Propagator> candidate_propagators(int n) {
  std::vector<Propagator> out;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      Propagator p(a, b);
      std::set<int> support{p.a, cyc(p.a + 1, n), p.b, cyc(p.b + 1, n)};
      if (support.size() == 4) out.push_back(p);
    }
  }
  return out;
}

// Every subset of chosen+p containing p must satisfy the density bound.
bool density_ok_with(const WilsonLoopDiagram& w,
                     const std::vector<Propagator>& chosen, const Propagator& p) {
  const int m = static_cast<int>(chosen.size());
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<Propagator> q{p};
    for (int i = 0; i < m; ++i) {
      if (mask & (1u << i)) q.push_back(chosen[i]);
    }
    if (support_size(w, q) < static_cast<int>(q.size()) + 3) return false;
  }
  return true;
}

std::vector<WilsonLoopDiagram> enumerate_dense_noncrossing(int k, int n) {
  if (k < 0 || n < 1) throw std::invalid_argument("need k >= 0 and n >= 1");
  std::vector<WilsonLoopDiagram> result;
  const auto candidates = candidate_propagators(n);
  WilsonLoopDiagram frame(n, {});
  std::vector<Propagator> chosen;

  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(chosen.size()) == k) {
      result.emplace_back(n, chosen);
      return;
    }
    for (int i = start; i < static_cast<int>(candidates.size()); ++i) {
      const Propagator& p = candidates[i];
      bool ok = true;
      for (const Propagator& q : chosen) ok = ok && !crossing(p, q);
      if (!ok || !density_ok_with(frame, chosen, p)) continue;
      chosen.push_back(p);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return result;
}

}  // namespace

std::vector<WilsonLoopDiagram> enumerate_admissible(int k, int n) {
  if (k < 0 || n < k + 4) throw std::invalid_argument("need k >= 0 and n >= k+4");
  return enumerate_dense_noncrossing(k, n);
}

std::vector<WilsonLoopDiagram> enumerate_weakly_admissible(int k, int n) {
  return enumerate_dense_noncrossing(k, n);
}

}  // namespace wlp
