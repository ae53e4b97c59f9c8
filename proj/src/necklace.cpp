#include "wlp/necklace.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wlp {

int GrassmannNecklace::assigned_vertex(int i, const Propagator& p) const {
  auto it = std::lower_bound(props.begin(), props.end(), p);
  if (it == props.end() || *it != p)
    throw std::invalid_argument("propagator not in necklace");
  return assigned[i - 1][it - props.begin()];
}

namespace {

// Sort key: (supporting edge j-1 before j, other end walking clockwise from
// the edge before the supporting one).
std::pair<int, int> clockwise_rank(const Propagator& p, int j, int n) {
  int prev = cyc(j - 1, n);
  int edge = p.has_edge(prev) ? prev : j;
  int other = p.other_edge(edge);
  return {edge == prev ? 0 : 1, cyc_key(cyc(edge - 1, n) - other, 0, n)};
}

}  // namespace

std::vector<Propagator> clockwise_order_at_vertex(
    const WilsonLoopDiagram& w, int j, const std::vector<Propagator>& candidates) {
  const int n = w.vertex_count();
  if (j < 1 || j > n) throw std::invalid_argument("vertex out of range [1..n]");
  for (const Propagator& p : candidates) {
    if (!supports_vertex(p, j, n))
      throw std::invalid_argument("candidate not supported on vertex");
  }
  std::vector<Propagator> out = candidates;
  std::stable_sort(out.begin(), out.end(),
                   [&](const Propagator& p, const Propagator& q) {
                     return clockwise_rank(p, j, n) < clockwise_rank(q, j, n);
                   });
  return out;
}

GrassmannNecklace grassmann_necklace(const WilsonLoopDiagram& w) {
  if (!is_weakly_admissible(w))
    throw std::domain_error("diagram is not weakly admissible");
  const int n = w.vertex_count();
  const auto& props = w.propagators();
  const int k = static_cast<int>(props.size());

  GrassmannNecklace neck;
  neck.n = n;
  neck.k = k;
  neck.props = props;
  neck.terms.resize(n);
  neck.assigned.assign(n, std::vector<int>(k, 0));

  for (int i = 1; i <= n; ++i) {
    std::vector<char> done(k, 0);
    int remaining = k;
    for (int step = 0; step < n && remaining > 0; ++step) {
      const int j = cyc(i + step, n);
      int best = -1;
      std::pair<int, int> best_rank{2, n + 1};
      for (int t = 0; t < k; ++t) {
        if (done[t] || !supports_vertex(props[t], j, n)) continue;
        auto rank = clockwise_rank(props[t], j, n);
        if (best < 0 || rank < best_rank) {
          best = t;
          best_rank = rank;
        }
      }
      if (best >= 0) {
        done[best] = 1;
        neck.assigned[i - 1][best] = j;
        neck.terms[i - 1].push_back(j);
        --remaining;
      }
    }
    if (remaining > 0)
      throw std::domain_error("necklace walk did not assign every propagator");
  }
  return neck;
}

bool is_grassmann_necklace(const std::vector<std::vector<int>>& terms) {
  const int n = static_cast<int>(terms.size());
  if (n < 1) throw std::invalid_argument("necklace needs at least one term");
  const size_t k = terms[0].size();
  for (const auto& t : terms) {
    if (t.size() != k) throw std::invalid_argument("ragged necklace terms");
    std::set<int> s(t.begin(), t.end());
    if (s.size() != k) throw std::invalid_argument("term has repeated elements");
    for (int x : t) {
      if (x < 1 || x > n) throw std::invalid_argument("term element out of [1..n]");
    }
  }
  for (int i = 1; i <= n; ++i) {
    std::set<int> cur(terms[i - 1].begin(), terms[i - 1].end());
    std::set<int> next(terms[i % n].begin(), terms[i % n].end());
    if (cur.count(i)) {
      std::set<int> removed = cur;
      removed.erase(i);
      if (!std::includes(next.begin(), next.end(), removed.begin(), removed.end()))
        return false;
    } else {
      if (cur != next) return false;
    }
  }
  return true;
}

std::map<int, CyclicInterval> contribution_intervals(const GrassmannNecklace& neck,
                                                     const Propagator& p) {
  const int n = neck.n;
  std::map<int, std::vector<int>> groups;
  for (int m = 1; m <= n; ++m) groups[neck.assigned_vertex(m, p)].push_back(m);

  std::map<int, CyclicInterval> out;
  for (const auto& [v, members] : groups) {
    std::set<int> s(members.begin(), members.end());
    // Recover [lo..hi] from the member set; fails if it is not an interval.
    bool found = false;
    for (int lo : members) {
      if (s.count(cyc(lo - 1, n))) continue;  // not the start
      int hi = lo;
      while (s.count(cyc(hi + 1, n))) hi = cyc(hi + 1, n);
      if (cyc_interval_size(lo, hi, n) == static_cast<int>(s.size())) {
        out[v] = CyclicInterval{lo, hi};
        found = true;
      }
      break;
    }
    if (!found)
      throw std::domain_error("contribution set is not a cyclic interval");
  }
  return out;
}

std::map<int, CyclicInterval> contribution_intervals(const WilsonLoopDiagram& w,
                                                     const Propagator& p) {
  if (!w.contains(p)) throw std::invalid_argument("propagator not in diagram");
  return contribution_intervals(grassmann_necklace(w), p);
}

std::vector<int> loops(const GrassmannNecklace& neck) {
  std::vector<int> out;
  for (int v = 1; v <= neck.n; ++v) {
    bool seen = false;
    for (const auto& t : neck.terms)
      seen = seen || std::find(t.begin(), t.end(), v) != t.end();
    if (!seen) out.push_back(v);
  }
  return out;
}

std::vector<int> coloops(const GrassmannNecklace& neck) {
  std::vector<int> out;
  for (int v = 1; v <= neck.n; ++v) {
    bool everywhere = true;
    for (const auto& t : neck.terms)
      everywhere = everywhere && std::find(t.begin(), t.end(), v) != t.end();
    if (everywhere) out.push_back(v);
  }
  return out;
}

std::vector<int> decorated_permutation(const std::vector<std::vector<int>>& terms) {
  if (!is_grassmann_necklace(terms))
    throw std::invalid_argument("necklace condition violated");
  const int n = static_cast<int>(terms.size());
  std::vector<int> perm(n, 0);
  for (int i = 1; i <= n; ++i) {
    std::set<int> cur(terms[i - 1].begin(), terms[i - 1].end());
    std::set<int> next(terms[i % n].begin(), terms[i % n].end());
    if (!cur.count(i)) {
      perm[i - 1] = i;
      continue;
    }
    cur.erase(i);
    std::vector<int> entering;
    std::set_difference(next.begin(), next.end(), cur.begin(), cur.end(),
                        std::back_inserter(entering));
    if (entering.size() != 1)
      throw std::invalid_argument("necklace condition violated");
    perm[i - 1] = entering[0];
  }
  return perm;
}

std::vector<int> decorated_permutation(const GrassmannNecklace& neck) {
  return decorated_permutation(neck.terms);
}

}  // namespace wlp
