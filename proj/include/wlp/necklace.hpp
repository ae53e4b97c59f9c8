#pragma once

#include <map>
#include <vector>

#include "wlp/diagram.hpp"

namespace wlp {

/// The n terms I_1..I_n produced by walking the diagram from each starting
/// vertex, together with the vertex each propagator contributed per walk.
struct GrassmannNecklace {
  int n = 0;
  int k = 0;
  std::vector<Propagator> props;           // the diagram's canonical order
  std::vector<std::vector<int>> terms;     // terms[i-1], sorted in the <_i order
  std::vector<std::vector<int>> assigned;  // assigned[i-1][prop index] = I_i(p)

  int assigned_vertex(int i, const Propagator& p) const;
};

/// Candidates supported on vertex j, most-clockwise first: ends on edge j-1
/// precede ends on edge j, and within one edge the propagator whose other end
/// comes first walking edges j-2, j-3, ... (resp. j-1, j-2, ...) wins.
std::vector<Propagator> clockwise_order_at_vertex(
    const WilsonLoopDiagram& w, int j, const std::vector<Propagator>& candidates);

/// Walks j = i, i+1, ... from every starting vertex i, at each step assigning
/// (and removing) the clockwise-most unassigned propagator supported on j.
/// Requires a weakly admissible diagram.
GrassmannNecklace grassmann_necklace(const WilsonLoopDiagram& w);

/// Cyclic exchange condition on a sequence of k-subsets of [1..n], n = number
/// of terms.  Throws on ragged sizes or out-of-range elements.
bool is_grassmann_necklace(const std::vector<std::vector<int>>& terms);

struct CyclicInterval {
  int lo = 0;
  int hi = 0;

  bool contains(int x, int n) const { return cyc_contains(lo, hi, x, n); }
  int size(int n) const { return cyc_interval_size(lo, hi, n); }
  bool operator==(const CyclicInterval&) const = default;
};

/// For each support vertex v of p, the interval of starting vertices m with
/// I_m(p) = v.  The four intervals partition [n] in the support's cyclic
/// order.
std::map<int, CyclicInterval> contribution_intervals(const GrassmannNecklace& neck,
                                                     const Propagator& p);
std::map<int, CyclicInterval> contribution_intervals(const WilsonLoopDiagram& w,
                                                     const Propagator& p);

/// Vertices appearing in no term / in every term.
std::vector<int> loops(const GrassmannNecklace& neck);
std::vector<int> coloops(const GrassmannNecklace& neck);

/// perm[i-1] = the element j entering at the i -> i+1 transition, or i when
/// the term does not move.  Throws if the terms are not a necklace.
std::vector<int> decorated_permutation(const std::vector<std::vector<int>>& terms);
std::vector<int> decorated_permutation(const GrassmannNecklace& neck);

}  // namespace wlp
