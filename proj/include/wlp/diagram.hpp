#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "wlp/cyclic.hpp"

namespace wlp {

/// An unordered pair of distinct edges, stored with the smaller natural
/// index first so equality is structural.
struct Propagator {
  int a = 0;
  int b = 0;

  Propagator() = default;
  Propagator(int i, int j);

  int other_edge(int e) const;
  bool has_edge(int e) const { return e == a || e == b; }

  auto operator<=>(const Propagator&) const = default;
};

/// A propagator together with one of its two edges chosen as the start of a
/// traversal direction.
struct DirectedPropagator {
  Propagator prop;
  int start = 0;

  DirectedPropagator(Propagator p, int start_edge);
  int end() const { return prop.other_edge(start); }
};

/// Cycle on n vertices with a set of chords joining boundary edges.
/// Edge e spans vertices (e, e+1 mod n); all indices are 1-based.
class WilsonLoopDiagram {
 public:
  WilsonLoopDiagram() = default;
  WilsonLoopDiagram(int n, std::vector<Propagator> props);

  int vertex_count() const { return n_; }
  int propagator_count() const { return static_cast<int>(props_.size()); }
  const std::vector<Propagator>& propagators() const { return props_; }
  bool contains(const Propagator& p) const;

  bool operator==(const WilsonLoopDiagram&) const = default;

 private:
  int n_ = 1;
  std::vector<Propagator> props_;  // sorted, duplicate-free
};

enum class ViolationKind { TooManyProps, DenseSubset, Crossing };

struct Violation {
  ViolationKind kind;
  std::vector<Propagator> witness;
};

struct AdmissibilityReport {
  bool ok = true;
  std::vector<Violation> violations;
};

/// Vertices {i, i+1, j, j+1} touched by the ends of p; sorted ascending.
std::vector<int> vertex_support(const WilsonLoopDiagram& w, const Propagator& p);

/// Union of vertex_support over a subset of the diagram's propagators.
std::vector<int> support_of_set(const WilsonLoopDiagram& w,
                                const std::vector<Propagator>& subset);

/// The propagators whose support meets U.
std::vector<Propagator> props_on(const WilsonLoopDiagram& w,
                                 const std::vector<int>& vertices);

/// True iff vertex v lies in the support of p (diagram size n).
bool supports_vertex(const Propagator& p, int v, int n);

/// Checks the three admissibility conditions and reports witnesses: the full
/// propagator set when n < k+4, a smallest subset Q with |V(Q)| < |Q|+3, and
/// every crossing pair.
AdmissibilityReport is_admissible(const WilsonLoopDiagram& w);

/// Density and non-crossing conditions only (no bound on k).
bool is_weakly_admissible(const WilsonLoopDiagram& w);

/// Propagators with both edges in the cyclic edge interval from dp.start to
/// its other end; always includes dp.prop itself.
std::vector<Propagator> props_inside(const WilsonLoopDiagram& w,
                                     const DirectedPropagator& dp);

/// Size of the smaller vertex interval strictly between the two ends.
int propagator_length(const WilsonLoopDiagram& w, const Propagator& p);

/// A forced local configuration: either a propagator spanning at most 6
/// vertices on one side with a single length-2 propagator and nothing else on
/// that side, or two length-2 propagators (i,i+2), (j,j+2) with
/// j in {i+2,i+3,i+4} and no other propagator end on the edges between them.
struct SmallConfig {
  enum class Kind { LongShort, ShortPair };
  Kind kind;
  Propagator first;   // LongShort: the enclosing propagator; ShortPair: (i,i+2)
  Propagator second;  // LongShort: the enclosed length-2 propagator; ShortPair: (j,j+2)
};

bool is_config_long_short(const WilsonLoopDiagram& w, const Propagator& longer,
                          const Propagator& shorter);
bool is_config_short_pair(const WilsonLoopDiagram& w, const Propagator& first,
                          const Propagator& second);

std::optional<SmallConfig> find_small_config(const WilsonLoopDiagram& w);

/// Vertex v -> v+s, edge e -> e+s (mod n).
WilsonLoopDiagram rotate(const WilsonLoopDiagram& w, int s);

/// Vertex v -> c-v, edge e -> c-e-1 (mod n into [1..n]).  Covers all n
/// reflections for c in [0..n-1]; c and c+n give the same map.
WilsonLoopDiagram reflect(const WilsonLoopDiagram& w, int c);

/// Removes a vertex that supports no propagator, decrementing larger indices.
WilsonLoopDiagram remove_nonsupporting_vertex(const WilsonLoopDiagram& w, int v);

/// Vertices of w supporting no propagator.
std::vector<int> nonsupporting_vertices(const WilsonLoopDiagram& w);

/// Every admissible diagram with exactly k propagators on [n], emitted once
/// each, in lexicographic order of the chord sets.
std::vector<WilsonLoopDiagram> enumerate_admissible(int k, int n);

/// Same enumeration without the n >= k+4 requirement.
std::vector<WilsonLoopDiagram> enumerate_weakly_admissible(int k, int n);

}  // namespace wlp
