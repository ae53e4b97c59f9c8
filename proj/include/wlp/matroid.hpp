#pragma once

#include <cstdint>
#include <vector>

#include "wlp/necklace.hpp"

namespace wlp {

/// True iff an injective map from the vertices of J to propagators exists
/// with every vertex mapped to a propagator it supports (augmenting paths).
bool is_independent(const WilsonLoopDiagram& w, const std::vector<int>& subset);

/// The same test via counting: no U within the subset may support fewer
/// propagators than it has vertices.
bool is_independent_by_counting(const WilsonLoopDiagram& w,
                                const std::vector<int>& subset);

/// All independent k-subsets of [n], each sorted ascending, listed in
/// lexicographic order.
std::vector<std::vector<int>> bases(const WilsonLoopDiagram& w);

/// Greedy scan in the <_i order keeping vertices while independence holds;
/// returns the k kept vertices in scan order.
std::vector<int> lexmin_basis(const WilsonLoopDiagram& w, int i);

/// Reference variant: sorts all bases <_i-lexicographically and takes the
/// first.  Test support only.
std::vector<int> lexmin_basis_by_enumeration(const WilsonLoopDiagram& w, int i);

/// Componentwise comparison of the <_j-sorted elements: every element of a
/// is <=_j the matching element of b.  Throws on size mismatch.
bool gale_leq(const std::vector<int>& a, const std::vector<int>& b, int j, int n);

/// All k-subsets J with term_i <= J in the <_i Gale order for every i.
std::vector<std::vector<int>> bases_from_necklace(const GrassmannNecklace& neck);

/// Number of bijections between the given propagators and vertices pairing
/// each propagator with a vertex it supports.
std::int64_t count_saturating_bijections(const WilsonLoopDiagram& w,
                                         const std::vector<Propagator>& props,
                                         const std::vector<int>& vertices);

}  // namespace wlp
