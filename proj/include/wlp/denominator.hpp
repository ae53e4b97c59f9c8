#pragma once

#include <string>
#include <vector>

#include "wlp/necklace.hpp"
#include "wlp/sympoly.hpp"

namespace wlp {

/// Local factor list contributed by one edge: empty for an untouched edge,
/// the two endpoint variables for a single propagator, and the fan of
/// endpoint variables and 2x2 determinants otherwise.
struct EdgeFactorization {
  int edge = 0;
  std::vector<Propagator> ordered_props;
  std::vector<SparsePolynomial> factors;
};

/// Propagators with one end on edge e ordered along the edge from vertex e
/// toward vertex e+1: the propagator whose other end comes first walking
/// edges e-1, e-2, ... attaches first.
std::vector<Propagator> edge_propagator_order(const WilsonLoopDiagram& w, int e);

EdgeFactorization edge_factorization(const WilsonLoopDiagram& w,
                                     const std::vector<Propagator>& row_order,
                                     int e);

/// Product of the edge-local factors over all edges.
FactoredPolynomial denominator_definition(const WilsonLoopDiagram& w,
                                          const std::vector<Propagator>& row_order);

/// Propagators whose contributed vertex changes between walks i-1 and i
/// (walk 0 means walk n); sorted canonically.
std::vector<Propagator> s_set(const WilsonLoopDiagram& w,
                              const GrassmannNecklace& neck, int i);

/// Determinant of the minor on the changed propagators and their contributed
/// vertices, rows and columns both ordered by the contributed vertex in the
/// <_i order; 1 when nothing changed.
SparsePolynomial r_factor(const WilsonLoopDiagram& w, const GrassmannNecklace& neck,
                          int i, const std::vector<Propagator>& row_order);

/// The same factor split structurally: one variable per lone changed
/// propagator and one 2x2 determinant per pair sharing an edge a with
/// contributions a and a+1.
FactoredPolynomial r_factor_structural(const WilsonLoopDiagram& w,
                                       const GrassmannNecklace& neck, int i,
                                       const std::vector<Propagator>& row_order);

/// Determinant of the full k x k minor on the columns of term i, rows and
/// columns ordered by contribution as in r_factor.
SparsePolynomial delta_minor(const WilsonLoopDiagram& w,
                             const GrassmannNecklace& neck, int i,
                             const std::vector<Propagator>& row_order);

/// Product of the per-index factors, kept in structural factored form.
FactoredPolynomial denominator_via_necklace(const WilsonLoopDiagram& w,
                                            const std::vector<Propagator>& row_order);

struct DenominatorChecks {
  std::vector<bool> r_divides_delta;
  bool products_equal = false;
  bool square_free = false;
  bool radical_ok = false;
};

struct DenominatorReport {
  FactoredPolynomial r_definition;
  FactoredPolynomial r_necklace;
  std::vector<std::vector<Propagator>> s_sets;  // per index i
  std::vector<SparsePolynomial> r_factors;      // per index i
  std::vector<SparsePolynomial> deltas;         // per index i
  DenominatorChecks checks;
  std::vector<std::string> failures;            // diagnostics for failed checks
};

/// Builds both denominators and checks: every per-index factor divides its
/// minor, the two products agree, the factor list is square-free up to sign,
/// and every minor reduces to +-1 by dividing out listed factors.
DenominatorReport verify_radical(const WilsonLoopDiagram& w,
                                 const std::vector<Propagator>& row_order);

}  // namespace wlp
