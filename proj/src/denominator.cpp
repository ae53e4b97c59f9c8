#include "wlp/denominator.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wlp {

namespace {

int row_of(const std::vector<Propagator>& row_order, const Propagator& p) {
  auto it = std::find(row_order.begin(), row_order.end(), p);
  if (it == row_order.end())
    throw std::invalid_argument("propagator not in row order");
  return static_cast<int>(it - row_order.begin()) + 1;
}

SparsePolynomial var(int row, int vertex) {
  return SparsePolynomial::variable(Variable{row, vertex});
}

// x_{p,a} x_{q,a+1} - x_{p,a+1} x_{q,a} for rows p, q and columns a, a+1.
SparsePolynomial pair_det(int row_p, int row_q, int a, int a1) {
  return var(row_p, a) * var(row_q, a1) - var(row_p, a1) * var(row_q, a);
}

// Propagators of S_i listed by their contributed vertex in the <_i order.
std::vector<Propagator> by_contribution(const GrassmannNecklace& neck,
                                        const std::vector<Propagator>& subset,
                                        int i) {
  std::vector<Propagator> out = subset;
  std::sort(out.begin(), out.end(), [&](const Propagator& p, const Propagator& q) {
    return cyc_key(neck.assigned_vertex(i, p), i, neck.n) <
           cyc_key(neck.assigned_vertex(i, q), i, neck.n);
  });
  return out;
}

SparsePolynomial contribution_minor(const WilsonLoopDiagram& w,
                                    const GrassmannNecklace& neck, int i,
                                    const std::vector<Propagator>& row_order,
                                    const std::vector<Propagator>& subset) {
  if (subset.empty()) return SparsePolynomial(1);
  auto ordered = by_contribution(neck, subset, i);
  std::vector<int> rows, cols;
  for (const Propagator& p : ordered) {
    rows.push_back(row_of(row_order, p));
    cols.push_back(neck.assigned_vertex(i, p));
  }
  return minor_det(c_matrix(w, row_order), rows, cols);
}

}  // namespace

std::vector<Propagator> edge_propagator_order(const WilsonLoopDiagram& w, int e) {
  const int n = w.vertex_count();
  if (e < 1 || e > n) throw std::invalid_argument("edge out of range [1..n]");
  std::vector<Propagator> out;
  for (const Propagator& p : w.propagators()) {
    if (p.has_edge(e)) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [&](const Propagator& p, const Propagator& q) {
    return cyc_key(cyc(e - 1, n) - p.other_edge(e), 0, n) <
           cyc_key(cyc(e - 1, n) - q.other_edge(e), 0, n);
  });
  return out;
}

EdgeFactorization edge_factorization(const WilsonLoopDiagram& w,
                                     const std::vector<Propagator>& row_order,
                                     int e) {
  const int n = w.vertex_count();
  EdgeFactorization out;
  out.edge = e;
  out.ordered_props = edge_propagator_order(w, e);
  const int r = static_cast<int>(out.ordered_props.size());
  const int e1 = cyc(e + 1, n);
  if (r == 1) {
    const int row = row_of(row_order, out.ordered_props[0]);
    out.factors.push_back(var(row, e));
    out.factors.push_back(var(row, e1));
  } else if (r >= 2) {
    out.factors.push_back(var(row_of(row_order, out.ordered_props[0]), e1));
    for (int m = 0; m + 1 < r; ++m) {
      out.factors.push_back(pair_det(row_of(row_order, out.ordered_props[m]),
                                     row_of(row_order, out.ordered_props[m + 1]),
                                     e, e1));
    }
    out.factors.push_back(var(row_of(row_order, out.ordered_props[r - 1]), e));
  }
  return out;
}

FactoredPolynomial denominator_definition(const WilsonLoopDiagram& w,
                                          const std::vector<Propagator>& row_order) {
  FactoredPolynomial out;
  for (int e = 1; e <= w.vertex_count(); ++e) {
    for (SparsePolynomial& f : edge_factorization(w, row_order, e).factors)
      out.factors.push_back({std::move(f), 1});
  }
  return out;
}

std::vector<Propagator> s_set(const WilsonLoopDiagram& w,
                              const GrassmannNecklace& neck, int i) {
  if (i < 1 || i > neck.n) throw std::invalid_argument("index out of range [1..n]");
  const int prev = i == 1 ? neck.n : i - 1;
  std::vector<Propagator> out;
  for (const Propagator& p : w.propagators()) {
    if (neck.assigned_vertex(prev, p) != neck.assigned_vertex(i, p))
      out.push_back(p);
  }
  return out;
}

SparsePolynomial r_factor(const WilsonLoopDiagram& w, const GrassmannNecklace& neck,
                          int i, const std::vector<Propagator>& row_order) {
  return contribution_minor(w, neck, i, row_order, s_set(w, neck, i));
}

FactoredPolynomial r_factor_structural(const WilsonLoopDiagram& w,
                                       const GrassmannNecklace& neck, int i,
                                       const std::vector<Propagator>& row_order) {
  const int n = neck.n;
  auto ordered = by_contribution(neck, s_set(w, neck, i), i);
  FactoredPolynomial out;
  for (size_t t = 0; t < ordered.size(); ++t) {
    const Propagator& p = ordered[t];
    const int a = neck.assigned_vertex(i, p);
    if (t + 1 < ordered.size()) {
      const Propagator& q = ordered[t + 1];
      const int b = neck.assigned_vertex(i, q);
      if (b == cyc(a + 1, n) && p.has_edge(a) && q.has_edge(a)) {
        out.factors.push_back(
            {pair_det(row_of(row_order, p), row_of(row_order, q), a, b), 1});
        ++t;
        continue;
      }
    }
    out.factors.push_back({var(row_of(row_order, p), a), 1});
  }
  return out;
}

SparsePolynomial delta_minor(const WilsonLoopDiagram& w,
                             const GrassmannNecklace& neck, int i,
                             const std::vector<Propagator>& row_order) {
  return contribution_minor(w, neck, i, row_order, w.propagators());
}

FactoredPolynomial denominator_via_necklace(const WilsonLoopDiagram& w,
                                            const std::vector<Propagator>& row_order) {
  const GrassmannNecklace neck = grassmann_necklace(w);
  FactoredPolynomial out;
  for (int i = 1; i <= neck.n; ++i) {
    for (auto& [f, mult] : r_factor_structural(w, neck, i, row_order).factors)
      out.factors.push_back({std::move(f), mult});
  }
  return out;
}

namespace {

// Canonical representative up to sign: leading coefficient made positive.
SparsePolynomial normalize_sign(const SparsePolynomial& f) {
  if (f.is_zero()) return f;
  return f.terms().rbegin()->second < 0 ? -f : f;
}

bool reduces_to_unit(SparsePolynomial value,
                     const std::vector<SparsePolynomial>& factors) {
  bool progressed = true;
  while (progressed && !value.is_plus_minus_one()) {
    progressed = false;
    for (const SparsePolynomial& f : factors) {
      if (f.total_degree() < 1) continue;
      while (auto q = exact_divide(value, f)) {
        value = *q;
        progressed = true;
      }
    }
  }
  return value.is_plus_minus_one();
}

}  // namespace

DenominatorReport verify_radical(const WilsonLoopDiagram& w,
                                 const std::vector<Propagator>& row_order) {
  const GrassmannNecklace neck = grassmann_necklace(w);
  const int n = neck.n;
  DenominatorReport report;
  report.r_definition = denominator_definition(w, row_order);
  report.r_necklace = denominator_via_necklace(w, row_order);

  SparsePolynomial product(1);
  for (int i = 1; i <= n; ++i) {
    report.s_sets.push_back(s_set(w, neck, i));
    report.r_factors.push_back(r_factor(w, neck, i, row_order));
    report.deltas.push_back(delta_minor(w, neck, i, row_order));
    product = product * report.r_factors.back();
  }

  bool divides_all = true;
  for (int i = 1; i <= n; ++i) {
    const bool ok =
        exact_divide(report.deltas[i - 1], report.r_factors[i - 1]).has_value();
    report.checks.r_divides_delta.push_back(ok);
    if (!ok) {
      divides_all = false;
      report.failures.push_back("factor does not divide minor at index " +
                                std::to_string(i) + ": " +
                                report.r_factors[i - 1].str() + " vs " +
                                report.deltas[i - 1].str());
    }
  }

  report.checks.products_equal = product == report.r_definition.expand();
  if (!report.checks.products_equal)
    report.failures.push_back("edge-local and necklace products differ");

  std::vector<SparsePolynomial> listed;
  for (const auto& [f, mult] : report.r_necklace.factors) {
    for (int t = 0; t < mult; ++t) listed.push_back(normalize_sign(f));
  }
  report.checks.square_free = true;
  for (size_t x = 0; x < listed.size(); ++x) {
    for (size_t y = x + 1; y < listed.size(); ++y) {
      if (listed[x] == listed[y]) {
        report.checks.square_free = false;
        report.failures.push_back("repeated factor " + listed[x].str());
      }
    }
  }

  bool reduce_ok = true;
  for (int i = 1; i <= n; ++i) {
    if (!reduces_to_unit(report.deltas[i - 1], listed)) {
      reduce_ok = false;
      report.failures.push_back("minor at index " + std::to_string(i) +
                                " does not reduce over the factor list: " +
                                report.deltas[i - 1].str());
    }
  }

  report.checks.radical_ok = divides_all && report.checks.products_equal &&
                             report.checks.square_free && reduce_ok;
  return report;
}

}  // namespace wlp
