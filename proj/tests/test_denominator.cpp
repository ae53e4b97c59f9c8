#include <map>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "wlp/denominator.hpp"

using namespace wlp;
using test::w7;
using test::w7_rows;
using test::w8;

namespace {

SparsePolynomial var(int row, int vertex) {
  return SparsePolynomial::variable(Variable{row, vertex});
}

SparsePolynomial pair_det(int row_p, int row_q, int a, int b) {
  return var(row_p, a) * var(row_q, b) - var(row_p, b) * var(row_q, a);
}

SparsePolynomial normalize_sign(const SparsePolynomial& f) {
  if (f.is_zero()) return f;
  return f.terms().rbegin()->second < 0 ? -f : f;
}

}  // namespace

TEST_CASE("propagator order along an edge") {
  CHECK(edge_propagator_order(w8(), 4) == std::vector<Propagator>{{2, 4}, {1, 4}});
  CHECK(edge_propagator_order(w8(), 5) == std::vector<Propagator>{{5, 8}, {5, 7}});
  CHECK(edge_propagator_order(w7(), 1) ==
        std::vector<Propagator>{{1, 6}, {1, 5}, {1, 4}});
  CHECK(edge_propagator_order(w8(), 3).empty());
  CHECK_THROWS_AS(edge_propagator_order(w8(), 9), std::invalid_argument);
}

TEST_CASE("edge factor lists") {
  const auto rows = w8().propagators();
  const EdgeFactorization lone = edge_factorization(w8(), rows, 1);
  REQUIRE(lone.factors.size() == 2);
  CHECK(lone.factors[0] == var(1, 1));
  CHECK(lone.factors[1] == var(1, 2));

  const EdgeFactorization fan = edge_factorization(w8(), rows, 4);
  REQUIRE(fan.factors.size() == 3);
  CHECK(fan.factors[0] == var(2, 5));
  CHECK(fan.factors[1] == pair_det(2, 1, 4, 5));
  CHECK(fan.factors[2] == var(1, 4));

  CHECK(edge_factorization(w8(), rows, 3).factors.empty());
}

TEST_CASE("denominator by the edge definition") {
  const auto rows = w8().propagators();
  const FactoredPolynomial r = denominator_definition(w8(), rows);
  REQUIRE(r.factors.size() == 14);
  CHECK(r.factors[4].first == var(2, 5));
  CHECK(r.factors[5].first == pair_det(2, 1, 4, 5));
  CHECK(r.factors[8].first == pair_det(4, 3, 5, 6));
  CHECK(r.total_degree() == 16);

  CHECK(denominator_definition(WilsonLoopDiagram(6, {}), {}).expand().is_one());

  // Heptagon: factor multiset {b, (af-be), (ej-fi), i, k, l, g, h, c, d}.
  const FactoredPolynomial r7 = denominator_definition(w7(), w7_rows());
  std::multiset<std::string> factors;
  for (const auto& [f, mult] : r7.factors) {
    REQUIRE(mult == 1);
    factors.insert(f.str());
  }
  const std::multiset<std::string> expected = {
      var(1, 2).str(),         pair_det(1, 2, 1, 2).str(),
      pair_det(2, 3, 1, 2).str(), var(3, 1).str(),
      var(3, 4).str(),         var(3, 5).str(),
      var(2, 5).str(),         var(2, 6).str(),
      var(1, 6).str(),         var(1, 7).str()};
  CHECK(factors == expected);
}

TEST_CASE("changed propagator sets") {
  const GrassmannNecklace neck = grassmann_necklace(w7());
  CHECK(s_set(w7(), neck, 7) == std::vector<Propagator>{{1, 4}, {1, 5}});
  CHECK(s_set(w7(), neck, 4).empty());
  CHECK(s_set(w7(), neck, 2) == std::vector<Propagator>{{1, 5}, {1, 6}});
}

TEST_CASE("per-index factors of the heptagon") {
  const GrassmannNecklace neck = grassmann_necklace(w7());
  const auto rows = w7_rows();
  CHECK(r_factor(w7(), neck, 1, rows) == pair_det(1, 2, 1, 2) * var(3, 4));
  CHECK(r_factor(w7(), neck, 2, rows) == var(1, 2) * var(2, 5));
  CHECK(r_factor(w7(), neck, 3, rows) == var(1, 6));
  CHECK(r_factor(w7(), neck, 4, rows) == SparsePolynomial(1));
  CHECK(r_factor(w7(), neck, 5, rows) == var(3, 5) * var(2, 6) * var(1, 7));
  CHECK(r_factor(w7(), neck, 6, rows) == var(3, 1));
  CHECK(r_factor(w7(), neck, 7, rows) == pair_det(2, 3, 1, 2));
}

TEST_CASE("structural factors match the minors") {
  test::for_each_admissible_up_to(7, [](const WilsonLoopDiagram& w) {
    const GrassmannNecklace neck = grassmann_necklace(w);
    const auto rows = w.propagators();
    for (int i = 1; i <= neck.n; ++i) {
      CHECK(r_factor_structural(w, neck, i, rows).expand() ==
            r_factor(w, neck, i, rows));
    }
  });
}

TEST_CASE("quadratic factors appear exactly for shared-edge pairs") {
  test::for_each_admissible_up_to(7, [](const WilsonLoopDiagram& w) {
    const int n = w.vertex_count();
    const GrassmannNecklace neck = grassmann_necklace(w);
    const auto rows = w.propagators();
    for (int i = 1; i <= neck.n; ++i) {
      const SparsePolynomial delta = delta_minor(w, neck, i, rows);
      for (const Propagator& p : w.propagators()) {
        for (const Propagator& q : w.propagators()) {
          if (p == q) continue;
          const int a = neck.assigned_vertex(i, p);
          const bool paired = neck.assigned_vertex(i, q) == cyc(a + 1, n) &&
                              p.has_edge(a) && q.has_edge(a);
          int rp = 0, rq = 0;
          for (size_t t = 0; t < rows.size(); ++t) {
            if (rows[t] == p) rp = static_cast<int>(t) + 1;
            if (rows[t] == q) rq = static_cast<int>(t) + 1;
          }
          const SparsePolynomial f = pair_det(rp, rq, a, cyc(a + 1, n));
          CHECK(paired == exact_divide(delta, f).has_value());
        }
      }
    }
  });
}

TEST_CASE("necklace denominator equals the edge definition") {
  CHECK(denominator_via_necklace(w8(), w8().propagators()).expand() ==
        denominator_definition(w8(), w8().propagators()).expand());
  CHECK(denominator_via_necklace(w7(), w7_rows()).expand() ==
        denominator_definition(w7(), w7_rows()).expand());
  CHECK(denominator_via_necklace(WilsonLoopDiagram(7, {}), {}).expand().is_one());
}

TEST_CASE("verification report for the heptagon") {
  const DenominatorReport report = verify_radical(w7(), w7_rows());
  CHECK(report.checks.products_equal);
  CHECK(report.checks.square_free);
  CHECK(report.checks.radical_ok);
  for (bool b : report.checks.r_divides_delta) CHECK(b);
  CHECK(report.failures.empty());
  CHECK(report.deltas[1] == var(3, 4) * var(2, 5) * var(1, 2));
  CHECK(report.r_definition.expand() == report.r_necklace.expand());
}

TEST_CASE("verification report for the octagon and the empty diagram") {
  CHECK(verify_radical(w8(), w8().propagators()).checks.radical_ok);
  const DenominatorReport empty = verify_radical(WilsonLoopDiagram(8, {}), {});
  CHECK(empty.checks.radical_ok);
  CHECK(empty.r_definition.expand().is_one());
}

TEST_CASE("every factor enters at exactly one transition") {
  test::for_each_admissible_up_to(7, [](const WilsonLoopDiagram& w) {
    const GrassmannNecklace neck = grassmann_necklace(w);
    const auto rows = w.propagators();
    std::map<std::string, int> seen;
    for (int i = 1; i <= neck.n; ++i) {
      for (const auto& [f, mult] : r_factor_structural(w, neck, i, rows).factors)
        seen[normalize_sign(f).str()] += mult;
    }
    for (const auto& [name, count] : seen) CHECK(count == 1);
  });
}
