#include <random>

#include "doctest.h"
#include "support.hpp"
#include "wlp/matroid.hpp"
#include "wlp/sympoly.hpp"

using namespace wlp;
using test::w7;
using test::w7_rows;
using test::w8;

namespace {

SparsePolynomial var(int row, int vertex) {
  return SparsePolynomial::variable(Variable{row, vertex});
}

// Plain sum over all permutations, as a reference for the pruning expansion.
SparsePolynomial leibniz(const SymbolicMatrix& m, std::vector<int> rows,
                         const std::vector<int>& cols) {
  std::vector<int> perm(rows.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  SparsePolynomial out;
  do {
    int inversions = 0;
    for (size_t x = 0; x < perm.size(); ++x) {
      for (size_t y = x + 1; y < perm.size(); ++y) {
        if (perm[x] > perm[y]) ++inversions;
      }
    }
    Monomial mono;
    bool zero = false;
    for (size_t r = 0; r < perm.size(); ++r) {
      if (!m.has_entry(rows[r], cols[perm[r]])) {
        zero = true;
        break;
      }
      mono = mono * Monomial::variable(m.entry(rows[r], cols[perm[r]]));
    }
    if (!zero) out.add_term(mono, inversions % 2 == 0 ? 1 : -1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

TEST_CASE("zero patterns of the interaction matrix") {
  const SymbolicMatrix m8 = c_matrix(w8(), w8().propagators());
  const std::vector<std::vector<int>> nonzero8 = {
      {1, 2, 4, 5}, {2, 3, 4, 5}, {5, 6, 7, 8}, {1, 5, 6, 8}};
  for (int r = 1; r <= 4; ++r) {
    for (int v = 1; v <= 8; ++v) {
      const auto& row = nonzero8[r - 1];
      CHECK(m8.has_entry(r, v) ==
            (std::find(row.begin(), row.end(), v) != row.end()));
    }
  }

  const SymbolicMatrix m7 = c_matrix(w7(), w7_rows());
  const std::vector<std::vector<int>> nonzero7 = {
      {1, 2, 6, 7}, {1, 2, 5, 6}, {1, 2, 4, 5}};
  for (int r = 1; r <= 3; ++r) {
    for (int v = 1; v <= 7; ++v) {
      const auto& row = nonzero7[r - 1];
      CHECK(m7.has_entry(r, v) ==
            (std::find(row.begin(), row.end(), v) != row.end()));
    }
  }

  CHECK(c_matrix(WilsonLoopDiagram(6, {}), {}).rows() == 0);
  CHECK_THROWS_AS(c_matrix(w8(), {{1, 4}}), std::invalid_argument);
}

TEST_CASE("pinned minors of the heptagon matrix") {
  const SymbolicMatrix m = c_matrix(w7(), w7_rows());
  CHECK(minor_det(m, {2, 3}, {1, 2}) ==
        var(2, 1) * var(3, 2) - var(2, 2) * var(3, 1));
  CHECK(minor_det(m, {1, 2, 3}, {1, 2, 4}) ==
        (var(1, 1) * var(2, 2) - var(1, 2) * var(2, 1)) * var(3, 4));
  CHECK(minor_det(m, {1}, {7}) == var(1, 7));
  CHECK(minor_det(m, {}, {}) == SparsePolynomial(1));
  CHECK_THROWS_AS(minor_det(m, {1, 2}, {1}), std::invalid_argument);
}

TEST_CASE("minors are alternating") {
  const SymbolicMatrix m = c_matrix(w8(), w8().propagators());
  CHECK(minor_det(m, {1, 2}, {4, 5}) == -minor_det(m, {2, 1}, {4, 5}));
  CHECK(minor_det(m, {1, 2}, {4, 4}).is_zero());
  CHECK(minor_det(m, {3, 3}, {5, 6}).is_zero());
}

TEST_CASE("expansion matches the permutation sum") {
  const SymbolicMatrix m8 = c_matrix(w8(), w8().propagators());
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> pick_size(1, 4);
    const int size = pick_size(rng);
    std::vector<int> rows, cols;
    std::uniform_int_distribution<int> pick_row(1, 4);
    std::uniform_int_distribution<int> pick_col(1, 8);
    for (int t = 0; t < size; ++t) {
      rows.push_back(pick_row(rng));
      cols.push_back(pick_col(rng));
    }
    CHECK(minor_det(m8, rows, cols) == leibniz(m8, rows, cols));
  }
}

TEST_CASE("monomials count the saturating bijections") {
  test::for_each_admissible_up_to(6, [](const WilsonLoopDiagram& w) {
    if (w.propagator_count() == 0) return;
    const SymbolicMatrix m = c_matrix(w, w.propagators());
    std::vector<int> rows;
    for (int r = 1; r <= w.propagator_count(); ++r) rows.push_back(r);
    for (const auto& basis : bases(w)) {
      const SparsePolynomial det = minor_det(m, rows, basis);
      CHECK(static_cast<std::int64_t>(det.term_count()) ==
            count_saturating_bijections(w, w.propagators(), basis));
    }
  });
}

TEST_CASE("full minors vanish exactly on dependent columns") {
  test::for_each_admissible_up_to(6, [](const WilsonLoopDiagram& w) {
    const int k = w.propagator_count();
    const int n = w.vertex_count();
    if (k == 0) return;
    const SymbolicMatrix m = c_matrix(w, w.propagators());
    std::vector<int> rows;
    for (int r = 1; r <= k; ++r) rows.push_back(r);
    // Walk all k-subsets of the columns.
    std::vector<int> cols(k);
    for (int i = 0; i < k; ++i) cols[i] = i + 1;
    for (;;) {
      const SparsePolynomial det = minor_det(m, rows, cols);
      CHECK(det.is_zero() != is_independent(w, cols));
      if (!det.is_zero()) {
        CHECK(det.is_homogeneous());
        CHECK(det.total_degree() == k);
      }
      int pos = k - 1;
      while (pos >= 0 && cols[pos] == n - k + pos + 1) --pos;
      if (pos < 0) break;
      ++cols[pos];
      for (int i = pos + 1; i < k; ++i) cols[i] = cols[i - 1] + 1;
    }
  });
}

TEST_CASE("exact division") {
  const SparsePolynomial quad = var(2, 1) * var(3, 2) - var(2, 2) * var(3, 1);
  const SparsePolynomial d = var(1, 7);
  REQUIRE(exact_divide(quad * d, quad).has_value());
  CHECK(*exact_divide(quad * d, quad) == d);

  const SymbolicMatrix m = c_matrix(w7(), w7_rows());
  const SparsePolynomial delta7 = minor_det(m, {1, 2, 3}, {7, 1, 2});
  REQUIRE(exact_divide(delta7, quad).has_value());
  CHECK(*exact_divide(delta7, quad) == d);

  CHECK(!exact_divide(var(1, 1), var(1, 2)).has_value());
  CHECK_THROWS_AS(exact_divide(var(1, 1), SparsePolynomial()),
                  std::invalid_argument);
}

TEST_CASE("division round-trips on random factored products") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(1, 6);
  for (int trial = 0; trial < 30; ++trial) {
    SparsePolynomial f(1);
    SparsePolynomial g(1);
    for (int t = 0; t < 3; ++t) {
      const SparsePolynomial factor =
          var(pick(rng), pick(rng)) * var(pick(rng), pick(rng)) -
          var(pick(rng), pick(rng)) * var(pick(rng), pick(rng));
      if (factor.is_zero()) continue;
      if (t == 0) {
        g = g * factor;
      } else {
        f = f * factor;
      }
    }
    const SparsePolynomial product = f * g;
    auto quotient = exact_divide(product, g);
    REQUIRE(quotient.has_value());
    CHECK(*quotient == f);
  }
}

TEST_CASE("deterministic printing") {
  const SparsePolynomial quad = var(2, 1) * var(3, 2) - var(2, 2) * var(3, 1);
  CHECK(quad.str() == "x_{2,1}*x_{3,2} - x_{2,2}*x_{3,1}");
  CHECK(SparsePolynomial().str() == "0");
  CHECK(SparsePolynomial(1).str() == "1");
  CHECK((-SparsePolynomial(3)).str() == "-3");
  CHECK((var(1, 2) * var(1, 2)).str() == "x_{1,2}^2");

  FactoredPolynomial f;
  f.factors.push_back({var(1, 1), 1});
  f.factors.push_back({quad, 1});
  f.factors.push_back({var(2, 5), 2});
  CHECK(f.str() == "x_{1,1}*(x_{2,1}*x_{3,2} - x_{2,2}*x_{3,1})*x_{2,5}^2");
  CHECK(f.expand() == var(1, 1) * quad * var(2, 5) * var(2, 5));
  CHECK(f.total_degree() == 5);
}
