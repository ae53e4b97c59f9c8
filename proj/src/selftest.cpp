#include "wlp/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "wlp/denominator.hpp"
#include "wlp/le_diagram.hpp"
#include "wlp/matroid.hpp"
#include "wlp/necklace.hpp"
#include "wlp/sympoly.hpp"

namespace wlp {

namespace {

WilsonLoopDiagram eight_vertex_example() {
  return {8, {{1, 4}, {2, 4}, {5, 7}, {5, 8}}};
}

WilsonLoopDiagram seven_vertex_example() {
  return {7, {{1, 6}, {1, 5}, {1, 4}}};
}

// Row order used throughout the seven-vertex checks.
std::vector<Propagator> seven_vertex_rows() {
  return {{1, 6}, {1, 5}, {1, 4}};
}

std::string describe(const WilsonLoopDiagram& w) {
  std::ostringstream out;
  out << "n=" << w.vertex_count() << " props=[";
  bool first = true;
  for (const Propagator& p : w.propagators()) {
    if (!first) out << ",";
    first = false;
    out << "(" << p.a << "," << p.b << ")";
  }
  out << "]";
  return out.str();
}

template <typename Fn>
void for_each_admissible(int max_n, Fn&& fn) {
  for (int n = 4; n <= max_n; ++n) {
    for (int k = 0; k <= n - 4; ++k) {
      for (const WilsonLoopDiagram& w : enumerate_admissible(k, n)) fn(w);
    }
  }
}

SparsePolynomial var(int row, int vertex) {
  return SparsePolynomial::variable(Variable{row, vertex});
}

SparsePolynomial pair_det(int row_p, int row_q, int a, int b) {
  return var(row_p, a) * var(row_q, b) - var(row_p, b) * var(row_q, a);
}

CaseResult golden_necklace() {
  CaseResult result{"golden-necklace", true, ""};
  const WilsonLoopDiagram w = eight_vertex_example();
  grassmann_necklace(w);  // warm up
  const auto start = std::chrono::steady_clock::now();
  const GrassmannNecklace neck = grassmann_necklace(w);
  const auto stop = std::chrono::steady_clock::now();
  const double micros =
      std::chrono::duration<double, std::micro>(stop - start).count();

  const std::vector<std::vector<int>> expected = {
      {1, 2, 3, 5}, {2, 3, 5, 6}, {3, 4, 5, 6}, {4, 5, 6, 7},
      {5, 6, 7, 1}, {6, 7, 1, 2}, {7, 8, 1, 2}, {8, 1, 2, 3}};
  if (neck.terms != expected) {
    result.pass = false;
    result.detail = "terms mismatch";
    return result;
  }
  const std::vector<std::pair<Propagator, int>> first_walk = {
      {{5, 8}, 1}, {{1, 4}, 2}, {{2, 4}, 3}, {{5, 7}, 5}};
  for (const auto& [p, v] : first_walk) {
    if (neck.assigned_vertex(1, p) != v) {
      result.pass = false;
      result.detail = "first-walk assignment mismatch";
      return result;
    }
  }
  if (micros >= 1000.0) {
    result.pass = false;
    result.detail = "too slow";
  }
  std::ostringstream out;
  out << "terms and assignments exact, " << micros << " us";
  result.detail = out.str();
  return result;
}

CaseResult golden_denominator_eight() {
  CaseResult result{"golden-denominator-8", true, ""};
  const WilsonLoopDiagram w = eight_vertex_example();
  const auto rows = w.propagators();  // (1,4),(2,4),(5,7),(5,8)
  const FactoredPolynomial actual = denominator_definition(w, rows);

  std::vector<SparsePolynomial> expected;
  expected.push_back(var(1, 1));
  expected.push_back(var(1, 2));
  expected.push_back(var(2, 2));
  expected.push_back(var(2, 3));
  expected.push_back(var(2, 5));
  expected.push_back(pair_det(2, 1, 4, 5));
  expected.push_back(var(1, 4));
  expected.push_back(var(4, 6));
  expected.push_back(pair_det(4, 3, 5, 6));
  expected.push_back(var(3, 5));
  expected.push_back(var(3, 7));
  expected.push_back(var(3, 8));
  expected.push_back(var(4, 8));
  expected.push_back(var(4, 1));

  if (actual.sign != 1 || actual.factors.size() != expected.size()) {
    result.pass = false;
    result.detail = "factor count mismatch";
    return result;
  }
  for (size_t i = 0; i < expected.size(); ++i) {
    if (actual.factors[i].first != expected[i] || actual.factors[i].second != 1) {
      result.pass = false;
      result.detail = "factor " + std::to_string(i) + " differs";
      return result;
    }
  }
  result.detail = "all 14 edge factors exact, both quadratics included";
  return result;
}

CaseResult golden_denominator_seven() {
  CaseResult result{"golden-denominator-7", true, ""};
  const WilsonLoopDiagram w = seven_vertex_example();
  const auto rows = seven_vertex_rows();
  const GrassmannNecklace neck = grassmann_necklace(w);

  const std::vector<std::vector<int>> expected_terms = {
      {1, 2, 4}, {2, 4, 5}, {4, 5, 6}, {4, 5, 6}, {5, 6, 7}, {6, 7, 1}, {7, 1, 2}};
  if (neck.terms != expected_terms) {
    result.pass = false;
    result.detail = "terms mismatch";
    return result;
  }

  const std::vector<std::vector<Propagator>> expected_s = {
      {{1, 4}, {1, 5}, {1, 6}}, {{1, 5}, {1, 6}}, {{1, 6}}, {},
      {{1, 4}, {1, 5}, {1, 6}}, {{1, 4}}, {{1, 4}, {1, 5}}};
  std::vector<SparsePolynomial> expected_r;
  expected_r.push_back(pair_det(1, 2, 1, 2) * var(3, 4));
  expected_r.push_back(var(1, 2) * var(2, 5));
  expected_r.push_back(var(1, 6));
  expected_r.push_back(SparsePolynomial(1));
  expected_r.push_back(var(3, 5) * var(2, 6) * var(1, 7));
  expected_r.push_back(var(3, 1));
  expected_r.push_back(pair_det(2, 3, 1, 2));

  SparsePolynomial product(1);
  for (int i = 1; i <= 7; ++i) {
    if (s_set(w, neck, i) != expected_s[i - 1]) {
      result.pass = false;
      result.detail = "changed set differs at index " + std::to_string(i);
      return result;
    }
    const SparsePolynomial r = r_factor(w, neck, i, rows);
    if (r != expected_r[i - 1]) {
      result.pass = false;
      result.detail = "factor differs at index " + std::to_string(i);
      return result;
    }
    product = product * r;
  }

  SparsePolynomial expected_product(1);
  for (const auto& r : expected_r) expected_product = expected_product * r;
  if (product != expected_product ||
      product != denominator_definition(w, rows).expand()) {
    result.pass = false;
    result.detail = "product mismatch";
    return result;
  }
  result.detail = "terms, changed sets, all 7 factors and the product exact";
  return result;
}

CaseResult radical_theorem(const std::vector<WilsonLoopDiagram>& corpus) {
  CaseResult result{"radical-theorem", true, ""};
  int checked = 0;
  for (const WilsonLoopDiagram& w : corpus) {
    const DenominatorReport report = verify_radical(w, w.propagators());
    bool ok = report.checks.radical_ok && report.checks.products_equal &&
              report.checks.square_free;
    for (bool b : report.checks.r_divides_delta) ok = ok && b;
    const SparsePolynomial expanded = report.r_definition.expand();
    const int expected_degree = 4 * w.propagator_count();
    ok = ok && expanded.total_degree() == expected_degree;
    if (w.propagator_count() == 0) ok = ok && expanded.is_one();
    if (!ok) {
      result.pass = false;
      result.detail = "failed on " + describe(w);
      return result;
    }
    ++checked;
  }
  result.detail = "all checks and degree 4k on " + std::to_string(checked) +
                  " diagrams";
  return result;
}

CaseResult dimension_theorem(const std::vector<WilsonLoopDiagram>& corpus) {
  CaseResult result{"dimension-theorem", true, ""};
  int checked = 0;
  for (const WilsonLoopDiagram& w : corpus) {
    const LeDiagram d = le_from_necklace(grassmann_necklace(w));
    if (!validate_le(d) || plus_count(d) != 3 * w.propagator_count()) {
      result.pass = false;
      result.detail = "failed on " + describe(w);
      return result;
    }
    ++checked;
  }
  result.detail = "valid filling and 3k plusses on " + std::to_string(checked) +
                  " diagrams";
  return result;
}

CaseResult necklace_matroid_agreement(int max_n) {
  CaseResult result{"necklace-matroid-agreement", true, ""};
  int checked = 0;
  bool ok = true;
  std::string failure;
  for_each_admissible(std::min(max_n, 8), [&](const WilsonLoopDiagram& w) {
    if (!ok) return;
    const GrassmannNecklace neck = grassmann_necklace(w);
    for (int i = 1; i <= neck.n; ++i) {
      if (neck.terms[i - 1] != lexmin_basis(w, i)) {
        ok = false;
        failure = "lex-minimal basis differs on " + describe(w);
        return;
      }
    }
    if (bases_from_necklace(neck) != bases(w)) {
      ok = false;
      failure = "basis families differ on " + describe(w);
      return;
    }
    ++checked;
  });
  result.pass = ok;
  result.detail = ok ? "terms equal lex-minimal bases and basis families agree on " +
                           std::to_string(checked) + " diagrams"
                     : failure;
  return result;
}

bool check_intervals(const WilsonLoopDiagram& w, const GrassmannNecklace& neck) {
  const int n = w.vertex_count();
  for (const Propagator& p : w.propagators()) {
    auto intervals = contribution_intervals(neck, p);
    const std::vector<int> support = {p.a, cyc(p.a + 1, n), p.b, cyc(p.b + 1, n)};
    if (intervals.size() != 4) return false;
    int total = 0;
    for (int t = 0; t < 4; ++t) {
      auto it = intervals.find(support[t]);
      auto next = intervals.find(support[(t + 1) % 4]);
      if (it == intervals.end() || next == intervals.end()) return false;
      if (cyc(it->second.hi + 1, n) != next->second.lo) return false;
      total += it->second.size(n);
    }
    if (total != n) return false;
  }
  return true;
}

bool check_zero_column(const WilsonLoopDiagram& w) {
  const LeDiagram actual = le_from_necklace(grassmann_necklace(w));
  for (int v : nonsupporting_vertices(w)) {
    const WilsonLoopDiagram smaller = remove_nonsupporting_vertex(w, v);
    const LeDiagram base = le_from_necklace(grassmann_necklace(smaller));
    auto relabel = [&](int x) { return x >= v ? x + 1 : x; };
    std::vector<int> rows;
    for (int a : base.row_labels) rows.push_back(relabel(a));
    LeDiagram expected = le_shape(w.vertex_count(), rows);
    for (size_t r = 0; r < base.row_labels.size(); ++r) {
      for (int c = 0; c < base.shape[r]; ++c) {
        if (base.cells[r][c] == Cell::Plus)
          expected.set(relabel(base.row_labels[r]), relabel(base.col_labels[c]),
                       Cell::Plus);
      }
    }
    if (!(expected == actual)) return false;
  }
  return true;
}

bool check_dihedral(const WilsonLoopDiagram& w) {
  const int n = w.vertex_count();
  const int reference = dimension(w);
  for (int s = 0; s < n; ++s) {
    if (dimension(rotate(w, s)) != reference) return false;
  }
  for (int c = 0; c < n; ++c) {
    if (dimension(reflect(w, c)) != reference) return false;
  }
  return true;
}

CaseResult lemma_suite(int max_n) {
  CaseResult result{"lemma-suite", true, ""};
  int checked = 0;
  bool ok = true;
  std::string failure;
  for_each_admissible(max_n, [&](const WilsonLoopDiagram& w) {
    if (!ok) return;
    const int n = w.vertex_count();
    const GrassmannNecklace neck = grassmann_necklace(w);
    for (int i = 1; i <= n; ++i) {
      const auto& term = neck.terms[i - 1];
      if (std::find(term.begin(), term.end(), cyc(i - 1, n)) != term.end()) {
        ok = false;
        failure = "walk reached the final support vertex on " + describe(w);
        return;
      }
    }
    if (!check_intervals(w, neck)) {
      ok = false;
      failure = "contribution intervals broken on " + describe(w);
      return;
    }
    if (loops(neck) != nonsupporting_vertices(w) || !coloops(neck).empty()) {
      ok = false;
      failure = "loop/coloop characterization broken on " + describe(w);
      return;
    }
    if (!check_zero_column(w)) {
      ok = false;
      failure = "zero-column insertion broken on " + describe(w);
      return;
    }
    if (!check_dihedral(w)) {
      ok = false;
      failure = "plus count not dihedral-invariant on " + describe(w);
      return;
    }
    ++checked;
  });
  result.pass = ok;
  result.detail = ok ? "all lemma properties hold on " + std::to_string(checked) +
                           " diagrams"
                     : failure;
  return result;
}

CaseResult small_config(int max_n) {
  CaseResult result{"small-config", true, ""};
  int checked = 0;
  for (int n = 5; n <= max_n; ++n) {
    for (int k = 2; k <= n - 3; ++k) {
      for (const WilsonLoopDiagram& w : enumerate_weakly_admissible(k, n)) {
        if (!nonsupporting_vertices(w).empty()) continue;
        const auto config = find_small_config(w);
        bool ok = config.has_value();
        if (ok) {
          ok = config->kind == SmallConfig::Kind::LongShort
                   ? is_config_long_short(w, config->first, config->second)
                   : is_config_short_pair(w, config->first, config->second);
        }
        if (!ok) {
          result.pass = false;
          result.detail = "no validating configuration on " + describe(w);
          return result;
        }
        ++checked;
      }
    }
  }
  result.detail = "configuration found and revalidated on " +
                  std::to_string(checked) + " diagrams";
  return result;
}

}  // namespace

WilsonLoopDiagram random_admissible_diagram(std::mt19937& rng, int n_lo, int n_hi) {
  std::uniform_int_distribution<int> pick_n(n_lo, n_hi);
  for (;;) {
    const int n = pick_n(rng);
    std::uniform_int_distribution<int> pick_k(1, n - 4);
    const int k = pick_k(rng);
    std::vector<Propagator> candidates;
    for (int a = 1; a <= n; ++a) {
      for (int b = a + 2; b <= n; ++b) {
        if (a == 1 && b == n) continue;  // cyclically adjacent edges
        candidates.emplace_back(a, b);
      }
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);
    std::vector<Propagator> chosen;
    for (const Propagator& p : candidates) {
      if (static_cast<int>(chosen.size()) == k) break;
      std::vector<Propagator> trial = chosen;
      trial.push_back(p);
      if (is_weakly_admissible(WilsonLoopDiagram(n, trial))) chosen = trial;
    }
    if (static_cast<int>(chosen.size()) == k) return {n, chosen};
  }
}

std::vector<CaseResult> run_selftest(const SelftestOptions& options) {
  std::vector<WilsonLoopDiagram> corpus;
  for_each_admissible(options.max_n,
                      [&](const WilsonLoopDiagram& w) { corpus.push_back(w); });
  std::mt19937 rng(options.seed);
  for (int t = 0; t < options.random_count; ++t) {
    corpus.push_back(
        random_admissible_diagram(rng, options.random_n_lo, options.random_n_hi));
  }

  std::vector<CaseResult> table;
  table.push_back(golden_necklace());
  table.push_back(golden_denominator_eight());
  table.push_back(golden_denominator_seven());
  table.push_back(radical_theorem(corpus));
  table.push_back(dimension_theorem(corpus));
  table.push_back(necklace_matroid_agreement(options.max_n));
  table.push_back(lemma_suite(options.max_n));
  table.push_back(small_config(options.max_n));
  return table;
}

}  // namespace wlp
