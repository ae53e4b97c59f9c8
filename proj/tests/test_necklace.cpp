#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "support.hpp"
#include "wlp/necklace.hpp"

using namespace wlp;
using test::w7;
using test::w8;

TEST_CASE("clockwise order at a vertex") {
  CHECK(clockwise_order_at_vertex(w8(), 1, {{1, 4}, {5, 8}}) ==
        std::vector<Propagator>{{5, 8}, {1, 4}});
  CHECK(clockwise_order_at_vertex(w7(), 1, {{1, 6}, {1, 5}, {1, 4}}) ==
        std::vector<Propagator>{{1, 6}, {1, 5}, {1, 4}});
  CHECK(clockwise_order_at_vertex(w8(), 5, {{2, 4}, {1, 4}}) ==
        std::vector<Propagator>{{2, 4}, {1, 4}});
  CHECK_THROWS_AS(clockwise_order_at_vertex(w8(), 3, {{5, 8}}),
                  std::invalid_argument);
}

TEST_CASE("necklace of the eight-vertex example") {
  const GrassmannNecklace neck = grassmann_necklace(w8());
  const std::vector<std::vector<int>> expected = {
      {1, 2, 3, 5}, {2, 3, 5, 6}, {3, 4, 5, 6}, {4, 5, 6, 7},
      {5, 6, 7, 1}, {6, 7, 1, 2}, {7, 8, 1, 2}, {8, 1, 2, 3}};
  CHECK(neck.terms == expected);
  CHECK(neck.assigned_vertex(1, {5, 8}) == 1);
  CHECK(neck.assigned_vertex(1, {1, 4}) == 2);
  CHECK(neck.assigned_vertex(1, {2, 4}) == 3);
  CHECK(neck.assigned_vertex(1, {5, 7}) == 5);
  CHECK(neck.assigned_vertex(8, {5, 7}) == 8);
  CHECK(neck.assigned_vertex(8, {5, 8}) == 1);
}

TEST_CASE("necklace of the seven-vertex example") {
  const GrassmannNecklace neck = grassmann_necklace(w7());
  const std::vector<std::vector<int>> expected = {
      {1, 2, 4}, {2, 4, 5}, {4, 5, 6}, {4, 5, 6}, {5, 6, 7}, {6, 7, 1}, {7, 1, 2}};
  CHECK(neck.terms == expected);
  // Last walk: the fan is picked up at 7, 1, 2 from the outside in.
  CHECK(neck.assigned_vertex(7, {1, 6}) == 7);
  CHECK(neck.assigned_vertex(7, {1, 5}) == 1);
  CHECK(neck.assigned_vertex(7, {1, 4}) == 2);
}

TEST_CASE("necklace without propagators") {
  const GrassmannNecklace neck = grassmann_necklace(WilsonLoopDiagram(6, {}));
  for (const auto& t : neck.terms) CHECK(t.empty());
}

TEST_CASE("necklace rejects non weakly admissible input") {
  CHECK_THROWS_AS(grassmann_necklace(WilsonLoopDiagram(7, {{1, 3}, {2, 4}})),
                  std::domain_error);
  // Weakly admissible but too many propagators for its size still walks fine.
  const GrassmannNecklace neck = grassmann_necklace(WilsonLoopDiagram(4, {{1, 3}}));
  CHECK(neck.terms == std::vector<std::vector<int>>{{1}, {2}, {3}, {4}});
}

TEST_CASE("necklace condition") {
  CHECK(is_grassmann_necklace(grassmann_necklace(w8()).terms));
  CHECK(is_grassmann_necklace({{1, 2}, {1, 2}, {1, 2}, {1, 2}}));
  CHECK(!is_grassmann_necklace({{1, 2}, {3, 4}, {1, 2}, {3, 4}}));
  CHECK_THROWS_AS(is_grassmann_necklace({{1, 2}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(is_grassmann_necklace({{1, 5}, {1, 5}}), std::invalid_argument);
}

TEST_CASE("contribution intervals of a lone propagator") {
  const auto intervals = contribution_intervals(WilsonLoopDiagram(8, {{1, 4}}),
                                                Propagator{1, 4});
  REQUIRE(intervals.size() == 4);
  CHECK(intervals.at(1) == CyclicInterval{6, 1});
  CHECK(intervals.at(2) == CyclicInterval{2, 2});
  CHECK(intervals.at(4) == CyclicInterval{3, 4});
  CHECK(intervals.at(5) == CyclicInterval{5, 5});
}

TEST_CASE("contribution intervals in the eight-vertex example") {
  const GrassmannNecklace neck = grassmann_necklace(w8());
  const auto intervals = contribution_intervals(neck, {5, 7});
  CHECK(intervals.at(5) == CyclicInterval{1, 1});
  CHECK(intervals.at(6) == CyclicInterval{2, 3});
  CHECK(intervals.at(7) == CyclicInterval{4, 7});
  CHECK(intervals.at(8) == CyclicInterval{8, 8});
}

TEST_CASE("intervals partition the starting vertices") {
  test::for_each_admissible_up_to(7, [](const WilsonLoopDiagram& w) {
    const int n = w.vertex_count();
    const GrassmannNecklace neck = grassmann_necklace(w);
    for (const Propagator& p : w.propagators()) {
      const auto intervals = contribution_intervals(neck, p);
      REQUIRE(intervals.size() == 4);
      int total = 0;
      const std::vector<int> support = {p.a, cyc(p.a + 1, n), p.b, cyc(p.b + 1, n)};
      for (int t = 0; t < 4; ++t) {
        const auto& cur = intervals.at(support[t]);
        const auto& next = intervals.at(support[(t + 1) % 4]);
        CHECK(cyc(cur.hi + 1, n) == next.lo);
        total += cur.size(n);
      }
      CHECK(total == n);
    }
  });
}

TEST_CASE("loops and coloops") {
  const GrassmannNecklace full = grassmann_necklace(w8());
  CHECK(loops(full).empty());
  CHECK(coloops(full).empty());

  const GrassmannNecklace lone = grassmann_necklace(WilsonLoopDiagram(8, {{1, 4}}));
  CHECK(loops(lone) == std::vector<int>{3, 6, 7, 8});
  CHECK(coloops(lone).empty());
}

TEST_CASE("no walk ends at its final support vertex") {
  test::for_each_admissible_up_to(7, [](const WilsonLoopDiagram& w) {
    const int n = w.vertex_count();
    const GrassmannNecklace neck = grassmann_necklace(w);
    for (int i = 1; i <= n; ++i) {
      const auto& term = neck.terms[i - 1];
      CHECK(std::find(term.begin(), term.end(), cyc(i - 1, n)) == term.end());
    }
  });
}

TEST_CASE("later contributors at a vertex sit inside the earlier one") {
  test::for_each_admissible_up_to(7, [](const WilsonLoopDiagram& w) {
    const int n = w.vertex_count();
    const GrassmannNecklace neck = grassmann_necklace(w);
    for (int i = 1; i <= n; ++i) {
      for (const Propagator& p : w.propagators()) {
        const int a = neck.assigned_vertex(i, p);
        const int edge = p.has_edge(cyc(a - 1, n)) ? cyc(a - 1, n) : a;
        const auto inside = props_inside(w, {p, edge});
        for (const Propagator& q : w.propagators()) {
          if (q == p || !supports_vertex(q, a, n)) continue;
          if (cyc_key(neck.assigned_vertex(i, q), i, n) <= cyc_key(a, i, n))
            continue;  // q contributed earlier or elsewhere before a
          CHECK(std::find(inside.begin(), inside.end(), q) != inside.end());
        }
      }
    }
  });
}

TEST_CASE("term differencing gives a permutation") {
  CHECK(decorated_permutation(grassmann_necklace(w8())) ==
        std::vector<int>{6, 4, 7, 1, 2, 8, 3, 5});
  CHECK(decorated_permutation(grassmann_necklace(WilsonLoopDiagram(6, {}))) ==
        std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK_THROWS_AS(decorated_permutation({{1, 2}, {3, 4}, {1, 2}, {3, 4}}),
                  std::invalid_argument);
  test::for_each_admissible_up_to(7, [](const WilsonLoopDiagram& w) {
    auto perm = decorated_permutation(grassmann_necklace(w));
    std::sort(perm.begin(), perm.end());
    std::vector<int> identity(w.vertex_count());
    std::iota(identity.begin(), identity.end(), 1);
    CHECK(perm == identity);
  });
}
