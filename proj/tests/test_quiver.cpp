#include <doctest.h>

#include <stdexcept>

#include <random>
#include <set>

#include "doodle/moves.hpp"
#include "doodle/quiver.hpp"
#include "oracles.hpp"

using namespace doodle;

TEST_CASE("quiver construction and equality") {
  CHECK(QuiverDiagram().chords() == 0);
  QuiverDiagram q({0, 1, 0, 1}, {0, 0, 1, 1});
  CHECK(q.chords() == 2);
  // Rotated label assignments are the same value.
  CHECK(QuiverDiagram({0, 1, 0, 1}, {1, 1, 0, 0}) == q);
  CHECK(QuiverDiagram({0, 1, 0, 1}, {0, 0, 2, 1}) !=
        QuiverDiagram({0, 1, 0, 1}, {0, 0, 1, 2}));
  CHECK_THROWS_AS(QuiverDiagram({0, 1, 0, 1}, {0, 0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(QuiverDiagram({0, 0, 1, 1}, {1, -1, 1, 1}), std::invalid_argument);
}

TEST_CASE("degree") {
  CHECK(degree(QuiverDiagram()) == 0);
  CHECK(degree(QuiverDiagram({0, 0}, {0, 1})) == 1);
  CHECK(degree(QuiverDiagram({0, 0, 1, 1}, {2, 3, 0, 1})) == 6);
}

TEST_CASE("adjacent chord pairs") {
  QuiverDiagram square({0, 1, 0, 1}, {1, 1, 1, 1});
  auto pairs = adjacent_chord_pairs(square);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0] == std::pair<int, int>{0, 1});
  // Crossing adjacencies are not merged: the square stays reduced.
  CHECK(reduction_sites(square).empty());
  CHECK(is_reduced(square));
  CHECK(reduce(square) == square);

  CHECK(adjacent_chord_pairs(QuiverDiagram()).empty());

  // 1 2 1 3 2 3: {1,3} meet at two adjacent sites (one wraps around),
  // {1,2} and {2,3} have only one adjacent site each.
  QuiverDiagram six({0, 1, 0, 2, 1, 2}, {1, 1, 1, 1, 1, 1});
  auto p6 = adjacent_chord_pairs(six);
  REQUIRE(p6.size() == 1);
  CHECK(p6[0] == std::pair<int, int>{0, 2});
}

TEST_CASE("reduction merges labels at the adjacent endpoints") {
  // Two parallel chords labelled (0,1) each -> one chord labelled (0,2).
  ArrowDiagram cluster2 = parse_gauss("1t 2t 2h 1h");
  QuiverDiagram reduced = cluster_reduce_arrow(cluster2);
  CHECK(reduced.chords() == 1);
  CHECK(degree(reduced) == 2);
  CHECK(reduced == QuiverDiagram({0, 0}, {0, 2}));

  // Reduced input is returned unchanged.
  QuiverDiagram already({0, 1, 0, 2, 1, 3, 2, 3}, {0, 0, 1, 0, 1, 0, 1, 1});
  CHECK(is_reduced(already));
  CHECK(reduce(already) == already);
}

TEST_CASE("reduction is order independent") {
  std::mt19937 rng(51);
  for (int iter = 0; iter < 1000; ++iter) {
    QuiverDiagram q = oracle::random_quiver(rng, 1 + iter % 6, iter % 4);
    QuiverDiagram ref = reduce(q);
    CHECK(degree(ref) == degree(q));
    // Random merge order.
    QuiverDiagram cur = q;
    for (;;) {
      auto sites = reduction_sites(cur);
      if (sites.empty()) break;
      std::uniform_int_distribution<size_t> pick(0, sites.size() - 1);
      cur = reduce_step(cur, sites[pick(rng)]);
    }
    CHECK(cur == ref);
  }
}

TEST_CASE("from_arrow") {
  CHECK(from_arrow(ArrowDiagram()) == QuiverDiagram());
  CHECK(from_arrow(parse_gauss("1t 1h")) == QuiverDiagram({0, 0}, {0, 1}));
  CHECK(from_arrow(parse_gauss("1t 2t 1h 2h")) ==
        QuiverDiagram({0, 1, 0, 1}, {0, 0, 1, 1}));
}

TEST_CASE("isolated chord detection") {
  CHECK(is_zero_by_isolated_chord(QuiverDiagram({0, 0}, {1, 4})));
  CHECK_FALSE(is_zero_by_isolated_chord(QuiverDiagram({0, 1, 0, 1}, {1, 1, 1, 1})));
  CHECK_FALSE(is_zero_by_isolated_chord(QuiverDiagram()));
}

TEST_CASE("cluster reduction of a thickened reduced diagram") {
  // The reduced 4-chord core 1t 2t 1h 3t 2h 4t 3h 4h with chord 1 doubled
  // and chord 4 tripled: clusters collapse to labels (0,2) and (0,3), the
  // other chords keep (0,1).
  ArrowDiagram core = parse_gauss("1t 2t 1h 3t 2h 4t 3h 4h");
  REQUIRE(is_reduced(from_arrow(core)));
  ArrowDiagram thick =
      parse_gauss("1t 5t 2t 5h 1h 3t 2h 4t 6t 7t 3h 7h 6h 4h");
  QuiverDiagram r = cluster_reduce_arrow(thick);
  CHECK(r.chords() == 4);
  CHECK(degree(r) == 7);
  std::multiset<std::pair<int, int>> label_pairs;
  auto pos = r.chord_positions();
  for (int c = 0; c < r.chords(); ++c) {
    int la = r.labels()[pos[c].first], lb = r.labels()[pos[c].second];
    label_pairs.insert({std::min(la, lb), std::max(la, lb)});
  }
  std::multiset<std::pair<int, int>> expect{{0, 1}, {0, 1}, {0, 2}, {0, 3}};
  CHECK(label_pairs == expect);
  CHECK(r.underlying() == from_arrow(core).underlying());
}
