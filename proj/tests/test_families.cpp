#include <algorithm>
#include <set>

#include "cubicpm/connectivity.hpp"
#include "cubicpm/families.hpp"
#include "cubicpm/isomorphism.hpp"
#include "cubicpm/matchings.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cubicpm;

namespace {

// k copies of K4 minus an edge, joined in a ring through their degree-2 vertices.
Multigraph diamond_ring(int k) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i) {
    const int b = 4 * i;
    pairs.insert(pairs.end(), {{b, b + 1}, {b, b + 2}, {b + 1, b + 2}, {b + 1, b + 3}, {b + 2, b + 3}});
    pairs.emplace_back(b + 3, (4 * (i + 1)) % (4 * k));
  }
  return Multigraph::from_edge_list(4 * k, pairs);
}

}  // namespace

TEST_CASE("ladder counts follow the Fibonacci recursion") {
  for (int k = 1; k <= 20; ++k) {
    const Multigraph l = ladder(k);
    CAPTURE(k);
    CHECK(l.vertex_count() == 2 * k);
    CHECK(count_matchings(l) == oracle::ladder_count(k));
    if (k <= 10) CHECK(enumerate_matchings(l).size() == oracle::ladder_count(k));
    if (k <= 7) CHECK(oracle::pm_count(l) == oracle::ladder_count(k));
  }
  CHECK(oracle::ladder_count(20) == 10946);
}

TEST_CASE("ladder ends and recognition") {
  const Multigraph l = ladder(5);
  const auto ends = ladder_ends(5);
  CHECK(ends[0] == 0);
  const Edge first = l.edge(ends[0]);
  const Edge last = l.edge(ends[1]);
  CHECK(is_ladder_with_ends(l, first.a, first.b, last.a, last.b));
  CHECK_FALSE(is_ladder_with_ends(l, first.a, last.a, first.b, last.b));
  CHECK(ladder_ends(1)[0] == ladder_ends(1)[1]);
  const Multigraph r = relabel(l, oracle::random_permutation(10, 4));
  const auto perm = oracle::random_permutation(10, 4);
  CHECK(is_ladder_with_ends(r, perm[static_cast<std::size_t>(first.a)], perm[static_cast<std::size_t>(first.b)],
                            perm[static_cast<std::size_t>(last.a)], perm[static_cast<std::size_t>(last.b)]));
  const Multigraph c4 = twisted_net({});
  CHECK(is_ladder_with_ends(c4, 0, 1, 3, 2));
}

TEST_CASE("Klee-graphs") {
  CHECK(is_klee(named("k4")));
  CHECK(is_klee(named("prism")));
  CHECK_FALSE(is_klee(named("k33")));
  CHECK_FALSE(is_klee(named("petersen")));
  CHECK_FALSE(is_klee(named("cube")));
  CHECK_FALSE(is_klee(named("theta")));
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 4 + 2 * static_cast<int>(seed % 9);
    const KleeSample s = random_klee(seed, n);
    CHECK(s.graph.vertex_count() == n);
    CHECK(s.graph.is_cubic());
    CHECK(is_klee(s.graph));
    CHECK(klee(s.recipe) == s.graph);
    CHECK(is_klee(relabel(s.graph, oracle::random_permutation(n, seed))));
  }
  CHECK_THROWS_AS(random_klee(1, 5), GraphError);
}

TEST_CASE("twisted nets") {
  const Multigraph c4 = twisted_net({});
  CHECK(c4.vertex_count() == 4);
  CHECK(corners(c4) == std::vector<Vertex>{0, 1, 2, 3});
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const int n = 4 + 2 * static_cast<int>(seed % 12);
    const TwistedSample s = random_twisted_net(seed, n);
    CAPTURE(describe(s.recipe));
    CHECK(s.graph.vertex_count() == n);
    CHECK(twisted_net_order(s.recipe) == n);
    CHECK(corners(s.graph).size() == 4);
    CHECK(2 * s.graph.edge_count() == 3 * n - 4);
    CHECK(degree_excess(s.graph).multiset == std::map<int, int>{{2, 4}});
    CHECK(s.graph.is_connected());
    CHECK(twisted_net(s.recipe) == s.graph);
    if (n <= 16) {
      const Multigraph h = relabel(s.graph, oracle::random_permutation(n, seed));
      const auto rec = recognize_twisted_net(h);
      REQUIRE(rec);
      const Multigraph rebuilt = twisted_net(rec->recipe);
      for (const Edge& e : h.edges()) {
        CHECK(rebuilt.multiplicity(rec->phi[static_cast<std::size_t>(e.a)], rec->phi[static_cast<std::size_t>(e.b)]) ==
              h.multiplicity(e.a, e.b));
      }
    }
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(is_bipartite(random_twisted_net(seed, 14, true).graph));
    CHECK_FALSE(is_bipartite(random_twisted_net(seed, 14, false).graph));
  }
  CHECK_THROWS_AS(random_twisted_net(1, 4, false), GraphError);
  CHECK(recognize_twisted_net(ladder(5)).has_value());
  const std::vector<std::pair<int, int>> two_squares{{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}};
  CHECK_FALSE(recognize_twisted_net(Multigraph::from_edge_list(8, two_squares)).has_value());
  CHECK(recognize_twisted_net(named("exceptional6")).has_value());
  CHECK(corners(named("k4")).empty());
  const std::vector<std::pair<int, int>> p3{{0, 1}, {1, 2}};
  CHECK_THROWS_AS(corners(Multigraph::from_edge_list(3, p3)), GraphError);
}

TEST_CASE("semiblocks") {
  CHECK(semiblocks(named("petersen")).s == 1);
  CHECK(semiblocks(named("k4")).s == 1);
  for (int k = 2; k <= 5; ++k) {
    const Semiblocks sb = semiblocks(diamond_ring(k));
    CHECK(sb.s == k);
    for (VertexMask side : sb.sides) CHECK(__builtin_popcountll(side) == 4);
  }
  CHECK_THROWS_AS(semiblocks(oracle::bridged_cubic()), GraphError);
  CHECK_THROWS_AS(semiblocks(ladder(3)), GraphError);
}

TEST_CASE("random generators are seeded and conditioned") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 4 + 2 * static_cast<int>(seed % 8);
    const Multigraph g = random_cubic_bridgeless(seed, n);
    CHECK(g == random_cubic_bridgeless(seed, n));
    CHECK(g.is_cubic());
    CHECK(g.is_connected());
    CHECK(oracle::bridges(g).empty());
    const Multigraph s = random_cubic_bridgeless(seed, std::max(n, 6), true);
    CHECK(s.is_simple());
    const Multigraph b = random_bipartite_cubic(seed, std::max(n, 6));
    CHECK(is_bipartite(b));
    CHECK(b.is_cubic());
    CHECK(oracle::bridges(b).empty());
  }
  CHECK_THROWS_AS(random_cubic_bridgeless(1, 7), GraphError);
  Rng a(9), b(9);
  for (int i = 0; i < 100; ++i) CHECK(a.below(17) == b.below(17));
}

TEST_CASE("exhaustive generation") {
  // bridgeless cubic multigraphs: the connected counts of OEIS A000421 minus
  // those with a bridge; simple ones: OEIS A002851 minus the single bridged
  // graph on 10 vertices
  const std::vector<int> multi{1, 2, 5, 16, 66};
  const std::vector<int> simple{0, 1, 2, 5, 18};
  for (int i = 0; i < 5; ++i) {
    const int n = 2 * (i + 1);
    const auto all = exhaustive_cubic_bridgeless(n);
    CAPTURE(n);
    CHECK(static_cast<int>(all.size()) == multi[static_cast<std::size_t>(i)]);
    int simple_count = 0;
    for (const Multigraph& g : all) {
      CHECK(g.is_cubic());
      CHECK(g.is_connected());
      CHECK(oracle::bridges(g).empty());
      simple_count += g.is_simple();
    }
    CHECK(simple_count == simple[static_cast<std::size_t>(i)]);
    if (n <= 8) {
      for (std::size_t x = 0; x < all.size(); ++x) {
        for (std::size_t y = x + 1; y < all.size(); ++y) CHECK_FALSE(are_isomorphic(all[x], all[y]));
      }
    }
  }
  CHECK_THROWS_AS(exhaustive_cubic_bridgeless(14), GraphError);
}

TEST_CASE("random samples land in the exhaustive catalogue") {
  for (int n : {6, 8}) {
    const auto all = exhaustive_cubic_bridgeless(n);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const Multigraph g = random_cubic_bridgeless(seed, n);
      CHECK(std::any_of(all.begin(), all.end(), [&](const Multigraph& h) { return are_isomorphic(g, h); }));
    }
  }
}
