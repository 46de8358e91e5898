#include <algorithm>

#include "cubicpm/connectivity.hpp"
#include "cubicpm/families.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cubicpm;

namespace {

Multigraph circular_ladder(int k) {
  const Multigraph l = ladder(k);
  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : l.edges()) pairs.emplace_back(e.a, e.b);
  pairs.emplace_back(0, 2 * k - 2);
  pairs.emplace_back(1, 2 * k - 1);
  return Multigraph::from_edge_list(2 * k, pairs);
}

std::vector<Multigraph> sample(int count, int n_lo, int n_hi, std::uint64_t seed) {
  std::vector<Multigraph> out;
  for (int i = 0; i < count; ++i) {
    const int n = n_lo + 2 * (i % ((n_hi - n_lo) / 2 + 1));
    out.push_back(random_cubic_bridgeless(seed + static_cast<std::uint64_t>(i), n));
  }
  return out;
}

}  // namespace

TEST_CASE("cut enumeration matches subset sweep") {
  for (const Multigraph& g : sample(40, 4, 12, 100)) {
    for (bool cyclic : {false, true}) {
      const auto got = enumerate_cuts(g, 4, cyclic);
      const auto want = oracle::cuts(g, 4, cyclic);
      REQUIRE(got.size() == want.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i].side_a == want[i].side);
        CHECK(got[i].size == want[i].size);
        CHECK(got[i].cyclic == want[i].cyclic);
        CHECK(got[i].crossing_edges.size() == static_cast<std::size_t>(got[i].size));
        CHECK(std::is_sorted(got[i].crossing_edges.begin(), got[i].crossing_edges.end()));
      }
    }
  }
}

TEST_CASE("bridges match deletion oracle") {
  for (int n : {4, 6, 8}) {
    for (const Multigraph& g : exhaustive_cubic_bridgeless(n)) CHECK(bridges(g).empty());
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Multigraph t = random_twisted_net(seed, 4 + 2 * static_cast<int>(seed % 8)).graph;
    CHECK(bridges(t) == oracle::bridges(t));
  }
  const Multigraph b = oracle::bridged_cubic();
  CHECK(bridges(b) == std::vector<EdgeId>{14});
}

TEST_CASE("cyclic connectivity of named graphs") {
  CHECK(cyclic_edge_connectivity(named("theta")).unbounded());
  CHECK(cyclic_edge_connectivity(named("k4")).unbounded());
  CHECK(cyclic_edge_connectivity(named("k33")).unbounded());
  CHECK(cyclic_edge_connectivity(named("prism")).value == 3);
  CHECK(cyclic_edge_connectivity(named("cube")).value == 4);
  CHECK(cyclic_edge_connectivity(named("petersen")).value == 5);
  CHECK(cyclic_edge_connectivity(named("heawood")).value == 6);
  CHECK(cyclic_edge_connectivity(named("moebius_kantor")).value == 6);
  CHECK(cyclic_edge_connectivity(named("dodecahedron")).value == 5);
  for (const char* name : {"prism", "cube", "petersen", "heawood"}) {
    CHECK(*cyclic_edge_connectivity(named(name)).value == oracle::cyclic_connectivity(named(name)));
  }
}

TEST_CASE("cyclic connectivity matches oracle on random graphs") {
  for (const Multigraph& g : sample(60, 4, 14, 500)) {
    const int want = oracle::cyclic_connectivity(g);
    const CyclicConnectivity got = cyclic_edge_connectivity(g);
    if (want < 0) {
      CHECK(got.unbounded());
    } else {
      CHECK(got.value == want);
    }
    for (int k = 1; k <= 6; ++k) CHECK(is_cyclically_k_edge_connected(g, k) == (want < 0 || want >= k));
  }
}

TEST_CASE("edge connectivity") {
  CHECK(is_k_edge_connected(named("petersen"), 3));
  CHECK_FALSE(is_k_edge_connected(named("petersen"), 4));
  CHECK_FALSE(is_k_edge_connected(oracle::bridged_cubic(), 2));
  CHECK(is_k_edge_connected(oracle::bridged_cubic(), 1));
}

TEST_CASE("large-sided cuts are cyclic") {
  for (const Multigraph& g : sample(30, 6, 14, 900)) {
    for (const EdgeCut& c : enumerate_cuts(g, 5, false)) {
      if (observation_cyc_check(g, c)) CHECK(c.cyclic);
    }
  }
  const std::vector<std::pair<int, int>> path{{0, 1}, {1, 2}};
  const Multigraph p = Multigraph::from_edge_list(3, path);
  CHECK_THROWS_AS(observation_cyc_check(p, make_cut(p, 1)), GraphError);
  const Multigraph prism = named("prism");
  const EdgeCut tri = make_cut(prism, 0b000111);
  CHECK(observation_cyc_check(prism, tri));
  CHECK(tri.cyclic);
  CHECK_FALSE(observation_cyc_check(named("k4"), make_cut(named("k4"), 1)));
}

TEST_CASE("cyclic cuts containing an edge") {
  const Multigraph c = named("cube");
  for (EdgeId e = 0; e < c.edge_count(); ++e) {
    const auto cuts = cyclic_cuts_containing(c, e, 4);
    REQUIRE(cuts.size() == 1);
    CHECK(std::count(cuts[0].crossing_edges.begin(), cuts[0].crossing_edges.end(), e) == 1);
  }
  CHECK(cyclic_cuts_containing(named("petersen"), 0, 4).empty());
}

TEST_CASE("ordered chain of cyclic 4-cuts") {
  const int k = 8;
  const Multigraph g = circular_ladder(k);
  REQUIRE(is_cyclically_k_edge_connected(g, 4));
  EdgeId rail = -1;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.edge(e).a == 2 && g.edge(e).b == 4) rail = e;
  }
  REQUIRE(rail >= 0);
  const auto chain = ordered_4cut_chain(g, rail);
  CHECK(chain.size() == static_cast<std::size_t>(k - 3));
  for (std::size_t i = 0; i < chain.size(); ++i) {
    CHECK((chain[i].side_a >> g.edge(rail).a & 1) == 1);
    if (i > 0) CHECK((chain[i - 1].side_a & ~chain[i].side_a) == 0);
  }
  CHECK_THROWS_AS(ordered_4cut_chain(named("prism"), 0), GraphError);
}

TEST_CASE("cut surgery") {
  const Multigraph c = named("cube");
  const EdgeCut cut = cyclic_cuts_containing(c, 0, 4).front();
  for (CutSide side : {CutSide::A, CutSide::B}) {
    const CutSurgery s = cut_surgery_pair(c, cut, {0, 1, 2, 3}, side);
    CHECK(s.paired.vertex_count() == 4);
    CHECK(s.paired.is_cubic());
    CHECK(s.subdivided.vertex_count() == 6);
    CHECK(s.subdivided.is_cubic());
    const Edge xy = s.subdivided.edge(s.distinguished);
    CHECK(xy.a >= 4);
    CHECK(xy.b >= 4);
    for (int i = 0; i < 4; ++i) CHECK(s.subdivided.edge(s.subdivided_spokes[static_cast<std::size_t>(i)]).touches(s.attach[static_cast<std::size_t>(i)]));
  }
  const Multigraph k33 = named("k33");
  const EdgeCut star = make_cut(k33, bit(k33.edge(0).a) | bit(k33.edge(0).b));
  CHECK(star.size == 4);
  CHECK_THROWS_AS(cut_surgery_pair(k33, star, {0, 1, 2, 3}, CutSide::A), GraphError);
}

TEST_CASE("almost cyclically 4-edge-connected") {
  const AlmostResult pet = is_k_almost_cyclically_4ec(named("petersen"), 0);
  CHECK(pet.ok);
  CHECK(pet.witness.empty());
  CHECK_FALSE(is_k_almost_cyclically_4ec(named("prism"), 0).ok);
  const AlmostResult pr = is_k_almost_cyclically_4ec(named("prism"), 2);
  CHECK(pr.ok);
  REQUIRE(pr.reduced);
  CHECK(pr.reduced->vertex_count() == 4);
  for (const Multigraph& g : sample(40, 6, 14, 1300)) {
    for (int k = 0; k <= 4; k += 2) {
      const AlmostResult minimal = is_k_almost_cyclically_4ec(g, k);
      const AlmostResult all = is_k_almost_cyclically_4ec(g, k, true);
      if (minimal.ok) CHECK(all.ok);
      if (minimal.ok) {
        REQUIRE(minimal.reduced);
        CHECK(minimal.reduced->is_cubic());
        CHECK(is_cyclically_k_edge_connected(*minimal.reduced, 4));
        CHECK(g.vertex_count() - minimal.reduced->vertex_count() <= k);
      }
    }
  }
}
