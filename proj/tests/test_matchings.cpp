#include <algorithm>
#include <set>

#include "cubicpm/connectivity.hpp"
#include "cubicpm/families.hpp"
#include "cubicpm/matchings.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cubicpm;

namespace {

std::vector<Multigraph> sample(int count, int n_lo, int n_hi, std::uint64_t seed, bool bip = false) {
  std::vector<Multigraph> out;
  for (int i = 0; i < count; ++i) {
    const int n = n_lo + 2 * (i % ((n_hi - n_lo) / 2 + 1));
    const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    out.push_back(bip ? random_bipartite_cubic(s, std::max(n, 6)) : random_cubic_bridgeless(s, n));
  }
  return out;
}

bool is_perfect(const Multigraph& g, const std::vector<EdgeId>& ids) {
  std::vector<int> cover(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeId e : ids) {
    ++cover[static_cast<std::size_t>(g.edge(e).a)];
    ++cover[static_cast<std::size_t>(g.edge(e).b)];
  }
  return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
}

}  // namespace

TEST_CASE("perfect matching counts of named graphs") {
  CHECK(count_matchings(named("theta")) == 3);
  CHECK(count_matchings(named("k4")) == 3);
  CHECK(count_matchings(named("k33")) == 6);
  CHECK(count_matchings(named("prism")) == 4);
  CHECK(count_matchings(named("cube")) == 9);
  CHECK(count_matchings(named("petersen")) == 6);
  CHECK(count_matchings(named("heawood")) == 24);
  CHECK(count_matchings(named("moebius_kantor")) == 33);
  CHECK(count_matchings(named("dodecahedron")) == 36);
  for (const std::string& name : named_list()) {
    const Multigraph g = named(name);
    CAPTURE(name);
    if (g.vertex_count() <= 16) CHECK(count_matchings(g) == oracle::pm_count(g));
    if (const auto side = bipartition(g)) CHECK(count_matchings(g) == static_cast<std::uint64_t>(oracle::permanent(g, *side)));
  }
}

TEST_CASE("counts match subset oracle on random graphs") {
  for (const Multigraph& g : sample(80, 4, 14, 7)) CHECK(count_matchings(g) == oracle::pm_count(g));
  for (const Multigraph& g : sample(40, 6, 16, 70, true)) {
    CHECK(count_matchings(g) == static_cast<std::uint64_t>(oracle::permanent(g, *bipartition(g))));
  }
}

TEST_CASE("enumeration is sorted and agrees with the oracle") {
  for (const Multigraph& g : sample(30, 4, 12, 300)) {
    const auto got = enumerate_matchings(g);
    CHECK(std::is_sorted(got.begin(), got.end()));
    const auto want = oracle::perfect_matchings(g);
    REQUIRE(got.size() == want.size());
    std::set<std::vector<int>> a, b(want.begin(), want.end());
    for (const Matching& m : got) {
      CHECK(is_perfect(g, m.edge_ids));
      a.insert(m.edge_ids);
    }
    CHECK(a == b);
  }
}

TEST_CASE("queries") {
  for (const Multigraph& g : sample(30, 6, 12, 400)) {
    const auto pms = oracle::perfect_matchings(g);
    for (EdgeId e = 0; e < g.edge_count(); e += 3) {
      for (EdgeId f = 1; f < g.edge_count(); f += 4) {
        if (e == f) continue;
        std::uint64_t want = 0;
        for (const auto& pm : pms) {
          const bool has_e = std::count(pm.begin(), pm.end(), e) > 0;
          const bool has_f = std::count(pm.begin(), pm.end(), f) > 0;
          want += has_f && !has_e;
        }
        CountQuery q;
        q.required = {f};
        q.forbidden = {e};
        CHECK(count_matchings(g, q) == want);
        CHECK(has_perfect_matching(g, q) == (want > 0));
        if (const auto m = find_matching(g, q)) {
          CHECK(is_perfect(g, m->edge_ids));
          CHECK(std::count(m->edge_ids.begin(), m->edge_ids.end(), f) == 1);
          CHECK(std::count(m->edge_ids.begin(), m->edge_ids.end(), e) == 0);
        }
      }
    }
  }
  const Multigraph k4 = complete4();
  CountQuery clash;
  clash.required = {0};
  clash.forbidden = {0};
  CHECK_THROWS_AS(count_matchings(k4, clash), GraphError);
  CountQuery missed;
  missed.missed = {0, 1};
  CHECK(count_matchings(k4, missed) == 1);
}

TEST_CASE("containment counts, covering and doubling") {
  for (const Multigraph& g : sample(30, 4, 12, 600)) {
    const auto pms = oracle::perfect_matchings(g);
    std::vector<std::uint64_t> want(static_cast<std::size_t>(g.edge_count()), 0);
    for (const auto& pm : pms) {
      for (int e : pm) ++want[static_cast<std::size_t>(e)];
    }
    CHECK(edge_containment_counts(g) == want);
    CHECK(is_matching_covered(g) == std::all_of(want.begin(), want.end(), [](auto c) { return c >= 1; }));
    CHECK(is_double_covered(g) == std::all_of(want.begin(), want.end(), [](auto c) { return c >= 2; }));
  }
  CHECK(is_matching_covered(named("petersen")));
  CHECK(is_double_covered(named("petersen")));
  CHECK_FALSE(is_matching_covered(oracle::bridged_cubic()));
}

TEST_CASE("a unique perfect matching contains a bridge") {
  const std::vector<std::pair<int, int>> p4{{0, 1}, {1, 2}, {2, 3}};
  const Multigraph path = Multigraph::from_edge_list(4, p4);
  REQUIRE(count_matchings(path) == 1);
  const EdgeId b = kotzig_bridge(path);
  CHECK(b == 0);
  CHECK_THROWS_AS(kotzig_bridge(named("k4")), GraphError);
  std::vector<std::pair<int, int>> comb{{0, 1}, {2, 3}, {4, 5}, {0, 2}, {2, 4}};
  const Multigraph c = Multigraph::from_edge_list(6, comb);
  REQUIRE(count_matchings(c) == 1);
  const auto br = oracle::bridges(c);
  CHECK(std::count(br.begin(), br.end(), kotzig_bridge(c)) == 1);
}

TEST_CASE("special pairs on the cube") {
  const Multigraph c = named("cube");
  int structured = 0;
  for (EdgeId e = 0; e < c.edge_count(); ++e) {
    for (EdgeId f = 0; f < c.edge_count(); ++f) {
      if (e == f) continue;
      const SpecialPairResult r = special_pair(c, e, f);
      CHECK(r.structure == r.no_such_pm);
      CHECK(r.structure == r.coloring.has_value());
      structured += r.structure;
    }
  }
  CHECK(structured == 0);
  CHECK_THROWS_AS(special_pair(c, 0, 0), GraphError);
  CHECK_THROWS_AS(special_pair(named("prism"), 0, 1), GraphError);
}

TEST_CASE("special pairs on random cyclically 4-edge-connected graphs") {
  int structured = 0, graphs = 0;
  for (const Multigraph& g : sample(300, 6, 12, 1000)) {
    if (!is_cyclically_k_edge_connected(g, 4)) continue;
    ++graphs;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      for (EdgeId f = 0; f < g.edge_count(); ++f) {
        if (e == f) continue;
        const SpecialPairResult r = special_pair(g, e, f);
        CHECK(r.structure == r.no_such_pm);
        structured += r.structure;
      }
    }
  }
  CHECK(graphs > 10);
  CHECK(structured > 0);
}

TEST_CASE("perfect matching polytope") {
  for (const Multigraph& g : sample(20, 4, 14, 800)) {
    CHECK(polytope_membership(g, uniform_weights(g, Rational(1, 3))));
    for (const Matching& m : enumerate_matchings(g)) CHECK(polytope_membership(g, characteristic_vector(g, m)));
    CHECK_FALSE(polytope_membership(g, uniform_weights(g, Rational(1, 2))));
  }
  const Multigraph b = oracle::bridged_cubic();
  CHECK_FALSE(polytope_membership(b, uniform_weights(b, Rational(1, 3))));
  CHECK(polytope_membership(named("k33"), uniform_weights(named("k33"), Rational(1, 3))));
  const WeightVector shortw(3, Rational(1, 3));
  CHECK_THROWS_AS(polytope_membership(named("k4"), shortw), GraphError);
  WeightVector neg = uniform_weights(named("k4"), Rational(1, 3));
  neg[0] = Rational(-1, 3);
  CHECK_FALSE(polytope_membership(named("k4"), neg));
}

TEST_CASE("fractional perfect matching from a flow") {
  CHECK_THROWS_AS(fractional_pm_via_flow(named("k4"), 0, 1, 2, 3), GraphError);
}
