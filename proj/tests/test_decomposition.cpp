#include "cubicpm/decomposition.hpp"
#include "cubicpm/families.hpp"
#include "cubicpm/matchings.hpp"
#include "cubicpm/surgery.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cubicpm;

namespace {

std::vector<Multigraph> covered_sample(int count, int n_lo, int n_hi, std::uint64_t seed) {
  std::vector<Multigraph> out;
  for (int i = 0; i < count; ++i) {
    const int n = n_lo + 2 * (i % ((n_hi - n_lo) / 2 + 1));
    Multigraph g = random_cubic_bridgeless(seed + static_cast<std::uint64_t>(i), n);
    if (is_matching_covered(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

TEST_CASE("tight cuts match the odd-set oracle") {
  for (const Multigraph& g : covered_sample(60, 4, 12, 11)) {
    const auto got = tight_cuts(g);
    const auto want = oracle::nontrivial_tight_cuts(g);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i].cut.side_a == want[i]);
      CHECK(got[i].nontrivial);
    }
  }
  CHECK_THROWS_AS(tight_cuts(oracle::bridged_cubic()), GraphError);
}

TEST_CASE("bricks and braces") {
  CHECK(is_brick(named("k4")));
  CHECK(is_brick(named("prism")));
  CHECK(is_brick(named("petersen")));
  CHECK(is_brace(named("k33")));
  CHECK(is_brace(named("cube")));
  CHECK(is_brace(named("heawood")));
  CHECK_FALSE(is_brick(named("k33")));
  CHECK_FALSE(is_brace(named("petersen")));
  CHECK(is_bicritical(named("k4")));
  CHECK(is_bicritical(named("petersen")));
  CHECK_FALSE(is_bicritical(named("cube")));
  CHECK(is_three_vertex_connected(named("petersen")));
  CHECK_FALSE(is_three_vertex_connected(oracle::bridged_cubic()));
}

TEST_CASE("brick counts") {
  CHECK(brick_count(named("k4")) == 1);
  CHECK(brick_count(named("k33")) == 0);
  CHECK(brick_count(named("cube")) == 0);
  CHECK(brick_count(named("prism")) == 1);
  CHECK(brick_count(named("petersen")) == 1);
  CHECK(brick_count(named("theta")) == 0);
  CHECK(elp_bound(named("petersen")) == 15 - 10 + 1 - 1);
  const std::vector<EdgeId> gone{0};
  const Multigraph pe = delete_edges(named("petersen"), gone).graph;
  CHECK(is_matching_covered(pe));
  CHECK(brick_count(pe) == 2);
  const auto ls = leaves(decompose(pe));
  int bricks = 0;
  for (const Leaf& l : ls) bricks += l.kind == LeafKind::Brick;
  CHECK(bricks == 2);
}

TEST_CASE("decomposition leaves are tight-cut free") {
  for (const Multigraph& g : covered_sample(40, 4, 12, 211)) {
    const DecompositionNode root = decompose(g);
    for (const Leaf& l : leaves(root)) {
      CHECK(oracle::nontrivial_tight_cuts(l.graph).empty());
      CHECK((l.kind == LeafKind::Brace) == is_bipartite(l.graph));
    }
  }
}

TEST_CASE("leaf multiset does not depend on labels or cut choice") {
  for (const Multigraph& g : covered_sample(40, 6, 14, 411)) {
    const auto base = leaves(decompose(g));
    CHECK(same_leaf_multiset(base, leaves(decompose(g, CutOrder::LexLargest))));
    for (std::uint64_t s = 0; s < 3; ++s) {
      const Multigraph h = relabel(g, oracle::random_permutation(g.vertex_count(), s));
      CHECK(same_leaf_multiset(base, leaves(decompose(h))));
      CHECK(brick_count(h) == brick_count(g));
    }
  }
}

TEST_CASE("counts exceed the brick bound") {
  for (const Multigraph& g : covered_sample(60, 4, 14, 611)) {
    const int b = brick_count(g);
    CHECK(static_cast<int>(count_matchings(g)) >= elp_bound(g));
    CHECK(4 * b <= g.vertex_count());
    if (is_bipartite(g)) CHECK(b == 0);
  }
}
