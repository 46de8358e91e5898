#include <set>

#include "cubicpm/bounds.hpp"
#include "cubicpm/connectivity.hpp"
#include "cubicpm/report_io.hpp"
#include "cubicpm/verifier.hpp"
#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"

using namespace cubicpm;

namespace {

// Two copies of ladder(4) joined corner to corner.
Multigraph two_ladders() {
  const Multigraph l = ladder(4);
  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : l.edges()) pairs.emplace_back(e.a, e.b);
  for (const Edge& e : l.edges()) pairs.emplace_back(e.a + 8, e.b + 8);
  pairs.insert(pairs.end(), {{0, 8}, {1, 9}, {6, 14}, {7, 15}});
  return Multigraph::from_edge_list(16, pairs);
}

nlohmann::json params_of(const LemmaReport& r) { return nlohmann::json::parse(r.params); }

// Sign of num/den - 2^(p/q) for small values, by direct integer powers.
int slow_compare(std::int64_t num, std::int64_t den, std::int64_t p, std::int64_t q) {
  __extension__ using wide = __int128;
  wide lhs = 1, rhs = 1;
  for (int i = 0; i < q; ++i) lhs *= num;
  for (int i = 0; i < q; ++i) rhs *= den;
  if (p >= 0) {
    for (int i = 0; i < p; ++i) rhs *= 2;
  } else {
    for (int i = 0; i < -p; ++i) lhs *= 2;
  }
  return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

void check_report_invariants(const LemmaReport& r) {
  CAPTURE(r.instance);
  CAPTURE(to_string(r.lemma));
  const int c = compare(r.measured, r.bound);
  const bool violated = r.relation == Relation::AtLeast ? c < 0 : c > 0;
  switch (r.verdict) {
    case Verdict::Pass:
      CHECK(r.hypothesis_met);
      CHECK_FALSE(violated);
      break;
    case Verdict::Fail:
      CHECK(r.hypothesis_met);
      CHECK(violated);
      CHECK_FALSE(r.dump.empty());
      break;
    case Verdict::Skipped:
      CHECK_FALSE(r.reason.empty());
      break;
  }
}

}  // namespace

TEST_CASE("lemma ids") {
  CHECK(all_lemmas().size() == 27);
  std::set<std::string> names;
  for (LemmaId id : all_lemmas()) {
    names.insert(std::string(to_string(id)));
    CHECK(parse_lemma(to_string(id)) == id);
  }
  CHECK(names.size() == 27);
  CHECK_THROWS_AS(parse_lemma("LM_NOPE"), GraphError);
}

TEST_CASE("exact bound comparison") {
  CHECK(compare(Rational(2), Bound::power_of_two(1, 1)) == 0);
  CHECK(compare(Rational(3, 2), Bound::power_of_two(1, 2)) > 0);
  CHECK(compare(Rational(7, 5), Bound::power_of_two(1, 2)) < 0);
  const Bound b = Bound::power_of_two(6, 9);
  CHECK(b.log2_num == 2);
  CHECK(b.log2_den == 3);
  const Bound four_thirds = Bound::rational_power(Rational(4, 3), 3);
  CHECK(compare(Rational(64, 27), four_thirds) == 0);
  CHECK(compare(Rational(2), four_thirds) < 0);
  CHECK(compare(Rational(3), four_thirds) > 0);
  for (std::int64_t num = 1; num <= 12; ++num) {
    for (std::int64_t den = 1; den <= 5; ++den) {
      for (std::int64_t q = 1; q <= 9; ++q) {
        for (std::int64_t p = -10; p <= 20; ++p) {
          CAPTURE(num);
          CAPTURE(den);
          CAPTURE(p);
          CAPTURE(q);
          const int want = slow_compare(num, den, p, q);
          const int got = compare(Rational(num, den), Bound::power_of_two(p, q));
          CHECK((got > 0) - (got < 0) == want);
        }
      }
    }
  }
  CHECK(compare(Rational(3), Bound::power_of_two(1, 1000003)) > 0);
  CHECK_THROWS_AS(compare(Rational(3, 2), Bound::power_of_two(1, 1000003)), GraphError);
}

TEST_CASE("single checks with frozen values") {
  const LemmaReport half = check(LemmaId::TH_HALF, named("petersen"), {}, "petersen");
  CHECK(half.verdict == Verdict::Pass);
  CHECK(half.bound == Bound::of(Rational(5)));
  CHECK(half.measured == Rational(6));

  CheckParams e0;
  e0.edge = 0;
  const LemmaReport bip = check(LemmaId::THM_BIP, named("k33"), e0, "k33");
  CHECK(bip.verdict == Verdict::Pass);
  CHECK(compare(Rational(64, 27), bip.bound) == 0);
  CHECK(bip.measured == Rational(4));

  CheckParams net;
  net.recipe = TwistedNetRecipe{};
  const LemmaReport num = check(LemmaId::LM_TWISTED_NUM, twisted_net({}), net, "c4");
  CHECK(num.verdict == Verdict::Pass);
  CHECK(num.measured == Rational(2));
  CHECK(num.bound == Bound::power_of_two(8, 9));

  const LemmaReport special = check(LemmaId::LM_SPECIAL, named("cube"));
  CHECK(special.verdict == Verdict::Pass);
  CHECK(params_of(special)["choices"] == 66);

  const LemmaReport klee = check(LemmaId::THM_KLEE, named("prism"));
  CHECK(klee.verdict == Verdict::Pass);
  CHECK(klee.bound == Bound::power_of_two(6, 655978752));
  CHECK(check(LemmaId::THM_KLEE, named("petersen")).verdict == Verdict::Skipped);

  CHECK(check(LemmaId::THM_BIP, named("petersen")).verdict == Verdict::Skipped);
  CHECK(check(LemmaId::LM_TRIPLE, named("cube")).verdict == Verdict::Pass);
  CHECK(check(LemmaId::LM_DOUBLE, named("petersen")).verdict == Verdict::Pass);
  CHECK(check(LemmaId::LM_SEMIBLOCK, named("petersen")).verdict == Verdict::Pass);
}

TEST_CASE("unique perfect matching contains a bridge") {
  const std::vector<std::pair<int, int>> comb{{0, 1}, {2, 3}, {4, 5}, {0, 2}, {2, 4}};
  const LemmaReport r = check(LemmaId::LM_BRIDGE, Multigraph::from_edge_list(6, comb));
  CHECK(r.verdict == Verdict::Pass);
  CHECK(check(LemmaId::LM_BRIDGE, named("k4")).verdict == Verdict::Skipped);
}

TEST_CASE("skips carry reasons") {
  const LemmaReport big = check(LemmaId::TH_HALF, random_klee(1, 66).graph);
  CHECK(big.verdict == Verdict::Skipped);
  CHECK(big.reason.rfind("size cap", 0) == 0);
  CheckParams bad;
  bad.edge = 99;
  const LemmaReport r = check(LemmaId::THM_BIP, named("k33"), bad);
  CHECK(r.verdict == Verdict::Skipped);
  CHECK(r.reason.rfind("bad parameters", 0) == 0);
}

TEST_CASE("ladder lemma") {
  const LemmaReport two = check_lm_ladder(two_ladders(), 0xFF, "two ladders");
  CHECK(two.verdict == Verdict::Pass);
  CHECK(params_of(two)["branch"] == "ladder");
  CHECK(params_of(two)["g23"] == 0);
  CHECK(params_of(two)["g24"] == 1);
  CHECK(params_of(two)["g34"] == 3);
  const Multigraph cube = named("cube");
  const LemmaReport face = check_lm_ladder(cube, cyclic_cuts_containing(cube, 0, 4).front().side_a);
  CHECK(face.verdict == Verdict::Pass);
  CHECK(params_of(face)["branch"] == "ladder");
  const LemmaReport bad = check_lm_ladder(cube, 0b11);
  CHECK(bad.verdict == Verdict::Skipped);
  CHECK_FALSE(bad.hypothesis_met);
}

TEST_CASE("known counterexamples stay reported") {
  const LemmaReport r = check(LemmaId::LM_BB_3E, named("petersen"), {}, "petersen");
  CHECK(r.verdict == Verdict::Fail);
  CHECK(r.measured == Rational(2));
  CHECK(r.bound == Bound::of(Rational(7, 4)));
  const auto c = random_corpus({27, 1, 12, 12, false, false});
  REQUIRE(c.size() == 1);
  CHECK(c[0].name == "random(seed=27,n=12)");
  const LemmaReport s = check(LemmaId::LM_SPLIT5_DIFF, c[0].graph, {}, c[0].name);
  CHECK(s.verdict == Verdict::Fail);
  CHECK(s.measured == Rational(136));
  CHECK(s.bound == Bound::of(Rational(144)));
  CHECK(cyclic_edge_connectivity(c[0].graph).value == 5);
}

TEST_CASE("flow certificates") {
  int found = 0;
  for (const Instance& inst : random_corpus({3000, 200, 6, 14, false, false})) {
    if (!is_cyclically_k_edge_connected(inst.graph, 3)) continue;
    for (EdgeId e = 0; e < inst.graph.edge_count(); ++e) {
      if (!cyclic_cuts_containing(inst.graph, e, 3).empty()) continue;
      const auto cert = bb3ef_flow_certificate(inst.graph, e);
      if (!cert) continue;
      ++found;
      CHECK(cert->structure_ok);
      CHECK(cert->flow_ok);
      CHECK(cert->in_polytope);
      CHECK(cert->entries_ok);
      CHECK(cert->weights.size() == static_cast<std::size_t>(cert->h.edge_count()));
    }
  }
  CHECK(found > 0);
}

TEST_CASE("report invariants over sweeps") {
  std::vector<Instance> corpus = random_corpus({100, 60, 4, 14, false, false});
  for (Instance& i : named_corpus({"k4", "k33", "prism", "cube", "petersen", "heawood"})) corpus.push_back(std::move(i));
  for (Instance& i : twisted_corpus(5, 20, 16)) corpus.push_back(std::move(i));
  for (Instance& i : twisted_host_corpus(5, 5, 10)) corpus.push_back(std::move(i));
  SweepOptions keep;
  keep.stop_at_fail = false;
  const auto reports = sweep(all_lemmas(), corpus, keep);
  CHECK(reports.size() == all_lemmas().size() * corpus.size());
  for (const LemmaReport& r : reports) check_report_invariants(r);
}

TEST_CASE("sweeps are deterministic") {
  const auto corpus = random_corpus({42, 40, 4, 12, false, false});
  const std::vector<LemmaId> lemmas{LemmaId::TH_HALF, LemmaId::THM_EF, LemmaId::THM_BB, LemmaId::LM_3CONN};
  SweepOptions one;
  SweepOptions four;
  four.threads = 4;
  const std::string a = reports_to_json(sweep(lemmas, corpus, one));
  CHECK(a == reports_to_json(sweep(lemmas, corpus, one)));
  CHECK(a == reports_to_json(sweep(lemmas, corpus, four)));
}

TEST_CASE("stop at first failure") {
  const auto corpus = named_corpus({"k4", "petersen", "cube"});
  const auto reports = sweep({LemmaId::LM_BB_3E}, corpus);
  REQUIRE_FALSE(reports.empty());
  CHECK(reports.back().verdict == Verdict::Fail);
  CHECK(reports.back().instance == "petersen");
  CHECK(reports.size() == 2);
}

TEST_CASE("report serialization") {
  const auto corpus = named_corpus({"k33", "petersen"});
  SweepOptions keep;
  keep.stop_at_fail = false;
  const auto reports = sweep({LemmaId::THM_BIP, LemmaId::LM_BB_3E, LemmaId::LM_TWISTED_NUM}, corpus, keep);
  const std::string text = reports_to_json(reports);
  const auto back = reports_from_json(text);
  CHECK(reports_to_json(back) == text);
  const std::string csv = reports_to_csv(reports);
  CHECK(csv.rfind("lemma,instance,hypothesis_met,bound,relation,measured,verdict,reason\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == static_cast<long>(reports.size() + 1));
  CHECK(summary_table(reports).find("LM_BB_3E") != std::string::npos);
  CHECK_THROWS_AS(reports_from_json("{}"), GraphError);
  CHECK_THROWS_AS(reports_from_json("[{\"lemma\":\"X\"}]"), GraphError);
}
