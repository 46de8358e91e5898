// Acceptance suite: one PASS/FAIL line per criterion.
//
// Exit status is 0 when every failing criterion is listed in kKnownFailures
// and 1 otherwise.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cubicpm/cli.hpp"
#include "cubicpm/connectivity.hpp"
#include "cubicpm/decomposition.hpp"
#include "cubicpm/families.hpp"
#include "cubicpm/matchings.hpp"
#include "cubicpm/report_io.hpp"
#include "cubicpm/surgery.hpp"
#include "cubicpm/verifier.hpp"

using namespace cubicpm;

namespace {

// Wall-clock budgets in seconds.
constexpr double kNamedBudget = 1.0;
constexpr double kHalfBudget = 120.0;
constexpr double kThreeConnBudget = 300.0;
constexpr double kTwistedBudget = 300.0;

constexpr int kRelabelings = 20;
constexpr int kHalfRandom = 500;
constexpr int kTwistedRecipes = 300;
constexpr int kTwistedMaxN = 26;

// Criteria expected to fail, with the reason printed next to the FAIL line.
const std::map<int, std::string> kKnownFailures{
    {10, "LM_SPLIT5_DIFF has counterexamples on 12-vertex cyclically 5-edge-connected graphs (see README)"},
};

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

std::vector<LemmaReport> all_reports;

std::vector<LemmaReport> run_sweep(const std::vector<LemmaId>& lemmas, const std::vector<Instance>& corpus) {
  SweepOptions opts;
  opts.stop_at_fail = false;
  auto reports = sweep(lemmas, corpus, opts);
  all_reports.insert(all_reports.end(), reports.begin(), reports.end());
  return reports;
}

struct Tally {
  int pass = 0;
  int fail = 0;
  int skipped = 0;
  std::string first_fail;
};

Tally tally(const std::vector<LemmaReport>& reports) {
  Tally t;
  for (const LemmaReport& r : reports) {
    if (r.verdict == Verdict::Pass) ++t.pass;
    if (r.verdict == Verdict::Skipped) ++t.skipped;
    if (r.verdict == Verdict::Fail) {
      if (t.fail++ == 0) t.first_fail = std::string(to_string(r.lemma)) + " on " + r.instance;
    }
  }
  return t;
}

std::string describe(const Tally& t) {
  std::string s = std::to_string(t.pass) + " pass, " + std::to_string(t.fail) + " fail, " + std::to_string(t.skipped) +
                  " skipped";
  if (t.fail > 0) s += "; first fail: " + t.first_fail;
  return s;
}

void append(std::vector<Instance>& to, std::vector<Instance> from) {
  for (Instance& i : from) to.push_back(std::move(i));
}

std::vector<Instance> exhaustive_up_to(int n_max) {
  std::vector<Instance> out;
  for (int n = 2; n <= n_max; n += 2) {
    int k = 0;
    for (Multigraph& g : exhaustive_cubic_bridgeless(n)) {
      out.push_back({"exhaustive(n=" + std::to_string(n) + ")#" + std::to_string(k++), std::move(g), std::nullopt});
    }
  }
  return out;
}

std::vector<Instance> filtered(const std::vector<Instance>& in, const std::function<bool(const Multigraph&)>& keep) {
  std::vector<Instance> out;
  for (const Instance& i : in) {
    if (keep(i.graph)) out.push_back(i);
  }
  return out;
}

std::vector<Instance> named_up_to(int n_max) {
  std::vector<std::string> names;
  for (const std::string& name : named_list()) {
    const Multigraph g = named(name);
    if (g.is_cubic() && g.vertex_count() <= n_max) names.push_back(name);
  }
  return named_corpus(names);
}

// Bridgeless cubic corpus used by several criteria: exhaustive catalogue
// n <= 10, random samples n = 12..14 and the small named graphs.
std::vector<Instance> base_corpus_14() {
  std::vector<Instance> c = exhaustive_up_to(10);
  append(c, random_corpus({1, 500, 12, 14, false, false}));
  append(c, named_up_to(14));
  return c;
}

Outcome criterion_named_counts() {
  Timer t;
  const std::vector<std::pair<std::string, std::uint64_t>> want{
      {"theta", 3}, {"k4", 3}, {"k33", 6}, {"cube", 9}, {"petersen", 6}};
  Outcome o;
  for (const auto& [name, count] : want) {
    const std::uint64_t got = count_matchings(named(name));
    o.detail += name + "=" + std::to_string(got) + " ";
    o.pass = o.pass && got == count;
  }
  const double s = t.seconds();
  o.pass = o.pass && s < kNamedBudget;
  o.detail += "in " + std::to_string(s) + " s";
  return o;
}

Outcome criterion_half() {
  Timer t;
  std::vector<Instance> corpus = exhaustive_up_to(10);
  const std::size_t exhaustive = corpus.size();
  append(corpus, random_corpus({1, kHalfRandom, 12, 16, false, false}));
  const Tally r = tally(run_sweep({LemmaId::TH_HALF}, corpus));
  const double s = t.seconds();
  Outcome o;
  o.pass = r.fail == 0 && r.skipped == 0 && s < kHalfBudget;
  o.detail = std::to_string(exhaustive) + " exhaustive + " + std::to_string(kHalfRandom) + " random: " + describe(r) +
             "; " + std::to_string(s) + " s";
  return o;
}

Outcome criterion_bipartite() {
  std::vector<Instance> corpus = filtered(exhaustive_up_to(10), is_bipartite);
  append(corpus, random_corpus({1, 1000, 6, 16, true, false}));
  append(corpus, named_corpus({"k33", "cube", "heawood", "moebius_kantor"}));
  const Tally r = tally(run_sweep({LemmaId::THM_BIP}, corpus));
  Outcome o;
  o.pass = r.fail == 0 && r.skipped == 0;
  o.detail = std::to_string(corpus.size()) + " bipartite instances: " + describe(r);
  return o;
}

Outcome criterion_bricks() {
  const std::vector<Instance> corpus = filtered(base_corpus_14(), is_matching_covered);
  const Tally r = tally(run_sweep({LemmaId::THM_BB, LemmaId::LM_BB_CUBIC, LemmaId::LM_BB_BIP}, corpus));
  int stable = 0;
  std::string unstable;
  for (const Instance& inst : corpus) {
    const auto base = leaves(decompose(inst.graph));
    bool ok = true;
    Rng rng(static_cast<std::uint64_t>(inst.graph.vertex_count()) * 1000 + static_cast<std::uint64_t>(stable));
    for (int k = 0; k < kRelabelings && ok; ++k) {
      std::vector<Vertex> perm(static_cast<std::size_t>(inst.graph.vertex_count()));
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<Vertex>(i);
      rng.shuffle(perm);
      ok = same_leaf_multiset(base, leaves(decompose(relabel(inst.graph, perm))));
    }
    if (ok) {
      ++stable;
    } else if (unstable.empty()) {
      unstable = inst.name;
    }
  }
  Outcome o;
  const int bip_checked = static_cast<int>(
      std::count_if(all_reports.begin(), all_reports.end(), [](const LemmaReport& x) {
        return x.lemma == LemmaId::LM_BB_BIP && x.verdict == Verdict::Pass;
      }));
  o.pass = r.fail == 0 && stable == static_cast<int>(corpus.size()) && bip_checked > 0;
  o.detail = std::to_string(corpus.size()) + " matching-covered instances: " + describe(r) + "; leaf multisets stable for " +
             std::to_string(stable) + " under " + std::to_string(kRelabelings) + " relabelings";
  if (!unstable.empty()) o.detail += "; unstable: " + unstable;
  return o;
}

Outcome criterion_three_conn() {
  Timer t;
  std::vector<Instance> corpus = base_corpus_14();
  append(corpus, random_corpus({5000, 1500, 4, 14, false, false}));
  corpus = filtered(corpus, [](const Multigraph& g) { return is_k_edge_connected(g, 3); });
  const Tally r = tally(run_sweep({LemmaId::LM_3CONN}, corpus));
  const double s = t.seconds();
  Outcome o;
  o.pass = r.fail == 0 && r.pass > 0 && s < kThreeConnBudget;
  o.detail = std::to_string(corpus.size()) + " 3-edge-connected instances: " + describe(r) + "; " + std::to_string(s) + " s";
  return o;
}

Outcome criterion_twisted() {
  Timer t;
  const auto corpus = twisted_corpus(1, kTwistedRecipes, kTwistedMaxN);
  const std::vector<LemmaId> lemmas{LemmaId::LM_TWISTED_NUM, LemmaId::LM_TWISTED_BIS, LemmaId::LM_TWISTED_NONBIP,
                                    LemmaId::LM_TWISTED_BIP};
  const auto reports = run_sweep(lemmas, corpus);
  const Tally r = tally(reports);
  std::set<LemmaId> exercised;
  for (const LemmaReport& x : reports) {
    if (x.verdict == Verdict::Pass) exercised.insert(x.lemma);
  }
  const double s = t.seconds();
  Outcome o;
  o.pass = r.fail == 0 && exercised.size() == lemmas.size() && s < kTwistedBudget;
  o.detail = std::to_string(corpus.size()) + " recipes: " + describe(r) + "; " + std::to_string(s) + " s";
  return o;
}

Outcome criterion_ladders() {
  Outcome o;
  std::uint64_t prev = 1, cur = 1;
  for (int k = 1; k <= 20; ++k) {
    if (k >= 2) {
      const std::uint64_t next = prev + cur;
      prev = cur;
      cur = next;
    }
    const Multigraph l = ladder(k);
    const bool count_ok = count_matchings(l) == cur;
    const bool enum_ok = k > 10 || enumerate_matchings(l).size() == cur;
    if (!count_ok || !enum_ok) {
      o.pass = false;
      o.detail += "mismatch at k=" + std::to_string(k) + " ";
    }
  }
  o.detail += "k=1..20 counted, k=1..10 enumerated; ladder(20) has " + std::to_string(cur);
  return o;
}

Outcome criterion_special() {
  std::vector<Instance> corpus = named_corpus({"cube"});
  std::vector<Instance> pool = exhaustive_up_to(10);
  append(pool, random_corpus({7000, 3000, 6, 12, false, false}));
  append(corpus, filtered(pool, [](const Multigraph& g) { return is_cyclically_k_edge_connected(g, 4); }));
  const auto reports = run_sweep({LemmaId::LM_SPECIAL}, corpus);
  const Tally r = tally(reports);
  long pairs = 0;
  for (const LemmaReport& x : reports) pairs += x.bound.coeff.num();
  Outcome o;
  o.pass = r.fail == 0 && r.skipped == 0 && reports.front().bound.coeff == Rational(66);
  o.detail = std::to_string(corpus.size()) + " instances, " + std::to_string(pairs) + " edge pairs: " + describe(r);
  return o;
}

Outcome criterion_polytope() {
  std::vector<Instance> corpus = base_corpus_14();
  int accepted = 0;
  for (const Instance& inst : corpus) {
    accepted += polytope_membership(inst.graph, uniform_weights(inst.graph, Rational(1, 3)));
  }
  // Two copies of K4 with one edge subdivided, joined by a bridge.
  std::vector<std::pair<int, int>> pairs;
  for (int b : {0, 5}) {
    pairs.insert(pairs.end(), {{b, b + 1}, {b, b + 2}, {b, b + 3}, {b + 1, b + 2}, {b + 1, b + 4}, {b + 2, b + 3}, {b + 3, b + 4}});
  }
  pairs.emplace_back(4, 9);
  const Multigraph bridged = Multigraph::from_edge_list(10, pairs);
  const bool rejected = !polytope_membership(bridged, uniform_weights(bridged, Rational(1, 3)));

  std::vector<Instance> three = filtered(corpus, [](const Multigraph& g) { return is_k_edge_connected(g, 3); });
  append(three, filtered(random_corpus({9000, 1000, 6, 14, false, false}),
                         [](const Multigraph& g) { return is_k_edge_connected(g, 3); }));
  const Tally r = tally(run_sweep({LemmaId::LM_BB_3EF}, three));
  int certificates = 0, good = 0;
  for (const Instance& inst : three) {
    for (EdgeId e = 0; e < inst.graph.edge_count(); ++e) {
      if (!cyclic_cuts_containing(inst.graph, e, 3).empty()) continue;
      const auto cert = bb3ef_flow_certificate(inst.graph, e);
      if (!cert) continue;
      ++certificates;
      good += cert->structure_ok && cert->flow_ok && cert->in_polytope && cert->entries_ok;
    }
  }
  Outcome o;
  o.pass = accepted == static_cast<int>(corpus.size()) && rejected && r.fail == 0 && certificates > 0 &&
           good == certificates;
  o.detail = "uniform 1/3 accepted on " + std::to_string(accepted) + "/" + std::to_string(corpus.size()) +
             ", bridged graph " + (rejected ? "rejected" : "accepted") + "; flow vectors valid " + std::to_string(good) +
             "/" + std::to_string(certificates) + "; LM_BB_3EF " + describe(r);
  return o;
}

Outcome criterion_splitting() {
  std::vector<Instance> corpus = named_corpus({"petersen", "dodecahedron"});
  std::vector<Instance> search = random_corpus({1, 6000, 10, 20, false, true});
  append(corpus, filtered(search, [](const Multigraph& g) { return is_cyclically_k_edge_connected(g, 4); }));
  const std::vector<LemmaId> lemmas{LemmaId::LM_SPLITOFF, LemmaId::LM_SPLIT5_SAME, LemmaId::LM_SPLIT5_DIFF,
                                    LemmaId::LM_SPLIT4A, LemmaId::LM_SPLIT4B};
  const auto reports = run_sweep(lemmas, corpus);
  Outcome o;
  std::ostringstream d;
  d << corpus.size() << " instances;";
  for (LemmaId id : lemmas) {
    std::vector<LemmaReport> mine;
    for (const LemmaReport& x : reports) {
      if (x.lemma == id) mine.push_back(x);
    }
    const Tally t = tally(mine);
    d << ' ' << to_string(id) << ' ' << t.pass << '/' << t.fail << '/' << t.skipped;
    if (t.fail > 0) o.pass = false;
    if (t.pass + t.fail == 0) o.pass = false;
  }
  d << " (pass/fail/skipped)";
  const Tally all = tally(reports);
  if (all.fail > 0) d << "; first fail: " << all.first_fail;
  o.detail = d.str();
  return o;
}

Outcome criterion_determinism() {
  std::vector<Instance> corpus = random_corpus({11, 60, 4, 14, false, false});
  append(corpus, twisted_corpus(11, 30, 20));
  append(corpus, named_up_to(20));
  const std::vector<LemmaId> lemmas = all_lemmas();
  SweepOptions one;
  one.stop_at_fail = false;
  SweepOptions many = one;
  many.threads = 4;
  const std::string a = reports_to_json(sweep(lemmas, corpus, one));
  const std::string b = reports_to_json(sweep(lemmas, corpus, one));
  const std::string c = reports_to_json(sweep(lemmas, corpus, many));

  auto cli = [](const std::string& threads) {
    std::istringstream in;
    std::ostringstream out, err;
    run_cli({"verify", "--lemma", "all", "--random", "40", "--n", "4..12", "--seed", "3", "--json", "--keep-going",
             "--threads", threads},
            in, out, err);
    return out.str();
  };
  const std::string x = cli("1");
  const std::string y = cli("1");
  const std::string z = cli("4");
  Outcome o;
  o.pass = a == b && a == c && x == y && x == z && !x.empty();
  o.detail = "library sweep " + std::to_string(a.size()) + " bytes, CLI sweep " + std::to_string(x.size()) +
             " bytes; identical across reruns and 1 vs 4 threads: " + (o.pass ? "yes" : "no");
  return o;
}

Outcome coverage() {
  // Instances for the lemmas not reached by the criteria above.
  std::vector<Instance> corpus = random_corpus({300, 200, 6, 16, false, false});
  append(corpus, named_up_to(20));
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const KleeSample k = random_klee(seed, 4 + 2 * static_cast<int>(seed % 10));
    corpus.push_back({"klee(seed=" + std::to_string(seed) + ")", k.graph, std::nullopt});
  }
  const std::vector<std::pair<int, int>> comb{{0, 1}, {2, 3}, {4, 5}, {0, 2}, {2, 4}};
  corpus.push_back({"comb6", Multigraph::from_edge_list(6, comb), std::nullopt});
  append(corpus, twisted_host_corpus(1, 40, 12));
  run_sweep(all_lemmas(), corpus);

  std::set<LemmaId> exercised;
  std::map<LemmaId, int> failures;
  for (const LemmaReport& r : all_reports) {
    if (r.verdict != Verdict::Skipped) exercised.insert(r.lemma);
    if (r.verdict == Verdict::Fail) ++failures[r.lemma];
  }
  Outcome o;
  std::string missing;
  for (LemmaId id : all_lemmas()) {
    if (!exercised.count(id)) missing += std::string(to_string(id)) + " ";
  }
  o.pass = missing.empty();
  o.detail = std::to_string(exercised.size()) + "/" + std::to_string(all_lemmas().size()) + " lemma ids exercised";
  if (!missing.empty()) o.detail += "; missing: " + missing;
  for (const auto& [id, n] : failures) o.detail += "; " + std::string(to_string(id)) + " failed " + std::to_string(n) + "x";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"named perfect-matching counts", criterion_named_counts},
      {"at least n/2 perfect matchings", criterion_half},
      {"bipartite edge-avoiding bound (4/3)^(n/2)", criterion_bipartite},
      {"brick bound, b <= n/4, bipartite b = 0, relabel-stable leaves", criterion_bricks},
      {"n/8 matchings avoiding edges outside cyclic 3-cuts", criterion_three_conn},
      {"twisted-net bounds", criterion_twisted},
      {"ladder counts against Fibonacci recursion", criterion_ladders},
      {"special-pair biconditional", criterion_special},
      {"perfect matching polytope", criterion_polytope},
      {"splitting suite", criterion_splitting},
      {"determinism", criterion_determinism},
  };
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Timer t;
    const Outcome o = criteria[i].second();
    const auto known = kKnownFailures.find(id);
    std::printf("criterion %2d %s  %s (%.1f s): %s\n", id, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                t.seconds(), o.detail.c_str());
    if (!o.pass && known != kKnownFailures.end()) {
      std::printf("             known failure: %s\n", known->second.c_str());
    } else if (!o.pass) {
      ++unexpected;
    } else if (known != kKnownFailures.end()) {
      std::printf("             listed as a known failure but passed\n");
    }
    std::fflush(stdout);
  }
  Timer t;
  const Outcome cov = coverage();
  std::printf("coverage     %s  every lemma id exercised (%.1f s): %s\n", cov.pass ? "PASS" : "FAIL", t.seconds(),
              cov.detail.c_str());
  if (!cov.pass) ++unexpected;
  std::printf("%d unexpected failure(s)\n", unexpected);
  return unexpected == 0 ? 0 : 1;
}
