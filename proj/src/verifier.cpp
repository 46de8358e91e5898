#include "cubicpm/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <set>
#include <thread>

#include "json.hpp"

#include "cubicpm/connectivity.hpp"
#include "cubicpm/decomposition.hpp"
#include "cubicpm/graph_io.hpp"
#include "cubicpm/isomorphism.hpp"
#include "cubicpm/matchings.hpp"
#include "cubicpm/surgery.hpp"

namespace cubicpm {
namespace {

using json = nlohmann::json;

constexpr std::int64_t kKleeExponentDenominator = 655978752;

struct LemmaName {
  LemmaId id;
  std::string_view name;
};

constexpr LemmaName kLemmaNames[] = {
    {LemmaId::TH_HALF, "TH_HALF"},
    {LemmaId::THM_BIP, "THM_BIP"},
    {LemmaId::THM_KLEE, "THM_KLEE"},
    {LemmaId::THM_EF, "THM_EF"},
    {LemmaId::LM_DOUBLE, "LM_DOUBLE"},
    {LemmaId::LM_TRIPLE, "LM_TRIPLE"},
    {LemmaId::LM_SPECIAL, "LM_SPECIAL"},
    {LemmaId::LM_BRIDGE, "LM_BRIDGE"},
    {LemmaId::LM_3CONN, "LM_3CONN"},
    {LemmaId::LM_SEMIBLOCK, "LM_SEMIBLOCK"},
    {LemmaId::THM_BB, "THM_BB"},
    {LemmaId::LM_BB_CUBIC, "LM_BB_CUBIC"},
    {LemmaId::LM_BB_BIP, "LM_BB_BIP"},
    {LemmaId::LM_BB_3E, "LM_BB_3E"},
    {LemmaId::LM_BB_3EF, "LM_BB_3EF"},
    {LemmaId::LM_SPLITOFF, "LM_SPLITOFF"},
    {LemmaId::LM_SPLIT5_SAME, "LM_SPLIT5_SAME"},
    {LemmaId::LM_SPLIT5_DIFF, "LM_SPLIT5_DIFF"},
    {LemmaId::LM_SPLIT4A, "LM_SPLIT4A"},
    {LemmaId::LM_SPLIT4B, "LM_SPLIT4B"},
    {LemmaId::LM_ORDERED, "LM_ORDERED"},
    {LemmaId::LM_LADDER, "LM_LADDER"},
    {LemmaId::LM_TWISTED_NUM, "LM_TWISTED_NUM"},
    {LemmaId::LM_TWISTED_BIP, "LM_TWISTED_BIP"},
    {LemmaId::LM_TWISTED_NONBIP, "LM_TWISTED_NONBIP"},
    {LemmaId::LM_TWISTED_BIS, "LM_TWISTED_BIS"},
    {LemmaId::LM_TWISTED_STRUC, "LM_TWISTED_STRUC"},
};

Rational as_rational(std::uint64_t x) {
  if (x > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    throw GraphError(ErrorKind::Overflow, "count does not fit a 64-bit rational");
  }
  return Rational(static_cast<std::int64_t>(x));
}

std::uint64_t avoiding(const Multigraph& g, std::vector<EdgeId> forbidden) {
  return count_matchings(g, {{}, std::move(forbidden), {}});
}

std::uint64_t missing(const Multigraph& g, std::vector<Vertex> missed) {
  return count_matchings(g, {{}, {}, std::move(missed)});
}

bool cubic_bridgeless(const Multigraph& g) {
  return g.vertex_count() > 0 && g.is_cubic() && bridges(g).empty();
}

std::vector<EdgeId> cyclic_cut_edges(const Multigraph& g, int size) {
  std::set<EdgeId> in_cut;
  for (const EdgeCut& cut : enumerate_cuts(g, size, true)) {
    if (cut.size == size) in_cut.insert(cut.crossing_edges.begin(), cut.crossing_edges.end());
  }
  return {in_cut.begin(), in_cut.end()};
}

std::vector<EdgeCut> cyclic_cuts_of_size(const Multigraph& g, int size) {
  std::vector<EdgeCut> out;
  for (EdgeCut& cut : enumerate_cuts(g, size, true)) {
    if (cut.size == size) out.push_back(std::move(cut));
  }
  return out;
}

bool is_four_cycle(const Multigraph& g, VertexMask side) {
  if (__builtin_popcountll(side) != 4) return false;
  const Subgraph sub = induced_subgraph(g, side);
  if (sub.graph.edge_count() != 4 || !sub.graph.is_simple() || !sub.graph.is_connected()) return false;
  for (Vertex v = 0; v < 4; ++v) {
    if (sub.graph.degree(v) != 2) return false;
  }
  return true;
}

class Ctx {
 public:
  Ctx(LemmaId lemma, const Multigraph& g, std::string instance) : g_(g) {
    r_.lemma = lemma;
    r_.instance = std::move(instance);
  }

  json params = json::object();

  LemmaReport skip(std::string reason) {
    r_.hypothesis_met = false;
    r_.verdict = Verdict::Skipped;
    r_.reason = std::move(reason);
    return finish();
  }

  /// Skipped after the hypothesis held (size or arithmetic caps).
  LemmaReport cap(std::string reason) {
    r_.verdict = Verdict::Skipped;
    r_.reason = std::move(reason);
    return finish();
  }

  LemmaReport judge(Bound bound, Relation relation, Rational measured, std::string fail_reason = {}) {
    r_.hypothesis_met = true;
    r_.bound = bound;
    r_.relation = relation;
    r_.measured = measured;
    const int c = compare(measured, bound);
    const bool ok = relation == Relation::AtLeast ? c >= 0 : c <= 0;
    r_.verdict = ok ? Verdict::Pass : Verdict::Fail;
    if (!ok) {
      r_.reason = fail_reason.empty() ? "measured value violates the bound" : std::move(fail_reason);
      r_.dump = write_edge_list(g_);
    }
    return finish();
  }

  /// Claims of the form "every admissible choice satisfies P".
  LemmaReport tally(int passing, int total, std::string fail_reason = {}) {
    params["choices"] = total;
    return judge(Bound::of(Rational(total)), Relation::AtLeast, Rational(passing), std::move(fail_reason));
  }

 private:
  LemmaReport finish() {
    r_.params = params.dump();
    return r_;
  }

  const Multigraph& g_;
  LemmaReport r_;
};

std::vector<EdgeId> selected_edges(const Multigraph& g, const CheckParams& p) {
  if (p.edge) {
    if (*p.edge < 0 || *p.edge >= g.edge_count()) {
      throw GraphError(ErrorKind::EdgeIdOutOfRange, "edge " + std::to_string(*p.edge));
    }
    return {*p.edge};
  }
  std::vector<EdgeId> all(static_cast<std::size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) all[static_cast<std::size_t>(e)] = e;
  return all;
}

// ---- counting theorems ------------------------------------------------------

LemmaReport th_half(Ctx& c, const Multigraph& g) {
  if (!cubic_bridgeless(g)) return c.skip("hypothesis unmet: not a bridgeless cubic graph");
  return c.judge(Bound::of(Rational(g.vertex_count(), 2)), Relation::AtLeast, as_rational(count_matchings(g)));
}

LemmaReport thm_bip(Ctx& c, const Multigraph& g, const CheckParams& p) {
  if (!cubic_bridgeless(g) || !is_bipartite(g)) return c.skip("hypothesis unmet: not a bipartite cubic graph");
  const int k = g.vertex_count() / 2;
  std::int64_t three_k = 1;
  for (int i = 0; i < k; ++i) {
    if (three_k > std::numeric_limits<std::int64_t>::max() / 3) return c.cap("size cap: 3^(n/2) exceeds 64 bits");
    three_k *= 3;
  }
  Bound bound{Rational(1, three_k), 2 * k, 1};
  std::uint64_t worst = std::numeric_limits<std::uint64_t>::max();
  EdgeId worst_edge = -1;
  for (EdgeId e : selected_edges(g, p)) {
    const std::uint64_t m = avoiding(g, {e});
    if (m < worst) {
      worst = m;
      worst_edge = e;
    }
  }
  c.params["edge"] = worst_edge;
  return c.judge(bound, Relation::AtLeast, as_rational(worst));
}

LemmaReport thm_klee(Ctx& c, const Multigraph& g) {
  if (!g.is_cubic() || !is_klee(g)) return c.skip("hypothesis unmet: not a Klee-graph");
  c.params["exponent_denominator"] = kKleeExponentDenominator;
  c.params["exponent_denominator_note"] = "in-body constant unresolved; the stated constant is used";
  return c.judge(Bound::power_of_two(g.vertex_count(), kKleeExponentDenominator), Relation::AtLeast,
                 as_rational(count_matchings(g)));
}

LemmaReport thm_ef(Ctx& c, const Multigraph& g, const CheckParams& p) {
  if (!cubic_bridgeless(g)) return c.skip("hypothesis unmet: not a bridgeless cubic graph");
  std::uint64_t worst = std::numeric_limits<std::uint64_t>::max();
  json witness;
  if (p.edge && p.edge2) {
    worst = avoiding(g, {*p.edge, *p.edge2});
    witness = {*p.edge, *p.edge2};
  } else {
    const auto contain = edge_containment_counts(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (contain[static_cast<std::size_t>(e)] < worst) {
        worst = contain[static_cast<std::size_t>(e)];
        witness = {e};
      }
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      for (EdgeId f = e + 1; f < g.edge_count(); ++f) {
        const std::uint64_t m = avoiding(g, {e, f});
        if (m < worst) {
          worst = m;
          witness = {e, f};
        }
      }
    }
  }
  c.params["witness"] = witness;
  return c.judge(Bound::of(Rational(1)), Relation::AtLeast, as_rational(worst));
}

LemmaReport min_containment(Ctx& c, const Multigraph& g, int bound) {
  const auto contain = edge_containment_counts(g);
  const auto it = std::min_element(contain.begin(), contain.end());
  c.params["edge"] = static_cast<int>(it - contain.begin());
  return c.judge(Bound::of(Rational(bound)), Relation::AtLeast, as_rational(*it));
}

LemmaReport lm_double(Ctx& c, const Multigraph& g) {
  if (!g.is_cubic() || g.vertex_count() < 4) return c.skip("hypothesis unmet: not a cubic graph on at least 4 vertices");
  if (!is_cyclically_k_edge_connected(g, 3)) return c.skip("hypothesis unmet: not cyclically 3-edge-connected");
  if (is_klee(g)) return c.skip("hypothesis unmet: Klee-graph");
  return min_containment(c, g, 2);
}

LemmaReport lm_triple(Ctx& c, const Multigraph& g) {
  if (!g.is_cubic() || !is_bipartite(g) || g.vertex_count() < 8) {
    return c.skip("hypothesis unmet: not a bipartite cubic graph on at least 8 vertices");
  }
  if (!is_cyclically_k_edge_connected(g, 4)) return c.skip("hypothesis unmet: not cyclically 4-edge-connected");
  return min_containment(c, g, 3);
}

LemmaReport lm_special(Ctx& c, const Multigraph& g, const CheckParams& p) {
  if (!g.is_cubic() || !g.is_connected() || !is_cyclically_k_edge_connected(g, 4)) {
    return c.skip("hypothesis unmet: not a cyclically 4-edge-connected cubic graph");
  }
  auto agrees = [&](EdgeId e, EdgeId f) {
    const bool structure = special_pair_coloring(g, e, f).has_value();
    const bool none = !has_perfect_matching(g, {{f}, {e}, {}});
    return structure == none;
  };
  int total = 0;
  int passing = 0;
  json first_bad;
  auto record = [&](bool ok, EdgeId e, EdgeId f) {
    ++total;
    if (ok) ++passing;
    else if (first_bad.is_null()) first_bad = {e, f};
  };
  if (p.edge && p.edge2) {
    record(*p.edge != *p.edge2 && agrees(*p.edge, *p.edge2), *p.edge, *p.edge2);
  } else {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      for (EdgeId f = e + 1; f < g.edge_count(); ++f) record(agrees(e, f) && agrees(f, e), e, f);
    }
  }
  if (!first_bad.is_null()) c.params["disagreement"] = first_bad;
  return c.tally(passing, total, "structure test and matching search disagree");
}

LemmaReport lm_bridge(Ctx& c, const Multigraph& g) {
  if (count_matchings(g) != 1) return c.skip("hypothesis unmet: perfect matching is not unique");
  int found = 0;
  try {
    c.params["bridge"] = kotzig_bridge(g);
    found = 1;
  } catch (const GraphError& err) {
    if (err.kind() != ErrorKind::InvariantViolated) throw;
  }
  return c.judge(Bound::of(Rational(1)), Relation::AtLeast, Rational(found), "unique perfect matching has no bridge");
}

LemmaReport lm_3conn(Ctx& c, const Multigraph& g, const CheckParams& p) {
  if (!g.is_cubic() || !is_k_edge_connected(g, 3)) return c.skip("hypothesis unmet: not a 3-edge-connected cubic graph");
  const auto blocked = cyclic_cut_edges(g, 3);
  std::uint64_t worst = std::numeric_limits<std::uint64_t>::max();
  EdgeId worst_edge = -1;
  for (EdgeId e : selected_edges(g, p)) {
    if (std::binary_search(blocked.begin(), blocked.end(), e)) continue;
    const std::uint64_t m = avoiding(g, {e});
    if (m < worst) {
      worst = m;
      worst_edge = e;
    }
  }
  if (worst_edge < 0) return c.skip("hypothesis unmet: every selected edge lies in a cyclic 3-edge-cut");
  c.params["edge"] = worst_edge;
  return c.judge(Bound::of(Rational(g.vertex_count(), 8)), Relation::AtLeast, as_rational(worst));
}

LemmaReport lm_semiblock(Ctx& c, const Multigraph& g, const CheckParams& p) {
  if (!cubic_bridgeless(g) || !g.is_connected()) return c.skip("hypothesis unmet: not a connected bridgeless cubic graph");
  const int s = semiblocks(g).s;
  std::uint64_t worst = std::numeric_limits<std::uint64_t>::max();
  EdgeId worst_edge = -1;
  for (EdgeId e : selected_edges(g, p)) {
    const std::uint64_t m = avoiding(g, {e});
    if (m < worst) {
      worst = m;
      worst_edge = e;
    }
  }
  c.params["s"] = s;
  c.params["edge"] = worst_edge;
  return c.judge(Bound::of(Rational(s + 1)), Relation::AtLeast, as_rational(worst));
}

// ---- brick counts -----------------------------------------------------------

LemmaReport thm_bb(Ctx& c, const Multigraph& g) {
  if (g.vertex_count() == 0 || !g.is_connected() || !is_matching_covered(g)) {
    return c.skip("hypothesis unmet: not a connected matching-covered graph");
  }
  const int b = brick_count(g);
  c.params["bricks"] = b;
  return c.judge(Bound::of(Rational(g.edge_count() - g.vertex_count() + 1 - b)), Relation::AtLeast,
                 as_rational(count_matchings(g)));
}

LemmaReport lm_bb_cubic(Ctx& c, const Multigraph& g) {
  if (!cubic_bridgeless(g) || !g.is_connected()) return c.skip("hypothesis unmet: not a connected bridgeless cubic graph");
  return c.judge(Bound::of(Rational(g.vertex_count(), 4)), Relation::AtMost, Rational(brick_count(g)));
}

LemmaReport lm_bb_bip(Ctx& c, const Multigraph& g) {
  if (g.vertex_count() == 0 || !is_bipartite(g) || !g.is_connected() || !is_matching_covered(g)) {
    return c.skip("hypothesis unmet: not a connected bipartite matching-covered graph");
  }
  return c.judge(Bound::of(Rational(0)), Relation::AtMost, Rational(brick_count(g)));
}

/// Edges of a 3-edge-connected cubic graph outside every cyclic 3-cut,
/// split by whether G - e is matching-covered.
struct ThreeEdgeChoices {
  std::vector<EdgeId> covered;
  std::vector<EdgeId> uncovered;
};

ThreeEdgeChoices three_edge_choices(const Multigraph& g, const CheckParams& p) {
  ThreeEdgeChoices out;
  const auto blocked = cyclic_cut_edges(g, 3);
  for (EdgeId e : selected_edges(g, p)) {
    if (std::binary_search(blocked.begin(), blocked.end(), e)) continue;
    const std::vector<EdgeId> removed{e};
    if (is_matching_covered(delete_edges(g, removed).graph)) out.covered.push_back(e);
    else out.uncovered.push_back(e);
  }
  return out;
}

LemmaReport lm_bb_3e(Ctx& c, const Multigraph& g, const CheckParams& p) {
  if (!g.is_cubic() || !is_k_edge_connected(g, 3)) return c.skip("hypothesis unmet: not a 3-edge-connected cubic graph");
  if (g.vertex_count() < 6) return c.skip("hypothesis unmet: fewer than 6 vertices");
  const auto choices = three_edge_choices(g, p);
  if (choices.covered.empty()) return c.skip("hypothesis unmet: no edge e outside cyclic 3-cuts with G-e matching-covered");
  int worst = -1;
  EdgeId worst_edge = -1;
  for (EdgeId e : choices.covered) {
    const std::vector<EdgeId> removed{e};
    const int b = brick_count(delete_edges(g, removed).graph);
    if (b > worst) {
      worst = b;
      worst_edge = e;
    }
  }
  c.params["edge"] = worst_edge;
  return c.judge(Bound::of(Rational(3 * g.vertex_count(), 8) - Rational(2)), Relation::AtMost, Rational(worst));
}

}  // namespace

std::optional<FlowCertificate> bb3ef_flow_certificate(const Multigraph& g, EdgeId e) {
  const int n = g.vertex_count();
  const Edge ee = g.edge(e);
  EdgeId f = -1;
  for (EdgeId cand = 0; cand < g.edge_count() && f < 0; ++cand) {
    if (cand != e && !has_perfect_matching(g, {{cand}, {e}, {}})) f = cand;
  }
  if (f < 0) return std::nullopt;
  FlowCertificate cert;
  cert.e = e;
  cert.f = f;
  const Edge fe = g.edge(f);
  // G' = G - {u, u'} - e, with a Tutte barrier S' of odd deficiency two.
  const VertexMask uu = bit(fe.a) | bit(fe.b);
  Subgraph minus_u = delete_vertices(g, uu);
  std::vector<EdgeId> drop;
  for (EdgeId x = 0; x < minus_u.graph.edge_count(); ++x) {
    if (minus_u.edge_origin[static_cast<std::size_t>(x)] == e) drop.push_back(x);
  }
  const Subgraph gp_sub = delete_edges(minus_u.graph, drop);
  const Multigraph& gp = gp_sub.graph;
  const int np = gp.vertex_count();
  if (np > 22) throw GraphError(ErrorKind::TooLarge, "barrier search supports at most 24 vertices");
  const VertexMask all_p = gp.all_vertices_mask();
  std::optional<VertexMask> barrier;
  for (VertexMask s = 0; !barrier; ++s) {
    int odd = 0;
    for (VertexMask comp : components_of(gp, all_p & ~s)) odd += __builtin_popcountll(comp) % 2;
    if (odd >= __builtin_popcountll(s) + 2) barrier = s;
    if (s == all_p) break;
  }
  if (!barrier) return std::nullopt;
  VertexMask big_s = uu;
  for (Vertex v : mask_to_vertices(*barrier)) big_s |= bit(minus_u.vertex_origin[static_cast<std::size_t>(v)]);
  cert.barrier = mask_to_vertices(big_s);
  // Components of G - e - S.
  const std::vector<EdgeId> e_only{e};
  const Multigraph g_minus_e = delete_edges(g, e_only).graph;
  const auto comps = components_of(g_minus_e, g.all_vertices_mask() & ~big_s);
  bool structure = static_cast<int>(comps.size()) == __builtin_popcountll(big_s);
  for (VertexMask comp : comps) structure = structure && (__builtin_popcountll(comp) % 2 == 1);
  const auto singleton = [&](Vertex v) {
    return std::any_of(comps.begin(), comps.end(), [&](VertexMask m) { return m == bit(v); });
  };
  structure = structure && singleton(ee.a) && singleton(ee.b);
  // H: barrier vertices first, then one vertex per component.
  std::vector<Vertex> to_h(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (Vertex v : cert.barrier) to_h[static_cast<std::size_t>(v)] = next++;
  for (VertexMask comp : comps) {
    for (Vertex v : mask_to_vertices(comp)) to_h[static_cast<std::size_t>(v)] = next;
    ++next;
  }
  std::vector<Edge> h_edges;
  const int s_count = static_cast<int>(cert.barrier.size());
  for (EdgeId x = 0; x < g.edge_count(); ++x) {
    if (x == e || x == f) continue;
    const Vertex a = to_h[static_cast<std::size_t>(g.edge(x).a)];
    const Vertex b = to_h[static_cast<std::size_t>(g.edge(x).b)];
    if (a == b) continue;
    if (a < s_count && b < s_count) structure = false;
    if (a >= s_count && b >= s_count) structure = false;
    h_edges.push_back({a, b});
  }
  cert.h = Multigraph::from_edges(next, std::move(h_edges));
  cert.structure_ok = structure;
  if (!structure) return cert;
  try {
    cert.weights = fractional_pm_via_flow(cert.h, to_h[static_cast<std::size_t>(fe.a)],
                                          to_h[static_cast<std::size_t>(fe.b)], to_h[static_cast<std::size_t>(ee.a)],
                                          to_h[static_cast<std::size_t>(ee.b)]);
  } catch (const GraphError& err) {
    if (err.kind() != ErrorKind::FlowInfeasible && err.kind() != ErrorKind::NotBipartite) throw;
    return cert;
  }
  cert.flow_ok = true;
  cert.in_polytope = polytope_membership(cert.h, cert.weights, true);
  const Rational allowed[] = {Rational(1, 6), Rational(1, 3), Rational(1, 2), Rational(2, 3)};
  cert.entries_ok = std::all_of(cert.weights.begin(), cert.weights.end(), [&](const Rational& w) {
    return std::find(std::begin(allowed), std::end(allowed), w) != std::end(allowed);
  });
  return cert;
}

namespace {

LemmaReport lm_bb_3ef(Ctx& c, const Multigraph& g, const CheckParams& p) {
  if (!g.is_cubic() || !is_k_edge_connected(g, 3)) return c.skip("hypothesis unmet: not a 3-edge-connected cubic graph");
  const auto choices = three_edge_choices(g, p);
  if (choices.uncovered.empty()) {
    return c.skip("hypothesis unmet: no edge e outside cyclic 3-cuts with G-e not matching-covered");
  }
  const Rational bound = Rational(g.vertex_count(), 4) - Rational(1);
  const Rational impossible(g.edge_count() + g.vertex_count());
  Rational worst(-1);
  json detail = json::array();
  std::string failure;
  for (EdgeId e : choices.uncovered) {
    json item{{"edge", e}};
    std::optional<int> bricks;
    for (EdgeId f = 0; f < g.edge_count() && !bricks; ++f) {
      if (f == e) continue;
      const std::vector<EdgeId> removed{std::min(e, f), std::max(e, f)};
      const Multigraph h = delete_edges(g, removed).graph;
      if (h.is_connected() && is_matching_covered(h)) {
        bricks = brick_count(h);
        item["companion"] = f;
        item["bricks"] = *bricks;
      }
    }
    Rational measured = bricks ? Rational(*bricks) : impossible;
    if (!bricks && failure.empty()) failure = "no companion edge f leaves a matching-covered graph";
    const auto cert = bb3ef_flow_certificate(g, e);
    const bool flow_ok = cert && cert->structure_ok && cert->flow_ok && cert->in_polytope && cert->entries_ok;
    item["flow_certificate"] = flow_ok;
    if (!flow_ok) {
      measured = impossible;
      if (failure.empty()) failure = "flow-built fractional perfect matching failed its checks";
    }
    worst = std::max(worst, measured);
    detail.push_back(std::move(item));
  }
  c.params["edges"] = detail;
  return c.judge(Bound::of(bound), Relation::AtMost, worst, failure);
}

// ---- splitting --------------------------------------------------------------

std::vector<Vertex> distinct_neighbors(const Multigraph& g, Vertex v) {
  auto nb = g.neighbors(v);
  std::sort(nb.begin(), nb.end());
  nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  return nb;
}

std::vector<std::array<Vertex, 4>> all_paths(const Multigraph& g) {
  std::vector<std::array<Vertex, 4>> out;
  for (Vertex v2 = 0; v2 < g.vertex_count(); ++v2) {
    for (Vertex v3 : distinct_neighbors(g, v2)) {
      for (Vertex v1 : distinct_neighbors(g, v2)) {
        if (v1 == v3) continue;
        for (Vertex v4 : distinct_neighbors(g, v3)) {
          if (v4 == v2 || v4 == v1) continue;
          out.push_back({v1, v2, v3, v4});
        }
      }
    }
  }
  return out;
}

std::optional<Multigraph> try_split(const Multigraph& g, const std::array<Vertex, 4>& path) {
  try {
    return split_off(g, path);
  } catch (const GraphError& err) {
    if (err.kind() == ErrorKind::NotAPath || err.kind() == ErrorKind::NeighborClash ||
        err.kind() == ErrorKind::DegreeMismatch) {
      return std::nullopt;
    }
    throw;
  }
}

LemmaReport lm_splitoff(Ctx& c, const Multigraph& g, const CheckParams& p) {
  if (!g.is_cubic() || !g.is_connected()) return c.skip("hypothesis unmet: not a connected cubic graph");
  const CyclicConnectivity cc = cyclic_edge_connectivity(g);
  if (cc.unbounded()) return c.skip("hypothesis unmet: no cyclic edge-cut");
  const int ell = *cc.value;
  c.params["ell"] = ell;
  if (g.vertex_count() < 2 * ell + 2) return c.skip("hypothesis unmet: fewer than 2*ell+2 vertices");
  std::vector<std::array<Vertex, 4>> paths;
  if (p.path) {
    paths.push_back(*p.path);
  } else {
    for (const auto& path : all_paths(g)) {
      const std::array<Vertex, 4> rev{path[3], path[2], path[1], path[0]};
      if (path <= rev) paths.push_back(path);
    }
  }
  int total = 0;
  int passing = 0;
  json first_bad;
  for (const auto& path : paths) {
    const auto h = try_split(g, path);
    if (!h) continue;
    ++total;
    const EdgeId new1 = h->edge_count() - 2;
    const EdgeId new2 = h->edge_count() - 1;
    bool ok = true;
    for (const EdgeCut& cut : enumerate_cuts(*h, ell - 1, true)) {
      const bool has_new = std::binary_search(cut.crossing_edges.begin(), cut.crossing_edges.end(), new1) ||
                           std::binary_search(cut.crossing_edges.begin(), cut.crossing_edges.end(), new2);
      if (cut.size < ell - 2 || has_new) ok = false;
    }
    if (ok) ++passing;
    else if (first_bad.is_null()) first_bad = path;
  }
  if (total == 0) return c.skip("hypothesis unmet: no valid path to split off");
  if (!first_bad.is_null()) c.params["counterexample_path"] = first_bad;
  return c.tally(passing, total, "split-off created a forbidden small cyclic cut");
}

bool almost_4(const Multigraph& h) { return is_k_almost_cyclically_4ec(h, 4).ok; }

LemmaReport lm_split5(Ctx& c, const Multigraph& g, const CheckParams& p, bool same) {
  if (!g.is_cubic() || g.vertex_count() < 12 || !g.is_connected() || !is_cyclically_k_edge_connected(g, 5)) {
    return c.skip("hypothesis unmet: not a cyclically 5-edge-connected cubic graph on at least 12 vertices");
  }
  // Pairs of paths sharing v1 v2 (and v3 for the same-branch variant).
  std::vector<std::pair<std::array<Vertex, 4>, std::array<Vertex, 4>>> pairs;
  for (const auto& path : all_paths(g)) {
    if (p.path && path != *p.path) continue;
    const auto [v1, v2, v3, v4] = path;
    if (same) {
      for (Vertex w : distinct_neighbors(g, v3)) {
        if (w != v2 && w != v4 && w != v1 && w > v4) pairs.push_back({path, {v1, v2, v3, w}});
      }
    } else {
      for (Vertex w3 : distinct_neighbors(g, v2)) {
        if (w3 == v1 || w3 <= v3) continue;
        for (Vertex w4 : distinct_neighbors(g, w3)) {
          if (w4 != v2 && w4 != v1) pairs.push_back({path, {v1, v2, w3, w4}});
        }
      }
    }
  }
  int total = 0;
  int passing = 0;
  json first_bad;
  for (const auto& [p1, p2] : pairs) {
    const auto h1 = try_split(g, p1);
    const auto h2 = try_split(g, p2);
    if (!h1 || !h2) continue;
    ++total;
    if (almost_4(*h1) || almost_4(*h2)) ++passing;
    else if (first_bad.is_null()) first_bad = {p1, p2};
  }
  if (total == 0) return c.skip("hypothesis unmet: no admissible pair of paths");
  if (!first_bad.is_null()) c.params["counterexample_paths"] = first_bad;
  return c.tally(passing, total, "neither split-off is 4-almost cyclically 4-edge-connected");
}

struct SideChoice {
  EdgeCut cut;
  CutSide side;
  VertexMask mask;
};

std::vector<SideChoice> cyclic_4cut_sides(const Multigraph& g, const CheckParams& p) {
  std::vector<SideChoice> out;
  const VertexMask all = g.all_vertices_mask();
  for (const EdgeCut& cut : cyclic_cuts_of_size(g, 4)) {
    for (CutSide side : {CutSide::A, CutSide::B}) {
      const VertexMask mask = side == CutSide::A ? cut.side_a : (all & ~cut.side_a);
      if (p.side && *p.side != mask) continue;
      out.push_back({cut, side, mask});
    }
  }
  return out;
}

bool cyc4(const Multigraph& h) { return is_cyclically_k_edge_connected(h, 4); }

LemmaReport lm_split4(Ctx& c, const Multigraph& g, const CheckParams& p, bool variant_b) {
  if (!g.is_cubic() || !g.is_connected() || !cyc4(g)) {
    return c.skip("hypothesis unmet: not a cyclically 4-edge-connected cubic graph");
  }
  const auto sides = cyclic_4cut_sides(g, p);
  if (sides.empty()) return c.skip("hypothesis unmet: no cyclic 4-edge-cut");
  const Multigraph exceptional = named("exceptional6");
  int total = 0;
  int passing = 0;
  int shared = 0;
  json first_bad;
  for (const SideChoice& sc : sides) {
    const bool c4 = is_four_cycle(g, sc.mask);
    if (variant_b) {
      if (c4) continue;
      if (__builtin_popcountll(sc.mask) == 6 && find_isomorphism(induced_subgraph(g, sc.mask).graph, exceptional)) {
        continue;
      }
    }
    std::array<CutSurgery, 3> s;
    try {
      for (int i = 1; i <= 3; ++i) {
        std::array<int, 4> pairing{0, i, 0, 0};
        int slot = 2;
        for (int k = 1; k <= 3; ++k) {
          if (k != i) pairing[static_cast<std::size_t>(slot++)] = k;
        }
        s[static_cast<std::size_t>(i - 1)] = cut_surgery_pair(g, sc.cut, pairing, sc.side);
      }
    } catch (const GraphError& err) {
      if (err.kind() != ErrorKind::SharedEndpoint) throw;
      ++shared;
      continue;
    }
    ++total;
    std::array<bool, 3> sub_c4{};
    for (std::size_t i = 0; i < 3; ++i) sub_c4[i] = cyc4(s[i].subdivided);
    bool ok = true;
    if (!variant_b) {
      for (const CutSurgery& cs : s) {
        if (!is_k_edge_connected(cs.subdivided, 3)) ok = false;
        for (const EdgeCut& cut : cyclic_cuts_of_size(cs.subdivided, 3)) {
          for (EdgeId spoke : cs.subdivided_spokes) {
            if (std::binary_search(cut.crossing_edges.begin(), cut.crossing_edges.end(), spoke)) ok = false;
          }
        }
      }
      if (!c4 && std::count(sub_c4.begin(), sub_c4.end(), true) < 2) ok = false;
    } else {
      bool any = sub_c4[0] && sub_c4[1] && sub_c4[2];
      for (std::size_t i = 0; i < 3 && !any; ++i) {
        for (std::size_t j = 0; j < 3 && !any; ++j) {
          if (i != j && sub_c4[i] && sub_c4[j] && cyc4(s[i].paired)) any = true;
        }
      }
      ok = any;
    }
    if (ok) ++passing;
    else if (first_bad.is_null()) first_bad = mask_to_vertices(sc.mask);
  }
  c.params["shared_endpoint_sides"] = shared;
  if (total == 0) return c.skip("hypothesis unmet: no admissible cyclic 4-cut side");
  if (!first_bad.is_null()) c.params["counterexample_side"] = first_bad;
  return c.tally(passing, total, "cut surgery conclusion fails");
}

LemmaReport lm_ordered(Ctx& c, const Multigraph& g, const CheckParams& p) {
  if (!g.is_cubic() || !g.is_connected() || !cyc4(g)) {
    return c.skip("hypothesis unmet: not a cyclically 4-edge-connected cubic graph");
  }
  const auto in_cut = cyclic_cut_edges(g, 4);
  int total = 0;
  int passing = 0;
  json first_bad;
  for (EdgeId e : selected_edges(g, p)) {
    if (!std::binary_search(in_cut.begin(), in_cut.end(), e)) continue;
    ++total;
    try {
      c.params["max_chain"] = std::max<int>(c.params.value("max_chain", 0),
                                            static_cast<int>(ordered_4cut_chain(g, e).size()));
      ++passing;
    } catch (const GraphError& err) {
      if (err.kind() != ErrorKind::ChainViolation) throw;
      if (first_bad.is_null()) first_bad = e;
    }
  }
  if (total == 0) return c.skip("hypothesis unmet: no selected edge lies in a cyclic 4-edge-cut");
  if (!first_bad.is_null()) c.params["counterexample_edge"] = first_bad;
  return c.tally(passing, total, "cyclic 4-cuts through an edge are not nested");
}

// ---- ladders ----------------------------------------------------------------

struct LadderOutcome {
  bool admissible = false;
  std::string reason;
  bool ok = false;
  json detail;
};

LadderOutcome ladder_side(const Multigraph& g, VertexMask side) {
  LadderOutcome out;
  const EdgeCut cut = make_cut(g, side);
  if (cut.size != 4 || !cut.cyclic) {
    out.reason = "hypothesis unmet: side does not span a cyclic 4-edge-cut";
    return out;
  }
  const Subgraph sub = induced_subgraph(g, side);
  std::array<Vertex, 4> v{};
  for (std::size_t i = 0; i < 4; ++i) {
    const Edge& ed = g.edge(cut.crossing_edges[i]);
    const Vertex end = ((side >> ed.a) & 1U) ? ed.a : ed.b;
    const auto it = std::find(sub.vertex_origin.begin(), sub.vertex_origin.end(), end);
    v[i] = static_cast<Vertex>(it - sub.vertex_origin.begin());
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (v[i] == v[j]) {
        out.reason = "hypothesis unmet: two cut edges share an endpoint";
        return out;
      }
    }
  }
  out.admissible = true;
  const Multigraph& a = sub.graph;
  std::uint64_t gv[4][4] = {};
  for (int i = 1; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      gv[i][j] = gv[j][i] = missing(a, {v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]});
    }
  }
  out.detail = {{"g23", gv[1][2]}, {"g24", gv[1][3]}, {"g34", gv[2][3]}};
  const std::array<std::array<int, 3>, 3> zero_cases{{{1, 2, 3}, {1, 3, 2}, {2, 3, 1}}};
  std::string branch = "no_zero";
  out.ok = true;
  for (const auto& [i, j, k] : zero_cases) {
    if (gv[i][j] != 0) continue;
    auto vi = [&](int idx) { return v[static_cast<std::size_t>(idx)]; };
    if (gv[i][k] >= 2 && gv[j][k] >= 2) {
      branch = "both_at_least_two";
    } else if (gv[i][k] == 1 && is_ladder_with_ends(a, vi(0), vi(i), vi(j), vi(k))) {
      branch = "ladder";
    } else if (gv[j][k] == 1 && is_ladder_with_ends(a, vi(0), vi(j), vi(i), vi(k))) {
      branch = "ladder";
    } else {
      branch = "violated";
      out.ok = false;
      break;
    }
  }
  out.detail["branch"] = branch;
  return out;
}

LemmaReport lm_ladder(Ctx& c, const Multigraph& g, const CheckParams& p) {
  if (!g.is_cubic() || !g.is_connected() || !cyc4(g)) {
    return c.skip("hypothesis unmet: not a cyclically 4-edge-connected cubic graph");
  }
  const auto sides = cyclic_4cut_sides(g, p);
  int total = 0;
  int passing = 0;
  json detail = json::array();
  for (const SideChoice& sc : sides) {
    const LadderOutcome o = ladder_side(g, sc.mask);
    if (!o.admissible) continue;
    ++total;
    if (o.ok) ++passing;
    json item = o.detail;
    item["side"] = mask_to_vertices(sc.mask);
    detail.push_back(std::move(item));
  }
  if (total == 0) return c.skip("hypothesis unmet: no admissible cyclic 4-cut side");
  c.params["sides"] = detail;
  return c.tally(passing, total, "ladder disjunction fails");
}

// ---- twisted nets -----------------------------------------------------------

/// Empty string when g is a twisted net, else the reason.
std::string twisted_hypothesis(const Multigraph& g, const CheckParams& p, json& params) {
  if (p.recipe) {
    if (!(twisted_net(*p.recipe) == g)) return "hypothesis unmet: graph differs from the declared recipe";
    params["recipe"] = describe(*p.recipe);
    return {};
  }
  const auto rec = recognize_twisted_net(g);
  if (!rec) return "hypothesis unmet: not a twisted net";
  params["recipe"] = describe(rec->recipe);
  return {};
}

LemmaReport lm_twisted_num(Ctx& c, const Multigraph& g, const CheckParams& p) {
  if (auto why = twisted_hypothesis(g, p, c.params); !why.empty()) return c.skip(why);
  return c.judge(Bound::power_of_two(g.vertex_count() + 12, 18), Relation::AtLeast, as_rational(count_matchings(g)));
}

LemmaReport lm_twisted_bis(Ctx& c, const Multigraph& g, const CheckParams& p) {
  if (auto why = twisted_hypothesis(g, p, c.params); !why.empty()) return c.skip(why);
  const auto cs = corners(g);
  std::uint64_t best = 0;
  json pair;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      const std::uint64_t m = missing(g, {cs[i], cs[j]});
      if (m > best || pair.is_null()) {
        best = m;
        pair = {cs[i], cs[j]};
      }
    }
  }
  c.params["corners"] = pair;
  return c.judge(Bound::power_of_two(g.vertex_count() - 4, 108), Relation::AtLeast, as_rational(best));
}

LemmaReport lm_twisted_nonbip(Ctx& c, const Multigraph& g, const CheckParams& p) {
  if (auto why = twisted_hypothesis(g, p, c.params); !why.empty()) return c.skip(why);
  if (is_bipartite(g)) return c.skip("hypothesis unmet: bipartite twisted net");
  const auto cs = corners(g);
  Rational product(1);
  json values = json::array();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      const std::uint64_t m = missing(g, {cs[i], cs[j]});
      values.push_back(m);
      product = product * as_rational(m);
    }
  }
  c.params["m"] = values;
  return c.judge(Bound::power_of_two(g.vertex_count() + 8, 18), Relation::AtLeast, product);
}

LemmaReport lm_twisted_bip(Ctx& c, const Multigraph& g, const CheckParams& p) {
  if (auto why = twisted_hypothesis(g, p, c.params); !why.empty()) return c.skip(why);
  const auto colour = bipartition(g);
  if (!colour) return c.skip("hypothesis unmet: non-bipartite twisted net");
  const Bound bound = Bound::power_of_two(g.vertex_count() - 4, 18);
  std::vector<Vertex> us;
  std::vector<Vertex> vs;
  for (Vertex x : corners(g)) ((*colour)[static_cast<std::size_t>(x)] == 0 ? us : vs).push_back(x);
  if (us.size() != 2 || vs.size() != 2) {
    return c.judge(bound, Relation::AtLeast, Rational(0), "corners are not split two per colour class");
  }
  if (!has_perfect_matching(g, {{}, {}, {us[0], us[1], vs[0], vs[1]}})) {
    return c.judge(bound, Relation::AtLeast, Rational(0), "removing all four corners leaves no perfect matching");
  }
  std::uint64_t best = 0;
  json values = json::array();
  bool all_positive = true;
  for (Vertex u : us) {
    for (Vertex v : vs) {
      const std::uint64_t m = missing(g, {u, v});
      values.push_back(m);
      all_positive = all_positive && m > 0;
      best = std::max(best, m);
    }
  }
  c.params["m"] = values;
  if (!all_positive) {
    return c.judge(bound, Relation::AtLeast, Rational(0), "some corner pair leaves no perfect matching");
  }
  return c.judge(bound, Relation::AtLeast, as_rational(best));
}

bool is_solid(const Multigraph& g, VertexMask side) {
  const Multigraph b = induced_subgraph(g, side).graph;
  const int n = b.vertex_count();
  for (const EdgeCut& cut : enumerate_cuts(b, 2, false)) {
    const int a = __builtin_popcountll(cut.side_a);
    if (cut.size == 2 && a >= 2 && n - a >= 2) return false;
  }
  return true;
}

LemmaReport lm_twisted_struc(Ctx& c, const Multigraph& g, const CheckParams& p) {
  if (!g.is_cubic() || !g.is_connected() || !cyc4(g)) {
    return c.skip("hypothesis unmet: not a cyclically 4-edge-connected cubic graph");
  }
  const auto cuts = cyclic_cuts_of_size(g, 4);
  const auto blocked = cyclic_cut_edges(g, 4);
  std::optional<EdgeId> e;
  if (p.edge) {
    if (std::binary_search(blocked.begin(), blocked.end(), *p.edge)) {
      return c.skip("hypothesis unmet: distinguished edge lies in a cyclic 4-edge-cut");
    }
    e = *p.edge;
  } else {
    for (EdgeId x = 0; x < g.edge_count() && !e; ++x) {
      if (!std::binary_search(blocked.begin(), blocked.end(), x)) e = x;
    }
  }
  if (!e) return c.skip("hypothesis unmet: every edge lies in a cyclic 4-edge-cut");
  c.params["edge"] = *e;
  const VertexMask all = g.all_vertices_mask();
  const VertexMask ends = bit(g.edge(*e).a) | bit(g.edge(*e).b);
  std::vector<VertexMask> far_sides;
  for (const EdgeCut& cut : cuts) {
    const VertexMask a = (cut.side_a & ends) == ends ? cut.side_a : (all & ~cut.side_a);
    far_sides.push_back(all & ~a);
  }
  if (far_sides.empty()) return c.skip("hypothesis unmet: no cyclic 4-edge-cut");
  for (VertexMask b : far_sides) {
    if (is_solid(g, b)) return c.skip("hypothesis unmet: some far side is solid");
  }
  int passing = 0;
  for (VertexMask b : far_sides) {
    if (recognize_twisted_net(induced_subgraph(g, b).graph)) ++passing;
  }
  return c.tally(passing, static_cast<int>(far_sides.size()), "a far side is not a twisted net");
}

LemmaReport dispatch(LemmaId lemma, Ctx& c, const Multigraph& g, const CheckParams& p) {
  switch (lemma) {
    case LemmaId::TH_HALF: return th_half(c, g);
    case LemmaId::THM_BIP: return thm_bip(c, g, p);
    case LemmaId::THM_KLEE: return thm_klee(c, g);
    case LemmaId::THM_EF: return thm_ef(c, g, p);
    case LemmaId::LM_DOUBLE: return lm_double(c, g);
    case LemmaId::LM_TRIPLE: return lm_triple(c, g);
    case LemmaId::LM_SPECIAL: return lm_special(c, g, p);
    case LemmaId::LM_BRIDGE: return lm_bridge(c, g);
    case LemmaId::LM_3CONN: return lm_3conn(c, g, p);
    case LemmaId::LM_SEMIBLOCK: return lm_semiblock(c, g, p);
    case LemmaId::THM_BB: return thm_bb(c, g);
    case LemmaId::LM_BB_CUBIC: return lm_bb_cubic(c, g);
    case LemmaId::LM_BB_BIP: return lm_bb_bip(c, g);
    case LemmaId::LM_BB_3E: return lm_bb_3e(c, g, p);
    case LemmaId::LM_BB_3EF: return lm_bb_3ef(c, g, p);
    case LemmaId::LM_SPLITOFF: return lm_splitoff(c, g, p);
    case LemmaId::LM_SPLIT5_SAME: return lm_split5(c, g, p, true);
    case LemmaId::LM_SPLIT5_DIFF: return lm_split5(c, g, p, false);
    case LemmaId::LM_SPLIT4A: return lm_split4(c, g, p, false);
    case LemmaId::LM_SPLIT4B: return lm_split4(c, g, p, true);
    case LemmaId::LM_ORDERED: return lm_ordered(c, g, p);
    case LemmaId::LM_LADDER: return lm_ladder(c, g, p);
    case LemmaId::LM_TWISTED_NUM: return lm_twisted_num(c, g, p);
    case LemmaId::LM_TWISTED_BIP: return lm_twisted_bip(c, g, p);
    case LemmaId::LM_TWISTED_NONBIP: return lm_twisted_nonbip(c, g, p);
    case LemmaId::LM_TWISTED_BIS: return lm_twisted_bis(c, g, p);
    case LemmaId::LM_TWISTED_STRUC: return lm_twisted_struc(c, g, p);
  }
  throw GraphError(ErrorKind::InvariantViolated, "unknown lemma id");
}

std::string seeded_name(const std::string& family, std::uint64_t seed, int n) {
  return family + "(seed=" + std::to_string(seed) + ",n=" + std::to_string(n) + ")";
}

}  // namespace

std::string_view to_string(LemmaId id) {
  for (const auto& entry : kLemmaNames) {
    if (entry.id == id) return entry.name;
  }
  return "?";
}

LemmaId parse_lemma(std::string_view name) {
  for (const auto& entry : kLemmaNames) {
    if (entry.name == name) return entry.id;
  }
  throw GraphError(ErrorKind::UnknownName, "unknown lemma " + std::string(name));
}

const std::vector<LemmaId>& all_lemmas() {
  static const std::vector<LemmaId> ids = [] {
    std::vector<LemmaId> out;
    for (const auto& entry : kLemmaNames) out.push_back(entry.id);
    return out;
  }();
  return ids;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "Pass";
    case Verdict::Fail: return "Fail";
    case Verdict::Skipped: return "Skipped";
  }
  return "?";
}

std::string_view to_string(Relation r) { return r == Relation::AtLeast ? "at_least" : "at_most"; }

LemmaReport check(LemmaId lemma, const Multigraph& g, const CheckParams& params, const std::string& instance) {
  Ctx c(lemma, g, instance);
  try {
    return dispatch(lemma, c, g, params);
  } catch (const GraphError& err) {
    Ctx fresh(lemma, g, instance);
    if (err.kind() == ErrorKind::TooLarge || err.kind() == ErrorKind::Overflow) {
      return fresh.skip(std::string("size cap: ") + err.what());
    }
    if (err.kind() == ErrorKind::EdgeIdOutOfRange || err.kind() == ErrorKind::VertexIdOutOfRange) {
      return fresh.skip(std::string("bad parameters: ") + err.what());
    }
    return fresh.judge(Bound::of(Rational(1)), Relation::AtLeast, Rational(0), std::string("error: ") + err.what());
  }
}

LemmaReport check_lm_ladder(const Multigraph& g, VertexMask side, const std::string& instance) {
  Ctx c(LemmaId::LM_LADDER, g, instance);
  if (!g.is_cubic() || !g.is_connected() || !cyc4(g)) {
    return c.skip("hypothesis unmet: not a cyclically 4-edge-connected cubic graph");
  }
  const LadderOutcome o = ladder_side(g, side);
  if (!o.admissible) return c.skip(o.reason);
  c.params = o.detail;
  c.params["side"] = mask_to_vertices(side);
  return c.judge(Bound::of(Rational(1)), Relation::AtLeast, Rational(o.ok ? 1 : 0), "ladder disjunction fails");
}

std::vector<Instance> named_corpus(const std::vector<std::string>& names) {
  std::vector<Instance> out;
  for (const auto& name : names) out.push_back({name, named(name), std::nullopt});
  return out;
}

std::vector<Instance> random_corpus(const RandomCorpus& spec) {
  std::vector<Instance> out;
  const int lo = std::max(4, spec.n_lo + (spec.n_lo % 2));
  const int hi = spec.n_hi - (spec.n_hi % 2);
  if (hi < lo) throw GraphError(ErrorKind::BadSize, "empty order range");
  const auto choices = static_cast<std::uint64_t>((hi - lo) / 2 + 1);
  for (int i = 0; i < spec.count; ++i) {
    const std::uint64_t seed = spec.first_seed + static_cast<std::uint64_t>(i);
    Rng rng(seed);
    const int n = lo + 2 * static_cast<int>(rng.below(choices));
    Multigraph g = spec.bipartite ? random_bipartite_cubic(seed, n, spec.simple_only)
                                  : random_cubic_bridgeless(seed, n, spec.simple_only);
    out.push_back({seeded_name(spec.bipartite ? "random_bipartite" : "random", seed, n), std::move(g), std::nullopt});
  }
  return out;
}

std::vector<Instance> twisted_corpus(std::uint64_t first_seed, int count, int n_hi) {
  std::vector<Instance> out;
  const auto choices = static_cast<std::uint64_t>((n_hi - 4) / 2 + 1);
  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = first_seed + static_cast<std::uint64_t>(i);
    Rng rng(seed);
    const int n = 4 + 2 * static_cast<int>(rng.below(choices));
    TwistedSample s = random_twisted_net(seed, n);
    out.push_back({seeded_name("twisted", seed, n) + ":" + describe(s.recipe), std::move(s.graph), s.recipe});
  }
  return out;
}

std::vector<Instance> twisted_host_corpus(std::uint64_t first_seed, int count, int net_n_hi) {
  std::vector<Instance> out;
  const Multigraph petersen = named("petersen");
  const Edge cut_edge = petersen.edge(0);
  const Subgraph host = delete_vertices(petersen, bit(cut_edge.a) | bit(cut_edge.b));
  std::vector<Vertex> open;
  for (Vertex v = 0; v < host.graph.vertex_count(); ++v) {
    if (host.graph.degree(v) == 2) open.push_back(v);
  }
  const auto choices = static_cast<std::uint64_t>((net_n_hi - 4) / 2 + 1);
  for (int i = 0; i < count; ++i) {
    const std::uint64_t seed = first_seed + static_cast<std::uint64_t>(i);
    Rng rng(seed);
    const int n = 4 + 2 * static_cast<int>(rng.below(choices));
    const TwistedSample net = random_twisted_net(seed, n);
    const int offset = host.graph.vertex_count();
    std::vector<Edge> edges = host.graph.edges();
    for (const Edge& ed : net.graph.edges()) edges.push_back({ed.a + offset, ed.b + offset});
    std::vector<Vertex> cs = corners(net.graph);
    rng.shuffle(cs);
    for (std::size_t k = 0; k < open.size(); ++k) edges.push_back({open[k], cs[k] + offset});
    out.push_back({seeded_name("twisted_host", seed, offset + n) + ":" + describe(net.recipe),
                   Multigraph::from_edges(offset + n, std::move(edges)), std::nullopt});
  }
  return out;
}

std::vector<LemmaReport> sweep(const std::vector<LemmaId>& lemmas, const std::vector<Instance>& corpus,
                               const SweepOptions& options) {
  const std::size_t total = lemmas.size() * corpus.size();
  std::vector<LemmaReport> reports(total);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_fail{total};
  auto work = [&] {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= total) return;
      if (options.stop_at_fail && idx > first_fail.load()) continue;
      const Instance& inst = corpus[idx % corpus.size()];
      CheckParams p;
      p.recipe = inst.recipe;
      reports[idx] = check(lemmas[idx / corpus.size()], inst.graph, p, inst.name);
      if (reports[idx].verdict == Verdict::Fail) {
        std::size_t cur = first_fail.load();
        while (idx < cur && !first_fail.compare_exchange_weak(cur, idx)) {
        }
      }
    }
  };
  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (options.stop_at_fail && first_fail.load() < total) reports.resize(first_fail.load() + 1);
  return reports;
}

}  // namespace cubicpm
