#include "cubicpm/matchings.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "cubicpm/connectivity.hpp"

namespace cubicpm {
namespace {

// Query normalised into an initial covered mask and a forbidden flag per edge.
struct Prepared {
  VertexMask full = 0;
  VertexMask covered = 0;
  std::vector<char> forbidden;
  std::vector<EdgeId> required;
  bool impossible = false;
};

Prepared prepare(const Multigraph& g, const CountQuery& q, int cap) {
  if (g.vertex_count() > cap) {
    throw GraphError(ErrorKind::TooLarge, "matching search supports at most " + std::to_string(cap) +
                                              " vertices, got " + std::to_string(g.vertex_count()));
  }
  Prepared p;
  p.full = g.all_vertices_mask();
  p.forbidden.assign(static_cast<std::size_t>(g.edge_count()), 0);
  auto check_edge = [&](EdgeId e) {
    if (e < 0 || e >= g.edge_count()) throw GraphError(ErrorKind::EdgeIdOutOfRange, "edge " + std::to_string(e));
  };
  for (EdgeId e : q.forbidden) {
    check_edge(e);
    p.forbidden[static_cast<std::size_t>(e)] = 1;
  }
  VertexMask missed = 0;
  for (Vertex v : q.missed) {
    if (v < 0 || v >= g.vertex_count()) throw GraphError(ErrorKind::VertexIdOutOfRange, "vertex " + std::to_string(v));
    missed |= bit(v);
  }
  p.covered = missed;
  for (EdgeId e : q.required) {
    check_edge(e);
    if (p.forbidden[static_cast<std::size_t>(e)]) {
      throw GraphError(ErrorKind::InconsistentQuery, "edge " + std::to_string(e) + " both required and forbidden");
    }
    const Edge& ed = g.edge(e);
    if ((missed & (bit(ed.a) | bit(ed.b))) != 0) {
      throw GraphError(ErrorKind::InconsistentQuery, "required edge " + std::to_string(e) + " touches a missed vertex");
    }
    if ((p.covered & (bit(ed.a) | bit(ed.b))) != 0) p.impossible = true;
    p.covered |= bit(ed.a) | bit(ed.b);
  }
  p.required = q.required;
  std::sort(p.required.begin(), p.required.end());
  p.required.erase(std::unique(p.required.begin(), p.required.end()), p.required.end());
  return p;
}

class Counter {
 public:
  Counter(const Multigraph& g, const Prepared& p) : g_(g), p_(p) {}

  std::uint64_t count(VertexMask covered) {
    if (covered == p_.full) return 1;
    if (auto it = memo_.find(covered); it != memo_.end()) return it->second;
    const Vertex v = __builtin_ctzll(~covered & p_.full);
    std::uint64_t total = 0;
    for (EdgeId e : g_.incident(v)) {
      if (p_.forbidden[static_cast<std::size_t>(e)]) continue;
      const Vertex w = g_.edge(e).other(v);
      if ((covered >> w) & 1U) continue;
      if (__builtin_add_overflow(total, count(covered | bit(v) | bit(w)), &total)) {
        throw GraphError(ErrorKind::Overflow, "matching count exceeds 64 bits");
      }
    }
    memo_.emplace(covered, total);
    return total;
  }

 private:
  const Multigraph& g_;
  const Prepared& p_;
  std::unordered_map<VertexMask, std::uint64_t> memo_;
};

bool find_one(const Multigraph& g, const Prepared& p, VertexMask covered, std::vector<EdgeId>& chosen,
              std::unordered_set<VertexMask>& dead) {
  if (covered == p.full) return true;
  if (dead.count(covered)) return false;
  const Vertex v = __builtin_ctzll(~covered & p.full);
  for (EdgeId e : g.incident(v)) {
    if (p.forbidden[static_cast<std::size_t>(e)]) continue;
    const Vertex w = g.edge(e).other(v);
    if ((covered >> w) & 1U) continue;
    chosen.push_back(e);
    if (find_one(g, p, covered | bit(v) | bit(w), chosen, dead)) return true;
    chosen.pop_back();
  }
  dead.insert(covered);
  return false;
}

void enumerate_all(const Multigraph& g, const Prepared& p, VertexMask covered, std::vector<EdgeId>& chosen,
                   std::vector<Matching>& out) {
  if (covered == p.full) {
    Matching m{chosen};
    m.edge_ids.insert(m.edge_ids.end(), p.required.begin(), p.required.end());
    std::sort(m.edge_ids.begin(), m.edge_ids.end());
    out.push_back(std::move(m));
    return;
  }
  const Vertex v = __builtin_ctzll(~covered & p.full);
  for (EdgeId e : g.incident(v)) {
    if (p.forbidden[static_cast<std::size_t>(e)]) continue;
    const Vertex w = g.edge(e).other(v);
    if ((covered >> w) & 1U) continue;
    chosen.push_back(e);
    enumerate_all(g, p, covered | bit(v) | bit(w), chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::uint64_t count_matchings(const Multigraph& g, const CountQuery& q) {
  const Prepared p = prepare(g, q, kCountCap);
  if (p.impossible) return 0;
  Counter counter(g, p);
  return counter.count(p.covered);
}

std::optional<Matching> find_matching(const Multigraph& g, const CountQuery& q) {
  const Prepared p = prepare(g, q, kCountCap);
  if (p.impossible) return std::nullopt;
  std::vector<EdgeId> chosen;
  std::unordered_set<VertexMask> dead;
  if (!find_one(g, p, p.covered, chosen, dead)) return std::nullopt;
  chosen.insert(chosen.end(), p.required.begin(), p.required.end());
  std::sort(chosen.begin(), chosen.end());
  return Matching{chosen};
}

std::vector<Matching> enumerate_matchings(const Multigraph& g, const CountQuery& q) {
  const Prepared p = prepare(g, q, kEnumerateCap);
  std::vector<Matching> out;
  if (p.impossible) return out;
  std::vector<EdgeId> chosen;
  enumerate_all(g, p, p.covered, chosen, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> edge_containment_counts(const Multigraph& g) {
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) out.push_back(count_matchings(g, {{e}, {}, {}}));
  return out;
}

bool is_matching_covered(const Multigraph& g) {
  if (g.edge_count() == 0) return false;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!has_perfect_matching(g, {{e}, {}, {}})) return false;
  }
  return true;
}

bool is_double_covered(const Multigraph& g) {
  const auto counts = edge_containment_counts(g);
  return !counts.empty() && std::all_of(counts.begin(), counts.end(), [](std::uint64_t c) { return c >= 2; });
}

EdgeId kotzig_bridge(const Multigraph& g) {
  const std::uint64_t total = count_matchings(g);
  if (total != 1) {
    throw GraphError(ErrorKind::NotUniquePM, "graph has " + std::to_string(total) + " perfect matchings");
  }
  const Matching m = *find_matching(g);
  for (EdgeId b : bridges(g)) {
    if (std::binary_search(m.edge_ids.begin(), m.edge_ids.end(), b)) return b;
  }
  throw GraphError(ErrorKind::InvariantViolated, "unique perfect matching contains no bridge");
}

std::optional<std::vector<int>> special_pair_coloring(const Multigraph& g, EdgeId e, EdgeId f) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  // Union-find with parity to the parent.
  std::vector<std::size_t> parent(n);
  std::vector<int> parity(n, 0);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    int par = 0;
    std::size_t r = x;
    while (parent[r] != r) {
      par ^= parity[r];
      r = parent[r];
    }
    // Path compression keeping parities consistent.
    std::size_t y = x;
    int acc = par;
    while (parent[y] != y) {
      const std::size_t next = parent[y];
      const int step = parity[y];
      parent[y] = r;
      parity[y] = acc;
      acc ^= step;
      y = next;
    }
    return std::make_pair(r, par);
  };
  auto relate = [&](Vertex a, Vertex b, int diff) {
    auto [ra, pa] = find(static_cast<std::size_t>(a));
    auto [rb, pb] = find(static_cast<std::size_t>(b));
    if (ra == rb) return (pa ^ pb) == diff;
    parent[ra] = rb;
    parity[ra] = pa ^ pb ^ diff;
    return true;
  };
  const Edge& ee = g.edge(e);
  const Edge& ff = g.edge(f);
  bool ok = relate(ee.a, ee.b, 0) && relate(ff.a, ff.b, 0) && relate(ee.a, ff.a, 1);
  for (EdgeId x = 0; ok && x < g.edge_count(); ++x) {
    if (x == e || x == f) continue;
    ok = relate(g.edge(x).a, g.edge(x).b, 1);
  }
  if (!ok) return std::nullopt;
  std::vector<int> color(n);
  for (std::size_t v = 0; v < n; ++v) color[v] = find(v).second;
  // Normalise so that the ends of e get colour 0.
  if (color[static_cast<std::size_t>(ee.a)] == 1) {
    for (int& c : color) c ^= 1;
  }
  return color;
}

SpecialPairResult special_pair(const Multigraph& g, EdgeId e, EdgeId f) {
  if (e == f) throw GraphError(ErrorKind::InconsistentQuery, "the two edges must differ");
  if (e < 0 || f < 0 || e >= g.edge_count() || f >= g.edge_count()) {
    throw GraphError(ErrorKind::EdgeIdOutOfRange, "edge pair out of range");
  }
  if (!g.is_cubic() || !is_cyclically_k_edge_connected(g, 4)) {
    throw GraphError(ErrorKind::NotCyclically4EC, "pair test needs a cyclically 4-edge-connected cubic graph");
  }
  SpecialPairResult r;
  r.coloring = special_pair_coloring(g, e, f);
  r.structure = r.coloring.has_value();
  r.no_such_pm = !has_perfect_matching(g, {{f}, {e}, {}});
  if (r.structure != r.no_such_pm) {
    throw GraphError(ErrorKind::InvariantViolated, "structure test and exhaustive search disagree on edges " +
                                                       std::to_string(e) + ", " + std::to_string(f));
  }
  return r;
}

bool polytope_membership(const Multigraph& g, const WeightVector& w, bool check_odd_sets_always) {
  if (static_cast<int>(w.size()) != g.edge_count()) {
    throw GraphError(ErrorKind::BadSize, "weight vector length differs from edge count");
  }
  for (const Rational& x : w) {
    if (x < Rational(0)) return false;
  }
  const int n = g.vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    Rational sum(0);
    for (EdgeId e : g.incident(v)) sum += w[static_cast<std::size_t>(e)];
    if (sum != Rational(1)) return false;
  }
  if (is_bipartite(g) && !check_odd_sets_always) return true;
  if (n % 2 == 1) return false;  // V itself is an odd set with no crossing edge
  if (n > kPolytopeCap) {
    throw GraphError(ErrorKind::TooLarge, "odd-set check supports at most " + std::to_string(kPolytopeCap) +
                                              " vertices");
  }
  std::int64_t lcm = 1;
  for (const Rational& x : w) {
    lcm = std::lcm(lcm, x.den());
    if (lcm > (std::int64_t{1} << 40)) throw GraphError(ErrorKind::Overflow, "weight denominators too large");
  }
  std::vector<std::int64_t> scaled;
  for (const Rational& x : w) scaled.push_back(x.num() * (lcm / x.den()));
  // Odd sets come in complementary pairs; enumerate those containing 0.
  const VertexMask rest = n > 1 ? (VertexMask{1} << (n - 1)) - 1 : 0;
  for (VertexMask sub = 0;; sub = (sub - rest) & rest) {
    const VertexMask s = (sub << 1) | 1U;
    if (__builtin_popcountll(s) % 2 == 1) {
      std::int64_t crossing = 0;
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (((s >> ed.a) & 1U) != ((s >> ed.b) & 1U)) crossing += scaled[static_cast<std::size_t>(e)];
      }
      if (crossing < lcm) return false;
    }
    if (sub == rest) break;
  }
  return true;
}

WeightVector fractional_pm_via_flow(const Multigraph& h, Vertex u, Vertex u2, Vertex v, Vertex v2) {
  const auto colour = bipartition(h);
  if (!colour) throw GraphError(ErrorKind::NotBipartite, "flow construction needs a bipartite graph");
  const int n = h.vertex_count();
  for (Vertex x : {u, u2, v, v2}) {
    if (x < 0 || x >= n) throw GraphError(ErrorKind::VertexIdOutOfRange, "terminal " + std::to_string(x));
  }
  const auto& c = *colour;
  auto col = [&](Vertex x) { return c[static_cast<std::size_t>(x)]; };
  if (u == u2 || v == v2 || col(u) != col(u2) || col(v) != col(v2) || col(u) == col(v)) {
    throw GraphError(ErrorKind::NotBipartite, "terminals must be two distinct vertices in each colour class");
  }
  const int side_u = col(u);
  struct Arc {
    int to;
    int cap;
    std::size_t rev;
  };
  const int source = n;
  const int sink = n + 1;
  std::vector<std::vector<Arc>> net(static_cast<std::size_t>(n + 2));
  auto add_arc = [&](int from, int to, int cap) {
    auto& a = net[static_cast<std::size_t>(from)];
    auto& b = net[static_cast<std::size_t>(to)];
    a.push_back({to, cap, b.size()});
    b.push_back({from, 0, a.size() - 1});
    return std::make_pair(static_cast<std::size_t>(from), a.size() - 1);
  };
  // Per edge: the U->V arc (capacity 2) and the V->U arc (capacity 1).
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, std::size_t>>> edge_arcs;
  for (const Edge& e : h.edges()) {
    const Vertex x = col(e.a) == side_u ? e.a : e.b;
    const Vertex y = e.other(x);
    edge_arcs.emplace_back(add_arc(x, y, 2), add_arc(y, x, 1));
  }
  add_arc(source, u, 2);
  add_arc(source, u2, 2);
  add_arc(v, sink, 2);
  add_arc(v2, sink, 2);

  int value = 0;
  while (value < 4) {
    std::vector<std::pair<int, std::size_t>> via(static_cast<std::size_t>(n + 2), {-1, 0});
    std::deque<int> queue{source};
    via[static_cast<std::size_t>(source)] = {source, 0};
    while (!queue.empty() && via[static_cast<std::size_t>(sink)].first < 0) {
      const int x = queue.front();
      queue.pop_front();
      const auto& arcs = net[static_cast<std::size_t>(x)];
      for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (arcs[i].cap > 0 && via[static_cast<std::size_t>(arcs[i].to)].first < 0) {
          via[static_cast<std::size_t>(arcs[i].to)] = {x, i};
          queue.push_back(arcs[i].to);
        }
      }
    }
    if (via[static_cast<std::size_t>(sink)].first < 0) break;
    int push = 4 - value;
    for (int x = sink; x != source;) {
      const auto [p, i] = via[static_cast<std::size_t>(x)];
      push = std::min(push, net[static_cast<std::size_t>(p)][i].cap);
      x = p;
    }
    for (int x = sink; x != source;) {
      const auto [p, i] = via[static_cast<std::size_t>(x)];
      Arc& a = net[static_cast<std::size_t>(p)][i];
      a.cap -= push;
      net[static_cast<std::size_t>(a.to)][a.rev].cap += push;
      x = p;
    }
    value += push;
  }
  if (value < 4) throw GraphError(ErrorKind::FlowInfeasible, "maximum flow is " + std::to_string(value));

  WeightVector w;
  for (const auto& [fwd, back] : edge_arcs) {
    const int f_uv = 2 - net[fwd.first][fwd.second].cap;
    const int f_vu = 1 - net[back.first][back.second].cap;
    w.push_back(Rational(1, 3) + Rational(f_uv - f_vu, 6));
  }
  return w;
}

WeightVector uniform_weights(const Multigraph& g, Rational value) {
  return WeightVector(static_cast<std::size_t>(g.edge_count()), value);
}

WeightVector characteristic_vector(const Multigraph& g, const Matching& m) {
  WeightVector w(static_cast<std::size_t>(g.edge_count()), Rational(0));
  for (EdgeId e : m.edge_ids) w.at(static_cast<std::size_t>(e)) = Rational(1);
  return w;
}

}  // namespace cubicpm
