#include "cubicpm/families.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "cubicpm/connectivity.hpp"
#include "cubicpm/isomorphism.hpp"

namespace cubicpm {

std::uint64_t Rng::below(std::uint64_t k) {
  if (k == 0) throw GraphError(ErrorKind::InvariantViolated, "empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % k;
  while (true) {
    const std::uint64_t x = engine_();
    if (x < limit) return x % k;
  }
}

namespace {

Multigraph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  return Multigraph::from_edge_list(n, pairs);
}

Multigraph generalized_petersen(int k, int step) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i) pairs.emplace_back(i, (i + 1) % k);
  for (int i = 0; i < k; ++i) pairs.emplace_back(i, k + i);
  for (int i = 0; i < k; ++i) {
    const int j = (i + step) % k;
    if (step * 2 == k && i >= j) continue;
    pairs.emplace_back(k + i, k + j);
  }
  return from_pairs(2 * k, pairs);
}

}  // namespace

Multigraph named(std::string_view name) {
  if (name == "theta") return from_pairs(2, {{0, 1}, {0, 1}, {0, 1}});
  if (name == "k4") return complete4();
  if (name == "k33") {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 3; ++i) {
      for (int j = 3; j < 6; ++j) pairs.emplace_back(i, j);
    }
    return from_pairs(6, pairs);
  }
  if (name == "prism") return from_pairs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  if (name == "cube") {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 8; ++i) {
      for (int b = 0; b < 3; ++b) {
        const int j = i ^ (1 << b);
        if (i < j) pairs.emplace_back(i, j);
      }
    }
    return from_pairs(8, pairs);
  }
  if (name == "petersen") return generalized_petersen(5, 2);
  if (name == "moebius_kantor") return generalized_petersen(8, 3);
  if (name == "dodecahedron") return generalized_petersen(10, 2);
  if (name == "heawood") {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 14; ++i) pairs.emplace_back(i, (i + 1) % 14);
    for (int i = 0; i < 14; i += 2) pairs.emplace_back(i, (i + 5) % 14);
    return from_pairs(14, pairs);
  }
  if (name == "exceptional6") {
    // corners v1..v4 = 0..3, inner a = 4, b = 5
    return Multigraph::from_edges(6, {{0, 1}, {4, 1}, {4, 2}, {4, 3}, {5, 0}, {5, 2}, {5, 3}},
                                  {{0, "v1"}, {1, "v2"}, {2, "v3"}, {3, "v4"}, {4, "a"}, {5, "b"}});
  }
  throw GraphError(ErrorKind::UnknownName, "no named graph '" + std::string(name) + "'");
}

std::vector<std::string> named_list() {
  return {"theta", "k4", "k33", "prism", "cube", "petersen", "moebius_kantor", "exceptional6", "dodecahedron",
          "heawood"};
}

Multigraph ladder(int k) {
  if (k < 1) throw GraphError(ErrorKind::BadSize, "ladder height must be positive");
  std::vector<std::pair<int, int>> pairs{{0, 1}};
  for (int c = 1; c < k; ++c) {
    pairs.emplace_back(2 * (c - 1), 2 * c);
    pairs.emplace_back(2 * (c - 1) + 1, 2 * c + 1);
    pairs.emplace_back(2 * c, 2 * c + 1);
  }
  return from_pairs(2 * k, pairs);
}

std::array<EdgeId, 2> ladder_ends(int k) {
  if (k < 1) throw GraphError(ErrorKind::BadSize, "ladder height must be positive");
  return {0, 3 * (k - 1)};
}

bool is_ladder_with_ends(const Multigraph& h, Vertex a, Vertex b, Vertex c, Vertex d) {
  const int n = h.vertex_count();
  if (n < 4 || n % 2 != 0 || h.edge_count() != 3 * n / 2 - 2 || !h.is_simple()) return false;
  for (Vertex v : {a, b, c, d}) {
    if (v < 0 || v >= n || h.degree(v) != 2) return false;
  }
  if (a == c || a == d || b == c || b == d || h.multiplicity(a, b) != 1 || h.multiplicity(c, d) != 1) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (v != a && v != b && v != c && v != d && h.degree(v) != 3) return false;
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  seen[static_cast<std::size_t>(a)] = seen[static_cast<std::size_t>(b)] = 1;
  int visited = 2;
  Vertex px = -1, py = -1, x = a, y = b;
  auto step = [&](Vertex from, Vertex partner, Vertex prev) {
    Vertex next = -1;
    for (Vertex w : h.neighbors(from)) {
      if (w == partner || w == prev) continue;
      if (next >= 0) return Vertex{-1};
      next = w;
    }
    return next;
  };
  while (!((x == c && y == d) || (x == d && y == c))) {
    const Vertex nx = step(x, y, px);
    const Vertex ny = step(y, x, py);
    if (nx < 0 || ny < 0 || nx == ny || seen[static_cast<std::size_t>(nx)] || seen[static_cast<std::size_t>(ny)]) {
      return false;
    }
    if (h.multiplicity(nx, ny) != 1) return false;
    seen[static_cast<std::size_t>(nx)] = seen[static_cast<std::size_t>(ny)] = 1;
    visited += 2;
    px = x;
    py = y;
    x = nx;
    y = ny;
  }
  return visited == n;
}

Multigraph klee(const KleeRecipe& recipe) { return build_klee(recipe); }

KleeSample random_klee(std::uint64_t seed, int target_n) {
  if (target_n < 4 || target_n % 2 != 0) throw GraphError(ErrorKind::BadSize, "Klee-graphs have even order >= 4");
  Rng rng(seed);
  KleeRecipe recipe;
  for (int n = 4; n < target_n; n += 2) recipe.steps.push_back(static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n))));
  return {build_klee(recipe), recipe};
}

bool is_klee(const Multigraph& g) {
  if (g.vertex_count() > kCutEnumerationCap) throw GraphError(ErrorKind::TooLarge, "Klee recognition above 24 vertices");
  if (!g.is_cubic()) return false;
  const int n = g.vertex_count();
  if (n == 4) return g.is_simple();
  if (n < 4) return false;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (g.multiplicity(x, y) != 1) continue;
      for (Vertex z = y + 1; z < n; ++z) {
        if (g.multiplicity(x, z) != 1 || g.multiplicity(y, z) != 1) continue;
        const std::vector<Vertex> tri{x, y, z};
        const Multigraph smaller = contract(g, tri).graph;
        if (smaller.is_cubic() && is_klee(smaller)) return true;
      }
    }
  }
  return false;
}

std::vector<Vertex> corners(const Multigraph& g) {
  if (g.vertex_count() == 2 && g.edge_count() == 1) return {0, 1};
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const int d = g.degree(v);
    if (d == 2) {
      out.push_back(v);
    } else if (d != 3) {
      throw GraphError(ErrorKind::BadDegrees, "vertex " + std::to_string(v) + " has degree " + std::to_string(d));
    }
  }
  return out;
}

Multigraph twisted_net(const TwistedNetRecipe& recipe) {
  int n = 4;
  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  for (const TwistedStep& step : recipe.steps) {
    const auto cs = corners(Multigraph::from_edges(n, edges));
    if (cs.size() != 4) throw GraphError(ErrorKind::InvariantViolated, "twisted net lost its four corners");
    auto corner = [&](int idx) {
      if (idx < 0 || idx > 3) throw GraphError(ErrorKind::BadSize, "corner index " + std::to_string(idx));
      return cs[static_cast<std::size_t>(idx)];
    };
    if (step.a == step.b) throw GraphError(ErrorKind::BadSize, "twisted step needs two different corners");
    if (step.kind == TwistedStep::Kind::Increment) {
      edges.push_back({corner(step.a), n});
      edges.push_back({n, n + 1});
      edges.push_back({n + 1, corner(step.b)});
      n += 2;
      continue;
    }
    if (!step.other) throw GraphError(ErrorKind::BadSize, "multiplication without a second net");
    if (step.c == step.d) throw GraphError(ErrorKind::BadSize, "twisted step needs two different corners");
    const Multigraph h = twisted_net(*step.other);
    const auto hs = corners(h);
    auto other_corner = [&](int idx) {
      if (idx < 0 || idx > 3) throw GraphError(ErrorKind::BadSize, "corner index " + std::to_string(idx));
      return hs[static_cast<std::size_t>(idx)] + n;
    };
    for (const Edge& e : h.edges()) edges.push_back({e.a + n, e.b + n});
    edges.push_back({corner(step.a), other_corner(step.c)});
    edges.push_back({corner(step.b), other_corner(step.d)});
    n += h.vertex_count();
  }
  return Multigraph::from_edges(n, std::move(edges));
}

std::string describe(const TwistedNetRecipe& recipe) {
  std::string out = "C4";
  for (const TwistedStep& s : recipe.steps) {
    if (s.kind == TwistedStep::Kind::Increment) {
      out += "+i(" + std::to_string(s.a) + "," + std::to_string(s.b) + ")";
    } else {
      out += "+m(" + describe(*s.other) + ";" + std::to_string(s.a) + "," + std::to_string(s.b) + "," +
             std::to_string(s.c) + "," + std::to_string(s.d) + ")";
    }
  }
  return out;
}

int twisted_net_order(const TwistedNetRecipe& recipe) {
  int n = 4;
  for (const TwistedStep& s : recipe.steps) {
    n += s.kind == TwistedStep::Kind::Increment ? 2 : twisted_net_order(*s.other);
  }
  return n;
}

namespace {

std::pair<int, int> distinct_pair(Rng& rng) {
  const int a = static_cast<int>(rng.below(4));
  int b = static_cast<int>(rng.below(3));
  if (b >= a) ++b;
  return {a, b};
}

TwistedNetRecipe generate_net(int n, Rng& rng, bool keep_bipartite) {
  if (n <= 4) return {};
  if (n >= 8 && rng.coin(1, 3)) {
    const int n1 = 4 + 2 * static_cast<int>(rng.below(static_cast<std::uint64_t>((n - 8) / 2 + 1)));
    TwistedNetRecipe left = generate_net(n1, rng, keep_bipartite);
    auto right = std::make_shared<const TwistedNetRecipe>(generate_net(n - n1, rng, keep_bipartite));
    TwistedStep step{TwistedStep::Kind::Multiply, 0, 1, right, 0, 1};
    std::vector<int> cl, cr;
    if (keep_bipartite) {
      const Multigraph gl = twisted_net(left);
      const Multigraph gr = twisted_net(*right);
      const auto bl = *bipartition(gl);
      const auto br = *bipartition(gr);
      for (Vertex v : corners(gl)) cl.push_back(bl[static_cast<std::size_t>(v)]);
      for (Vertex v : corners(gr)) cr.push_back(br[static_cast<std::size_t>(v)]);
    }
    while (true) {
      std::tie(step.a, step.b) = distinct_pair(rng);
      std::tie(step.c, step.d) = distinct_pair(rng);
      if (!keep_bipartite) break;
      const auto at = [](const std::vector<int>& v, int i) { return v[static_cast<std::size_t>(i)]; };
      if ((at(cl, step.a) ^ at(cr, step.c)) == (at(cl, step.b) ^ at(cr, step.d))) break;
    }
    left.steps.push_back(std::move(step));
    return left;
  }
  TwistedNetRecipe base = generate_net(n - 2, rng, keep_bipartite);
  std::vector<int> col;
  if (keep_bipartite) {
    const Multigraph g = twisted_net(base);
    const auto b = *bipartition(g);
    for (Vertex v : corners(g)) col.push_back(b[static_cast<std::size_t>(v)]);
  }
  TwistedStep step;
  while (true) {
    std::tie(step.a, step.b) = distinct_pair(rng);
    if (!keep_bipartite || col[static_cast<std::size_t>(step.a)] != col[static_cast<std::size_t>(step.b)]) break;
  }
  base.steps.push_back(step);
  return base;
}

}  // namespace

TwistedSample random_twisted_net(std::uint64_t seed, int target_n, std::optional<bool> want_bipartite) {
  if (target_n < 4 || target_n % 2 != 0) throw GraphError(ErrorKind::BadSize, "twisted nets have even order >= 4");
  if (target_n == 4 && want_bipartite == false) {
    throw GraphError(ErrorKind::UnreachableParity, "the only twisted net on 4 vertices is bipartite");
  }
  Rng rng(seed);
  const bool steer = want_bipartite.value_or(false);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    TwistedNetRecipe recipe = generate_net(target_n, rng, steer);
    Multigraph g = twisted_net(recipe);
    if (!want_bipartite || is_bipartite(g) == *want_bipartite) return {std::move(g), std::move(recipe)};
  }
  throw GraphError(ErrorKind::GenerationFailed, "no twisted net with the requested parity");
}

namespace {

std::size_t index_in(const std::vector<Vertex>& v, Vertex x) {
  return static_cast<std::size_t>(std::find(v.begin(), v.end(), x) - v.begin());
}

std::optional<RecognizedNet> recognize(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n < 4 || n % 2 != 0 || !g.is_connected()) return std::nullopt;
  std::vector<Vertex> cs;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 2) {
      cs.push_back(v);
    } else if (g.degree(v) != 3) {
      return std::nullopt;
    }
  }
  if (cs.size() != 4) return std::nullopt;
  if (n == 4) {
    if (!g.is_simple()) return std::nullopt;
    RecognizedNet out;
    out.phi.assign(4, -1);
    Vertex prev = -1, cur = 0;
    for (int i = 0; i < 4; ++i) {
      out.phi[static_cast<std::size_t>(cur)] = i;
      const auto nb = g.neighbors(cur);
      const Vertex next = nb[0] != prev && out.phi[static_cast<std::size_t>(nb[0])] < 0 ? nb[0] : nb[1];
      prev = cur;
      cur = next;
    }
    return out;
  }
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      const Vertex x = cs[i];
      const Vertex y = cs[j];
      if (g.multiplicity(x, y) != 1) continue;
      Vertex p = -1, q = -1;
      for (Vertex w : g.neighbors(x)) {
        if (w != y) p = w;
      }
      for (Vertex w : g.neighbors(y)) {
        if (w != x) q = w;
      }
      if (p == q || p < 0 || q < 0) continue;
      const Subgraph h = delete_vertices(g, bit(x) | bit(y));
      auto rec = recognize(h.graph);
      if (!rec) continue;
      const auto built_corners = corners(twisted_net(rec->recipe));
      const Vertex ph = static_cast<Vertex>(index_in(h.vertex_origin, p));
      const Vertex qh = static_cast<Vertex>(index_in(h.vertex_origin, q));
      TwistedStep step;
      step.a = static_cast<int>(index_in(built_corners, rec->phi[static_cast<std::size_t>(ph)]));
      step.b = static_cast<int>(index_in(built_corners, rec->phi[static_cast<std::size_t>(qh)]));
      RecognizedNet out;
      out.recipe = rec->recipe;
      out.recipe.steps.push_back(step);
      out.phi.assign(static_cast<std::size_t>(n), -1);
      for (std::size_t v = 0; v < h.vertex_origin.size(); ++v) {
        out.phi[static_cast<std::size_t>(h.vertex_origin[v])] = rec->phi[v];
      }
      out.phi[static_cast<std::size_t>(x)] = n - 2;
      out.phi[static_cast<std::size_t>(y)] = n - 1;
      return out;
    }
  }
  const VertexMask all = g.all_vertices_mask();
  for (const EdgeCut& cut : enumerate_cuts(g, 2, false)) {
    if (cut.size != 2) continue;
    const VertexMask s = cut.side_a;
    const VertexMask t = all & ~s;
    if (__builtin_popcountll(s) < 4 || __builtin_popcountll(t) < 4) continue;
    std::array<Vertex, 2> ends_s{}, ends_t{};
    for (std::size_t k = 0; k < 2; ++k) {
      const Edge& e = g.edge(cut.crossing_edges[k]);
      ends_s[k] = (s >> e.a) & 1U ? e.a : e.b;
      ends_t[k] = e.other(ends_s[k]);
    }
    if (ends_s[0] == ends_s[1] || ends_t[0] == ends_t[1]) continue;
    const Subgraph gs = induced_subgraph(g, s);
    const Subgraph gt = induced_subgraph(g, t);
    auto rs = recognize(gs.graph);
    if (!rs) continue;
    auto rt = recognize(gt.graph);
    if (!rt) continue;
    const auto cs_s = corners(twisted_net(rs->recipe));
    const auto cs_t = corners(twisted_net(rt->recipe));
    auto local = [](const Subgraph& sub, Vertex v) { return static_cast<std::size_t>(index_in(sub.vertex_origin, v)); };
    TwistedStep step;
    step.kind = TwistedStep::Kind::Multiply;
    step.other = std::make_shared<const TwistedNetRecipe>(rt->recipe);
    step.a = static_cast<int>(index_in(cs_s, rs->phi[local(gs, ends_s[0])]));
    step.b = static_cast<int>(index_in(cs_s, rs->phi[local(gs, ends_s[1])]));
    step.c = static_cast<int>(index_in(cs_t, rt->phi[local(gt, ends_t[0])]));
    step.d = static_cast<int>(index_in(cs_t, rt->phi[local(gt, ends_t[1])]));
    RecognizedNet out;
    out.recipe = rs->recipe;
    out.recipe.steps.push_back(step);
    out.phi.assign(static_cast<std::size_t>(n), -1);
    const auto ns = static_cast<Vertex>(gs.vertex_origin.size());
    for (std::size_t v = 0; v < gs.vertex_origin.size(); ++v) {
      out.phi[static_cast<std::size_t>(gs.vertex_origin[v])] = rs->phi[v];
    }
    for (std::size_t v = 0; v < gt.vertex_origin.size(); ++v) {
      out.phi[static_cast<std::size_t>(gt.vertex_origin[v])] = rt->phi[v] + ns;
    }
    return out;
  }
  return std::nullopt;
}

}  // namespace

std::optional<RecognizedNet> recognize_twisted_net(const Multigraph& g) {
  if (g.vertex_count() > 16) throw GraphError(ErrorKind::TooLarge, "twisted net recognition above 16 vertices");
  return recognize(g);
}

Semiblocks semiblocks(const Multigraph& g) {
  if (!g.is_cubic()) throw GraphError(ErrorKind::BadDegrees, "semiblocks need a cubic graph");
  if (!g.is_connected()) throw GraphError(ErrorKind::DisconnectedPart, "semiblocks need a connected graph");
  if (!bridges(g).empty()) throw GraphError(ErrorKind::Bridged, "graph has a bridge");
  const VertexMask all = g.all_vertices_mask();
  std::vector<VertexMask> sides;
  for (const EdgeCut& cut : enumerate_cuts(g, 2, false)) {
    if (cut.size != 2) continue;
    sides.push_back(cut.side_a);
    sides.push_back(all & ~cut.side_a);
  }
  std::sort(sides.begin(), sides.end());
  sides.erase(std::unique(sides.begin(), sides.end()), sides.end());
  Semiblocks out;
  for (VertexMask s : sides) {
    const bool minimal = std::none_of(sides.begin(), sides.end(), [&](VertexMask t) { return t != s && (t & ~s) == 0; });
    if (minimal) out.sides.push_back(s);
  }
  for (std::size_t i = 0; i < out.sides.size(); ++i) {
    for (std::size_t j = i + 1; j < out.sides.size(); ++j) {
      if (out.sides[i] & out.sides[j]) throw GraphError(ErrorKind::InvariantViolated, "semiblocks overlap");
    }
  }
  if (out.sides.empty()) out.sides.push_back(all);
  out.s = static_cast<int>(out.sides.size());
  return out;
}

namespace {

bool acceptable(const Multigraph& g, bool simple_only) {
  return g.is_connected() && bridges(g).empty() && (!simple_only || g.is_simple());
}

std::vector<Edge> sorted_edges(std::vector<Edge> edges) {
  for (Edge& e : edges) {
    if (e.a > e.b) std::swap(e.a, e.b);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
  return edges;
}

}  // namespace

Multigraph random_cubic_bridgeless(std::uint64_t seed, int n, bool simple_only) {
  if (n < 4 || n % 2 != 0) throw GraphError(ErrorKind::BadSize, "cubic graphs need an even order >= 4");
  if (n > kMaskBits) throw GraphError(ErrorKind::TooLarge, "random cubic graphs up to 64 vertices");
  Rng rng(seed);
  std::vector<int> points(static_cast<std::size_t>(3 * n));
  for (int attempt = 0; attempt < 100000; ++attempt) {
    for (int i = 0; i < 3 * n; ++i) points[static_cast<std::size_t>(i)] = i / 3;
    rng.shuffle(points);
    std::vector<Edge> edges;
    bool loop = false;
    for (std::size_t i = 0; i < points.size() && !loop; i += 2) {
      loop = points[i] == points[i + 1];
      edges.push_back({points[i], points[i + 1]});
    }
    if (loop) continue;
    Multigraph g = Multigraph::from_edges(n, sorted_edges(std::move(edges)));
    if (acceptable(g, simple_only)) return g;
  }
  throw GraphError(ErrorKind::GenerationFailed, "no bridgeless pairing after 100000 attempts");
}

Multigraph random_bipartite_cubic(std::uint64_t seed, int n, bool simple_only) {
  if (n < 4 || n % 2 != 0) throw GraphError(ErrorKind::BadSize, "cubic graphs need an even order >= 4");
  if (n > kMaskBits) throw GraphError(ErrorKind::TooLarge, "random cubic graphs up to 64 vertices");
  Rng rng(seed);
  const int half = n / 2;
  std::vector<int> right(static_cast<std::size_t>(3 * half));
  for (int attempt = 0; attempt < 100000; ++attempt) {
    for (int i = 0; i < 3 * half; ++i) right[static_cast<std::size_t>(i)] = half + i / 3;
    rng.shuffle(right);
    std::vector<Edge> edges;
    for (int i = 0; i < 3 * half; ++i) edges.push_back({i / 3, right[static_cast<std::size_t>(i)]});
    Multigraph g = Multigraph::from_edges(n, sorted_edges(std::move(edges)));
    if (acceptable(g, simple_only)) return g;
  }
  throw GraphError(ErrorKind::GenerationFailed, "no bridgeless bipartite pairing after 100000 attempts");
}

namespace {

// Isomorphism-invariant bucket key: sorted per-vertex multiplicity profiles.
std::vector<std::vector<int>> profile(const Multigraph& g) {
  std::vector<std::vector<int>> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::map<Vertex, int> mult;
    for (Vertex w : g.neighbors(v)) ++mult[w];
    std::vector<int> row;
    for (const auto& [w, m] : mult) row.push_back(m);
    std::sort(row.begin(), row.end());
    out.push_back(std::move(row));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Subdivides edges e1 and e2 (possibly equal) and joins the two new vertices.
Multigraph insert_edge(const Multigraph& g, EdgeId e1, EdgeId e2) {
  const int n = g.vertex_count();
  const Vertex x = n;
  const Vertex y = n + 1;
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (e != e1 && e != e2) edges.push_back(g.edge(e));
  }
  const Edge a = g.edge(e1);
  if (e1 == e2) {
    edges.push_back({a.a, x});
    edges.push_back({x, y});
    edges.push_back({y, a.b});
  } else {
    const Edge b = g.edge(e2);
    edges.push_back({a.a, x});
    edges.push_back({x, a.b});
    edges.push_back({b.a, y});
    edges.push_back({y, b.b});
  }
  edges.push_back({x, y});
  return Multigraph::from_edges(n + 2, std::move(edges));
}

}  // namespace

std::vector<Multigraph> exhaustive_cubic_bridgeless(int n) {
  if (n < 2 || n % 2 != 0 || n > 12) throw GraphError(ErrorKind::BadSize, "exhaustive generation for even 2 <= n <= 12");
  std::vector<Multigraph> level{named("theta")};
  for (int size = 4; size <= n; size += 2) {
    std::map<std::vector<std::vector<int>>, std::vector<std::size_t>> buckets;
    std::vector<Multigraph> next;
    for (const Multigraph& g : level) {
      for (EdgeId e1 = 0; e1 < g.edge_count(); ++e1) {
        for (EdgeId e2 = e1; e2 < g.edge_count(); ++e2) {
          Multigraph cand = insert_edge(g, e1, e2);
          auto& bucket = buckets[profile(cand)];
          const bool seen = std::any_of(bucket.begin(), bucket.end(), [&](std::size_t i) {
            return find_isomorphism(next[i], cand).has_value();
          });
          if (seen) continue;
          bucket.push_back(next.size());
          next.push_back(std::move(cand));
        }
      }
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace cubicpm
