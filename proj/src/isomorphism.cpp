#include "cubicpm/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace cubicpm {
namespace {

using Matrix = std::vector<std::vector<int>>;

Matrix multiplicities(const Multigraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  Matrix m(n, std::vector<int>(n, 0));
  for (const Edge& e : g.edges()) {
    ++m[static_cast<std::size_t>(e.a)][static_cast<std::size_t>(e.b)];
    ++m[static_cast<std::size_t>(e.b)][static_cast<std::size_t>(e.a)];
  }
  return m;
}

// Joint colour refinement so colour ids are comparable across both graphs.
void refine(const Matrix& mg, const Matrix& mh, std::vector<int>& cg, std::vector<int>& ch) {
  const std::size_t n = mg.size();
  std::size_t classes = 0;
  while (true) {
    using Signature = std::pair<int, std::vector<std::pair<int, int>>>;
    std::map<Signature, int> ids;
    auto signature = [&](const Matrix& m, const std::vector<int>& c, std::size_t v) {
      Signature s{c[v], {}};
      for (std::size_t w = 0; w < n; ++w) {
        if (m[v][w] > 0) s.second.emplace_back(c[w], m[v][w]);
      }
      std::sort(s.second.begin(), s.second.end());
      return s;
    };
    std::vector<Signature> sg(n), sh(n);
    for (std::size_t v = 0; v < n; ++v) {
      sg[v] = signature(mg, cg, v);
      sh[v] = signature(mh, ch, v);
      ids.emplace(sg[v], 0);
      ids.emplace(sh[v], 0);
    }
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (std::size_t v = 0; v < n; ++v) {
      cg[v] = ids[sg[v]];
      ch[v] = ids[sh[v]];
    }
    if (ids.size() == classes) return;
    classes = ids.size();
  }
}

bool extend(std::size_t depth, const std::vector<Vertex>& order, const Matrix& mg, const Matrix& mh,
            const std::vector<int>& cg, const std::vector<int>& ch, std::vector<Vertex>& phi,
            std::vector<char>& used) {
  if (depth == order.size()) return true;
  const auto x = static_cast<std::size_t>(order[depth]);
  for (std::size_t y = 0; y < mh.size(); ++y) {
    if (used[y] || ch[y] != cg[x]) continue;
    bool ok = true;
    for (std::size_t d = 0; d < depth && ok; ++d) {
      const auto px = static_cast<std::size_t>(order[d]);
      ok = mg[x][px] == mh[y][static_cast<std::size_t>(phi[px])];
    }
    if (!ok) continue;
    phi[x] = static_cast<Vertex>(y);
    used[y] = 1;
    if (extend(depth + 1, order, mg, mh, cg, ch, phi, used)) return true;
    used[y] = 0;
  }
  phi[x] = -1;
  return false;
}

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Multigraph& g, const Multigraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
  const auto n = static_cast<std::size_t>(g.vertex_count());
  const Matrix mg = multiplicities(g);
  const Matrix mh = multiplicities(h);
  std::vector<int> cg(n), ch(n);
  for (std::size_t v = 0; v < n; ++v) {
    cg[v] = g.degree(static_cast<Vertex>(v));
    ch[v] = h.degree(static_cast<Vertex>(v));
  }
  refine(mg, mh, cg, ch);
  {
    auto a = cg, b = ch;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  // Smallest colour classes first, then stay adjacent to mapped vertices.
  std::map<int, int> class_size;
  for (int c : cg) ++class_size[c];
  std::vector<Vertex> order;
  std::vector<char> placed(n, 0);
  while (order.size() < n) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v]) continue;
      auto key = [&](std::size_t u) {
        int links = 0;
        for (Vertex o : order) links += mg[u][static_cast<std::size_t>(o)] > 0 ? 1 : 0;
        return std::make_pair(-links, class_size[cg[u]]);
      };
      if (best == n || key(v) < key(best)) best = v;
    }
    placed[best] = 1;
    order.push_back(static_cast<Vertex>(best));
  }
  std::vector<Vertex> phi(n, -1);
  std::vector<char> used(n, 0);
  if (!extend(0, order, mg, mh, cg, ch, phi, used)) return std::nullopt;
  return phi;
}

bool are_isomorphic(const Multigraph& g, const Multigraph& h) {
  if (g.vertex_count() > kIsomorphismCap) {
    auto key = [](const Multigraph& x) {
      std::vector<std::pair<Vertex, Vertex>> out;
      for (const Edge& e : x.edges()) out.push_back(std::minmax(e.a, e.b));
      std::sort(out.begin(), out.end());
      return out;
    };
    return g.vertex_count() == h.vertex_count() && key(g) == key(h);
  }
  return find_isomorphism(g, h).has_value();
}

}  // namespace cubicpm
