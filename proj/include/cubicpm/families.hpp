#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cubicpm/multigraph.hpp"
#include "cubicpm/surgery.hpp"

namespace cubicpm {

/// Seeded generator shared by every random family. below(k) is unbiased.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t k);
  bool coin(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

// ---- named graphs ----------------------------------------------------------

/// theta, k4, k33, prism, cube, petersen, moebius_kantor, exceptional6,
/// dodecahedron, heawood. Throws UnknownName.
Multigraph named(std::string_view name);
std::vector<std::string> named_list();

// ---- ladders ---------------------------------------------------------------

/// The 2 x k grid. Column c holds vertices 2c and 2c+1; edge 0 is the first
/// rung. Each later column adds its two rails and then its rung.
Multigraph ladder(int k);
/// Ids of the two end edges (first and last rung). Equal when k == 1.
std::array<EdgeId, 2> ladder_ends(int k);
/// Whether h is a ladder whose ends are the edges {a, b} and {c, d}.
bool is_ladder_with_ends(const Multigraph& h, Vertex a, Vertex b, Vertex c, Vertex d);

// ---- Klee-graphs -----------------------------------------------------------

Multigraph klee(const KleeRecipe& recipe);
struct KleeSample {
  Multigraph graph;
  KleeRecipe recipe;
};
/// Throws BadSize unless target_n is even and at least 4.
KleeSample random_klee(std::uint64_t seed, int target_n);
/// Reverse triangle contraction with full backtracking. Throws TooLarge
/// above 24 vertices.
bool is_klee(const Multigraph& g);

// ---- twisted nets ----------------------------------------------------------

struct TwistedNetRecipe;

/// Increment joins corners a and b by a new path a - x - y - b.
/// Multiply adds edges corner a - other corner c and corner b - other corner d.
/// Corner indices refer to the corners of the graph built so far, sorted by
/// vertex id; the other net's vertices are appended after the current ones.
struct TwistedStep {
  enum class Kind { Increment, Multiply } kind = Kind::Increment;
  int a = 0;
  int b = 1;
  std::shared_ptr<const TwistedNetRecipe> other;
  int c = 0;
  int d = 1;
};

struct TwistedNetRecipe {
  std::vector<TwistedStep> steps;  // applied to the base 4-cycle 0-1-2-3
};

Multigraph twisted_net(const TwistedNetRecipe& recipe);
std::string describe(const TwistedNetRecipe& recipe);
int twisted_net_order(const TwistedNetRecipe& recipe);

struct TwistedSample {
  Multigraph graph;
  TwistedNetRecipe recipe;
};
/// Throws BadSize, UnreachableParity, GenerationFailed.
TwistedSample random_twisted_net(std::uint64_t seed, int target_n, std::optional<bool> want_bipartite = {});

struct RecognizedNet {
  TwistedNetRecipe recipe;
  /// phi[v] = vertex of twisted_net(recipe) playing the role of v.
  std::vector<Vertex> phi;
};
/// Reverses incrementations and multiplications. Throws TooLarge above 16
/// vertices.
std::optional<RecognizedNet> recognize_twisted_net(const Multigraph& g);

/// Degree-2 vertices in id order. Throws BadDegrees for other degrees.
std::vector<Vertex> corners(const Multigraph& g);

// ---- semiblocks ------------------------------------------------------------

struct Semiblocks {
  std::vector<VertexMask> sides;
  int s = 1;
};
/// Inclusion-minimal sides of 2-edge-cuts. Throws Bridged, BadDegrees,
/// DisconnectedPart, TooLarge.
Semiblocks semiblocks(const Multigraph& g);

// ---- random and exhaustive corpora -----------------------------------------

/// Pairing model conditioned on no loops, connectivity and no bridges
/// (and no parallel edges when simple_only). Throws BadSize,
/// GenerationFailed after 100000 rejected pairings.
Multigraph random_cubic_bridgeless(std::uint64_t seed, int n, bool simple_only = false);
/// Same conditioning over bipartite pairings (n/2 vertices per class).
Multigraph random_bipartite_cubic(std::uint64_t seed, int n, bool simple_only = false);

/// All bridgeless loopless cubic multigraphs on n vertices up to
/// isomorphism (n even, 2 <= n <= 12), grown from the theta graph by
/// inserting an edge between two subdivided edges. Graphs with a bridge are
/// never produced.
std::vector<Multigraph> exhaustive_cubic_bridgeless(int n);

}  // namespace cubicpm
