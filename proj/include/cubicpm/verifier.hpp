#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubicpm/bounds.hpp"
#include "cubicpm/families.hpp"
#include "cubicpm/matchings.hpp"
#include "cubicpm/multigraph.hpp"
#include "cubicpm/rational.hpp"

namespace cubicpm {

enum class LemmaId {
  TH_HALF,
  THM_BIP,
  THM_KLEE,
  THM_EF,
  LM_DOUBLE,
  LM_TRIPLE,
  LM_SPECIAL,
  LM_BRIDGE,
  LM_3CONN,
  LM_SEMIBLOCK,
  THM_BB,
  LM_BB_CUBIC,
  LM_BB_BIP,
  LM_BB_3E,
  LM_BB_3EF,
  LM_SPLITOFF,
  LM_SPLIT5_SAME,
  LM_SPLIT5_DIFF,
  LM_SPLIT4A,
  LM_SPLIT4B,
  LM_ORDERED,
  LM_LADDER,
  LM_TWISTED_NUM,
  LM_TWISTED_BIP,
  LM_TWISTED_NONBIP,
  LM_TWISTED_BIS,
  LM_TWISTED_STRUC,
};

std::string_view to_string(LemmaId id);
/// Throws UnknownName.
LemmaId parse_lemma(std::string_view name);
const std::vector<LemmaId>& all_lemmas();

enum class Verdict { Pass, Fail, Skipped };
std::string_view to_string(Verdict v);

/// Direction of the claim: measured >= bound, or measured <= bound.
enum class Relation { AtLeast, AtMost };
std::string_view to_string(Relation r);

struct LemmaReport {
  LemmaId lemma = LemmaId::TH_HALF;
  std::string instance;
  std::string params = "{}";  // compact JSON object
  bool hypothesis_met = false;
  Bound bound;
  Relation relation = Relation::AtLeast;
  Rational measured;
  Verdict verdict = Verdict::Skipped;
  std::string reason;
  std::string dump;  // edge list of the instance, filled on Fail
};

/// Optional selections narrowing a check. A check without a selection
/// covers every admissible choice and reports the worst one.
struct CheckParams {
  std::optional<EdgeId> edge;
  std::optional<EdgeId> edge2;
  std::optional<std::array<Vertex, 4>> path;
  std::optional<VertexMask> side;
  std::optional<TwistedNetRecipe> recipe;  // declares the instance a twisted net
};

LemmaReport check(LemmaId lemma, const Multigraph& g, const CheckParams& params = {},
                  const std::string& instance = "graph");

/// Fractional perfect matching built for an edge e of a 3-edge-connected
/// cubic graph with G - e not matching-covered. f is the first edge in no
/// perfect matching avoiding e; the barrier S holds both ends of f, and h is
/// G - {e, f} with the components of G - e - S contracted (barrier vertices
/// first, then components by smallest vertex).
struct FlowCertificate {
  EdgeId e = -1;
  EdgeId f = -1;
  std::vector<Vertex> barrier;
  Multigraph h;
  WeightVector weights;
  bool structure_ok = false;
  bool flow_ok = false;
  bool in_polytope = false;
  bool entries_ok = false;
};

/// nullopt when every edge other than e lies in a perfect matching avoiding e.
/// Throws TooLarge above 24 vertices.
std::optional<FlowCertificate> bb3ef_flow_certificate(const Multigraph& g, EdgeId e);

/// The ladder lemma on one side of a cyclic 4-cut.
LemmaReport check_lm_ladder(const Multigraph& g, VertexMask side, const std::string& instance = "graph");

struct Instance {
  std::string name;
  Multigraph graph;
  std::optional<TwistedNetRecipe> recipe;
};

/// Random bridgeless cubic graphs, seed first_seed + i, order drawn
/// uniformly among the even values of [n_lo, n_hi] by the same seed.
struct RandomCorpus {
  std::uint64_t first_seed = 1;
  int count = 0;
  int n_lo = 4;
  int n_hi = 14;
  bool bipartite = false;
  bool simple_only = false;
};

std::vector<Instance> named_corpus(const std::vector<std::string>& names);
/// Throws GenerationFailed.
std::vector<Instance> random_corpus(const RandomCorpus& spec);
/// Random twisted nets with recipes attached; orders uniform over the even
/// values in [4, n_hi].
std::vector<Instance> twisted_corpus(std::uint64_t first_seed, int count, int n_hi);
/// Hosts for the structure lemma: Petersen minus an edge's ends, joined to
/// the corners of a random twisted net.
std::vector<Instance> twisted_host_corpus(std::uint64_t first_seed, int count, int net_n_hi);

struct SweepOptions {
  int threads = 1;
  bool stop_at_fail = true;
};

/// Reports ordered by lemma (in the given order), then instance. With
/// stop_at_fail the sequence ends at the first Fail, which carries a dump.
std::vector<LemmaReport> sweep(const std::vector<LemmaId>& lemmas, const std::vector<Instance>& corpus,
                               const SweepOptions& options = {});

}  // namespace cubicpm
