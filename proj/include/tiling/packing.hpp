#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tiling/graph.hpp"

namespace tiling {

// Hard cap on vertices for the staged packing computation below; beyond it
// the enumeration stages are not guaranteed to finish at desk scale.
inline constexpr int kPackingVertexCap = 32;

// Per-stage cap on enumerated optima. A stage that hits it sets the
// truncated flag: the packing is still a valid partition with |A| exact,
// but later stage values and the tie-break may rest on a truncated pool.
inline constexpr std::size_t kStageEnumerationLimit = 1'000'000;

// A partition of V(G) into vertex-disjoint K4s, K3s, edges and singletons
// whose size vector (|A|, |B|, |C|, |D|) is lexicographically maximal.
// Members are canonical: each list ascends by its sets' lowest vertices.
struct RankPacking {
  std::vector<VertexSet> quads;      // A: 4-sets, each inducing K4
  std::vector<VertexSet> triples;    // B: 3-sets, each inducing K3
  std::vector<VertexSet> pairs;      // C: 2-sets, each inducing an edge
  std::vector<VertexSet> singles;    // D: leftover vertices, ascending
  bool truncated = false;
};

// The ten bins a quad can land in. The first eight are direct visibility
// tests against B, C and D; the last two come from the peel loop over the
// leftover quads.
enum class AClass {
  kA1,
  kA2_1,
  kA2_2,
  kA2_3,
  kA3_1,
  kA3_2,
  kA4_1,
  kA4_2,
  kA5,
  kA6,
};

// Stable short label for an AClass: "A1", "A2_1", ..., "A5", "A6".
std::string a_class_name(AClass cls);

struct Classification {
  std::vector<AClass> assignment;       // parallel to RankPacking::quads
  std::vector<std::size_t> peel_order;  // quad indices, in order moved to A5
};

// Class-size summary of a classified packing. Identities: a1+...+a6 = k,
// k = |A|, and 4k + 3b + 2c + d = n.
struct Profile {
  long long a1 = 0, a2 = 0, a3 = 0, a4 = 0, a5 = 0, a6 = 0;
  long long b = 0, c = 0, d = 0;
  long long n = 0;
  long long k = 0;
};

// Visibility predicates between packing members. Preconditions: `quad`
// induces K4, `triangle` K3, `edge` K2, `single` is one vertex; the two
// arguments are disjoint subsets of V(G). Violations throw
// std::invalid_argument.
//
//   three_sees:  some vertex of the quad is adjacent to all of the triangle.
//   two_sees:    some pair of the triangle and some pair of the quad span a
//                complete bipartite K2,2 between them.
//   edge_sees:   both edge endpoints are adjacent to a common quad pair.
//   vertex_sees: the vertex has at least three neighbors in the quad.
bool three_sees(const Graph& g, VertexSet triangle, VertexSet quad);
bool two_sees(const Graph& g, VertexSet triangle, VertexSet quad);
bool edge_sees(const Graph& g, VertexSet edge, VertexSet quad);
bool vertex_sees(const Graph& g, VertexSet single, VertexSet quad);

// Computes the lexicographically maximal rank-4-packing: |A| is the exact
// K4-tiling number; |B| the largest K3-tiling of any residual left by a
// maximum K4-tiling; |C| the largest matching left after that; singletons
// absorb the rest. Ties are broken by the lexicographically least set
// sequence (quads, then triples, then pairs). Throws tiling::resource_error
// when the graph exceeds kPackingVertexCap vertices.
RankPacking lex_max_rank_packing(const Graph& g);

// Assigns every quad to its class. Quads are tested in order against the
// rules for A1, A2_1 ... A4_2; the unassigned remainder goes through the
// peel loop: while some remaining quad sends at most 15*(m-1) edges to the
// other m-1 remaining quads (m = current remainder size, recomputed each
// round), the lowest-index such quad moves to A5; whatever survives is A6.
// Throws std::invalid_argument if the packing is not a valid partition into
// induced cliques with stage-maximal sizes.
Classification classify(const Graph& g, const RankPacking& packing);

// Tallies class and part sizes into a Profile.
Profile profile_of(const RankPacking& packing, const Classification& cls);

// One audited inequality: lhs is a measured edge count, rhs the bound value
// from the classified profile, slack = rhs - lhs.
struct BoundEntry {
  std::string name;
  double lhs = 0;
  double rhs = 0;
  double slack = 0;
  bool pass = false;
};

struct BoundReport {
  std::vector<BoundEntry> entries;
  bool all_pass = true;
};

// Audits the edge-count inequalities that the class structure guarantees:
// within-part and pairwise bounds on B, C, D; within-class bounds for
// A1...A6; the A_i-to-(B u C u D) cross bounds; the combined quadratic
// bound on e(A4) + e(A4, B u C); and the aggregate |E(G)| bound from the
// first-stage quadratic form plus 20n. Failures are reported, not thrown.
BoundReport audit_bounds(const Graph& g, const RankPacking& packing,
                         const Classification& cls);

}  // namespace tiling
