#pragma once

#include <cstddef>
#include <vector>

#include "tiling/graph.hpp"

namespace tiling {

// A vertex-disjoint collection of r-cliques of some host graph. Members are
// kept in canonical order: ascending by their lowest vertex.
struct Tiling {
  int r = 0;
  std::vector<VertexSet> members;

  std::size_t size() const { return members.size(); }
  bool operator==(const Tiling&) const = default;
};

// Result of enumerating every maximum tiling of a graph.
struct MaxTilings {
  long long maximum = 0;          // the tiling number of the graph
  std::vector<Tiling> tilings;    // lexicographic order; empty if maximum == 0
  bool truncated = false;         // true if the limit cut the enumeration short
};

// Result of an exhaustive extremal-number computation: the largest edge count
// of an n-vertex graph whose r-clique tiling number is at most k.
struct ExResult {
  long long n = 0;
  long long k = 0;
  int r = 0;
  long long value = 0;
  Graph witness = Graph::empty(1);  // lexicographically first extremal graph
  long long levels_searched = 0;    // deletion depths examined (0 .. levels-1)
};

// Exact tiling number: the maximum number of pairwise vertex-disjoint
// r-cliques in g. Throws std::invalid_argument if r < 1.
long long nu(const Graph& g, int r);

// True if g contains at least `size` pairwise disjoint r-cliques.
bool has_tiling_of_size(const Graph& g, int r, long long size);

// True iff the tiling number exceeds k, i.e. k+1 disjoint r-cliques fit.
// Stops at the first witness rather than computing the full optimum.
bool has_k_plus_one(const Graph& g, int r, long long k);

// Enumerates maximum tilings in lexicographic order, stopping after `limit`.
MaxTilings max_tilings(const Graph& g, int r, std::size_t limit);

// Tries to enlarge a tiling by swapping out up to two members at a time for
// one more clique than was removed. Each candidate swap costs one unit of
// budget; returns the (possibly improved) tiling in canonical order. Throws
// std::invalid_argument if the input is not a valid tiling of g.
Tiling rotation_improve(const Graph& g, const Tiling& tiling, long long budget);

// Exhaustive search over K_n minus every set of t deleted edges, t ascending,
// for the extremal edge count subject to tiling number <= k. Deterministic:
// the witness is the lexicographically first extremal graph found. Throws
// tiling::resource_error when n exceeds the supported range for r (7 for
// r = 2, 8 for r = 3, 9 for r >= 4) or the candidate budget of 1e9 graphs
// would be exceeded; std::invalid_argument for r < 2, k < 0, or n < 1.
// Honors TILING_THREADS for the per-level parallel scan.
ExResult bruteforce_ex(long long n, long long k, int r);

// Worker count used by parallel scans: TILING_THREADS if set to a positive
// integer, otherwise the hardware concurrency, clamped to [1, 64].
int thread_count();

}  // namespace tiling
