#pragma once

// Deliberately simple reference implementations used to cross-check the
// library. Everything here favors obviousness over speed: plain subset
// enumeration, no pruning beyond feasibility, no memoization.

#include <algorithm>
#include <random>
#include <vector>

#include "tiling/graph.hpp"

namespace tiling::oracle {

// All r-subsets of [0, n) that induce cliques, by direct pairwise checks,
// in lexicographic order of the sorted vertex tuple.
inline std::vector<VertexSet> naive_cliques(const Graph& g, int r) {
  std::vector<VertexSet> out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(pick.size()) == r) {
      for (std::size_t i = 0; i < pick.size(); ++i) {
        for (std::size_t j = i + 1; j < pick.size(); ++j) {
          if (!g.has_edge(pick[i], pick[j])) return;
        }
      }
      out.push_back(make_set(pick));
      return;
    }
    for (int v = from; v < g.vertex_count(); ++v) {
      pick.push_back(v);
      self(self, v + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Maximum number of pairwise vertex-disjoint r-cliques, by exhaustive
// search over the clique list. Intended for n <= 14 or so.
inline int naive_tiling_number(const Graph& g, int r) {
  std::vector<VertexSet> cliques = naive_cliques(g, r);
  int best = 0;
  auto rec = [&](auto&& self, std::size_t from, VertexSet used,
                 int count) -> void {
    best = std::max(best, count);
    for (std::size_t i = from; i < cliques.size(); ++i) {
      if ((cliques[i] & used) == 0) {
        self(self, i + 1, used | cliques[i], count + 1);
      }
    }
  };
  rec(rec, 0, 0, 0);
  return best;
}

// Erdos-Renyi graph with deterministic seeding.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng) < p) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace tiling::oracle
