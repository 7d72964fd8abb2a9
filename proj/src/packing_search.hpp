#pragma once

#include <bit>
#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "tiling/graph.hpp"

namespace tiling {
namespace internal {

// Shared machinery for exact clique-packing questions on one graph: a
// precomputed lexicographic clique list plus a memoized branch-and-bound
// over vertex subsets. Branching is canonical: at each step the lowest
// still-available vertex is either covered by one of its cliques (tried in
// lexicographic order) or left uncovered, which makes every enumeration
// order below deterministic — packings come out ascending by sorted vertex
// sequence. All queries accept an arbitrary subset mask, so one instance
// (and one memo table) serves every residual-graph question about g.
class PackingSearch {
 public:
  PackingSearch(const Graph& g, int r)
      : r_(r), cliques_(g.cliques(r)), by_vertex_(g.vertex_count()) {
    for (int ci = 0; ci < static_cast<int>(cliques_.size()); ++ci) {
      for (int v : set_vertices(cliques_[ci])) by_vertex_[v].push_back(ci);
    }
  }

  long long max_packing(VertexSet mask) {
    mask = trim(mask);
    if (mask == 0) return 0;
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    int v = std::countr_zero(mask);
    long long best = max_packing(mask & (mask - 1));  // v uncovered
    for (int ci : by_vertex_[v]) {
      VertexSet q = cliques_[ci];
      if ((q & ~mask) == 0) best = std::max(best, 1 + max_packing(mask & ~q));
    }
    if (memo_.size() < kMemoCap) memo_.emplace(mask, best);
    return best;
  }

  bool exists(VertexSet mask, long long target) {
    if (target <= 0) return true;
    if (static_cast<long long>(set_size(mask)) < target * r_) return false;
    mask = trim(mask);
    if (static_cast<long long>(set_size(mask)) < target * r_) return false;
    if (auto it = memo_.find(mask); it != memo_.end()) {
      return it->second >= target;
    }
    if (auto it = refuted_.find(mask);
        it != refuted_.end() && it->second <= target) {
      return false;
    }
    int v = std::countr_zero(mask);
    for (int ci : by_vertex_[v]) {
      VertexSet q = cliques_[ci];
      if ((q & ~mask) == 0 && exists(mask & ~q, target - 1)) return true;
    }
    if (exists(mask & (mask - 1), target)) return true;
    if (refuted_.size() < kMemoCap) {
      auto [it, inserted] = refuted_.emplace(mask, target);
      if (!inserted && target < it->second) it->second = target;
    }
    return false;
  }

  // Largest packing size within mask, found by probing exists() upward.
  // The probes inherit the counting prune, which max_packing lacks, so this
  // is the cheaper route for one-off queries on dense graphs; max_packing
  // amortizes better across many residual-mask queries of one instance.
  long long max_packing_by_probe(VertexSet mask) {
    long long t = 0;
    while (exists(mask, t + 1)) ++t;
    return t;
  }

  // Lexicographically first packing of exactly `target` cliques, if any.
  std::optional<std::vector<VertexSet>> find_first(VertexSet mask,
                                                   long long target) {
    std::vector<VertexSet> acc;
    if (find_rec(mask, target, acc)) return acc;
    return std::nullopt;
  }

  // Appends every packing of exactly `maximum` cliques, in lexicographic
  // order, to `out` until `limit` packings are collected; returns true if
  // more exist.
  bool enumerate_max(VertexSet mask, long long maximum, std::size_t limit,
                     std::vector<std::vector<VertexSet>>& out) {
    std::vector<VertexSet> acc;
    return enum_rec(mask, maximum, limit, acc, out);
  }

 private:
  static constexpr std::size_t kMemoCap = std::size_t{1} << 22;

  // Drops leading vertices that no available clique can cover; they never
  // affect the packing value and collapsing them keeps the memo compact.
  VertexSet trim(VertexSet mask) const {
    while (mask) {
      int v = std::countr_zero(mask);
      bool covered = false;
      for (int ci : by_vertex_[v]) {
        if ((cliques_[ci] & ~mask) == 0) {
          covered = true;
          break;
        }
      }
      if (covered) break;
      mask &= mask - 1;
    }
    return mask;
  }

  bool find_rec(VertexSet mask, long long target, std::vector<VertexSet>& acc) {
    if (target == 0) return true;
    if (static_cast<long long>(set_size(mask)) < target * r_) return false;
    mask = trim(mask);
    if (mask == 0) return false;
    int v = std::countr_zero(mask);
    for (int ci : by_vertex_[v]) {
      VertexSet q = cliques_[ci];
      if ((q & ~mask) == 0) {
        acc.push_back(q);
        if (find_rec(mask & ~q, target - 1, acc)) return true;
        acc.pop_back();
      }
    }
    return find_rec(mask & (mask - 1), target, acc);
  }

  bool enum_rec(VertexSet mask, long long remaining, std::size_t limit,
                std::vector<VertexSet>& acc,
                std::vector<std::vector<VertexSet>>& out) {
    if (remaining == 0) {
      if (out.size() == limit) return true;  // one more exists: cut off
      out.push_back(acc);
      return false;
    }
    if (static_cast<long long>(set_size(mask)) < remaining * r_) return false;
    mask = trim(mask);
    if (mask == 0) return false;
    int v = std::countr_zero(mask);
    for (int ci : by_vertex_[v]) {
      VertexSet q = cliques_[ci];
      if ((q & ~mask) == 0) {
        acc.push_back(q);
        bool cut = enum_rec(mask & ~q, remaining - 1, limit, acc, out);
        acc.pop_back();
        if (cut) return true;
      }
    }
    return enum_rec(mask & (mask - 1), remaining, limit, acc, out);
  }

  int r_;
  std::vector<VertexSet> cliques_;
  std::vector<std::vector<int>> by_vertex_;
  std::unordered_map<VertexSet, long long> memo_;
  // mask -> smallest packing size already refuted for that mask.
  std::unordered_map<VertexSet, long long> refuted_;
};

}  // namespace internal
}  // namespace tiling
