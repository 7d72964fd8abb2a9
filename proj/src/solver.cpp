#include "tiling/solver.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <climits>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>

#include "packing_search.hpp"

namespace tiling {

namespace {

using internal::PackingSearch;

void check_r(int r) {
  if (r < 1) throw std::invalid_argument("clique order must be at least 1");
}

void sort_canonical(std::vector<VertexSet>& members) {
  std::sort(members.begin(), members.end(), [](VertexSet a, VertexSet b) {
    return std::countr_zero(a) < std::countr_zero(b);
  });
}

// Advances an ascending index combination in lexicographic order.
template <typename Int>
bool next_combination(std::vector<Int>& c, Int limit) {
  Int t = static_cast<Int>(c.size());
  for (Int i = t; i-- > 0;) {
    if (c[i] < limit - t + i) {
      ++c[i];
      for (Int j = i + 1; j < t; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

long long nu(const Graph& g, int r) {
  check_r(r);
  PackingSearch search(g, r);
  return search.max_packing_by_probe(g.all_vertices());
}

bool has_tiling_of_size(const Graph& g, int r, long long size) {
  check_r(r);
  if (size <= 0) return true;
  PackingSearch search(g, r);
  return search.exists(g.all_vertices(), size);
}

bool has_k_plus_one(const Graph& g, int r, long long k) {
  return has_tiling_of_size(g, r, k + 1);
}

MaxTilings max_tilings(const Graph& g, int r, std::size_t limit) {
  check_r(r);
  PackingSearch search(g, r);
  MaxTilings out;
  out.maximum = search.max_packing_by_probe(g.all_vertices());
  if (out.maximum == 0 || limit == 0) {
    out.truncated = out.maximum > 0 && limit == 0;
    return out;
  }
  std::vector<std::vector<VertexSet>> raw;
  out.truncated =
      search.enumerate_max(g.all_vertices(), out.maximum, limit, raw);
  out.tilings.reserve(raw.size());
  for (auto& members : raw) {
    out.tilings.push_back(Tiling{r, std::move(members)});
  }
  return out;
}

Tiling rotation_improve(const Graph& g, const Tiling& tiling,
                        long long budget) {
  check_r(tiling.r);
  VertexSet used = 0;
  for (VertexSet q : tiling.members) {
    if (set_size(q) != static_cast<std::size_t>(tiling.r) || !g.is_clique(q)) {
      throw std::invalid_argument(
          "tiling member is not an r-clique of the graph");
    }
    if (q & used) throw std::invalid_argument("tiling members overlap");
    used |= q;
  }
  PackingSearch search(g, tiling.r);
  Tiling current = tiling;
  sort_canonical(current.members);

  bool improved = true;
  while (improved && budget > 0) {
    improved = false;
    VertexSet cover = 0;
    for (VertexSet q : current.members) cover |= q;
    std::size_t m = current.size();
    for (std::size_t t = 0; t <= 2 && t <= m && !improved && budget > 0; ++t) {
      std::vector<std::size_t> pick(t);
      for (std::size_t i = 0; i < t; ++i) pick[i] = i;
      do {
        if (budget-- <= 0) break;
        VertexSet freed = g.all_vertices() & ~cover;
        for (std::size_t idx : pick) freed |= current.members[idx];
        auto found =
            search.find_first(freed, static_cast<long long>(t) + 1);
        if (found) {
          std::vector<VertexSet> next;
          for (std::size_t i = 0; i < m; ++i) {
            if (std::find(pick.begin(), pick.end(), i) == pick.end()) {
              next.push_back(current.members[i]);
            }
          }
          next.insert(next.end(), found->begin(), found->end());
          sort_canonical(next);
          current.members = std::move(next);
          improved = true;
          break;
        }
      } while (next_combination(pick, m));
    }
  }
  return current;
}

// ---------------------------------------------------------------------------
// Exhaustive extremal search on K_n minus edge sets
// ---------------------------------------------------------------------------

namespace {

constexpr long long kCandidateBudget = 1'000'000'000;

struct MiniGraph {
  int n = 0;
  std::array<std::uint64_t, 10> rows{};
};

// True if `target - 1` disjoint r-cliques fit in avail after removing a
// clique currently being grown; `clique` holds the chosen vertices, `cand`
// the vertices (all above the last chosen one) that extend it.
bool mini_clique_then_pack(const MiniGraph& g, int r, std::uint64_t avail,
                           std::uint64_t clique, std::uint64_t cand, int need,
                           int target);

// True if `target` vertex-disjoint r-cliques fit inside avail.
bool mini_pack(const MiniGraph& g, int r, std::uint64_t avail, int target) {
  if (target <= 0) return true;
  if (std::popcount(avail) < r * target) return false;
  int v = std::countr_zero(avail);
  std::uint64_t vb = std::uint64_t{1} << v;
  std::uint64_t above = ~(vb | (vb - 1));
  if (mini_clique_then_pack(g, r, avail, vb, g.rows[v] & avail & above, r - 1,
                            target)) {
    return true;
  }
  return mini_pack(g, r, avail & ~vb, target);
}

bool mini_clique_then_pack(const MiniGraph& g, int r, std::uint64_t avail,
                           std::uint64_t clique, std::uint64_t cand, int need,
                           int target) {
  if (need == 0) return mini_pack(g, r, avail & ~clique, target - 1);
  if (std::popcount(cand) < need) return false;
  while (cand) {
    int u = std::countr_zero(cand);
    cand &= cand - 1;
    if (mini_clique_then_pack(g, r, avail, clique | (std::uint64_t{1} << u),
                              cand & g.rows[u], need - 1, target)) {
      return true;
    }
  }
  return false;
}

long long binom(int m, int t) {
  if (t < 0 || t > m) return 0;
  t = std::min(t, m - t);
  long long out = 1;
  for (int i = 1; i <= t; ++i) out = out * (m - t + i) / i;
  return out;
}

// Lexicographic rank -> ascending combination of t values below m.
std::vector<int> unrank_combination(int m, int t, long long rank) {
  std::vector<int> out(t);
  int c = 0;
  for (int i = 0; i < t; ++i) {
    while (true) {
      long long block = binom(m - 1 - c, t - 1 - i);
      if (rank < block) break;
      rank -= block;
      ++c;
    }
    out[i] = c++;
  }
  return out;
}

}  // namespace

int thread_count() {
  if (const char* env = std::getenv("TILING_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) {
      return static_cast<int>(std::min(v, 64L));
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 64u));
}

ExResult bruteforce_ex(long long n, long long k, int r) {
  if (r < 2) throw std::invalid_argument("clique order must be at least 2");
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (n < 1) throw std::invalid_argument("n must be positive");
  long long n_cap = r == 2 ? 7 : (r == 3 ? 8 : 9);
  if (n > n_cap) {
    throw resource_error("exhaustive extremal search supports n <= " +
                         std::to_string(n_cap) + " for clique order " +
                         std::to_string(r));
  }
  int nn = static_cast<int>(n);
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < nn; ++u) {
    for (int v = u + 1; v < nn; ++v) slots.emplace_back(u, v);
  }
  int m_slots = static_cast<int>(slots.size());
  std::uint64_t full = n == 64 ? ~std::uint64_t{0}
                               : ((std::uint64_t{1} << n) - 1);

  long long processed = 0;
  for (int t = 0; t <= m_slots; ++t) {
    long long level = binom(m_slots, t);
    if (level > kCandidateBudget - processed) {
      throw resource_error("candidate budget of 1e9 graphs exceeded at "
                           "deletion depth " + std::to_string(t));
    }
    processed += level;

    int workers = static_cast<int>(
        std::min<long long>(thread_count(), std::max<long long>(level, 1)));
    std::atomic<long long> best_rank{LLONG_MAX};
    std::vector<std::vector<int>> hit_comb(workers);
    std::vector<long long> hit_rank(workers, LLONG_MAX);

    auto scan = [&](int w) {
      long long lo = level * w / workers;
      long long hi = level * (w + 1) / workers;
      if (lo >= hi) return;
      std::vector<int> comb = unrank_combination(m_slots, t, lo);
      MiniGraph g;
      g.n = nn;
      for (long long rank = lo; rank < hi; ++rank) {
        if ((rank & 1023) == 0 &&
            best_rank.load(std::memory_order_relaxed) < rank) {
          return;
        }
        for (int v = 0; v < nn; ++v) {
          g.rows[v] = full & ~(std::uint64_t{1} << v);
        }
        for (int ei : comb) {
          auto [u, v] = slots[ei];
          g.rows[u] &= ~(std::uint64_t{1} << v);
          g.rows[v] &= ~(std::uint64_t{1} << u);
        }
        if (!mini_pack(g, r, full, static_cast<int>(k) + 1)) {
          hit_rank[w] = rank;
          hit_comb[w] = comb;
          long long cur = best_rank.load(std::memory_order_relaxed);
          while (cur > rank && !best_rank.compare_exchange_weak(
                                   cur, rank, std::memory_order_relaxed)) {
          }
          return;
        }
        next_combination(comb, m_slots);
      }
    };

    if (workers == 1) {
      scan(0);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(workers);
      for (int w = 0; w < workers; ++w) pool.emplace_back(scan, w);
      for (auto& th : pool) th.join();
    }

    int winner = -1;
    for (int w = 0; w < workers; ++w) {
      if (hit_rank[w] < (winner < 0 ? LLONG_MAX : hit_rank[winner])) {
        winner = w;
      }
    }
    if (winner >= 0) {
      std::vector<std::pair<int, int>> edges;
      std::vector<bool> deleted(m_slots, false);
      for (int ei : hit_comb[winner]) deleted[ei] = true;
      for (int ei = 0; ei < m_slots; ++ei) {
        if (!deleted[ei]) edges.push_back(slots[ei]);
      }
      return ExResult{n, k, r, m_slots - t, Graph::from_edges(nn, edges),
                      t + 1};
    }
  }
  // Unreachable: the empty graph at depth m_slots always qualifies.
  throw std::logic_error("exhaustive search failed to terminate");
}

}  // namespace tiling
