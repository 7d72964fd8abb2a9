#include "tiling/packing.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "naive_oracles.hpp"
#include "tiling/constructions.hpp"
#include "tiling/graph.hpp"
#include "tiling/solver.hpp"

namespace tiling {
namespace {

Graph build(Family f, long long n, long long k, int j = 0) {
  ConstructionSpec s;
  s.family = f;
  s.n = n;
  s.k = k;
  s.j = j;
  return build_construction(s).graph;
}

// Induced subgraph on `mask` with vertices relabeled in ascending order.
Graph induced(const Graph& g, VertexSet mask) {
  std::vector<int> keep = set_vertices(mask);
  if (keep.empty()) return Graph::empty(1);
  std::vector<int> where(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) where[keep[i]] = i;
  std::vector<std::pair<int, int>> edges;
  for (int u : keep) {
    for (int v : keep) {
      if (u < v && g.has_edge(u, v)) edges.push_back({where[u], where[v]});
    }
  }
  return Graph::from_edges(static_cast<int>(keep.size()), edges);
}

VertexSet cover_of(const std::vector<VertexSet>& members) {
  VertexSet cover = 0;
  for (VertexSet m : members) cover |= m;
  return cover;
}

std::vector<int> class_counts(const Classification& cls) {
  std::vector<int> counts(10, 0);
  for (AClass c : cls.assignment) ++counts[static_cast<int>(c)];
  return counts;
}

TEST(SeesPredicates, ThreeSeesNeedsAQuadVertexAdjacentToAllThree) {
  Graph joined = Graph::from_edges(
      7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},  // quad
          {4, 5}, {4, 6}, {5, 6},                          // triangle
          {3, 4}, {3, 5}, {3, 6}});
  EXPECT_TRUE(three_sees(joined, make_set({4, 5, 6}), make_set({0, 1, 2, 3})));

  Graph separate = Graph::from_edges(
      7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
          {4, 5}, {4, 6}, {5, 6}});
  EXPECT_FALSE(
      three_sees(separate, make_set({4, 5, 6}), make_set({0, 1, 2, 3})));

  // Full adjacency spread across distinct quad vertices is not enough.
  Graph spread = Graph::from_edges(
      7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
          {4, 5}, {4, 6}, {5, 6},
          {1, 4}, {2, 5}, {3, 6}});
  EXPECT_FALSE(
      three_sees(spread, make_set({4, 5, 6}), make_set({0, 1, 2, 3})));
}

TEST(SeesPredicates, TwoSeesNeedsACompleteCrossPair) {
  Graph crossed = Graph::from_edges(
      7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
          {4, 5}, {4, 6}, {5, 6},
          {0, 4}, {0, 5}, {1, 4}, {1, 5}});
  EXPECT_TRUE(two_sees(crossed, make_set({4, 5, 6}), make_set({0, 1, 2, 3})));

  Graph single = Graph::from_edges(
      7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
          {4, 5}, {4, 6}, {5, 6},
          {0, 4}});
  EXPECT_FALSE(two_sees(single, make_set({4, 5, 6}), make_set({0, 1, 2, 3})));

  // A single quad vertex adjacent to the whole triangle 3-sees but does not
  // 2-see: the second cross edge must come from a different quad vertex.
  Graph star = Graph::from_edges(
      7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
          {4, 5}, {4, 6}, {5, 6},
          {0, 4}, {0, 5}, {0, 6}});
  EXPECT_TRUE(three_sees(star, make_set({4, 5, 6}), make_set({0, 1, 2, 3})));
  EXPECT_FALSE(two_sees(star, make_set({4, 5, 6}), make_set({0, 1, 2, 3})));
}

TEST(SeesPredicates, EdgeAndVertexVisibility) {
  Graph joined = Graph::from_edges(
      6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
          {4, 5},
          {4, 0}, {4, 1}, {5, 0}, {5, 1}});
  EXPECT_TRUE(edge_sees(joined, make_set({4, 5}), make_set({0, 1, 2, 3})));

  Graph split = Graph::from_edges(
      6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
          {4, 5},
          {4, 0}, {4, 1}, {5, 2}, {5, 3}});
  EXPECT_FALSE(edge_sees(split, make_set({4, 5}), make_set({0, 1, 2, 3})));

  Graph two_nbrs = Graph::from_edges(
      5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 0}, {4, 1}});
  EXPECT_FALSE(vertex_sees(two_nbrs, make_set({4}), make_set({0, 1, 2, 3})));

  Graph three_nbrs = Graph::from_edges(
      5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
          {4, 0}, {4, 1}, {4, 2}});
  EXPECT_TRUE(vertex_sees(three_nbrs, make_set({4}), make_set({0, 1, 2, 3})));
}

TEST(SeesPredicates, HoldOnConstructedGraphs) {
  // The join vertex set of the first family is adjacent to everything, so
  // every triple 3-sees the single quad.
  Graph e1 = build(Family::E1, 13, 1);
  RankPacking p1 = lex_max_rank_packing(e1);
  ASSERT_EQ(p1.quads.size(), 1u);
  ASSERT_EQ(p1.triples.size(), 3u);
  for (VertexSet t : p1.triples) {
    EXPECT_TRUE(three_sees(e1, t, p1.quads[0]));
  }

  // In the clique-plus-bipartite family the triple pairs a clique vertex
  // with one vertex per side, which 2-sees the clique-heavy quad.
  Graph e3 = build(Family::E3, 11, 1);
  RankPacking p3 = lex_max_rank_packing(e3);
  ASSERT_EQ(p3.quads.size(), 1u);
  ASSERT_EQ(p3.triples.size(), 1u);
  EXPECT_TRUE(two_sees(e3, p3.triples[0], p3.quads[0]));

  // In the dominating-clique family every leftover vertex is joined to the
  // clique, hence sees every quad.
  Graph e4 = build(Family::E4, 12, 2);
  RankPacking p4 = lex_max_rank_packing(e4);
  ASSERT_EQ(p4.quads.size(), 2u);
  ASSERT_EQ(p4.singles.size(), 1u);
  for (VertexSet q : p4.quads) {
    EXPECT_TRUE(vertex_sees(e4, p4.singles[0], q));
  }
}

TEST(SeesPredicates, RejectMalformedArguments) {
  Graph g = Graph::complete(8);
  // Wrong sizes.
  EXPECT_THROW(three_sees(g, make_set({0, 1}), make_set({2, 3, 4, 5})),
               std::invalid_argument);
  EXPECT_THROW(two_sees(g, make_set({0, 1, 2, 3}), make_set({4, 5, 6, 7})),
               std::invalid_argument);
  EXPECT_THROW(edge_sees(g, make_set({0}), make_set({2, 3, 4, 5})),
               std::invalid_argument);
  EXPECT_THROW(vertex_sees(g, make_set({0, 1}), make_set({2, 3, 4, 5})),
               std::invalid_argument);
  // Overlap.
  EXPECT_THROW(three_sees(g, make_set({0, 1, 2}), make_set({2, 3, 4, 5})),
               std::invalid_argument);
  // Vertices outside the graph.
  Graph small = Graph::complete(6);
  EXPECT_THROW(edge_sees(small, make_set({6, 7}), make_set({0, 1, 2, 3})),
               std::invalid_argument);
  // Non-clique arguments.
  Graph sparse = Graph::from_edges(
      7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 5}});
  EXPECT_THROW(three_sees(sparse, make_set({4, 5, 6}), make_set({0, 1, 2, 3})),
               std::invalid_argument);
  Graph no_quad = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {4, 5}});
  EXPECT_THROW(edge_sees(no_quad, make_set({4, 5}), make_set({0, 1, 2, 3})),
               std::invalid_argument);
}

TEST(LexPacking, CompleteCliquesLandInTheirStage) {
  RankPacking p4 = lex_max_rank_packing(Graph::complete(4));
  EXPECT_EQ(p4.quads, std::vector<VertexSet>{make_set({0, 1, 2, 3})});
  EXPECT_TRUE(p4.triples.empty());
  EXPECT_TRUE(p4.pairs.empty());
  EXPECT_TRUE(p4.singles.empty());

  RankPacking p3 = lex_max_rank_packing(Graph::complete(3));
  EXPECT_TRUE(p3.quads.empty());
  EXPECT_EQ(p3.triples, std::vector<VertexSet>{make_set({0, 1, 2})});

  RankPacking p2 = lex_max_rank_packing(Graph::complete(2));
  EXPECT_EQ(p2.pairs, std::vector<VertexSet>{make_set({0, 1})});

  RankPacking p1 = lex_max_rank_packing(Graph::complete(1));
  EXPECT_EQ(p1.singles, std::vector<VertexSet>{make_set({0})});

  RankPacking p8 = lex_max_rank_packing(Graph::complete(8));
  std::vector<VertexSet> expected{make_set({0, 1, 2, 3}),
                                  make_set({4, 5, 6, 7})};
  EXPECT_EQ(p8.quads, expected);
}

TEST(LexPacking, TakesTheLaterStagesIntoAccount) {
  // Two ways to pick the single quad from the 5-clique {0..4}: only leaving
  // {2,3,4} (a triangle through 5's neighbors... vertices 5,6 joined to 3,4)
  // keeps a triple alive, so the lex optimum must sacrifice the
  // lexicographically least quad for the larger triple stage.
  Graph g = Graph::from_edges(
      7, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4},
          {2, 3}, {2, 4}, {3, 4},
          {5, 3}, {5, 4}, {6, 3}, {6, 4}, {5, 6}});
  RankPacking p = lex_max_rank_packing(g);
  ASSERT_EQ(p.quads.size(), 1u);
  ASSERT_EQ(p.triples.size(), 1u);
  EXPECT_EQ(p.quads[0], make_set({0, 1, 2, 3}));
  EXPECT_EQ(p.triples[0], make_set({4, 5, 6}));
  EXPECT_TRUE(p.pairs.empty());
  EXPECT_TRUE(p.singles.empty());
}

TEST(LexPacking, ConstructionProfilesMatchTheExpectedRows) {
  struct Case {
    Family family;
    long long n, k;
    std::vector<long long> expected;  // a1..a6, b, c, d
  };
  // The second family's row: its formula profile would put (b, c) near
  // ((n-6k)/3, k), but at n = 14, k = 2 the lexicographic rule trades one
  // matching edge for a triple, giving (b, c, d) = (1, 1, 1).
  const std::vector<Case> cases = {
      {Family::E1, 13, 1, {1, 0, 0, 0, 0, 0, 3, 0, 0}},
      {Family::E2, 14, 2, {0, 2, 0, 0, 0, 0, 1, 1, 1}},
      {Family::E3, 11, 1, {0, 1, 0, 0, 0, 0, 1, 2, 0}},
      {Family::E4, 12, 2, {0, 0, 0, 2, 0, 0, 1, 0, 1}},
      {Family::E5, 13, 2, {0, 0, 0, 0, 0, 2, 1, 1, 0}},
  };
  for (const auto& c : cases) {
    Graph g = build(c.family, c.n, c.k);
    RankPacking packing = lex_max_rank_packing(g);
    Classification cls = classify(g, packing);
    Profile pr = profile_of(packing, cls);
    std::vector<long long> got{pr.a1, pr.a2, pr.a3, pr.a4, pr.a5,
                               pr.a6, pr.b,  pr.c,  pr.d};
    EXPECT_EQ(got, c.expected) << "family index " << static_cast<int>(c.family)
                               << " n=" << c.n << " k=" << c.k;
    EXPECT_EQ(pr.k, c.k);
    EXPECT_EQ(pr.n, c.n);
  }
}

TEST(LexPacking, StagesMatchTheExactSolverOnResiduals) {
  for (double p : {0.3, 0.5, 0.7}) {
    for (int seed = 0; seed < 10; ++seed) {
      Graph g = oracle::random_graph(14, p, 900 + 10 * static_cast<int>(p * 10) + seed);
      RankPacking packing = lex_max_rank_packing(g);
      EXPECT_EQ(static_cast<long long>(packing.quads.size()), nu(g, 4));
      VertexSet rest = g.all_vertices() & ~cover_of(packing.quads);
      EXPECT_EQ(static_cast<long long>(packing.triples.size()),
                nu(induced(g, rest), 3));
      rest &= ~cover_of(packing.triples);
      EXPECT_EQ(static_cast<long long>(packing.pairs.size()),
                nu(induced(g, rest), 2));
    }
  }
}

TEST(LexPacking, DeterministicCanonicalPartition) {
  for (double p : {0.4, 0.6}) {
    for (int seed = 0; seed < 8; ++seed) {
      Graph g = oracle::random_graph(13, p, 4000 + seed);
      RankPacking a = lex_max_rank_packing(g);
      RankPacking b = lex_max_rank_packing(g);
      EXPECT_EQ(a.quads, b.quads);
      EXPECT_EQ(a.triples, b.triples);
      EXPECT_EQ(a.pairs, b.pairs);
      EXPECT_EQ(a.singles, b.singles);

      // Partition: pairwise disjoint, union = V, canonical member order.
      VertexSet used = 0;
      long long total = 0;
      auto absorb = [&](const std::vector<VertexSet>& members, int size) {
        int last_low = -1;
        for (VertexSet m : members) {
          EXPECT_EQ(set_size(m), size);
          EXPECT_TRUE(g.is_clique(m));
          EXPECT_EQ(m & used, 0u);
          EXPECT_GT(lowest_vertex(m), last_low);
          last_low = lowest_vertex(m);
          used |= m;
          total += size;
        }
      };
      absorb(a.quads, 4);
      absorb(a.triples, 3);
      absorb(a.pairs, 2);
      absorb(a.singles, 1);
      EXPECT_EQ(used, g.all_vertices());
      EXPECT_EQ(total, g.vertex_count());
    }
  }
}

TEST(LexPacking, SizeCapAndTruncationFlag) {
  EXPECT_THROW(lex_max_rank_packing(Graph::empty(33)), resource_error);

  // The 15-clique admits far more than the stage cap of maximum quad
  // tilings; the result is still a valid stage-maximal packing but carries
  // the truncation flag.
  RankPacking p = lex_max_rank_packing(Graph::complete(15));
  EXPECT_TRUE(p.truncated);
  EXPECT_EQ(p.quads.size(), 3u);
  EXPECT_EQ(p.triples.size(), 1u);
  EXPECT_TRUE(p.pairs.empty());
  EXPECT_TRUE(p.singles.empty());

  RankPacking q = lex_max_rank_packing(Graph::complete(14));
  EXPECT_FALSE(q.truncated);
  EXPECT_EQ(q.quads.size(), 3u);
  EXPECT_TRUE(q.triples.empty());
  EXPECT_EQ(q.pairs.size(), 1u);
}

TEST(Classify, ConstructedGraphsLandInTheirClasses) {
  Graph e1 = build(Family::E1, 13, 1);
  RankPacking p1 = lex_max_rank_packing(e1);
  Classification c1 = classify(e1, p1);
  ASSERT_EQ(c1.assignment.size(), 1u);
  EXPECT_EQ(c1.assignment[0], AClass::kA1);

  Graph e4 = build(Family::E4, 12, 2);
  RankPacking p4 = lex_max_rank_packing(e4);
  Classification c4 = classify(e4, p4);
  ASSERT_EQ(c4.assignment.size(), 2u);
  EXPECT_EQ(c4.assignment[0], AClass::kA4_1);
  EXPECT_EQ(c4.assignment[1], AClass::kA4_1);

  Graph e2 = build(Family::E2, 14, 2);
  RankPacking p2 = lex_max_rank_packing(e2);
  Classification c2 = classify(e2, p2);
  ASSERT_EQ(c2.assignment.size(), 2u);
  EXPECT_EQ(c2.assignment[0], AClass::kA2_2);
  EXPECT_EQ(c2.assignment[1], AClass::kA2_2);
}

TEST(Classify, LoneQuadPeelsIntoA5) {
  Graph g = Graph::complete(4);
  RankPacking p = lex_max_rank_packing(g);
  Classification c = classify(g, p);
  ASSERT_EQ(c.assignment.size(), 1u);
  EXPECT_EQ(c.assignment[0], AClass::kA5);
  EXPECT_EQ(c.peel_order, std::vector<std::size_t>{0});
}

TEST(Classify, PeelThresholdSplitsA5FromA6) {
  // Two disjoint quads with no cross edges: 0 <= 15, so both peel, lowest
  // index first.
  Graph sparse = Graph::from_edges(
      8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
          {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}});
  RankPacking ps = lex_max_rank_packing(sparse);
  Classification cs = classify(sparse, ps);
  EXPECT_EQ(cs.assignment,
            (std::vector<AClass>{AClass::kA5, AClass::kA5}));
  EXPECT_EQ(cs.peel_order, (std::vector<std::size_t>{0, 1}));

  // The 8-clique's two quads exchange 16 > 15 edges: nobody peels.
  Graph k8 = Graph::complete(8);
  RankPacking p8 = lex_max_rank_packing(k8);
  Classification c8 = classify(k8, p8);
  EXPECT_EQ(c8.assignment,
            (std::vector<AClass>{AClass::kA6, AClass::kA6}));
  EXPECT_TRUE(c8.peel_order.empty());
}

TEST(Classify, AssignmentAgreesWithPostHocMembershipTests) {
  for (double p : {0.4, 0.6, 0.8}) {
    for (int seed = 0; seed < 8; ++seed) {
      Graph g = oracle::random_graph(14, p, 7000 + 100 * static_cast<int>(p * 10) + seed);
      RankPacking packing = lex_max_rank_packing(g);
      Classification cls = classify(g, packing);
      ASSERT_EQ(cls.assignment.size(), packing.quads.size());

      const std::size_t k = packing.quads.size();
      std::vector<int> seen3(k, 0), seen2(k, 0), seen2_other(k, 0),
          by_pair(k, 0), by_single(k, 0);
      for (std::size_t i = 0; i < k; ++i) {
        std::size_t seer = static_cast<std::size_t>(-1);
        for (std::size_t j = 0; j < packing.triples.size(); ++j) {
          if (three_sees(g, packing.triples[j], packing.quads[i])) {
            ++seen3[i];
            seer = j;
          }
        }
        for (std::size_t j = 0; j < packing.triples.size(); ++j) {
          if (two_sees(g, packing.triples[j], packing.quads[i])) {
            ++seen2[i];
            if (!(seen3[i] == 1 && j == seer)) ++seen2_other[i];
          }
        }
        for (VertexSet c : packing.pairs) {
          if (edge_sees(g, c, packing.quads[i])) ++by_pair[i];
        }
        for (VertexSet s : packing.singles) {
          if (vertex_sees(g, s, packing.quads[i])) ++by_single[i];
        }
      }

      for (std::size_t i = 0; i < k; ++i) {
        AClass expected;
        if (seen3[i] >= 2) {
          expected = AClass::kA1;
        } else if (seen3[i] == 1 && seen2_other[i] >= 1) {
          expected = AClass::kA2_1;
        } else if (seen3[i] == 1 && by_pair[i] >= 1) {
          expected = AClass::kA2_2;
        } else if (by_pair[i] >= 2) {
          expected = AClass::kA2_3;
        } else if (seen2[i] >= 3) {
          expected = AClass::kA3_1;
        } else if (seen2[i] >= 2 && by_pair[i] >= 1) {
          expected = AClass::kA3_2;
        } else if (seen3[i] == 1 && by_single[i] >= 1) {
          expected = AClass::kA4_1;
        } else if (by_single[i] >= 2) {
          expected = AClass::kA4_2;
        } else {
          EXPECT_TRUE(cls.assignment[i] == AClass::kA5 ||
                      cls.assignment[i] == AClass::kA6);
          continue;
        }
        EXPECT_EQ(cls.assignment[i], expected) << "quad " << i;
      }

      // Peel replay: every peeled quad met the shrinking threshold at its
      // turn and was the lowest-index qualifier; every survivor exceeds the
      // final threshold.
      std::vector<std::size_t> pool;
      for (std::size_t i = 0; i < k; ++i) {
        if (cls.assignment[i] == AClass::kA5 ||
            cls.assignment[i] == AClass::kA6) {
          pool.push_back(i);
        }
      }
      auto edges_to_rest = [&](std::size_t idx,
                               const std::vector<std::size_t>& members) {
        VertexSet rest = 0;
        for (std::size_t other : members) {
          if (other != idx) rest |= packing.quads[other];
        }
        return g.edges_between(packing.quads[idx], rest);
      };
      for (std::size_t peeled : cls.peel_order) {
        const long long threshold =
            15 * (static_cast<long long>(pool.size()) - 1);
        EXPECT_LE(edges_to_rest(peeled, pool), threshold);
        for (std::size_t other : pool) {
          if (other >= peeled) continue;
          EXPECT_GT(edges_to_rest(other, pool), threshold)
              << "lower-index quad " << other
              << " also qualified before " << peeled;
        }
        pool.erase(std::find(pool.begin(), pool.end(), peeled));
      }
      const long long final_threshold =
          15 * (static_cast<long long>(pool.size()) - 1);
      for (std::size_t survivor : pool) {
        EXPECT_EQ(cls.assignment[survivor], AClass::kA6);
        EXPECT_GT(edges_to_rest(survivor, pool), final_threshold);
      }
    }
  }
}

TEST(Classify, RejectsInvalidPackings) {
  Graph k8 = Graph::complete(8);
  RankPacking good = lex_max_rank_packing(k8);

  RankPacking overlap = good;
  overlap.quads[1] = good.quads[0];
  EXPECT_THROW(classify(k8, overlap), std::invalid_argument);

  RankPacking uncovered = good;
  uncovered.quads.pop_back();
  EXPECT_THROW(classify(k8, uncovered), std::invalid_argument);

  // A valid partition whose quad stage is not maximum.
  RankPacking quadless;
  quadless.triples = {make_set({0, 1, 2}), make_set({3, 4, 5})};
  quadless.pairs = {make_set({6, 7})};
  EXPECT_THROW(classify(k8, quadless), std::invalid_argument);

  // A non-clique member.
  Graph path = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  RankPacking bogus;
  bogus.quads = {make_set({0, 1, 2, 3})};
  EXPECT_THROW(classify(path, bogus), std::invalid_argument);
}

TEST(Profile, IdentitiesHoldOnRandomGraphs) {
  for (double p : {0.3, 0.7}) {
    for (int seed = 0; seed < 10; ++seed) {
      Graph g = oracle::random_graph(12, p, 880 + seed);
      RankPacking packing = lex_max_rank_packing(g);
      Classification cls = classify(g, packing);
      Profile pr = profile_of(packing, cls);
      EXPECT_EQ(pr.a1 + pr.a2 + pr.a3 + pr.a4 + pr.a5 + pr.a6, pr.k);
      EXPECT_EQ(pr.k, static_cast<long long>(packing.quads.size()));
      EXPECT_EQ(4 * pr.k + 3 * pr.b + 2 * pr.c + pr.d, pr.n);
      EXPECT_EQ(pr.n, g.vertex_count());
      std::vector<int> counts = class_counts(cls);
      EXPECT_EQ(counts[0], pr.a1);
      EXPECT_EQ(counts[1] + counts[2] + counts[3], pr.a2);
      EXPECT_EQ(counts[4] + counts[5], pr.a3);
      EXPECT_EQ(counts[6] + counts[7], pr.a4);
      EXPECT_EQ(counts[8], pr.a5);
      EXPECT_EQ(counts[9], pr.a6);
    }
  }
}

TEST(Audit, EqualityPatternsOnTheJoinConstruction) {
  Graph e1 = build(Family::E1, 13, 1);
  RankPacking packing = lex_max_rank_packing(e1);
  Classification cls = classify(e1, packing);
  BoundReport report = audit_bounds(e1, packing, cls);
  EXPECT_TRUE(report.all_pass);

  bool saw_b = false, saw_a1_cross = false;
  for (const auto& e : report.entries) {
    EXPECT_TRUE(e.pass) << e.name;
    EXPECT_DOUBLE_EQ(e.slack, e.rhs - e.lhs) << e.name;
    if (e.name == "edges_within_B") {
      // The triples cover the complete tripartite remainder: 27 = 3 b^2.
      EXPECT_DOUBLE_EQ(e.lhs, 27.0);
      EXPECT_DOUBLE_EQ(e.rhs, 27.0);
      saw_b = true;
    }
    if (e.name == "edges_A1_BCD") {
      // The quad is joined to all nine leftover vertices through its hub
      // plus six cross edges per member: (9b + 6c + 3d) a1 exactly.
      EXPECT_DOUBLE_EQ(e.lhs, 27.0);
      EXPECT_DOUBLE_EQ(e.rhs, 27.0);
      saw_a1_cross = true;
    }
  }
  EXPECT_TRUE(saw_b);
  EXPECT_TRUE(saw_a1_cross);
}

TEST(Audit, EmptyGraphIsTriviallyWithinEveryBound) {
  Graph g = Graph::empty(6);
  RankPacking packing = lex_max_rank_packing(g);
  EXPECT_EQ(packing.singles.size(), 6u);
  Classification cls = classify(g, packing);
  BoundReport report = audit_bounds(g, packing, cls);
  EXPECT_TRUE(report.all_pass);
  for (const auto& e : report.entries) {
    EXPECT_DOUBLE_EQ(e.lhs, 0.0) << e.name;
    EXPECT_GE(e.rhs, 0.0) << e.name;
  }
}

TEST(Audit, ReportListsEveryInequalityOnce) {
  Graph g = build(Family::E3, 11, 1);
  RankPacking packing = lex_max_rank_packing(g);
  Classification cls = classify(g, packing);
  BoundReport report = audit_bounds(g, packing, cls);
  EXPECT_EQ(report.entries.size(), 21u);
  std::set<std::string> names;
  for (const auto& e : report.entries) names.insert(e.name);
  EXPECT_EQ(names.size(), report.entries.size());
  for (const char* required :
       {"edges_within_B", "edges_within_BCD", "edges_within_A1",
        "edges_within_A3_quadratic", "edges_A6_BCD", "edges_A4_and_A4_BC",
        "total_edges_aggregate"}) {
    EXPECT_EQ(names.count(required), 1u) << required;
  }
}

TEST(Audit, RandomCampaignHasNoViolations) {
  for (double p : {0.3, 0.5, 0.7}) {
    for (int seed = 0; seed < 12; ++seed) {
      Graph g = oracle::random_graph(14, p,
                                     3100 + 100 * static_cast<int>(p * 10) + seed);
      RankPacking packing = lex_max_rank_packing(g);
      Classification cls = classify(g, packing);
      BoundReport report = audit_bounds(g, packing, cls);
      EXPECT_TRUE(report.all_pass) << "p=" << p << " seed=" << seed << " "
                                   << to_graph6(g);
    }
  }
}

TEST(SolverBridge, HasKPlusOneMatchesTheTilingNumber) {
  EXPECT_TRUE(has_k_plus_one(Graph::complete(8), 4, 1));
  EXPECT_FALSE(has_k_plus_one(Graph::complete(7), 4, 1));
  ConstructionSpec s;
  s.family = Family::E5;
  s.n = 13;
  s.k = 2;
  s.j = 0;
  Graph e5 = build_construction(s).graph;
  EXPECT_FALSE(has_k_plus_one(e5, 4, 2));
  EXPECT_TRUE(has_k_plus_one(e5, 4, 1));
}

}  // namespace
}  // namespace tiling
