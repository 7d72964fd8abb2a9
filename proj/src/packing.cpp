#include "tiling/packing.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "packing_search.hpp"
#include "tiling/opt.hpp"

namespace tiling {

namespace {

void check_member(const Graph& g, VertexSet s, int size, const char* what) {
  if ((s & ~g.all_vertices()) != 0) {
    throw std::invalid_argument(std::string(what) +
                                " has vertices outside the graph");
  }
  if (set_size(s) != size) {
    throw std::invalid_argument(std::string(what) + " must have exactly " +
                                std::to_string(size) + " vertices");
  }
  if (!g.is_clique(s)) {
    throw std::invalid_argument(std::string(what) +
                                " does not induce a complete subgraph");
  }
}

void check_disjoint(VertexSet s, VertexSet t) {
  if ((s & t) != 0) {
    throw std::invalid_argument("predicate arguments must be disjoint");
  }
}

VertexSet cover_of(const std::vector<VertexSet>& members) {
  VertexSet cover = 0;
  for (VertexSet m : members) cover |= m;
  return cover;
}

// Structural and stage-value validation shared by classify: the packing must
// partition V(G) into induced cliques of the right orders, and each stage
// size must equal the exact optimum for its residual.
void validate_packing(const Graph& g, const RankPacking& p) {
  VertexSet used = 0;
  auto absorb = [&](VertexSet s, int size, const char* what) {
    check_member(g, s, size, what);
    if ((s & used) != 0) {
      throw std::invalid_argument("packing members overlap");
    }
    used |= s;
  };
  for (VertexSet q : p.quads) absorb(q, 4, "packing quad");
  for (VertexSet t : p.triples) absorb(t, 3, "packing triple");
  for (VertexSet c : p.pairs) absorb(c, 2, "packing pair");
  for (VertexSet s : p.singles) absorb(s, 1, "packing singleton");
  if (used != g.all_vertices()) {
    throw std::invalid_argument("packing does not cover every vertex");
  }

  const VertexSet all = g.all_vertices();
  internal::PackingSearch quads_search(g, 4);
  if (static_cast<long long>(p.quads.size()) != quads_search.max_packing(all)) {
    throw std::invalid_argument("quad stage is not a maximum K4-tiling");
  }
  const VertexSet after_quads = all & ~cover_of(p.quads);
  internal::PackingSearch triples_search(g, 3);
  if (static_cast<long long>(p.triples.size()) !=
      triples_search.max_packing(after_quads)) {
    throw std::invalid_argument(
        "triple stage is not a maximum K3-tiling of its residual");
  }
  const VertexSet after_triples = after_quads & ~cover_of(p.triples);
  internal::PackingSearch pairs_search(g, 2);
  if (static_cast<long long>(p.pairs.size()) !=
      pairs_search.max_packing(after_triples)) {
    throw std::invalid_argument(
        "pair stage is not a maximum matching of its residual");
  }
}

}  // namespace

std::string a_class_name(AClass cls) {
  switch (cls) {
    case AClass::kA1:
      return "A1";
    case AClass::kA2_1:
      return "A2_1";
    case AClass::kA2_2:
      return "A2_2";
    case AClass::kA2_3:
      return "A2_3";
    case AClass::kA3_1:
      return "A3_1";
    case AClass::kA3_2:
      return "A3_2";
    case AClass::kA4_1:
      return "A4_1";
    case AClass::kA4_2:
      return "A4_2";
    case AClass::kA5:
      return "A5";
    case AClass::kA6:
      return "A6";
  }
  throw std::invalid_argument("unknown class");
}

bool three_sees(const Graph& g, VertexSet triangle, VertexSet quad) {
  check_member(g, triangle, 3, "triangle");
  check_member(g, quad, 4, "quad");
  check_disjoint(triangle, quad);
  for (int v : set_vertices(quad)) {
    if ((triangle & ~g.neighbors(v)) == 0) return true;
  }
  return false;
}

bool two_sees(const Graph& g, VertexSet triangle, VertexSet quad) {
  check_member(g, triangle, 3, "triangle");
  check_member(g, quad, 4, "quad");
  check_disjoint(triangle, quad);
  const std::vector<int> us = set_vertices(triangle);
  for (std::size_t i = 0; i < us.size(); ++i) {
    for (std::size_t j = i + 1; j < us.size(); ++j) {
      VertexSet common = quad & g.neighbors(us[i]) & g.neighbors(us[j]);
      if (set_size(common) >= 2) return true;
    }
  }
  return false;
}

bool edge_sees(const Graph& g, VertexSet edge, VertexSet quad) {
  check_member(g, edge, 2, "edge");
  check_member(g, quad, 4, "quad");
  check_disjoint(edge, quad);
  const std::vector<int> us = set_vertices(edge);
  VertexSet common = quad & g.neighbors(us[0]) & g.neighbors(us[1]);
  return set_size(common) >= 2;
}

bool vertex_sees(const Graph& g, VertexSet single, VertexSet quad) {
  check_member(g, single, 1, "vertex");
  check_member(g, quad, 4, "quad");
  check_disjoint(single, quad);
  return set_size(quad & g.neighbors(lowest_vertex(single))) >= 3;
}

RankPacking lex_max_rank_packing(const Graph& g) {
  if (g.vertex_count() > kPackingVertexCap) {
    throw resource_error("staged packing supports at most " +
                         std::to_string(kPackingVertexCap) +
                         " vertices, got " +
                         std::to_string(g.vertex_count()));
  }
  const VertexSet all = g.all_vertices();
  internal::PackingSearch quads_search(g, 4);
  internal::PackingSearch triples_search(g, 3);
  internal::PackingSearch pairs_search(g, 2);

  RankPacking out;

  // Stage A: all maximum K4-tilings, in lexicographic order.
  const long long best_a = quads_search.max_packing(all);
  std::vector<std::vector<VertexSet>> quad_tilings;
  if (best_a == 0) {
    quad_tilings.push_back({});
  } else {
    out.truncated |= quads_search.enumerate_max(
        all, best_a, kStageEnumerationLimit, quad_tilings);
  }

  // Stage B: the largest K3-tiling any stage-A residual admits.
  std::vector<long long> triple_value(quad_tilings.size());
  long long best_b = 0;
  for (std::size_t i = 0; i < quad_tilings.size(); ++i) {
    triple_value[i] =
        triples_search.max_packing(all & ~cover_of(quad_tilings[i]));
    best_b = std::max(best_b, triple_value[i]);
  }

  // Stage C: the largest matching over (quads, triples) choices reaching
  // (best_a, best_b). The scan runs in lexicographic order and the record
  // is updated only on strict improvement, so the remembered pair is the
  // lexicographically least one attaining the final optimum.
  long long best_c = -1;
  std::vector<VertexSet> chosen_quads;
  std::vector<VertexSet> chosen_triples;
  VertexSet chosen_residual = 0;
  for (std::size_t i = 0; i < quad_tilings.size(); ++i) {
    if (triple_value[i] != best_b) continue;
    const VertexSet residual = all & ~cover_of(quad_tilings[i]);
    std::vector<std::vector<VertexSet>> triple_tilings;
    out.truncated |= triples_search.enumerate_max(
        residual, best_b, kStageEnumerationLimit, triple_tilings);
    for (const auto& triples : triple_tilings) {
      const VertexSet rest = residual & ~cover_of(triples);
      const long long pair_value = pairs_search.max_packing(rest);
      if (pair_value > best_c) {
        best_c = pair_value;
        chosen_quads = quad_tilings[i];
        chosen_triples = triples;
        chosen_residual = rest;
      }
    }
  }

  // Stage D: the first enumerated maximum matching is the lexicographically
  // least one, so a single packing suffices regardless of how many exist.
  std::vector<std::vector<VertexSet>> matchings;
  pairs_search.enumerate_max(chosen_residual, best_c, 1, matchings);
  out.quads = std::move(chosen_quads);
  out.triples = std::move(chosen_triples);
  out.pairs = matchings.front();
  for (int v : set_vertices(chosen_residual & ~cover_of(out.pairs))) {
    out.singles.push_back(vertex_bit(v));
  }
  return out;
}

Classification classify(const Graph& g, const RankPacking& packing) {
  validate_packing(g, packing);
  const std::size_t k = packing.quads.size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  Classification result;
  result.assignment.assign(k, AClass::kA6);
  std::vector<std::size_t> pool;  // indices still headed for the peel loop

  for (std::size_t i = 0; i < k; ++i) {
    const VertexSet quad = packing.quads[i];

    int seen3 = 0;
    std::size_t seer3 = kNone;
    for (std::size_t j = 0; j < packing.triples.size(); ++j) {
      if (three_sees(g, packing.triples[j], quad)) {
        ++seen3;
        seer3 = j;
      }
    }
    int seen2 = 0;
    int seen2_other = 0;  // 2-seers distinct from a unique 3-seer
    for (std::size_t j = 0; j < packing.triples.size(); ++j) {
      if (two_sees(g, packing.triples[j], quad)) {
        ++seen2;
        if (!(seen3 == 1 && j == seer3)) ++seen2_other;
      }
    }
    int seen_by_pair = 0;
    for (VertexSet c : packing.pairs) {
      if (edge_sees(g, c, quad)) ++seen_by_pair;
    }
    int seen_by_single = 0;
    for (VertexSet s : packing.singles) {
      if (vertex_sees(g, s, quad)) ++seen_by_single;
    }

    if (seen3 >= 2) {
      result.assignment[i] = AClass::kA1;
    } else if (seen3 == 1 && seen2_other >= 1) {
      result.assignment[i] = AClass::kA2_1;
    } else if (seen3 == 1 && seen_by_pair >= 1) {
      result.assignment[i] = AClass::kA2_2;
    } else if (seen_by_pair >= 2) {
      result.assignment[i] = AClass::kA2_3;
    } else if (seen2 >= 3) {
      result.assignment[i] = AClass::kA3_1;
    } else if (seen2 >= 2 && seen_by_pair >= 1) {
      result.assignment[i] = AClass::kA3_2;
    } else if (seen3 == 1 && seen_by_single >= 1) {
      result.assignment[i] = AClass::kA4_1;
    } else if (seen_by_single >= 2) {
      result.assignment[i] = AClass::kA4_2;
    } else {
      pool.push_back(i);
    }
  }

  // Peel loop: while some pooled quad sends at most 15*(m-1) edges to the
  // other m-1 pooled quads, move the lowest-index such quad to A5; the
  // threshold shrinks as m does. Survivors stay A6.
  while (!pool.empty()) {
    const long long threshold = 15 * (static_cast<long long>(pool.size()) - 1);
    std::size_t moved = kNone;
    for (std::size_t pos = 0; pos < pool.size(); ++pos) {
      VertexSet rest = 0;
      for (std::size_t other = 0; other < pool.size(); ++other) {
        if (other != pos) rest |= packing.quads[pool[other]];
      }
      if (g.edges_between(packing.quads[pool[pos]], rest) <= threshold) {
        moved = pos;
        break;
      }
    }
    if (moved == kNone) break;
    result.assignment[pool[moved]] = AClass::kA5;
    result.peel_order.push_back(pool[moved]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(moved));
  }
  return result;
}

Profile profile_of(const RankPacking& packing, const Classification& cls) {
  if (cls.assignment.size() != packing.quads.size()) {
    throw std::invalid_argument(
        "classification does not match the packing's quad list");
  }
  Profile p;
  for (AClass c : cls.assignment) {
    switch (c) {
      case AClass::kA1:
        ++p.a1;
        break;
      case AClass::kA2_1:
      case AClass::kA2_2:
      case AClass::kA2_3:
        ++p.a2;
        break;
      case AClass::kA3_1:
      case AClass::kA3_2:
        ++p.a3;
        break;
      case AClass::kA4_1:
      case AClass::kA4_2:
        ++p.a4;
        break;
      case AClass::kA5:
        ++p.a5;
        break;
      case AClass::kA6:
        ++p.a6;
        break;
    }
  }
  p.b = static_cast<long long>(packing.triples.size());
  p.c = static_cast<long long>(packing.pairs.size());
  p.d = static_cast<long long>(packing.singles.size());
  p.k = static_cast<long long>(packing.quads.size());
  p.n = 4 * p.k + 3 * p.b + 2 * p.c + p.d;
  return p;
}

BoundReport audit_bounds(const Graph& g, const RankPacking& packing,
                         const Classification& cls) {
  const Profile pr = profile_of(packing, cls);

  VertexSet va1 = 0, va2 = 0, va3 = 0, va4 = 0, va5 = 0, va6 = 0;
  for (std::size_t i = 0; i < packing.quads.size(); ++i) {
    switch (cls.assignment[i]) {
      case AClass::kA1:
        va1 |= packing.quads[i];
        break;
      case AClass::kA2_1:
      case AClass::kA2_2:
      case AClass::kA2_3:
        va2 |= packing.quads[i];
        break;
      case AClass::kA3_1:
      case AClass::kA3_2:
        va3 |= packing.quads[i];
        break;
      case AClass::kA4_1:
      case AClass::kA4_2:
        va4 |= packing.quads[i];
        break;
      case AClass::kA5:
        va5 |= packing.quads[i];
        break;
      case AClass::kA6:
        va6 |= packing.quads[i];
        break;
    }
  }
  const VertexSet vb = cover_of(packing.triples);
  const VertexSet vc = cover_of(packing.pairs);
  const VertexSet vd = cover_of(packing.singles);
  const VertexSet bcd = vb | vc | vd;

  const double a1 = static_cast<double>(pr.a1), a2 = static_cast<double>(pr.a2),
               a3 = static_cast<double>(pr.a3), a4 = static_cast<double>(pr.a4),
               a5 = static_cast<double>(pr.a5), a6 = static_cast<double>(pr.a6),
               b = static_cast<double>(pr.b), c = static_cast<double>(pr.c),
               d = static_cast<double>(pr.d), n = static_cast<double>(pr.n);
  auto pairs2 = [](double x) { return x * (x - 1) / 2; };

  BoundReport report;
  auto add = [&report](std::string name, double lhs, double rhs) {
    BoundEntry entry;
    entry.name = std::move(name);
    entry.lhs = lhs;
    entry.rhs = rhs;
    entry.slack = rhs - lhs;
    entry.pass = lhs <= rhs + 1e-9;
    report.all_pass = report.all_pass && entry.pass;
    report.entries.push_back(std::move(entry));
  };

  add("edges_within_B", static_cast<double>(g.edges_within(vb)),
      3 * b + 6 * pairs2(b));
  add("edges_B_C", static_cast<double>(g.edges_between(vb, vc)), 4 * b * c);
  add("edges_B_D", static_cast<double>(g.edges_between(vb, vd)), 2 * b * d);
  add("edges_within_C", static_cast<double>(g.edges_within(vc)), c * c);
  add("edges_C_D", static_cast<double>(g.edges_between(vc, vd)), c * d);
  add("edges_within_D", static_cast<double>(g.edges_within(vd)), 0.0);
  add("edges_within_BCD", static_cast<double>(g.edges_within(bcd)),
      psi(b, c, d));

  add("edges_within_A1", static_cast<double>(g.edges_within(va1)),
      13 * pairs2(a1) + 6 * a1);
  add("edges_within_A2", static_cast<double>(g.edges_within(va2)),
      14 * pairs2(a2) + 6 * a2);
  add("edges_within_A3", static_cast<double>(g.edges_within(va3)),
      15 * pairs2(a3) + 6 * a3);
  add("edges_within_A3_quadratic", static_cast<double>(g.edges_within(va3)),
      7 * a3 * a3);
  add("edges_within_A4", static_cast<double>(g.edges_within(va4)),
      15 * pairs2(a4) + 6 * a4);
  add("edges_within_A5_A6", static_cast<double>(g.edges_within(va5 | va6)),
      15 * pairs2(a5) + 6 * a5 + 15 * a5 * a6 + 16 * pairs2(a6) + 6 * a6);

  add("edges_A1_BCD", static_cast<double>(g.edges_between(va1, bcd)),
      (9 * b + 6 * c + 3 * d) * a1);
  add("edges_A2_BCD", static_cast<double>(g.edges_between(va2, bcd)),
      (8 * b + 6 * c + 3 * d) * a2 + 4 * a2);
  add("edges_A3_BCD", static_cast<double>(g.edges_between(va3, bcd)),
      (8 * b + 5 * c + 3 * d) * a3 + 4 * a3);
  add("edges_A4_BCD", static_cast<double>(g.edges_between(va4, bcd)),
      (7 * b + 5 * c + 3 * d) * a4 + 18 * a4);
  add("edges_A5_BCD", static_cast<double>(g.edges_between(va5, bcd)),
      (7 * b + 5 * c + 2 * d) * a5 + 20 * a5);
  add("edges_A6_BCD", static_cast<double>(g.edges_between(va6, bcd)),
      (7 * b + 5 * c + 2 * d) * a6 + 20 * a6);

  // Combined quadratic bound on the A4 block; the envelope side is fixed by
  // d versus (b+c)/2, with equality on the high side.
  const DBranch side =
      2 * pr.d >= pr.b + pr.c ? DBranch::HIGH : DBranch::LOW;
  add("edges_A4_and_A4_BC",
      static_cast<double>(g.edges_within(va4) +
                          g.edges_between(va4, vb | vc)),
      20 * n + phi_hat(a4, b, c, d, side));

  OmegaPoint point;
  point.a1 = a1;
  point.a2 = a2;
  point.a3 = a3;
  point.a4 = a4;
  point.a5 = a5;
  point.a6 = a6;
  point.b = b;
  point.c = c;
  point.d = d;
  point.n = n;
  point.k = static_cast<double>(pr.k);
  add("total_edges_aggregate", static_cast<double>(g.edge_count()),
      phi_family(point, PhiKind::PHI1) + 20 * n);

  return report;
}

}  // namespace tiling
