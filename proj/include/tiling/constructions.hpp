#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tiling/graph.hpp"

namespace tiling {

// The nine buildable graph families.
//
//   E1..E5   four-clique families: a clique X plus complete multipartite
//            structure arranged so the maximum number of disjoint K4s is k.
//   GEN_A    r-clique family with X merged into one class of a balanced
//            complete multipartite graph (subfamily index i in [2, r-1]).
//   GEN_B    r-clique family with X joined to r-i balanced independent
//            classes (subfamily index i in [1, r-1]; i = 1 generalizes E1).
//   GEN_R    r-clique analogue of E5 with offset j in [0, r-1].
//   T3       the three-class family used by the auxiliary edge bound
//            p_bound(h, alpha); parameters (h, alpha, z-split).
enum class Family { E1, E2, E3, E4, E5, GEN_A, GEN_B, GEN_R, T3 };

std::string family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

struct ConstructionSpec {
  Family family = Family::E1;
  long long n = 0;  // vertex count
  long long k = 0;  // target clique-tiling number
  int r = 4;        // clique size; the E1..E5 families require r = 4
  // Offset parameter for E5 (j in {0,1,2,3}) and GEN_R (j in [0, r-1]).
  // For GEN_A / GEN_B this field carries the subfamily index i instead,
  // since those families have no offset.
  int j = 0;
  // Rotates which feasible balanced part assignment is used in families
  // where the part sizes are underdetermined (E5 / GEN_R). 0 = canonical.
  int partition_seed = 0;
};

// A built graph together with its named contiguous vertex blocks.
struct Construction {
  Graph graph;
  std::vector<std::pair<std::string, int>> parts;  // (name, size) in order
};

// Builds the requested family member. Violated validity constraints raise
// std::domain_error naming the constraint.
Construction build_construction(const ConstructionSpec& spec);
Graph build(const ConstructionSpec& spec);

// Exact closed-form edge count for a valid spec; always equals
// build(spec).edge_count().
long long edge_count_formula(const ConstructionSpec& spec);

// True if the spec satisfies every validity constraint of its family.
bool spec_defined(const ConstructionSpec& spec);

// Closed-form edge count of the four-clique families E1..E5 at (n, k)
// without materializing a graph (E5 uses offset j = 0), usable far beyond
// 64 vertices. Requires the family to be defined at (n, k).
long long family_edge_formula(Family f, long long n, long long k);
bool family_defined(Family f, long long n, long long k);

// Piecewise quadratic upper-density function. The five pieces meet at
// k/n = 2/13, 1/6, (4-sqrt 2)/14, (11+sqrt 7)/57 and the domain ends at
// k/n = 1/4.
struct XiValue {
  double value = 0.0;
  int regime = 1;  // 1..5; a breakpoint belongs to the piece on its left
  std::array<double, 5> breakpoints{};  // scaled by n; last entry = n/4
};

// Evaluates the five-piece quadratic at real (n, k). k outside [0, n/4]
// (or n < 0) raises std::domain_error.
XiValue xi(double n, double k);

// Exact symbolic gap between adjacent pieces at each of the four interior
// breakpoints, evaluated at n = 1 in rational + rational*sqrt(m) arithmetic.
// All four are identically zero; any nonzero entry indicates a coefficient
// transcription bug.
std::array<double, 4> xi_breakpoint_gaps();

// Closed interval of k where family E_i is the best of the five, i in 1..5.
struct ExtremalRange {
  double lo = 0.0;
  double hi = 0.0;
};
ExtremalRange extremal_range(int family_index, double n);

// Member of the T3 family: parts X, Y1..Y3, Z1..Z3 with |X| = h - 3*alpha,
// |Yi| = alpha - z[i], |Zi| = z[i]; X is a clique joined to Y1 u Y2 u Y3,
// and the three classes Yi u Zi form a complete tripartite graph.
Graph build_t3(int h, int alpha, const std::array<int, 3>& z_split);

// Two-branch auxiliary edge bound:
//   C(h-3a, 2) + a(2h-3a) + 12h          if 3a <= h < 16a,
//   C(h-3a+9, 2) + (a-3)(2h-3a+9)        if h >= 16a.
// h < 3a raises std::domain_error.
long long p_bound(long long h, long long alpha);

// Quadratic relaxation dominating p_bound: (h-a)^2/2 + a^2 + 23h/2 + 3a/2 + 9.
double p_bound_relaxed(double h, double alpha);

// Minimum-degree threshold k + floor((r-2)(n-k)/(r-1)). Requires r >= 3 and
// n >= r(k+1) >= 0.
long long hs_threshold(long long n, long long k, int r);

// Smallest offset j in {0,1,2,3} for which E5(n, k, j) is defined, or -1.
int default_e5_offset(long long n, long long k);

}  // namespace tiling
