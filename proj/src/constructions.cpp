#include "tiling/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tiling {

std::string family_name(Family f) {
  switch (f) {
    case Family::E1: return "E1";
    case Family::E2: return "E2";
    case Family::E3: return "E3";
    case Family::E4: return "E4";
    case Family::E5: return "E5";
    case Family::GEN_A: return "GEN_A";
    case Family::GEN_B: return "GEN_B";
    case Family::GEN_R: return "GEN_R";
    case Family::T3: return "T3";
  }
  return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
  for (Family f : {Family::E1, Family::E2, Family::E3, Family::E4, Family::E5,
                   Family::GEN_A, Family::GEN_B, Family::GEN_R, Family::T3}) {
    if (name == family_name(f)) return f;
  }
  return std::nullopt;
}

namespace {

long long choose2(long long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

// Sizes floor((total + i - 1) / parts) for i = 1..parts: as equal as
// possible, ascending, extras in the later parts.
std::vector<long long> balanced_split(long long total, int parts) {
  std::vector<long long> out(parts);
  for (int i = 1; i <= parts; ++i) out[i - 1] = (total + i - 1) / parts;
  return out;
}

[[noreturn]] void violated(const std::string& what) {
  throw std::domain_error("construction undefined: " + what);
}

// ---------------------------------------------------------------------------
// Assembly of block graphs: named contiguous vertex blocks, clique edges
// inside chosen blocks, complete multipartite edges between chosen classes
// (each class a union of blocks).
// ---------------------------------------------------------------------------

struct Assembly {
  std::vector<std::pair<std::string, int>> parts;       // (name, size)
  std::vector<std::pair<long long, long long>> ranges;  // [lo, hi) per part

  int add_block(const std::string& name, long long size) {
    if (size < 0) violated("part " + name + " has negative size");
    long long lo = ranges.empty() ? 0 : ranges.back().second;
    ranges.emplace_back(lo, lo + size);
    parts.emplace_back(name, static_cast<int>(size));
    return static_cast<int>(parts.size()) - 1;
  }

  long long total() const { return ranges.empty() ? 0 : ranges.back().second; }

  void add_clique(int block, std::vector<std::pair<int, int>>& edges) const {
    auto [lo, hi] = ranges[block];
    for (long long u = lo; u < hi; ++u) {
      for (long long v = u + 1; v < hi; ++v) {
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
      }
    }
  }

  // Joins every pair of distinct classes completely; a class is a union of
  // blocks, given by block indices.
  void add_multipartite(const std::vector<std::vector<int>>& classes,
                        std::vector<std::pair<int, int>>& edges) const {
    for (std::size_t a = 0; a < classes.size(); ++a) {
      for (std::size_t b = a + 1; b < classes.size(); ++b) {
        for (int ba : classes[a]) {
          for (int bb : classes[b]) {
            auto [alo, ahi] = ranges[ba];
            auto [blo, bhi] = ranges[bb];
            for (long long u = alo; u < ahi; ++u) {
              for (long long v = blo; v < bhi; ++v) {
                edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
              }
            }
          }
        }
      }
    }
  }
};

Construction finish(Assembly& a, std::vector<std::pair<int, int>>& edges) {
  long long n = a.total();
  if (n < 1) violated("graph must have at least one vertex");
  if (n > kMaxVertices) {
    throw std::invalid_argument("construction has " + std::to_string(n) +
                                " vertices; the graph type caps at 64");
  }
  return Construction{Graph::from_edges(static_cast<int>(n), edges),
                      std::move(a.parts)};
}

void check_common(const ConstructionSpec& s) {
  if (s.k < 0) violated("k >= 0");
  if (s.n < static_cast<long long>(s.r) * s.k) {
    violated("n >= r*k (n = " + std::to_string(s.n) +
             ", r*k = " + std::to_string(static_cast<long long>(s.r) * s.k) +
             ")");
  }
}

void check_r4(const ConstructionSpec& s) {
  if (s.r != 4) violated(family_name(s.family) + " requires r = 4");
}

// ---------------------------------------------------------------------------
// Four-clique families
// ---------------------------------------------------------------------------

Construction build_e1(const ConstructionSpec& s) {
  Assembly a;
  std::vector<std::pair<int, int>> edges;
  int x = a.add_block("X", s.k);
  std::vector<long long> y = balanced_split(s.n - s.k, 3);
  std::vector<std::vector<int>> classes{{x}};
  for (int i = 0; i < 3; ++i) {
    classes.push_back({a.add_block("Y" + std::to_string(i + 1), y[i])});
  }
  a.add_clique(x, edges);
  a.add_multipartite(classes, edges);
  return finish(a, edges);
}

Construction build_e2(const ConstructionSpec& s) {
  long long x_size = 2 * s.k + 1;
  long long y3 = (s.n + 2) / 3 - x_size;
  if (y3 < 0) {
    violated("E2 requires k <= (n-1)/6 (|Y3| = floor((n+2)/3) - (2k+1) >= 0)");
  }
  Assembly a;
  std::vector<std::pair<int, int>> edges;
  int x = a.add_block("X", x_size);
  int b1 = a.add_block("Y1", s.n / 3);
  int b2 = a.add_block("Y2", (s.n + 1) / 3);
  int b3 = a.add_block("Y3", y3);
  a.add_clique(x, edges);
  a.add_multipartite({{b1}, {b2}, {x, b3}}, edges);
  return finish(a, edges);
}

Construction build_e3(const ConstructionSpec& s) {
  long long x_size = 2 * s.k + 1;
  long long rest = s.n - x_size;
  if (rest < 0) violated("E3 requires n >= 2k+1");
  Assembly a;
  std::vector<std::pair<int, int>> edges;
  int x = a.add_block("X", x_size);
  int y1 = a.add_block("Y1", rest / 2);
  int y2 = a.add_block("Y2", rest - rest / 2);
  a.add_clique(x, edges);
  a.add_multipartite({{x}, {y1}, {y2}}, edges);
  return finish(a, edges);
}

Construction build_e4(const ConstructionSpec& s) {
  long long x_size = 3 * s.k + 2;
  if (s.n < x_size) violated("E4 requires n >= 3k+2");
  Assembly a;
  std::vector<std::pair<int, int>> edges;
  int x = a.add_block("X", x_size);
  int y1 = a.add_block("Y1", s.n - x_size);
  a.add_clique(x, edges);
  a.add_multipartite({{x}, {y1}}, edges);
  return finish(a, edges);
}

// Pair-class targets |Yi u Zi| for the E5 / GEN_R families: a balanced
// ascending split of (r-1)*m + j where m is the Z-total.
std::vector<long long> pair_targets(long long m, int j, int classes) {
  std::vector<long long> p(classes);
  for (int i = 1; i <= classes; ++i) p[i - 1] = m + (j + i - 1) / classes;
  return p;
}

// Chooses the Y part sizes: a balanced split of y_total assigned to the
// classes so that every z_i = p_i - y_i is nonnegative. Among feasible
// assignments (permutations of the balanced multiset, lexicographic order),
// partition_seed selects one; the ascending assignment is checked first so
// seed 0 is canonical whenever it is feasible.
std::vector<long long> assign_y_sizes(long long y_total,
                                      const std::vector<long long>& p,
                                      int seed) {
  int q = static_cast<int>(p.size());
  std::vector<long long> base = balanced_split(y_total, q);
  auto feasible = [&](const std::vector<long long>& y) {
    for (int i = 0; i < q; ++i) {
      if (y[i] > p[i]) return false;
    }
    return true;
  };
  if (q > 9) {
    // Too many permutations to enumerate; ascending-to-ascending is the
    // canonical assignment and is feasible whenever any assignment is.
    if (!feasible(base)) violated("no nonnegative Z part sizes exist");
    return base;
  }
  std::vector<std::vector<long long>> options;
  std::vector<long long> perm = base;  // sorted ascending already
  do {
    if (feasible(perm)) options.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (options.empty()) violated("no nonnegative Z part sizes exist");
  return options[static_cast<std::size_t>(seed) % options.size()];
}

// Shared shape of E5 (r = 4) and its general-r analogue: clique X joined to
// all of Y1..Y_{r-1}, and classes Y_i u Z_i forming a complete
// (r-1)-partite graph. Block order: X, Y1.., Z1..
Construction build_er(const ConstructionSpec& s) {
  int r = s.r;
  if (s.j < 0 || s.j >= r) {
    violated(family_name(s.family) + " offset j must lie in [0, r-1]");
  }
  long long m = s.n - static_cast<long long>(r) * s.k - (r - 1);
  if (m < 0) violated("requires n >= r*k + r - 1 (Z-total nonnegative)");
  long long y_total = (r - 2) * m + s.j;
  long long x_size = static_cast<long long>(r) * s.k + (r - 1) - y_total;
  if (x_size < 0) {
    violated("requires (r-2)*(n - r*k - r + 1) + j <= r*k + r - 1 "
             "(|X| >= 0; got |X| = " + std::to_string(x_size) + ")");
  }
  std::vector<long long> p = pair_targets(m, s.j, r - 1);
  std::vector<long long> y = assign_y_sizes(y_total, p, s.partition_seed);

  Assembly a;
  std::vector<std::pair<int, int>> edges;
  int x = a.add_block("X", x_size);
  std::vector<int> y_blocks, z_blocks;
  for (int i = 0; i < r - 1; ++i) {
    y_blocks.push_back(a.add_block("Y" + std::to_string(i + 1), y[i]));
  }
  for (int i = 0; i < r - 1; ++i) {
    z_blocks.push_back(
        a.add_block("Z" + std::to_string(i + 1), p[i] - y[i]));
  }
  a.add_clique(x, edges);
  // X joined to every Y vertex (not to Z).
  std::vector<std::vector<int>> x_join{{x}, y_blocks};
  a.add_multipartite(x_join, edges);
  std::vector<std::vector<int>> classes;
  for (int i = 0; i < r - 1; ++i) {
    classes.push_back({y_blocks[i], z_blocks[i]});
  }
  a.add_multipartite(classes, edges);
  return finish(a, edges);
}

Construction build_e5(const ConstructionSpec& s) {
  if (s.j < 0 || s.j > 3) violated("E5 offset j must lie in {0,1,2,3}");
  ConstructionSpec t = s;
  t.r = 4;
  Construction c = build_er(t);
  // Keep the four-clique naming: the three Z blocks are reported as Y4..Y6
  // (classes (Y1 u Y6), (Y2 u Y4), (Y3 u Y5) in that historical order were
  // arbitrary; here class i is Y_i u Z_i and Z_i is labeled Y_{i+3}).
  for (int i = 0; i < 3; ++i) c.parts[4 + i].first = "Y" + std::to_string(i + 4);
  return c;
}

// ---------------------------------------------------------------------------
// General-r families with a single clique block
// ---------------------------------------------------------------------------

Construction build_gen_b(const ConstructionSpec& s) {
  int i = s.j;
  if (i < 1 || i > s.r - 1) violated("GEN_B subfamily index must be in [1, r-1]");
  long long x_size = static_cast<long long>(i) * s.k + i - 1;
  if (x_size > s.n) violated("GEN_B requires i*k + i - 1 <= n");
  Assembly a;
  std::vector<std::pair<int, int>> edges;
  int x = a.add_block("X", x_size);
  std::vector<long long> y = balanced_split(s.n - x_size, s.r - i);
  std::vector<std::vector<int>> classes{{x}};
  for (int t = 0; t < s.r - i; ++t) {
    classes.push_back({a.add_block("Y" + std::to_string(t + 1), y[t])});
  }
  a.add_clique(x, edges);
  a.add_multipartite(classes, edges);
  return finish(a, edges);
}

Construction build_gen_a(const ConstructionSpec& s) {
  int i = s.j;
  if (i < 2 || i > s.r - 1) violated("GEN_A subfamily index must be in [2, r-1]");
  int q = s.r + 1 - i;  // class count of the balanced multipartite graph
  long long x_size = static_cast<long long>(i) * s.k + i - 1;
  std::vector<long long> sizes = balanced_split(s.n, q);
  long long merged = sizes.back();  // largest class hosts X
  if (merged < x_size) {
    violated("GEN_A requires k <= (ceil(n/(r+1-i)) - i + 1)/i (X fits in a "
             "largest class)");
  }
  Assembly a;
  std::vector<std::pair<int, int>> edges;
  int x = a.add_block("X", x_size);
  std::vector<std::vector<int>> classes;
  for (int t = 0; t < q - 1; ++t) {
    classes.push_back({a.add_block("Y" + std::to_string(t + 1), sizes[t])});
  }
  int y_last = a.add_block("Y" + std::to_string(q), merged - x_size);
  classes.push_back({x, y_last});
  a.add_clique(x, edges);
  a.add_multipartite(classes, edges);
  return finish(a, edges);
}

Construction build_t3_spec(const ConstructionSpec& s) {
  // For the T3 family, (n, k, j) carry (h, alpha, unused).
  if (s.n < 3 * s.k) violated("T3 requires h >= 3*alpha");
  std::array<int, 3> z{};
  // Canonical z-split of alpha, balanced ascending.
  std::vector<long long> zs = balanced_split(s.k, 3);
  for (int i = 0; i < 3; ++i) z[i] = static_cast<int>(zs[i]);
  return Construction{build_t3(static_cast<int>(s.n), static_cast<int>(s.k), z),
                      {{"X", static_cast<int>(s.n - 3 * s.k)},
                       {"Y1", static_cast<int>(s.k - z[0])},
                       {"Y2", static_cast<int>(s.k - z[1])},
                       {"Y3", static_cast<int>(s.k - z[2])},
                       {"Z1", z[0]},
                       {"Z2", z[1]},
                       {"Z3", z[2]}}};
}

}  // namespace

Construction build_construction(const ConstructionSpec& spec) {
  if (spec.family == Family::T3) {
    if (spec.k < 0) violated("alpha >= 0");
    return build_t3_spec(spec);
  }
  check_common(spec);
  switch (spec.family) {
    case Family::E1: check_r4(spec); return build_e1(spec);
    case Family::E2: check_r4(spec); return build_e2(spec);
    case Family::E3: check_r4(spec); return build_e3(spec);
    case Family::E4: check_r4(spec); return build_e4(spec);
    case Family::E5: check_r4(spec); return build_e5(spec);
    case Family::GEN_A:
      if (spec.r < 3) violated("GEN_A requires r >= 3");
      return build_gen_a(spec);
    case Family::GEN_B:
      if (spec.r < 3) violated("GEN_B requires r >= 3");
      return build_gen_b(spec);
    case Family::GEN_R:
      if (spec.r < 3) violated("GEN_R requires r >= 3");
      return build_er(spec);
    case Family::T3: break;
  }
  violated("unknown family");
}

Graph build(const ConstructionSpec& spec) {
  return build_construction(spec).graph;
}

bool spec_defined(const ConstructionSpec& spec) {
  ConstructionSpec probe = spec;
  if (probe.n < 1 || probe.n > kMaxVertices) return false;
  try {
    build_construction(probe);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

long long edge_count_formula(const ConstructionSpec& spec) {
  long long n = spec.n, k = spec.k;
  switch (spec.family) {
    case Family::E1:
      check_common(spec);
      return choose2(k) + k * (n - k) + (n - k) * (n - k) / 3;
    case Family::E2: {
      check_common(spec);
      if ((n + 2) / 3 < 2 * k + 1) violated("E2 requires k <= (n-1)/6");
      return choose2(2 * k + 1) + n * n / 3;
    }
    case Family::E3: {
      check_common(spec);
      long long rest = n - 2 * k - 1;
      if (rest < 0) violated("E3 requires n >= 2k+1");
      return choose2(2 * k + 1) + (2 * k + 1) * rest + rest * rest / 4;
    }
    case Family::E4: {
      check_common(spec);
      if (n < 3 * k + 2) violated("E4 requires n >= 3k+2");
      return choose2(3 * k + 2) + (3 * k + 2) * (n - 3 * k - 2);
    }
    case Family::E5:
    case Family::GEN_R: {
      check_common(spec);
      int r = spec.family == Family::E5 ? 4 : spec.r;
      long long m = n - static_cast<long long>(r) * k - (r - 1);
      if (m < 0) violated("requires n >= r*k + r - 1");
      long long y_total = (r - 2) * m + spec.j;
      long long x_size = static_cast<long long>(r) * k + (r - 1) - y_total;
      if (x_size < 0) violated("requires |X| >= 0");
      std::vector<long long> p = pair_targets(m, spec.j, r - 1);
      long long cross = 0;
      for (std::size_t a = 0; a < p.size(); ++a) {
        for (std::size_t b = a + 1; b < p.size(); ++b) cross += p[a] * p[b];
      }
      return choose2(x_size) + x_size * y_total + cross;
    }
    case Family::GEN_B: {
      check_common(spec);
      int i = spec.j;
      if (i < 1 || i > spec.r - 1) violated("GEN_B index in [1, r-1]");
      long long x_size = static_cast<long long>(i) * k + i - 1;
      if (x_size > n) violated("GEN_B requires i*k + i - 1 <= n");
      std::vector<long long> y = balanced_split(n - x_size, spec.r - i);
      long long sq = 0;
      for (long long v : y) sq += v * v;
      long long rest = n - x_size;
      return choose2(x_size) + x_size * rest + (rest * rest - sq) / 2;
    }
    case Family::GEN_A: {
      check_common(spec);
      int i = spec.j;
      if (i < 2 || i > spec.r - 1) violated("GEN_A index in [2, r-1]");
      int q = spec.r + 1 - i;
      long long x_size = static_cast<long long>(i) * k + i - 1;
      std::vector<long long> sizes = balanced_split(n, q);
      if (sizes.back() < x_size) violated("GEN_A requires X to fit");
      long long sq = 0;
      for (long long v : sizes) sq += v * v;
      return choose2(x_size) + (n * n - sq) / 2;
    }
    case Family::T3: {
      long long h = n, alpha = k;
      if (h < 3 * alpha || alpha < 0) violated("T3 requires h >= 3*alpha >= 0");
      // Clique on h - 3a vertices joined to the 2a Y-vertices, plus a
      // complete tripartite graph whose classes Y_i u Z_i all have size a.
      return choose2(h - 3 * alpha) + (h - 3 * alpha) * 2 * alpha +
             3 * alpha * alpha;
    }
  }
  violated("unknown family");
}

bool family_defined(Family f, long long n, long long k) {
  if (n < 1 || k < 0 || n < 4 * k) return false;
  switch (f) {
    case Family::E1: return true;
    case Family::E2: return 6 * k + 1 <= n;
    case Family::E3: return true;
    case Family::E4: return 3 * k + 2 <= n;
    case Family::E5: return n >= 4 * k + 3 && 12 * k - 2 * n + 9 >= 0;
    default: return false;
  }
}

long long family_edge_formula(Family f, long long n, long long k) {
  if (!family_defined(f, n, k)) {
    violated(family_name(f) + " undefined at (n, k) = (" + std::to_string(n) +
             ", " + std::to_string(k) + ")");
  }
  switch (f) {
    case Family::E1:
      return choose2(k) + k * (n - k) + (n - k) * (n - k) / 3;
    case Family::E2:
      return choose2(2 * k + 1) + n * n / 3;
    case Family::E3: {
      long long rest = n - 2 * k - 1;
      return choose2(2 * k + 1) + (2 * k + 1) * rest + rest * rest / 4;
    }
    case Family::E4:
      return choose2(3 * k + 2) + (3 * k + 2) * (n - 3 * k - 2);
    case Family::E5: {
      long long s = 12 * k - 2 * n + 9;
      long long m = n - 4 * k - 3;
      return choose2(s) + s * 2 * m + 3 * m * m;
    }
    default: violated("family_edge_formula covers E1..E5 only");
  }
}

// ---------------------------------------------------------------------------
// The five-piece quadratic and its exact breakpoint identities
// ---------------------------------------------------------------------------

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kSqrt7 = 2.6457513110645907;

std::array<double, 5> xi_breaks(double n) {
  return {2 * n / 13, n / 6, (4 - kSqrt2) * n / 14, (11 + kSqrt7) * n / 57,
          n / 4};
}

double xi_piece(int regime, double n, double k) {
  switch (regime) {
    case 1: return n * n / 3 + k * n / 3 - k * k / 6;
    case 2: return n * n / 3 + 2 * k * k;
    case 3: return n * n / 4 + k * n - k * k;
    case 4: return 3 * k * n - 4.5 * k * k;
    default: return n * n - 8 * k * n + 24 * k * k;
  }
}

// Exact arithmetic in Q or Q(sqrt m): value a + b*sqrt(m).
struct Rat {
  long long p = 0, q = 1;
  static Rat of(long long p, long long q) {
    long long g = std::gcd(p < 0 ? -p : p, q < 0 ? -q : q);
    if (g == 0) return {0, 1};
    if (q < 0) { p = -p; q = -q; }
    return {p / g, q / g};
  }
  Rat operator+(Rat o) const { return of(p * o.q + o.p * q, q * o.q); }
  Rat operator-(Rat o) const { return of(p * o.q - o.p * q, q * o.q); }
  Rat operator*(Rat o) const { return of(p * o.p, q * o.q); }
  bool zero() const { return p == 0; }
  double value() const { return static_cast<double>(p) / static_cast<double>(q); }
};

struct QuadExt {
  Rat a, b;     // a + b*sqrt(m)
  long long m;  // 0 means purely rational
  double value() const {
    return a.value() + (m == 0 ? 0.0 : b.value() * std::sqrt(static_cast<double>(m)));
  }
};

// Evaluates c0 + c1*k + c2*k^2 at k = a + b*sqrt(m).
QuadExt eval_quadratic(Rat c0, Rat c1, Rat c2, QuadExt k) {
  Rat k2_rat = k.a * k.a + k.b * k.b * Rat::of(k.m, 1);
  Rat k2_irr = Rat::of(2, 1) * k.a * k.b;
  Rat ra = c0 + c1 * k.a + c2 * k2_rat;
  Rat rb = c1 * k.b + c2 * k2_irr;
  return {ra, rb, k.m};
}

}  // namespace

XiValue xi(double n, double k) {
  if (n < 0 || k < 0 || k > n / 4) {
    throw std::domain_error("xi requires 0 <= k <= n/4");
  }
  XiValue out;
  out.breakpoints = xi_breaks(n);
  out.regime = 5;
  for (int r = 1; r <= 4; ++r) {
    if (k <= out.breakpoints[r - 1]) {
      out.regime = r;
      break;
    }
  }
  out.value = xi_piece(out.regime, n, k);
  return out;
}

std::array<double, 4> xi_breakpoint_gaps() {
  // Piece coefficients (c0, c1, c2) at n = 1.
  const Rat C[5][3] = {
      {Rat::of(1, 3), Rat::of(1, 3), Rat::of(-1, 6)},
      {Rat::of(1, 3), Rat::of(0, 1), Rat::of(2, 1)},
      {Rat::of(1, 4), Rat::of(1, 1), Rat::of(-1, 1)},
      {Rat::of(0, 1), Rat::of(3, 1), Rat::of(-9, 2)},
      {Rat::of(1, 1), Rat::of(-8, 1), Rat::of(24, 1)},
  };
  const QuadExt breaks[4] = {
      {Rat::of(2, 13), Rat::of(0, 1), 0},
      {Rat::of(1, 6), Rat::of(0, 1), 0},
      {Rat::of(4, 14), Rat::of(-1, 14), 2},
      {Rat::of(11, 57), Rat::of(1, 57), 7},
  };
  std::array<double, 4> gaps{};
  for (int i = 0; i < 4; ++i) {
    QuadExt left = eval_quadratic(C[i][0], C[i][1], C[i][2], breaks[i]);
    QuadExt right = eval_quadratic(C[i + 1][0], C[i + 1][1], C[i + 1][2],
                                   breaks[i]);
    Rat da = left.a - right.a;
    Rat db = left.b - right.b;
    gaps[i] = QuadExt{da, db, breaks[i].m}.value();
    if (gaps[i] < 0) gaps[i] = -gaps[i];
  }
  return gaps;
}

ExtremalRange extremal_range(int family_index, double n) {
  auto sqrt_checked = [](double v) {
    if (v < 0) throw std::domain_error("extremal range undefined: n too small");
    return std::sqrt(v);
  };
  double lo = 0, hi = 0;
  switch (family_index) {
    case 1:
      lo = 0;
      hi = (2 * n - 9) / 13;
      break;
    case 2:
      lo = (2 * n - 9) / 13;
      hi = (n - 1) / 6;
      break;
    case 3:
      lo = (n - 1) / 6;
      hi = (4 * n - 11 - sqrt_checked(2 * n * n - 4 * n - 5)) / 14;
      break;
    case 4:
      lo = (4 * n - 11 - sqrt_checked(2 * n * n - 4 * n - 5)) / 14;
      hi = (22 * n - 75 + sqrt_checked(28 * n * n - 108 * n + 153)) / 114;
      break;
    case 5:
      lo = (22 * n - 75 + sqrt_checked(28 * n * n - 108 * n + 153)) / 114;
      hi = (n - 3) / 4;
      break;
    default:
      throw std::invalid_argument("family index must be in [1, 5]");
  }
  return {lo, hi};
}

Graph build_t3(int h, int alpha, const std::array<int, 3>& z_split) {
  if (alpha < 0 || h < 3 * alpha) {
    throw std::domain_error("T3 requires h >= 3*alpha >= 0");
  }
  long long z_sum = 0;
  for (int z : z_split) {
    if (z < 0) throw std::domain_error("T3 z-split entries must be >= 0");
    z_sum += z;
  }
  if (z_sum != alpha) {
    throw std::domain_error("T3 z-split must sum to alpha");
  }
  if (h < 1 || h > kMaxVertices) {
    throw std::invalid_argument("T3 vertex count must be in [1, 64]");
  }
  Assembly a;
  std::vector<std::pair<int, int>> edges;
  int x = a.add_block("X", h - 3 * alpha);
  std::vector<int> y_blocks, z_blocks;
  for (int i = 0; i < 3; ++i) {
    y_blocks.push_back(
        a.add_block("Y" + std::to_string(i + 1), alpha - z_split[i]));
  }
  for (int i = 0; i < 3; ++i) {
    z_blocks.push_back(a.add_block("Z" + std::to_string(i + 1), z_split[i]));
  }
  a.add_clique(x, edges);
  a.add_multipartite({{x}, y_blocks}, edges);
  a.add_multipartite({{y_blocks[0], z_blocks[0]},
                      {y_blocks[1], z_blocks[1]},
                      {y_blocks[2], z_blocks[2]}},
                     edges);
  return finish(a, edges).graph;
}

long long p_bound(long long h, long long alpha) {
  if (alpha < 0 || h < 3 * alpha) {
    throw std::domain_error("p_bound requires h >= 3*alpha >= 0");
  }
  if (h < 16 * alpha) {
    return choose2(h - 3 * alpha) + alpha * (2 * h - 3 * alpha) + 12 * h;
  }
  return choose2(h - 3 * alpha + 9) + (alpha - 3) * (2 * h - 3 * alpha + 9);
}

double p_bound_relaxed(double h, double alpha) {
  return (h - alpha) * (h - alpha) / 2 + alpha * alpha + 23 * h / 2 +
         3 * alpha / 2 + 9;
}

long long hs_threshold(long long n, long long k, int r) {
  if (r < 3) throw std::invalid_argument("hs_threshold requires r >= 3");
  if (k < 0 || n < static_cast<long long>(r) * (k + 1)) {
    throw std::invalid_argument("hs_threshold requires n >= r(k+1) >= 0");
  }
  return k + (static_cast<long long>(r - 2) * (n - k)) / (r - 1);
}

int default_e5_offset(long long n, long long k) {
  for (int j = 0; j < 4; ++j) {
    ConstructionSpec s{Family::E5, n, k, 4, j, 0};
    if (n >= 1 && n <= kMaxVertices && [&] {
          try {
            build_construction(s);
            return true;
          } catch (const std::domain_error&) {
            return false;
          }
        }()) {
      return j;
    }
  }
  return -1;
}

}  // namespace tiling
