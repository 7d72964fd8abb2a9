#include "tiling/opt.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "tiling/constructions.hpp"
#include "tiling/graph.hpp"

namespace tiling {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sq(double v) { return v * v; }

}  // namespace

const char* phi_kind_name(PhiKind which) {
  switch (which) {
    case PhiKind::PHI: return "PHI";
    case PhiKind::PHI1: return "PHI1";
    case PhiKind::PHI21: return "PHI21";
    case PhiKind::PHI22: return "PHI22";
    case PhiKind::PHI23: return "PHI23";
    case PhiKind::PHI31: return "PHI31";
    case PhiKind::PHI32: return "PHI32";
    case PhiKind::PHI33: return "PHI33";
    case PhiKind::PHI41: return "PHI41";
    case PhiKind::PHI42: return "PHI42";
    case PhiKind::PHI43: return "PHI43";
    case PhiKind::PHI51: return "PHI51";
    case PhiKind::PHI52: return "PHI52";
    case PhiKind::PHI53: return "PHI53";
    case PhiKind::PHI6: return "PHI6";
    case PhiKind::PHI61: return "PHI61";
    case PhiKind::PHI62: return "PHI62";
  }
  return "?";
}

double psi(double b, double c, double d) {
  return 3 * b * b + 4 * b * c + 2 * b * d + c * c + c * d;
}

double psi_identity_form(double b, double c, double d) {
  return sq(3 * b + 2 * c + d) / 3 - (c * c + c * d + d * d) / 3;
}

// ---------------------------------------------------------------------------
// Piecewise envelopes g_alpha, h_alpha, ghat
// ---------------------------------------------------------------------------

namespace {

void check_xy(double x, double y) {
  if (x < -1e-12 || y < -1e-12) {
    throw std::invalid_argument("piecewise envelope arguments must be >= 0");
  }
}

double g_alpha(double x, double y, double alpha) {
  if (2 * alpha * x <= y) return 7 * alpha * x * x + 7 * x * y;
  return 7.5 * alpha * x * x + 6.5 * x * y + y * y / (8 * alpha);
}

double h_alpha(double x, double y, double alpha) {
  if (2 * alpha * x <= y) return 7 * alpha * x * x + 5 * x * y;
  return 7.5 * alpha * x * x + 4.5 * x * y + y * y / (8 * alpha);
}

double g_hat(double x, double y) {
  if (5 * x <= 6 * y) return 21 * x * x / 4 + 7 * x * y;
  if (x <= (86 - 4 * kSqrt210) * y / 15) {
    return 45 * x * x / 8 + 61 * x * y / 10 + 27 * y * y / 50;
  }
  if (15 * x <= 56 * y) {
    return 28 * x * x / 5 + 479 * x * y / 75 + 103 * y * y / 1125;
  }
  if (5 * x <= 38 * y) {
    return 651 * x * x / 116 + 913 * x * y / 145 + 113 * y * y / 435;
  }
  return 45 * x * x / 8 + 61 * x * y / 10 + 151 * y * y / 150;
}

}  // namespace

double g_h_ghat(double x, double y, double alpha, GHKind which) {
  if (!(alpha > 0 && alpha < 1)) {
    throw std::invalid_argument("alpha must lie strictly inside (0, 1)");
  }
  check_xy(x, y);
  x = std::max(x, 0.0);
  y = std::max(y, 0.0);
  switch (which) {
    case GHKind::G_ALPHA: return g_alpha(x, y, alpha);
    case GHKind::H_ALPHA: return h_alpha(x, y, alpha);
    case GHKind::G_HAT: return g_hat(x, y);
  }
  throw std::invalid_argument("unknown envelope kind");
}

namespace {

// Resolves the d-versus-(b+c)/2 side, honoring an asserted branch.
bool low_side(double b, double c, double d, DBranch branch) {
  double scale = std::max({1.0, b, c, d});
  bool low = d <= (b + c) / 2;
  if (branch == DBranch::LOW && d > (b + c) / 2 + 1e-12 * scale) {
    throw std::invalid_argument("branch LOW inconsistent: d > (b+c)/2");
  }
  if (branch == DBranch::HIGH && d < (b + c) / 2 - 1e-12 * scale) {
    throw std::invalid_argument("branch HIGH inconsistent: d < (b+c)/2");
  }
  if (branch == DBranch::AUTO) return low;
  return branch == DBranch::LOW;
}

}  // namespace

double phi_hat(double a4, double b, double c, double d, DBranch branch) {
  check_xy(a4, b);
  check_xy(c, d);
  if (low_side(b, c, d, branch)) {
    return g_alpha(a4, b, 0.5) + h_alpha(a4, c, 0.5);
  }
  return g_hat(a4, b) + h_alpha(a4, c, 0.25);
}

double phi_small(double a4, double b, double c, double d, DBranch branch) {
  return phi_hat(a4, b, c, d, branch) - 7.5 * a4 * a4 - (7 * b + 5 * c) * a4;
}

// ---------------------------------------------------------------------------
// The Phi family
// ---------------------------------------------------------------------------

namespace {

void check_point(const OmegaPoint& p) {
  for (double v : {p.a1, p.a2, p.a3, p.a4, p.a5, p.a6, p.b, p.c, p.d, p.n}) {
    if (v < -1e-12 * std::max(1.0, p.n)) {
      throw std::invalid_argument("profile coordinates must be nonnegative");
    }
  }
  double asum = p.a1 + p.a2 + p.a3 + p.a4 + p.a5 + p.a6;
  double scale = std::max(1.0, p.n);
  if (std::abs(asum - p.k) > 1e-9 * scale) {
    throw std::invalid_argument("profile invariant a1+...+a6 = k violated");
  }
  if (std::abs(4 * p.k + 3 * p.b + 2 * p.c + p.d - p.n) > 1e-9 * scale) {
    throw std::invalid_argument("profile invariant 4k+3b+2c+d = n violated");
  }
}

double phi_base(const OmegaPoint& p) {
  return 6.5 * p.a1 * p.a1 + 13 * p.a1 * (p.a2 + p.a3 + p.a4 + p.a5 + p.a6) +
         7 * p.a2 * p.a2 + 14 * p.a2 * (p.a3 + p.a4 + p.a5 + p.a6) +
         7 * p.a3 * p.a3 + 15 * p.a3 * (p.a4 + p.a5 + p.a6) +
         7.5 * p.a4 * p.a4 + 15 * p.a4 * (p.a5 + p.a6) + 7.5 * p.a5 * p.a5 +
         15 * p.a5 * p.a6 + 8 * p.a6 * p.a6 +
         (9 * p.b + 6 * p.c + 3 * p.d) * p.a1 +
         (8 * p.b + 6 * p.c + 3 * p.d) * p.a2 +
         (8 * p.b + 5 * p.c + 3 * p.d) * p.a3 +
         (7 * p.b + 5 * p.c + 3 * p.d) * p.a4 +
         (7 * p.b + 5 * p.c + 2 * p.d) * p.a5 +
         (7 * p.b + 5 * p.c + 2 * p.d) * p.a6;
}

}  // namespace

double phi_family(const OmegaPoint& p, PhiKind which, DBranch branch) {
  check_point(p);
  double base = phi_base(p);
  double one = base + psi(p.b, p.c, p.d);
  auto second = [&](int i) {
    switch (i) {
      case 1: return one - p.a6 * p.a6 / 2;
      case 2: return one - (p.b + p.c) * p.a6 / 2;
      default:
        return base - (7 * p.b + 5 * p.c + 2 * p.d) * p.a6 +
               sq(3 * p.b + 2 * p.c + p.d);
    }
  };
  auto shift4 = [&] {
    return -(p.b + p.c) * p.a4 / 2 + (p.b * p.b + p.c * p.c) / 4;
  };
  auto shift5 = [&] {
    return -9 * p.b * p.a4 / 10 - p.c * p.a4 / 2 + 151 * p.b * p.b / 150 +
           p.c * p.c / 2;
  };
  switch (which) {
    case PhiKind::PHI: return base;
    case PhiKind::PHI1: return one;
    case PhiKind::PHI21: return second(1);
    case PhiKind::PHI22: return second(2);
    case PhiKind::PHI23: return second(3);
    case PhiKind::PHI31:
      return second(1) + phi_small(p.a4, p.b, p.c, p.d, branch);
    case PhiKind::PHI32:
      return second(2) + phi_small(p.a4, p.b, p.c, p.d, branch);
    case PhiKind::PHI33:
      return second(3) + phi_small(p.a4, p.b, p.c, p.d, branch);
    case PhiKind::PHI41: return second(1) + shift4();
    case PhiKind::PHI42: return second(2) + shift4();
    case PhiKind::PHI43: return second(3) + shift4();
    case PhiKind::PHI51: return second(1) + shift5();
    case PhiKind::PHI52: return second(2) + shift5();
    case PhiKind::PHI53: return second(3) + shift5();
    case PhiKind::PHI6:
      return one + phi_small(p.a4, p.b, p.c, p.d, branch);
    case PhiKind::PHI61: return one + shift4();
    case PhiKind::PHI62: return one + shift5();
  }
  throw std::invalid_argument("unknown Phi kind");
}

// ---------------------------------------------------------------------------
// The nine-variable quadratic and its simplex envelope
// ---------------------------------------------------------------------------

double eta(double b, const std::array<double, 9>& x) {
  auto X = [&](int i) { return x[i - 2]; };
  double tail = X(6) + X(7) + X(8) + X(9) + X(10);
  double v = -3 * sq(X(2)) / 112 - 3 * sq(X(3)) / 56 - 3 * sq(X(4)) / 32 -
             sq(X(5)) / 8 - 0.375 * sq(tail) -
             0.75 * ((X(2) + X(3) + X(4) + X(5)) * X(10) +
                     (X(3) + X(4) + X(5)) * X(9) + (X(4) + X(5)) * X(8) +
                     X(5) * X(7));
  for (int i = 2; i <= 10; ++i) v += (i - 1) * b * X(i) / 10;
  return v;
}

double eta_bound(double gamma, double b) {
  if (gamma < 0 || b < 0) {
    throw std::invalid_argument("eta_bound requires gamma, b >= 0");
  }
  if (5 * gamma <= 6 * b) return -3 * gamma * gamma / 8 + 9 * b * gamma / 10;
  if (gamma <= (86 - 4 * kSqrt210) * b / 15) return 27 * b * b / 50;
  if (15 * gamma <= 56 * b) {
    return -gamma * gamma / 40 + 43 * b * gamma / 150 + 103 * b * b / 1125;
  }
  if (5 * gamma <= 38 * b) {
    return -3 * gamma * gamma / 232 + 57 * b * gamma / 290 +
           113 * b * b / 435;
  }
  return 151 * b * b / 150;
}

double prop_a2_bound(double gamma, double b) {
  if (gamma < 0 || b < 0) {
    throw std::invalid_argument("prop_a2_bound requires gamma, b >= 0");
  }
  if (15 * gamma <= 14 * b) {
    return -3 * gamma * gamma / 8 + 4 * b * gamma / 5 - 13 * b * b / 25;
  }
  if (15 * gamma <= 44 * b) {
    return -gamma * gamma / 40 + 11 * b * gamma / 75 - 242 * b * b / 1125;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Exact and search-based maximization helpers for eta
// ---------------------------------------------------------------------------

namespace {

struct EtaForm {
  std::array<std::array<double, 9>, 9> A{};  // eta quadratic = x^T A x
  std::array<double, 9> g{};                 // linear part

  explicit EtaForm(double b) {
    const double diag[9] = {-3.0 / 112, -3.0 / 56, -3.0 / 32, -1.0 / 8,
                            -3.0 / 8,   -3.0 / 8,  -3.0 / 8,  -3.0 / 8,
                            -3.0 / 8};
    for (int i = 0; i < 9; ++i) {
      A[i][i] = diag[i];
      g[i] = (i + 1) * b / 10;
    }
    for (int i = 0; i < 9; ++i) {
      for (int j = i + 1; j < 9; ++j) {
        int u = i + 2, v = j + 2;
        bool interact = (u >= 6 && v >= 6) || (u <= 5 && v >= 12 - u);
        if (interact) A[i][j] = A[j][i] = -3.0 / 8;
      }
    }
  }

  double value(const std::array<double, 9>& x) const {
    double v = 0;
    for (int i = 0; i < 9; ++i) {
      v += g[i] * x[i] + A[i][i] * x[i] * x[i];
      for (int j = i + 1; j < 9; ++j) v += 2 * A[i][j] * x[i] * x[j];
    }
    return v;
  }
};

// Gaussian elimination with partial pivoting; false if near-singular.
bool solve_linear(std::vector<std::vector<double>> m, std::vector<double> rhs,
                  std::vector<double>& out) {
  int n = static_cast<int>(rhs.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int row = col + 1; row < n; ++row) {
      if (std::abs(m[row][col]) > std::abs(m[piv][col])) piv = row;
    }
    if (std::abs(m[piv][col]) < 1e-12) return false;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (int row = col + 1; row < n; ++row) {
      double f = m[row][col] / m[col][col];
      for (int cc = col; cc < n; ++cc) m[row][cc] -= f * m[col][cc];
      rhs[row] -= f * rhs[col];
    }
  }
  out.assign(n, 0.0);
  for (int row = n - 1; row >= 0; --row) {
    double v = rhs[row];
    for (int cc = row + 1; cc < n; ++cc) v -= m[row][cc] * out[cc];
    out[row] = v / m[row][row];
  }
  return true;
}

// Stationary point of eta restricted to the free coordinates, optionally on
// the budget face sum = gamma. Returns feasible candidates only.
bool stationary_candidate(const EtaForm& form, const std::vector<int>& free,
                          bool budget_active, double gamma,
                          std::array<double, 9>& out) {
  int f = static_cast<int>(free.size());
  int dim = f + (budget_active ? 1 : 0);
  std::vector<std::vector<double>> m(dim, std::vector<double>(dim, 0.0));
  std::vector<double> rhs(dim, 0.0);
  for (int i = 0; i < f; ++i) {
    for (int j = 0; j < f; ++j) m[i][j] = 2 * form.A[free[i]][free[j]];
    if (budget_active) m[i][f] = -1;
    rhs[i] = -form.g[free[i]];
  }
  if (budget_active) {
    for (int j = 0; j < f; ++j) m[f][j] = 1;
    rhs[f] = gamma;
  }
  std::vector<double> sol;
  if (!solve_linear(m, rhs, sol)) return false;
  out.fill(0.0);
  double total = 0;
  for (int i = 0; i < f; ++i) {
    if (sol[i] < -1e-10) return false;
    out[free[i]] = std::max(sol[i], 0.0);
    total += out[free[i]];
  }
  return total <= gamma + 1e-9 * std::max(1.0, gamma);
}

// One-coordinate-at-a-time exact maximization under the budget.
double coordinate_ascend(const EtaForm& form, double gamma,
                         std::array<double, 9>& x) {
  for (int pass = 0; pass < 300; ++pass) {
    double moved = 0;
    double total = 0;
    for (double v : x) total += v;
    for (int i = 0; i < 9; ++i) {
      double lin = form.g[i];
      for (int j = 0; j < 9; ++j) {
        if (j != i) lin += 2 * form.A[i][j] * x[j];
      }
      double best = -lin / (2 * form.A[i][i]);  // diagonal is negative
      double cap = gamma - (total - x[i]);
      double nv = std::clamp(best, 0.0, std::max(cap, 0.0));
      moved += std::abs(nv - x[i]);
      total += nv - x[i];
      x[i] = nv;
    }
    if (moved < 1e-14 * std::max(1.0, gamma)) break;
  }
  return form.value(x);
}

}  // namespace

VerifyReport verify_eta_bound(double gamma, double b, double resolution) {
  if (gamma < 0 || b < 0) {
    throw std::invalid_argument("verify_eta_bound requires gamma, b >= 0");
  }
  if (gamma > 0 && !(resolution > 0)) {
    throw std::invalid_argument("resolution must be a positive step size");
  }
  long long steps =
      gamma > 0 ? static_cast<long long>(gamma / resolution) + 1 : 1;
  // 1- and 2-coordinate grids dominate the budget.
  double planned =
      9.0 * steps + 36.0 * steps * static_cast<double>(steps) + 20000;
  if (planned > 50'000'000) {
    throw resource_error("eta verification grid would exceed the evaluation "
                         "budget; use a coarser resolution");
  }

  EtaForm form(b);
  VerifyReport report;
  report.prop = "eta_simplex_bound";
  report.domain = "x2..x10 >= 0, sum <= gamma";
  report.tolerance = 1e-6;

  double best = -kInf;
  std::array<double, 9> best_x{};
  long long evaluated = 0;
  auto consider = [&](const std::array<double, 9>& x) {
    double v = form.value(x);
    ++evaluated;
    if (v > best) {
      best = v;
      best_x = x;
    }
  };

  std::array<double, 9> x{};
  consider(x);

  // Exact active-set solves over all supports of size <= 5.
  std::vector<int> sup;
  for (int mask = 1; mask < (1 << 9); ++mask) {
    if (std::popcount(static_cast<unsigned>(mask)) > 5) continue;
    sup.clear();
    for (int i = 0; i < 9; ++i) {
      if (mask & (1 << i)) sup.push_back(i);
    }
    for (int active = 0; active < 2; ++active) {
      if (stationary_candidate(form, sup, active == 1, gamma, x)) consider(x);
    }
  }

  // Low-dimensional grids at the requested step.
  if (gamma > 0) {
    for (int i = 0; i < 9; ++i) {
      for (long long si = 0; si <= steps; ++si) {
        x.fill(0.0);
        x[i] = std::min(si * resolution, gamma);
        consider(x);
      }
    }
    for (int i = 0; i < 9; ++i) {
      for (int j = i + 1; j < 9; ++j) {
        for (long long si = 0; si <= steps; ++si) {
          double xi = std::min(si * resolution, gamma);
          for (long long sj = 0; sj * resolution <= gamma - xi; ++sj) {
            x.fill(0.0);
            x[i] = xi;
            x[j] = sj * resolution;
            consider(x);
          }
        }
      }
    }
  }

  // Coordinate-ascent refinement from deterministic starts.
  std::mt19937_64 rng(0x5eedf00dULL);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto refine = [&](std::array<double, 9> start) {
    coordinate_ascend(form, gamma, start);
    consider(start);
  };
  refine(best_x);
  refine({});
  for (int trial = 0; trial < 256; ++trial) {
    std::array<double, 9> start{};
    double total = 0;
    for (int i = 0; i < 9; ++i) {
      start[i] = -std::log(std::max(unit(rng), 1e-300));
      total += start[i];
    }
    double scale = gamma * unit(rng) / std::max(total, 1e-300);
    for (int i = 0; i < 9; ++i) start[i] *= scale;
    refine(start);
  }

  report.samples = evaluated;
  report.max_violation = eta_bound(gamma, b) - best;
  report.argmax.assign(best_x.begin(), best_x.end());
  report.pass = report.max_violation >= -report.tolerance;
  return report;
}

VerifyReport verify_prop_A2(double gamma, double b, double resolution) {
  if (gamma < 0 || b < 0) {
    throw std::invalid_argument("verify_prop_A2 requires gamma, b >= 0");
  }
  if (gamma > 0 && !(resolution > 0)) {
    throw std::invalid_argument("resolution must be a positive step size");
  }
  long long steps =
      gamma > 0 ? static_cast<long long>(gamma / resolution) + 1 : 0;
  if ((steps + 1.0) * (steps + 1.0) > 50'000'000) {
    throw resource_error("two-variable grid would exceed the evaluation "
                         "budget; use a coarser resolution");
  }
  auto value = [&](double xx, double yy) {
    return -3.0 / 112 * sq(xx - 28 * b / 15) - 3.0 / 8 * sq(yy - 16 * b / 15);
  };
  double best = -kInf;
  double bx = 0, by = 0;
  long long evaluated = 0;
  auto consider = [&](double xx, double yy) {
    if (xx < 0 || yy < 0 || xx + yy > gamma + 1e-12 * std::max(1.0, gamma)) {
      return;
    }
    ++evaluated;
    double v = value(xx, yy);
    if (v > best) {
      best = v;
      bx = xx;
      by = yy;
    }
  };

  for (long long i = 0; i <= steps; ++i) {
    double xx = std::min(i * resolution, gamma);
    for (long long j = 0; j * resolution <= gamma - xx; ++j) {
      consider(xx, j * resolution);
    }
  }
  consider(0, 0);
  // Interior optimum, axis optima, and the exact face solve on x + y = gamma.
  consider(28 * b / 15, 16 * b / 15);
  consider(std::min(28 * b / 15, gamma), 0);
  consider(0, std::min(16 * b / 15, gamma));
  double face_x = std::clamp(14 * gamma / 15 - 196 * b / 225, 0.0, gamma);
  consider(face_x, gamma - face_x);
  consider(gamma, 0);
  consider(0, gamma);

  VerifyReport report;
  report.prop = "two_square_simplex_max";
  report.domain = "x, y >= 0, x + y <= gamma";
  report.tolerance = 1e-6;
  report.samples = evaluated;
  report.max_violation = prop_a2_bound(gamma, b) - best;
  report.argmax = {bx, by};
  report.pass = report.max_violation >= -report.tolerance;
  return report;
}

// ---------------------------------------------------------------------------
// Quadratic-bound propositions over Omega at n = 1
// ---------------------------------------------------------------------------

namespace {

struct Interval {
  double lo, hi;
};

// Which a-coordinates may be nonzero, and how a6 is constrained.
enum class A6Mode { FREE, ZERO, FULL_K, HALF_REST, AT_MOST_HALF, AT_LEAST_HALF };
enum class DSide { ANY, HIGH };  // HIGH: d >= (b+c)/2

struct PhiProp {
  const char* id;
  const char* domain;
  std::vector<PhiKind> kinds;
  std::vector<Interval> k_windows;
  std::vector<int> support;  // indices 0..5 for a1..a6
  A6Mode a6_mode;
  DSide d_side;
};

const std::vector<PhiProp>& prop_registry() {
  static const std::vector<PhiProp> props = {
      {"phi1_a1_only", "a1 = k; all other a zero", {PhiKind::PHI1},
       {{0, 0.25}}, {0}, A6Mode::FREE, DSide::ANY},
      {"phi1_a2_only", "a2 = k; all other a zero", {PhiKind::PHI1},
       {{0, 0.25}}, {1}, A6Mode::FREE, DSide::ANY},
      {"phi1_no_a5_a6", "a5 = a6 = 0", {PhiKind::PHI1},
       {{0, kStar1}, {0.2, 0.25}}, {0, 1, 2, 3}, A6Mode::FREE, DSide::ANY},
      {"phi1_small_k", "full profile region", {PhiKind::PHI1},
       {{0, 0.125}}, {0, 1, 2, 3, 4, 5}, A6Mode::FREE, DSide::ANY},
      {"phi21_full", "full profile region", {PhiKind::PHI21},
       {{0, kStar1}, {0.2, 0.25}}, {0, 1, 2, 3, 4, 5}, A6Mode::FREE,
       DSide::ANY},
      {"phi22_a6_max", "a6 = k", {PhiKind::PHI22},
       {{0, 1.0 / 6}}, {5}, A6Mode::FULL_K, DSide::ANY},
      {"phi22_a6_half_rest", "a6 = (n-4k)/2", {PhiKind::PHI22},
       {{1.0 / 6, 0.25}}, {0, 1, 2, 3, 4, 5}, A6Mode::HALF_REST, DSide::ANY},
      // The window stops at kStar1, not kStar4: with a6 = 0 this bound
      // degenerates to the first-stage one, whose a3/a4 ridge pierces the
      // target on (kStar1, 1/5). See EtaEnvelope/SecondStage gap tests.
      {"phi22_a6_below_half", "a6 <= (n-4k)/2", {PhiKind::PHI22},
       {{0, kStar1}, {0.2, 0.25}}, {0, 1, 2, 3, 4, 5}, A6Mode::AT_MOST_HALF,
       DSide::ANY},
      {"phi23_a6_above_half", "a6 >= (n-4k)/2", {PhiKind::PHI23},
       {{1.0 / 6, 0.25}}, {0, 1, 2, 3, 4, 5}, A6Mode::AT_LEAST_HALF,
       DSide::ANY},
      {"phi61_a3_a5_only", "a3 + a5 = k; others zero", {PhiKind::PHI61},
       {{1.0 / 6, 0.25}}, {2, 4}, A6Mode::FREE, DSide::ANY},
      {"phi62_a3_a5_only", "a3 + a5 = k; others zero; d >= (b+c)/2",
       {PhiKind::PHI62}, {{kStar2, 0.25}}, {2, 4}, A6Mode::FREE, DSide::HIGH},
      {"phi62_a3_a4_only", "a3 + a4 = k; others zero; d >= (b+c)/2",
       {PhiKind::PHI62}, {{kStar3, 0.25}}, {2, 3}, A6Mode::FREE, DSide::HIGH},
      {"phi3i_a6_zero", "a6 = 0", {PhiKind::PHI31, PhiKind::PHI32},
       {{kStar2, 0.25}}, {0, 1, 2, 3, 4}, A6Mode::ZERO, DSide::ANY},
      {"phi31_full", "full profile region", {PhiKind::PHI31},
       {{kStar2, 0.25}}, {0, 1, 2, 3, 4, 5}, A6Mode::FREE, DSide::ANY},
      {"phi32_a6_below_half", "a6 <= (n-4k)/2", {PhiKind::PHI32},
       {{kStar2, 0.25}}, {0, 1, 2, 3, 4, 5}, A6Mode::AT_MOST_HALF,
       DSide::ANY},
      {"phi33_a6_above_half", "a6 >= (n-4k)/2", {PhiKind::PHI33},
       {{1.0 / 6, 0.25}}, {0, 1, 2, 3, 4, 5}, A6Mode::AT_LEAST_HALF,
       DSide::ANY},
  };
  return props;
}

std::string window_string(const std::vector<Interval>& ws) {
  std::string out;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i) out += " or ";
    out += "[" + std::to_string(ws[i].lo) + ", " + std::to_string(ws[i].hi) +
           "]";
  }
  return out;
}

bool k_in_windows(double k, const std::vector<Interval>& ws) {
  for (const Interval& w : ws) {
    if (k >= w.lo - 1e-12 && k <= w.hi + 1e-12) return true;
  }
  return false;
}

struct PropMax {
  double best = -kInf;
  OmegaPoint arg;
  long long evaluated = 0;
};

// Evaluates the proposition's functions at a candidate profile, enforcing
// the domain restrictions; updates the running maximum.
void consider_point(const PhiProp& prop, double k, OmegaPoint p, PropMax& mx) {
  double m = 1 - 4 * k;
  double tol = 1e-9;
  double half = m / 2;
  switch (prop.a6_mode) {
    case A6Mode::FREE: break;
    case A6Mode::ZERO:
      if (p.a6 > tol) return;
      break;
    case A6Mode::FULL_K:
      if (std::abs(p.a6 - k) > tol) return;
      break;
    case A6Mode::HALF_REST:
      if (std::abs(p.a6 - half) > tol) return;
      break;
    case A6Mode::AT_MOST_HALF:
      if (p.a6 > half + tol) return;
      break;
    case A6Mode::AT_LEAST_HALF:
      if (p.a6 < half - tol) return;
      break;
  }
  if (prop.d_side == DSide::HIGH && p.d < (p.b + p.c) / 2 - tol) return;
  if (p.d < -tol || p.b < -tol || p.c < -tol) return;
  p.d = std::max(p.d, 0.0);
  p.n = 1;
  p.k = k;
  for (PhiKind kind : prop.kinds) {
    double v = phi_family(p, kind);
    ++mx.evaluated;
    if (v > mx.best) {
      mx.best = v;
      mx.arg = p;
    }
  }
}

OmegaPoint assemble(const std::array<double, 6>& a, double b, double c,
                    double d) {
  OmegaPoint p;
  p.a1 = a[0];
  p.a2 = a[1];
  p.a3 = a[2];
  p.a4 = a[3];
  p.a5 = a[4];
  p.a6 = a[5];
  p.b = b;
  p.c = c;
  p.d = d;
  return p;
}

// Enumerates the structured candidates: a-mass on at most two support
// classes (t-grid), a6 pinned to its slice where applicable, and (b, c)
// on a triangle grid plus the d = 0 and d = (b+c)/2 boundary lines.
void structured_search(const PhiProp& prop, double k, long long res,
                       PropMax& mx) {
  double m = 1 - 4 * k;
  std::vector<double> a6_values;
  switch (prop.a6_mode) {
    case A6Mode::ZERO: a6_values = {0.0}; break;
    case A6Mode::FULL_K: a6_values = {k}; break;
    case A6Mode::HALF_REST: a6_values = {std::min(m / 2, k)}; break;
    case A6Mode::AT_MOST_HALF: {
      double cap = std::min(m / 2, k);
      for (long long i = 0; i <= res / 4; ++i) {
        a6_values.push_back(cap * i / std::max<long long>(res / 4, 1));
      }
      break;
    }
    case A6Mode::AT_LEAST_HALF: {
      double lo = std::min(m / 2, k);
      for (long long i = 0; i <= res / 4; ++i) {
        a6_values.push_back(lo + (k - lo) * i / std::max<long long>(res / 4, 1));
      }
      break;
    }
    case A6Mode::FREE: {
      bool has6 = std::find(prop.support.begin(), prop.support.end(), 5) !=
                  prop.support.end();
      a6_values = {0.0};
      if (has6) {
        a6_values.clear();
        for (long long i = 0; i <= res / 4; ++i) {
          a6_values.push_back(k * i / std::max<long long>(res / 4, 1));
        }
      }
      break;
    }
  }

  // Support classes other than a6 for distributing the remaining a-mass.
  std::vector<int> rest;
  for (int s : prop.support) {
    if (s != 5) rest.push_back(s);
  }
  if (rest.empty()) rest.push_back(5);  // a6-only propositions

  for (double a6 : a6_values) {
    if (a6 > k + 1e-12) continue;
    double mass = k - a6;
    for (std::size_t ii = 0; ii < rest.size(); ++ii) {
      for (std::size_t jj = ii; jj < rest.size(); ++jj) {
        long long tmax = (ii == jj) ? 0 : res;
        for (long long ti = 0; ti <= tmax; ++ti) {
          double t = tmax == 0 ? 1.0 : static_cast<double>(ti) / tmax;
          std::array<double, 6> a{};
          a[5] = a6;
          if (rest[ii] == 5) {
            a[5] = k;  // degenerate a6-only support
          } else {
            a[rest[ii]] += t * mass;
            a[rest[jj]] += (1 - t) * mass;
          }
          // (b, c) triangle grid with d implied, plus boundary lines.
          for (long long bi = 0; bi <= res; ++bi) {
            double b = (m / 3) * bi / res;
            double c_cap = (m - 3 * b) / 2;
            for (long long ci = 0; ci <= res; ++ci) {
              double c = c_cap * ci / res;
              consider_point(prop, k, assemble(a, b, c, m - 3 * b - 2 * c),
                             mx);
            }
          }
          for (long long bi = 0; bi <= res; ++bi) {
            // d = (b+c)/2 line: 7b/2 + 5c/2 = m.
            double b = std::min(m / 3, 2 * m / 7) * bi / res;
            double c = (2 * m - 7 * b) / 5;
            if (c >= -1e-12) {
              c = std::max(c, 0.0);
              consider_point(prop, k, assemble(a, b, c, (b + c) / 2), mx);
            }
          }
        }
      }
    }
  }
}

// Local refinement: re-grids (b, c) near the incumbent at a finer step.
void refine_bc(const PhiProp& prop, double k, PropMax& mx) {
  if (mx.best == -kInf) return;
  double m = 1 - 4 * k;
  OmegaPoint base = mx.arg;
  double window = m / 8;
  for (int round = 0; round < 6; ++round) {
    double blo = std::max(0.0, base.b - window);
    double bhi = std::min(m / 3, base.b + window);
    double clo = std::max(0.0, base.c - window);
    for (int bi = 0; bi <= 16; ++bi) {
      double b = blo + (bhi - blo) * bi / 16;
      double chi = std::min((m - 3 * b) / 2, base.c + window);
      for (int ci = 0; ci <= 16; ++ci) {
        double c = clo + std::max(chi - clo, 0.0) * ci / 16;
        if (3 * b + 2 * c > m + 1e-12) continue;
        OmegaPoint p = base;
        p.b = b;
        p.c = c;
        p.d = m - 3 * b - 2 * c;
        consider_point(prop, k, p, mx);
      }
    }
    base = mx.arg;
    window /= 3;
  }
}

void random_search(const PhiProp& prop, double k, long long samples,
                   PropMax& mx) {
  double m = 1 - 4 * k;
  std::mt19937_64 rng(0xabcdef12345ULL);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto exp_draw = [&] { return -std::log(std::max(unit(rng), 1e-300)); };
  for (long long s = 0; s < samples; ++s) {
    std::array<double, 6> a{};
    double a6 = 0;
    double mass = k;
    switch (prop.a6_mode) {
      case A6Mode::ZERO: break;
      case A6Mode::FULL_K: a6 = k; break;
      case A6Mode::HALF_REST: a6 = std::min(m / 2, k); break;
      case A6Mode::AT_MOST_HALF: a6 = unit(rng) * std::min(m / 2, k); break;
      case A6Mode::AT_LEAST_HALF: {
        double lo = std::min(m / 2, k);
        a6 = lo + unit(rng) * (k - lo);
        break;
      }
      case A6Mode::FREE: break;
    }
    mass = k - a6;
    a[5] = a6;
    double total = 0;
    std::array<double, 6> w{};
    bool a6_free_support = false;
    for (int s2 : prop.support) {
      if (s2 == 5 && prop.a6_mode != A6Mode::FREE) continue;
      if (s2 == 5) a6_free_support = true;
      w[s2] = exp_draw();
      total += w[s2];
    }
    if (total > 0) {
      for (int i = 0; i < 6; ++i) {
        double share = mass * w[i] / total;
        if (i == 5 && a6_free_support) {
          a[5] += share;
        } else {
          a[i] += share;
        }
      }
    }
    double w1 = exp_draw(), w2 = exp_draw(), w3 = exp_draw();
    double wt = w1 + w2 + w3;
    double b = m * w1 / (3 * wt);
    double c = m * w2 / (2 * wt);
    double d = m * w3 / wt;
    if (prop.d_side == DSide::HIGH && d < (b + c) / 2) {
      // Move the shortfall from b into d, keeping 3b + 2c + d = m.
      continue;  // rejected; cheaper than reweighting, keeps uniformity
    }
    consider_point(prop, k, assemble(a, b, c, d), mx);
  }
}

VerifyReport run_phi_prop(const PhiProp& prop, double k, long long resolution,
                          long long samples) {
  if (!k_in_windows(k, prop.k_windows)) {
    throw std::domain_error(std::string(prop.id) + " requires k in " +
                            window_string(prop.k_windows) + " (n = 1)");
  }
  if (resolution < 4) resolution = 4;
  PropMax mx;
  structured_search(prop, k, resolution, mx);
  refine_bc(prop, k, mx);
  random_search(prop, k, samples, mx);

  VerifyReport report;
  report.prop = prop.id;
  report.domain = prop.domain;
  report.tolerance = 1e-6;
  report.samples = mx.evaluated;
  report.max_violation = xi(1.0, k).value - mx.best;
  report.argmax = {mx.arg.a1, mx.arg.a2, mx.arg.a3, mx.arg.a4, mx.arg.a5,
                   mx.arg.a6, mx.arg.b,  mx.arg.c,  mx.arg.d};
  report.pass = report.max_violation >= -report.tolerance;
  return report;
}

}  // namespace

std::vector<std::string> phi_proposition_ids() {
  std::vector<std::string> ids;
  for (const PhiProp& p : prop_registry()) ids.push_back(p.id);
  return ids;
}

VerifyReport verify_phi_proposition(const std::string& prop_id, double k,
                                    long long resolution, long long samples) {
  for (const PhiProp& p : prop_registry()) {
    if (prop_id == p.id) return run_phi_prop(p, k, resolution, samples);
  }
  throw std::invalid_argument("unknown proposition id: " + prop_id);
}

std::vector<VerifyReport> verify_phi_propositions(double k,
                                                  long long resolution,
                                                  long long samples) {
  std::vector<VerifyReport> out;
  for (const PhiProp& p : prop_registry()) {
    if (k_in_windows(k, p.k_windows)) {
      out.push_back(run_phi_prop(p, k, resolution, samples));
    }
  }
  return out;
}

VerifyReport convexity_check(RhoKind which, double b, double c,
                             const std::array<double, 3>& gammas,
                             long long pairs) {
  if (gammas[0] < -7) {
    throw std::domain_error("convexity requires the quadratic coefficient "
                            "gamma1 >= -7");
  }
  if (b < 0 || c < 0) {
    throw std::invalid_argument("b and c must be nonnegative");
  }
  auto f = [&](double x) {
    double base = gammas[0] * x * x + gammas[1] * x + gammas[2];
    if (which == RhoKind::RHO1) {
      return base + g_alpha(x, b, 0.5) + h_alpha(x, c, 0.5);
    }
    return base + g_hat(x, b) + h_alpha(x, c, 0.25);
  };
  double scale = 10 * std::max({1.0, b, c});
  std::mt19937_64 rng(0xc0ffee123ULL);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  VerifyReport report;
  report.prop = which == RhoKind::RHO1 ? "rho1_convex" : "rho2_convex";
  report.domain = "x, y >= 0 (midpoint convexity)";
  report.tolerance = 1e-9;
  report.max_violation = kInf;
  double worst_x = 0, worst_y = 0;
  auto check_pair = [&](double x, double y) {
    if (x < 0 || y < 0) return;
    double slack = (f(x) + f(y)) / 2 - f((x + y) / 2);
    ++report.samples;
    if (slack < report.max_violation) {
      report.max_violation = slack;
      worst_x = x;
      worst_y = y;
    }
  };
  for (long long i = 0; i < pairs; ++i) {
    check_pair(scale * unit(rng), scale * unit(rng));
  }
  // Pairs straddling every breakpoint of the piecewise parts.
  std::vector<double> breaks = {b, c,           // x = y/(2a) at a = 1/2
                                2 * b, 2 * c,   // and at a = 1/4
                                6 * b / 5, (86 - 4 * kSqrt210) * b / 15,
                                56 * b / 15, 38 * b / 5};
  for (double bp : breaks) {
    for (double h : {1e-3, 1e-2, 0.1, 1.0}) {
      check_pair(std::max(bp - h, 0.0), bp + h);
    }
  }
  report.tolerance = 1e-9 * std::max(1.0, scale * scale);
  report.pass = report.max_violation >= -report.tolerance;
  report.argmax = {worst_x, worst_y};
  return report;
}

XiGapReport xi_gap_scan(const std::vector<double>& n_values,
                        long long k_grid) {
  XiGapReport report;
  report.min_slack = kInf;
  report.max_equality_error = 0;
  for (double n : n_values) {
    if (n <= 0) throw std::invalid_argument("n values must be positive");
    for (long long i = 0; i <= k_grid; ++i) {
      double k = (n / 4) * static_cast<double>(i) / k_grid;
      XiValue v = xi(n, k);
      double q1 = n * n / 3 + k * n / 3 - k * k / 6;
      double q2 = n * n / 4 + k * n - k * k;
      double q3 = 3 * k * n - 4.5 * k * k;
      for (double q : {q1, q2, q3}) {
        report.min_slack = std::min(report.min_slack, v.value - q);
      }
      double eq = 0;
      if (v.regime == 1) eq = std::abs(v.value - q1);
      if (v.regime == 3) eq = std::abs(v.value - q2);
      if (v.regime == 4) eq = std::abs(v.value - q3);
      report.max_equality_error = std::max(report.max_equality_error, eq);
      ++report.points;
    }
  }
  double tol = 1e-12;
  for (double n : n_values) tol = std::max(tol, 1e-12 * n * n);
  report.pass =
      report.min_slack >= -tol && report.max_equality_error <= tol;
  return report;
}

}  // namespace tiling
