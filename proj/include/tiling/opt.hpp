#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace tiling {

// Double-precision literals for the square roots used by breakpoints and
// domain endpoints (correctly rounded to the nearest double).
inline constexpr double kSqrt2 = 1.4142135623730951;
inline constexpr double kSqrt7 = 2.6457513110645907;
inline constexpr double kSqrt10 = 3.1622776601683795;
inline constexpr double kSqrt30 = 5.477225575051661;
inline constexpr double kSqrt210 = 14.491376746189438;
inline constexpr double kSqrt402 = 20.049937655763422;
inline constexpr double kSqrt3282 = 57.28874234961002;

// Endpoints of the k/n validity windows of the quadratic-bound propositions
// (at n = 1). kStar1 is sharp for the first- and second-stage bounds: on
// (kStar1, 1/5) the profile a3 = b = 2(1-5k)/5, a4 = k - a3, c = 0,
// d = 1 - 4k - 3b exceeds Xi(1,k) by exactly 10(k - 1/5)^2, so no such
// bound can hold on a window reaching past kStar1 (kStar4 marks where a
// window stated that way would end; see the gap regression test).
inline constexpr double kStar1 = (20.0 + kSqrt10) / 130.0;    // ~0.1781714
inline constexpr double kStar2 =
    (19982.0 - 35.0 * kSqrt402) / 108278.0;                   // ~0.1780625
inline constexpr double kStar3 =
    (24086.0 - 35.0 * kSqrt3282) / 128054.0;                  // ~0.1724342
inline constexpr double kStar4 = (20.0 + kSqrt30) / 130.0;    // ~0.1959787

// A profile point in the polytope Omega_{n,k}: nonnegative coordinates with
// a1+...+a6 = k and 4k + 3b + 2c + d = n.
struct OmegaPoint {
  double a1 = 0, a2 = 0, a3 = 0, a4 = 0, a5 = 0, a6 = 0;
  double b = 0, c = 0, d = 0;
  double n = 1, k = 0;
};

// The quadratic upper-bound family evaluated by phi_family.
enum class PhiKind {
  PHI,
  PHI1,
  PHI21,
  PHI22,
  PHI23,
  PHI31,
  PHI32,
  PHI33,
  PHI41,
  PHI42,
  PHI43,
  PHI51,
  PHI52,
  PHI53,
  PHI6,
  PHI61,
  PHI62,
};
const char* phi_kind_name(PhiKind which);

// Branch selector for the piecewise part that splits on d versus (b+c)/2.
// AUTO derives the side from the point; LOW/HIGH assert a side and throw
// std::invalid_argument if the point lies strictly on the other side.
enum class DBranch { AUTO, LOW, HIGH };

// Psi(b,c,d) = 3b^2 + 4bc + 2bd + c^2 + cd, and its algebraic identity form
// (3b+2c+d)^2/3 - (c^2+cd+d^2)/3.
double psi(double b, double c, double d);
double psi_identity_form(double b, double c, double d);

// The piecewise-quadratic envelope pieces used in the A4 cross-edge bound.
enum class GHKind { G_ALPHA, H_ALPHA, G_HAT };
// g_alpha / h_alpha (two pieces split at x = y/(2*alpha), breakpoint owned by
// the left piece) and the five-piece ghat. alpha must lie in (0,1); it is
// validated for every kind even though ghat does not depend on it.
double g_h_ghat(double x, double y, double alpha, GHKind which);

// phi_hat(a4,b,c,d): g_{1/2}(a4,b) + h_{1/2}(a4,c) when d <= (b+c)/2, else
// ghat(a4,b) + h_{1/4}(a4,c). phi_small = phi_hat - 15a4^2/2 - (7b+5c)a4,
// which is nonpositive everywhere.
double phi_hat(double a4, double b, double c, double d,
               DBranch branch = DBranch::AUTO);
double phi_small(double a4, double b, double c, double d,
                 DBranch branch = DBranch::AUTO);

// Evaluates one member of the Phi family at a point. Point invariants are
// checked to 1e-9 scale tolerance (std::invalid_argument on failure), as is
// branch consistency for the piecewise members.
double phi_family(const OmegaPoint& p, PhiKind which,
                  DBranch branch = DBranch::AUTO);

// The nine-variable quadratic eta(b, x2..x10); x[0] is x2, x[8] is x10.
double eta(double b, const std::array<double, 9>& x);

// Closed-form envelopes: the five-branch bound on max eta over the simplex
// slice sum(x) <= gamma, and the three-branch maximum of the two-variable
// completed-square quadratic over x + y <= gamma.
double eta_bound(double gamma, double b);
double prop_a2_bound(double gamma, double b);

// Outcome of one verification run. max_violation is the smallest slack
// (bound minus evaluated value) seen across all tested points; a negative
// value means the bound was exceeded by that amount. pass holds when
// max_violation >= -tolerance.
struct VerifyReport {
  std::string prop;
  std::string domain;
  long long samples = 0;
  double max_violation = 0;
  std::vector<double> argmax;
  double tolerance = 1e-6;
  bool pass = false;
};

// Maximizes eta over the simplex slice by exact active-set solves on the
// five structured sparse supports, low-dimensional grids at the given step,
// and coordinate-ascent refinement from deterministic random starts; checks
// the maximum against eta_bound. Throws tiling::resource_error if the
// resolution implies more than ~5e7 grid evaluations.
VerifyReport verify_eta_bound(double gamma, double b, double resolution);

// Grid plus exact face/interior maximization of the two-variable quadratic,
// compared against prop_a2_bound.
VerifyReport verify_prop_A2(double gamma, double b, double resolution);

// Identifiers of the quadratic-bound propositions checked against the
// five-piece envelope xi at n = 1.
std::vector<std::string> phi_proposition_ids();

// Verifies one proposition at scaled position k = k/n (n normalized to 1):
// structured boundary search at the given resolution plus `samples` random
// points of its domain. Throws std::domain_error (naming the valid range)
// if k lies outside the proposition's window; std::invalid_argument for an
// unknown id.
VerifyReport verify_phi_proposition(const std::string& prop_id, double k,
                                    long long resolution, long long samples);

// Runs every proposition whose window contains k.
std::vector<VerifyReport> verify_phi_propositions(double k,
                                                  long long resolution,
                                                  long long samples);

// Midpoint-convexity check of gamma1*x^2 + gamma2*x + gamma3 plus the
// piecewise pair (RHO1: g_{1/2}(x,b) + h_{1/2}(x,c); RHO2: ghat(x,b) +
// h_{1/4}(x,c)) over random nonnegative pairs. Requires gamma1 >= -7
// (std::domain_error otherwise).
enum class RhoKind { RHO1, RHO2 };
VerifyReport convexity_check(RhoKind which, double b, double c,
                             const std::array<double, 3>& gammas,
                             long long pairs);

// Pointwise check that xi dominates its three global quadratic lower bounds
// and coincides with the matching one on regimes 1, 3 and 4.
struct XiGapReport {
  long long points = 0;
  double min_slack = 0;
  double max_equality_error = 0;
  bool pass = false;
};
XiGapReport xi_gap_scan(const std::vector<double>& n_values, long long k_grid);

}  // namespace tiling
