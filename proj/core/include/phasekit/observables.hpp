#pragma once

#include <string>
#include <vector>

#include "phasekit/phase_operators.hpp"
#include "phasekit/rational.hpp"

namespace phasekit {

enum class MomentSide { BelowUniform, Equal, AboveUniform };

// Even trig moment m_2k(n) of the number state |n> next to the matching
// uniform-distribution moment u_2k. The cosine and sine moments coincide,
// so one value covers both.
struct MomentReport {
  int n = 0;
  int k = 0;
  double value = 0.0;
  double uniform_value = 0.0;
  MomentSide side = MomentSide::Equal;
};

// m_2k(n) = 2^(-k) sum_m binom(k, 2m) <n| cos^(2m) 2phi |n> via repeated
// application of the banded doubled-angle operator. Requires
// n + 2k <= n_max - interior_margin so band powers never touch the cut.
double moment_even(int n, int k, const TruncationConfig& cfg);

// Same quantity in exact fraction arithmetic, working on the untruncated
// coupling ladder (a diagonal similarity clears the square roots, so every
// intermediate is rational).
Rational moment_even_exact(int n, int k);

MomentReport make_moment_report(int n, int k, const TruncationConfig& cfg);

// Diagonal element <n| A^p |n> of a spectral operator power; the odd-power
// cosine/sine moments vanish and this measures how close to zero the
// quadrature construction lands.
double spectral_moment(const BandedHermitianOperator& op, int n, int power);

// Uniform-phase moment u_2k = (2k-1)!!/(2k)!!; k <= 30.
double uniform_moment(int k);
Rational uniform_moment_exact(int k);

// Large-n closed form: combinatorial value 2^(-k) sum_m 4^(-m) binom(k,2m) binom(2m,m)
// next to u_2k; the two agree identically.
struct UniformLimitIdentity {
  Rational combinatorial;
  Rational uniform;
};
UniformLimitIdentity uniform_limit_identity(int k);

struct PhaseDensityRow {
  double phi;  // Plus label in (0, pi/2); Minus display label in (pi, 3pi/2)
  SignBranch branch;
  double density;
};

// |<phi, branch|psi>|^2 sampled on the grid nodes, Plus block first.
// Integrates to ~1 under the grid weights for states well inside the cut.
std::vector<PhaseDensityRow> phase_distribution(const FockVector& state,
                                                const PhaseStateTable& table);

// Quadrature total of a sampled distribution (both branches).
double phase_distribution_total(const std::vector<PhaseDensityRow>& rows,
                                const QuadratureRule& grid);

// Density at an arbitrary interior angle. For Minus, phi may be given
// either in (0, pi/2) or as the display label in (pi, 3pi/2).
double phase_density_at(const FockVector& state, double phi, SignBranch branch);

// e^{-x} sum_n x^{n+1} / (n! sqrt((n+5/2)(n+1/2))), the radial factor of
// every coherent-state expectation in this family; -> 1 as x -> infinity.
double coherent_series_factor(double x);

// Closed-series coherent expectations (alpha = |alpha| e^{i phase_angle}):
//   <cos 2phi-hat>           = cos(2 phase_angle) * factor
//   <-i[cos 2phi-hat, H]>    = 2 sin(2 phase_angle) * factor
double coherent_cos2phi_series(double abs_alpha, double phase_angle);
double coherent_comm_h_series(double abs_alpha, double phase_angle);

// Matrix-route counterparts on the truncated basis.
double coherent_cos2phi_matrix(double abs_alpha, double phase_angle,
                               const TruncationConfig& cfg);
double coherent_comm_h_matrix(double abs_alpha, double phase_angle,
                              const TruncationConfig& cfg);

struct ClassicalLimitRow {
  double abs_alpha;
  std::string quantity;
  double quantum;     // matrix-route expectation
  double series;      // closed-series value
  double classical;   // limiting phase-space bracket value
  double abs_dev;     // |quantum - classical|
  double rel_dev;     // abs_dev / |classical|
};

// Four expectation values against their classical brackets for each
// |alpha|; deviations shrink as |alpha| grows.
std::vector<ClassicalLimitRow> classical_limit_report(const std::vector<double>& abs_alphas,
                                                      double phase_angle,
                                                      const TruncationConfig& cfg);

}  // namespace phasekit
