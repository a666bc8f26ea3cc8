#pragma once

#include <vector>

#include "phasekit/matrix.hpp"

namespace phasekit {

// Truncated number-state basis |0> .. |n_max>. n_max must be even so the
// even and odd parity sectors hold n_max/2 + 1 and n_max/2 states; rows
// within interior_margin of the cut are treated as truncation-contaminated
// and excluded from identity checks.
struct TruncationConfig {
  int n_max = 256;
  int interior_margin = 4;

  TruncationConfig() = default;
  TruncationConfig(int n_max_, int margin) : n_max(n_max_), interior_margin(margin) {
    validate();
  }

  void validate() const {
    if (n_max < 8 || n_max % 2 != 0)
      throw DomainError("TruncationConfig: n_max must be even and >= 8");
    if (interior_margin < 2) throw DomainError("TruncationConfig: interior_margin must be >= 2");
  }

  int dim() const { return n_max + 1; }
  // Highest row index regarded as truncation-clean.
  int interior_max() const { return n_max - interior_margin; }
};

// Amplitudes over |0> .. |n_max>; index n holds <n|psi>.
struct FockVector {
  std::vector<cx> amp;

  int dim() const { return static_cast<int>(amp.size()); }
  double norm() const { return vector_norm(amp); }
};

// Hermitian operator in the number basis. Storage is dense; bandwidth is
// metadata recording the largest |row-col| carrying a nonzero entry.
struct BandedHermitianOperator {
  int dim = 0;
  int bandwidth = 0;
  Matrix mat;

  double hermiticity_error() const { return mat.hermiticity_error(); }
  double band_violation() const { return mat.band_violation(bandwidth); }
};

// Coupling ratio n(n+1)/((n-1/2)(n+3/2)) for n >= 1, zero for n <= 0.
// Strictly decreasing from 8/5 at n = 1 toward 1.
double f_ratio(long n);

struct LadderPair {
  Matrix annihilation;  // sqrt(n) at (n-1, n)
  Matrix creation;      // adjoint of annihilation
};

LadderPair build_ladder(const TruncationConfig& cfg);

struct QuadratureOperators {
  BandedHermitianOperator position;     // (a + a^dag)/2
  BandedHermitianOperator momentum;     // (a - a^dag)/(2i)
  BandedHermitianOperator number;       // diag(n)
  BandedHermitianOperator hamiltonian;  // diag(n + 1/2)
};

QuadratureOperators build_quadratures(const TruncationConfig& cfg);

FockVector fock_state(const TruncationConfig& cfg, int n);

// Poisson amplitudes of |alpha|, alpha = |alpha| e^{i phase_angle},
// renormalized to unit norm after the cut. Throws TruncationInsufficient
// when the discarded Poisson tail above n_max exceeds 1e-12.
FockVector coherent_state(const TruncationConfig& cfg, double abs_alpha, double phase_angle);

}  // namespace phasekit
