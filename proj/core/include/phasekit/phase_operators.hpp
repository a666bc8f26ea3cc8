#pragma once

#include <functional>

#include "phasekit/phase_states.hpp"
#include "phasekit/tridiagonal.hpp"

namespace phasekit {

// cos(2 phi-hat): bandwidth-2, zero diagonal, (n, n+2) entry sqrt(f(n+1))/2.
BandedHermitianOperator build_cos2phi(const TruncationConfig& cfg);

// sin(2 phi-hat) from the symmetrized qp + pq quadrature product with the
// same (N + 1/2)^(-1/2) normalization; satisfies
// [cos 2phi-hat, N-hat] = 2i sin 2phi-hat and carries the quarter-period
// sign algebra of the cosine family.
BandedHermitianOperator build_sin2phi(const TruncationConfig& cfg);

// Canonical squared cosine/sine built as (I +- cos 2phi-hat)/2, which keeps
// cos^2 + sin^2 = I exact even in the truncated basis.
BandedHermitianOperator build_cos_sq(const TruncationConfig& cfg);
BandedHermitianOperator build_sin_sq(const TruncationConfig& cfg);

// Cross-check route: (N + 1/2)^(-1/2) q^2 (N + 1/2)^(-1/2) and the momentum
// counterpart from truncated ladder products. Agrees with the canonical
// construction away from the truncation edge.
BandedHermitianOperator build_cos_sq_direct(const TruncationConfig& cfg);
BandedHermitianOperator build_sin_sq_direct(const TruncationConfig& cfg);

// Scalar symbol applied on each spectral branch. plus receives the Plus
// eigenvalue phi in (0, pi/2); minus receives the Minus eigenvalue
// phi - pi in (-pi, -pi/2).
struct SpectralFunction {
  std::function<double(double)> plus;
  std::function<double(double)> minus;
};

struct SpectralBuildOptions {
  // Nodes whose symbol magnitude exceeds the cap are dropped (0 = no cap).
  double symbol_cap = 0.0;
};

struct SpectralBuildInfo {
  int dropped_nodes = 0;
};

// Quadrature assembly of sum_k w_k [g+(phi_k) |k,+><k,+| + g-(phi_k - pi) |k,-><k,-|]
// in the number basis, using the phi-interval measure of the grid. Real
// symmetric by construction; bandwidth metadata is dim-1.
BandedHermitianOperator build_spectral_operator(const PhaseStateTable& table,
                                                const SpectralFunction& func,
                                                const SpectralBuildOptions& opts = {},
                                                SpectralBuildInfo* info = nullptr);

// Discretized resolution of identity (the constant-1 symbol).
BandedHermitianOperator build_resolution_identity(const PhaseStateTable& table);

// The phase operator itself: eigenvalue phi on Plus, phi - pi on Minus.
BandedHermitianOperator build_phi(const PhaseStateTable& table);

// Companion labeled by the presentation convention (Minus at phi + pi);
// differs from build_phi by 2 pi times the Minus-branch projector.
BandedHermitianOperator build_phi_display(const PhaseStateTable& table);

BandedHermitianOperator build_cos_phi(const PhaseStateTable& table);
BandedHermitianOperator build_sin_phi(const PhaseStateTable& table);
BandedHermitianOperator build_tan_phi(const PhaseStateTable& table,
                                      double symbol_cap = 1e8,
                                      SpectralBuildInfo* info = nullptr);

// Max interior deviations of the number-operator commutators:
//   [cos 2phi, N]   vs (N+1/2)^(-1/2) (a^2 - a^dag^2) (N+1/2)^(-1/2)
//   [cos^2 phi, N]  vs  +[cos 2phi, N]/2
//   [sin^2 phi, N]  vs  -[cos 2phi, N]/2
struct CommutatorReport {
  double dev_cos2phi_number;
  double dev_cos_sq_number;
  double dev_sin_sq_number;
};

CommutatorReport check_comm_relations(const TruncationConfig& cfg);

// Spectrum extremes of one parity block of cos 2phi-hat (tridiagonal in the
// sector index); a diagnostic that the truncated blocks stay inside (-1, 1).
EigenRange cos2phi_block_eigen_range(const TruncationConfig& cfg, Parity parity);

// Real part of <psi|A|psi> (A Hermitian).
double expectation(const BandedHermitianOperator& op, const FockVector& psi);

}  // namespace phasekit
