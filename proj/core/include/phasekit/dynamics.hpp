#pragma once

#include <array>

#include "phasekit/phase_states.hpp"

namespace phasekit {

// Time in units of the inverse oscillator frequency (omega = 1).
struct EvolutionTime {
  double t = 0.0;
};

// Schroedinger evolution: amplitude n picks up exp(-i t (n + 1/2)).
// Multiples of pi route through exact unit factors, so full periods
// reproduce the input to the bit (times the exact zero-point sign).
FockVector evolve_state(const FockVector& v, EvolutionTime time);

// Heisenberg transport A(t) = e^{iHt} A e^{-iHt}: entry (m, n) times
// exp(i t (m - n)). Multiples of a quarter period use exact powers of i,
// making the quarter-period operator algebra hold to the bit.
BandedHermitianOperator heisenberg(const BandedHermitianOperator& op, EvolutionTime time);

// 2x2 block of an operator in the Plus/Minus pair at grid node k, using
// unit-normalized sampled states; entry (i, j) = <u_i| A |u_j> with
// u_1 = Plus, u_2 = Minus, so A|u_j> ~ M_1j |u_1> + M_2j |u_2>.
std::array<cx, 4> phase_basis_matrix_elements(const BandedHermitianOperator& op,
                                              const PhaseStateTable& table, int k);

}  // namespace phasekit
