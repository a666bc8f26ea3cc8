#include "phasekit/dynamics.hpp"

#include <cmath>

namespace phasekit {

namespace {

// i^k for k mod 4, exact.
cx unit_power(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

// If t is an exact double multiple of step, returns the multiplier.
bool exact_multiple(double t, double step, long& k) {
  if (std::remainder(t, step) != 0.0) return false;
  k = std::lround(t / step);
  return true;
}

}  // namespace

FockVector evolve_state(const FockVector& v, EvolutionTime time) {
  FockVector out;
  out.amp.resize(v.amp.size());
  long m = 0;
  if (exact_multiple(time.t, M_PI, m)) {
    // exp(-i m pi (n + 1/2)) = (-1)^{mn} (-i)^m
    cx zero_point = unit_power(-m);
    for (size_t n = 0; n < v.amp.size(); ++n) {
      double sign = (m % 2 != 0 && n % 2 != 0) ? -1.0 : 1.0;
      out.amp[n] = v.amp[n] * zero_point * sign;
    }
    return out;
  }
  for (size_t n = 0; n < v.amp.size(); ++n)
    out.amp[n] = v.amp[n] * std::polar(1.0, -time.t * (n + 0.5));
  return out;
}

BandedHermitianOperator heisenberg(const BandedHermitianOperator& op, EvolutionTime time) {
  const int d = op.dim;
  BandedHermitianOperator out{d, op.bandwidth, Matrix(d, d)};
  long k = 0;
  if (exact_multiple(time.t, 0.5 * M_PI, k)) {
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) out.mat(i, j) = op.mat(i, j) * unit_power(k * long(i - j));
    return out;
  }
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      out.mat(i, j) = op.mat(i, j) * std::polar(1.0, time.t * (i - j));
  return out;
}

std::array<cx, 4> phase_basis_matrix_elements(const BandedHermitianOperator& op,
                                              const PhaseStateTable& table, int k) {
  if (k < 0 || k >= table.nodes())
    throw IndexOutOfRange("phase_basis_matrix_elements: node index out of range");
  if (op.dim != table.state_dim())
    throw DimensionMismatch("phase_basis_matrix_elements: operator/table dimensions differ");
  const int d = op.dim;
  auto vp = table.plus_row(k);
  auto vm = table.minus_row(k);
  std::vector<cx> up(d), um(d);
  double np = 0.0, nm = 0.0;
  for (int n = 0; n < d; ++n) {
    np += vp[n] * vp[n];
    nm += vm[n] * vm[n];
  }
  np = std::sqrt(np);
  nm = std::sqrt(nm);
  for (int n = 0; n < d; ++n) {
    up[n] = vp[n] / np;
    um[n] = vm[n] / nm;
  }
  std::vector<cx> aup = op.mat.apply(up);
  std::vector<cx> aum = op.mat.apply(um);
  // column-major pair block: [ <u+|A|u+>, <u+|A|u-> ; <u-|A|u+>, <u-|A|u-> ]
  return {inner(up, aup), inner(up, aum), inner(um, aup), inner(um, aum)};
}

}  // namespace phasekit
