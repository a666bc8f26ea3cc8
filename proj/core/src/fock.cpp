#include "phasekit/fock.hpp"

#include <cmath>
#include <string>

namespace phasekit {

double f_ratio(long n) {
  if (n <= 0) return 0.0;
  double x = static_cast<double>(n);
  return x * (x + 1.0) / ((x - 0.5) * (x + 1.5));
}

LadderPair build_ladder(const TruncationConfig& cfg) {
  cfg.validate();
  const int d = cfg.dim();
  Matrix a(d, d);
  for (int n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return {a, a.adjoint()};
}

QuadratureOperators build_quadratures(const TruncationConfig& cfg) {
  cfg.validate();
  const int d = cfg.dim();
  QuadratureOperators ops;
  ops.position = {d, 1, Matrix(d, d)};
  ops.momentum = {d, 1, Matrix(d, d)};
  ops.number = {d, 0, Matrix(d, d)};
  ops.hamiltonian = {d, 0, Matrix(d, d)};
  for (int n = 1; n < d; ++n) {
    double r = 0.5 * std::sqrt(static_cast<double>(n));
    ops.position.mat(n - 1, n) = r;
    ops.position.mat(n, n - 1) = r;
    ops.momentum.mat(n - 1, n) = cx(0.0, -r);
    ops.momentum.mat(n, n - 1) = cx(0.0, r);
  }
  for (int n = 0; n < d; ++n) {
    ops.number.mat(n, n) = static_cast<double>(n);
    ops.hamiltonian.mat(n, n) = n + 0.5;
  }
  return ops;
}

FockVector fock_state(const TruncationConfig& cfg, int n) {
  cfg.validate();
  if (n < 0 || n > cfg.n_max)
    throw IndexOutOfRange("fock_state: n outside 0..n_max");
  FockVector v;
  v.amp.assign(cfg.dim(), cx(0.0));
  v.amp[n] = 1.0;
  return v;
}

FockVector coherent_state(const TruncationConfig& cfg, double abs_alpha, double phase_angle) {
  cfg.validate();
  if (abs_alpha < 0.0) throw DomainError("coherent_state: |alpha| must be nonnegative");
  FockVector v;
  v.amp.assign(cfg.dim(), cx(0.0));
  if (abs_alpha == 0.0) {
    v.amp[0] = 1.0;
    return v;
  }
  const double x = abs_alpha * abs_alpha;
  // Poisson weights by a stable upward recurrence; retained mass decides
  // whether n_max is acceptable for this |alpha|.
  double retained = 0.0;
  std::vector<double> p(cfg.dim());
  double log_nf = 0.0;
  for (int n = 0; n <= cfg.n_max; ++n) {
    if (n > 0) log_nf += std::log(static_cast<double>(n));
    p[n] = std::exp(-x + n * std::log(x) - log_nf);
    retained += p[n];
  }
  double tail = 1.0 - retained;
  if (!(tail <= 1e-12))
    throw TruncationInsufficient("coherent_state: Poisson tail above n_max is " +
                                 std::to_string(tail) + " for |alpha| = " +
                                 std::to_string(abs_alpha));
  for (int n = 0; n <= cfg.n_max; ++n) {
    double mag = std::sqrt(p[n] / retained);
    v.amp[n] = std::polar(mag, phase_angle * n);
  }
  return v;
}

}  // namespace phasekit
