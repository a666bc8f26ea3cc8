#pragma once

#include <vector>

#include "phasekit/errors.hpp"

namespace phasekit {

// Ultraspherical family index. Orthogonality on [-1,1] against
// (1-x^2)^(alpha-1/2) needs alpha > -1/2.
struct GegenbauerOrder {
  double alpha;

  explicit GegenbauerOrder(double a) : alpha(a) {
    if (!(alpha > -0.5)) throw DomainError("GegenbauerOrder: alpha must exceed -1/2");
  }
};

// C_n^(alpha)(x) by the three-term recurrence
//   C_0 = 1, C_1 = 2 a x, (n+1) C_{n+1} = 2(n+a) x C_n - (n+2a-1) C_{n-1}.
double gegenbauer_eval(GegenbauerOrder order, int n, double x);

// All orders 0..n in one sweep.
std::vector<double> gegenbauer_eval_all(GegenbauerOrder order, int n, double x);

// Squared weighted L2 norm of C_n^(alpha):
//   2^(1-2a) pi Gamma(n+2a) / ((n+a) n! Gamma(a)^2),
// evaluated through lgamma so large n stays in range.
double gegenbauer_norm_sq(GegenbauerOrder order, int n);

}  // namespace phasekit
