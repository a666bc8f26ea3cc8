#include "phasekit/gegenbauer.hpp"

#include <cmath>

namespace phasekit {

double gegenbauer_eval(GegenbauerOrder order, int n, double x) {
  if (n < 0) throw DomainError("gegenbauer_eval: negative order");
  const double a = order.alpha;
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 2.0 * a * x;
  for (int k = 1; k < n; ++k) {
    double next = (2.0 * (k + a) * x * cur - (k + 2.0 * a - 1.0) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> gegenbauer_eval_all(GegenbauerOrder order, int n, double x) {
  if (n < 0) throw DomainError("gegenbauer_eval_all: negative order");
  const double a = order.alpha;
  std::vector<double> c(size_t(n) + 1);
  c[0] = 1.0;
  if (n == 0) return c;
  c[1] = 2.0 * a * x;
  for (int k = 1; k < n; ++k)
    c[k + 1] = (2.0 * (k + a) * x * c[k] - (k + 2.0 * a - 1.0) * c[k - 1]) / (k + 1.0);
  return c;
}

double gegenbauer_norm_sq(GegenbauerOrder order, int n) {
  if (n < 0) throw DomainError("gegenbauer_norm_sq: negative order");
  const double a = order.alpha;
  // lgamma returns log|Gamma|. For alpha in (-1/2, 0) with n = 0 the signs of
  // Gamma(2a) and (n+a) cancel, so magnitudes alone give the (positive) value.
  double log_val = (1.0 - 2.0 * a) * std::log(2.0) + std::log(M_PI) +
                   std::lgamma(n + 2.0 * a) - std::log(std::fabs(n + a)) -
                   std::lgamma(n + 1.0) - 2.0 * std::lgamma(a);
  return std::exp(log_val);
}

}  // namespace phasekit
