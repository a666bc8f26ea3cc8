#include "phasekit/tridiagonal.hpp"

#include <cmath>
#include <limits>

#include "phasekit/errors.hpp"

namespace phasekit {

int tridiagonal_count_below(const std::vector<double>& diag, const std::vector<double>& off,
                            double x) {
  const size_t m = diag.size();
  if (m == 0) return 0;
  if (off.size() + 1 != m) throw DimensionMismatch("tridiagonal: off-diagonal length");
  const double tiny = std::numeric_limits<double>::min();
  int count = 0;
  double q = diag[0] - x;
  if (q < 0.0) ++count;
  for (size_t i = 1; i < m; ++i) {
    if (q == 0.0) q = tiny;
    q = diag[i] - x - off[i - 1] * off[i - 1] / q;
    if (q < 0.0) ++count;
  }
  return count;
}

namespace {

double bisect_for_count(const std::vector<double>& diag, const std::vector<double>& off,
                        int target, double lo, double hi, double tol) {
  // Invariant: count(lo) < target <= count(hi); converges to the eigenvalue
  // at which the count first reaches target.
  while (hi - lo > tol * std::max(1.0, std::fabs(lo) + std::fabs(hi))) {
    double mid = 0.5 * (lo + hi);
    if (tridiagonal_count_below(diag, off, mid) >= target)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

EigenRange tridiagonal_eigen_range(const std::vector<double>& diag,
                                   const std::vector<double>& off, double tol) {
  const size_t m = diag.size();
  if (m == 0) throw DimensionMismatch("tridiagonal_eigen_range: empty matrix");
  // Gershgorin bracket
  double lo = diag[0], hi = diag[0];
  for (size_t i = 0; i < m; ++i) {
    double r = 0.0;
    if (i > 0) r += std::fabs(off[i - 1]);
    if (i + 1 < m) r += std::fabs(off[i]);
    lo = std::fmin(lo, diag[i] - r);
    hi = std::fmax(hi, diag[i] + r);
  }
  lo -= 1e-8;
  hi += 1e-8;
  EigenRange range;
  range.min = bisect_for_count(diag, off, 1, lo, hi, tol);
  range.max = bisect_for_count(diag, off, static_cast<int>(m), lo, hi, tol);
  return range;
}

}  // namespace phasekit
