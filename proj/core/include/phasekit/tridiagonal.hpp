#pragma once

#include <vector>

namespace phasekit {

// Eigenvalue extremes of a real symmetric tridiagonal matrix with diagonal
// diag[0..m) and off-diagonal off[0..m-1), located by Sturm-count bisection.
struct EigenRange {
  double min;
  double max;
};

// Number of eigenvalues strictly below x (Sturm sequence count).
int tridiagonal_count_below(const std::vector<double>& diag, const std::vector<double>& off,
                            double x);

EigenRange tridiagonal_eigen_range(const std::vector<double>& diag,
                                   const std::vector<double>& off, double tol = 1e-13);

}  // namespace phasekit
