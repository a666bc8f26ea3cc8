#include "phasekit/phase_states.hpp"

#include <cmath>
#include <ostream>

#include "phasekit/gegenbauer.hpp"
#include "phasekit/parallel.hpp"

namespace phasekit {

namespace {

GegenbauerOrder sector_order(Parity p) {
  return GegenbauerOrder(p == Parity::Even ? 0.25 : 0.75);
}

double sector_exponent(Parity p) { return p == Parity::Even ? -0.125 : 0.125; }

// sqrt(f(.)) arguments for the sector recurrences: even couples through
// odd f-indices, odd through even ones.
long coupling_index(Parity p, int n, int step) {
  return p == Parity::Even ? 2L * n + step : 2L * n + 1 + step;
}

}  // namespace

double phase_coeff(Parity parity, int n, double lambda) {
  if (!(std::fabs(lambda) < 1.0))
    throw DomainError("phase_coeff: lambda must lie strictly inside (-1, 1)");
  GegenbauerOrder order = sector_order(parity);
  double weight = std::pow(1.0 - lambda * lambda, sector_exponent(parity));
  return gegenbauer_eval(order, n, lambda) / std::sqrt(gegenbauer_norm_sq(order, n)) * weight;
}

double recurrence_residual(Parity parity, double lambda, int n_limit) {
  double worst = 0.0;
  double c_prev = 0.0;  // n = -1 entry never contributes: its factor is f(<=0) = 0
  double c_cur = phase_coeff(parity, 0, lambda);
  for (int n = 0; n <= n_limit; ++n) {
    double c_next = phase_coeff(parity, n + 1, lambda);
    double lhs = std::sqrt(f_ratio(coupling_index(parity, n, +1))) * c_next;
    double rhs = 2.0 * lambda * c_cur -
                 std::sqrt(f_ratio(coupling_index(parity, n, -1))) * c_prev;
    worst = std::max(worst, std::fabs(lhs - rhs));
    c_prev = c_cur;
    c_cur = c_next;
  }
  return worst;
}

double phi_label(double lambda, SignBranch branch) {
  double phi = 0.5 * std::acos(lambda);
  return branch == SignBranch::Plus ? phi : phi - M_PI;
}

double phi_display_label(double lambda, SignBranch branch) {
  double phi = 0.5 * std::acos(lambda);
  return branch == SignBranch::Plus ? phi : phi + M_PI;
}

PhaseStateTable build_phase_table(const TruncationConfig& cfg, const QuadratureRule& grid) {
  cfg.validate();
  PhaseStateTable table;
  table.cfg = cfg;
  table.grid = grid;
  const int dim = cfg.dim();
  const int q = grid.size();
  const int even_count = cfg.n_max / 2;  // even polynomial orders 0..even_count
  const int odd_count = cfg.n_max / 2 - 1;
  table.plus.assign(size_t(q) * dim, 0.0);
  table.minus.assign(size_t(q) * dim, 0.0);

  const GegenbauerOrder even_order(0.25), odd_order(0.75);
  std::vector<double> even_inv_norm(even_count + 1), odd_inv_norm(odd_count + 1);
  for (int m = 0; m <= even_count; ++m)
    even_inv_norm[m] = 1.0 / std::sqrt(gegenbauer_norm_sq(even_order, m));
  for (int m = 0; m <= odd_count; ++m)
    odd_inv_norm[m] = 1.0 / std::sqrt(gegenbauer_norm_sq(odd_order, m));

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  parallel_for(q, [&](int lo, int hi) {
    for (int k = lo; k < hi; ++k) {
      double lambda = grid.lambda[k];
      double one_m = 1.0 - lambda * lambda;
      double even_weight = std::pow(one_m, -0.125);
      double odd_weight = std::pow(one_m, 0.125);
      std::vector<double> ce = gegenbauer_eval_all(even_order, even_count, lambda);
      std::vector<double> co = gegenbauer_eval_all(odd_order, odd_count, lambda);
      double* vp = table.plus.data() + size_t(k) * dim;
      double* vm = table.minus.data() + size_t(k) * dim;
      for (int m = 0; m <= even_count; ++m) {
        double c = inv_sqrt2 * even_inv_norm[m] * even_weight * ce[m];
        vp[2 * m] = c;
        vm[2 * m] = c;
      }
      for (int m = 0; m <= odd_count; ++m) {
        double c = inv_sqrt2 * odd_inv_norm[m] * odd_weight * co[m];
        vp[2 * m + 1] = c;
        vm[2 * m + 1] = -c;
      }
    }
  });
  return table;
}

void write_phase_table_csv(std::ostream& out, const PhaseStateTable& table) {
  out << "node,lambda,phi,branch,n,coefficient\n";
  char buf[512];
  for (int k = 0; k < table.nodes(); ++k) {
    for (int b = 0; b < 2; ++b) {
      SignBranch branch = b == 0 ? SignBranch::Plus : SignBranch::Minus;
      auto row = table.row(k, branch);
      double phi = phi_label(table.grid.lambda[k], branch);
      for (int n = 0; n < table.state_dim(); ++n) {
        std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%s,%d,%.17g\n", k,
                      table.grid.lambda[k], phi, b == 0 ? "plus" : "minus", n, row[n]);
        out << buf;
      }
    }
  }
}

}  // namespace phasekit
