#include "phasekit/observables.hpp"

#include <cmath>

namespace phasekit {

namespace {

double binomial_double(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// f(n) = 4n(n+1) / ((2n-1)(2n+3)) as an exact fraction, 0 for n <= 0.
Rational f_ratio_exact(long n) {
  if (n <= 0) return Rational(0);
  return Rational::from_int128(__int128(4) * n * (n + 1),
                               __int128(2 * n - 1) * (2 * n + 3));
}

MomentSide classify_side(double value, double uniform) {
  if (std::fabs(value - uniform) <= 1e-12) return MomentSide::Equal;
  return value < uniform ? MomentSide::BelowUniform : MomentSide::AboveUniform;
}

}  // namespace

double moment_even(int n, int k, const TruncationConfig& cfg) {
  cfg.validate();
  if (n < 0 || k < 1) throw DomainError("moment_even: need n >= 0, k >= 1");
  if (n + 2 * k > cfg.interior_max())
    throw TruncationInsufficient("moment_even: band power reaches the truncation edge");
  BandedHermitianOperator c2 = build_cos2phi(cfg);
  // diag[t] = <n| C^t |n> for even t; C keeps real vectors real.
  const int applications = 2 * (k / 2);
  std::vector<double> diag{1.0};
  std::vector<cx> u(cfg.dim(), cx(0.0));
  u[n] = 1.0;
  for (int t = 1; t <= applications; ++t) {
    u = c2.mat.apply(u);
    if (t % 2 == 0) diag.push_back(u[n].real());
  }
  double sum = 0.0;
  for (int m = 0; m <= k / 2; ++m) sum += binomial_double(k, 2 * m) * diag[m];
  return std::ldexp(sum, -k);
}

Rational moment_even_exact(int n, int k) {
  if (n < 0 || k < 1) throw DomainError("moment_even_exact: need n >= 0, k >= 1");
  // Similarity with a diagonal of stacked sqrt(f) factors turns the
  // doubled-angle band into B with B(j, j+2) = f(j+1)/2, B(j+2, j) = 1/2;
  // diagonal entries of powers are unchanged and stay rational.
  const int applications = 2 * (k / 2);
  const int top = n + 2 * applications;
  std::vector<Rational> u(top + 1);
  u[n] = Rational(1);
  const Rational half(1, 2);
  std::vector<Rational> diag{Rational(1)};
  std::vector<Rational> next(top + 1);
  for (int t = 1; t <= applications; ++t) {
    for (int j = 0; j <= top; ++j) {
      Rational acc(0);
      if (j >= 2 && !u[j - 2].is_zero()) acc = acc + half * u[j - 2];
      if (j + 2 <= top && !u[j + 2].is_zero())
        acc = acc + half * f_ratio_exact(j + 1) * u[j + 2];
      next[j] = acc;
    }
    u.swap(next);
    if (t % 2 == 0) diag.push_back(u[n]);
  }
  Rational sum(0);
  for (int m = 0; m <= k / 2; ++m) sum = sum + binomial_rational(k, 2 * m) * diag[m];
  return sum / Rational::from_int128(__int128(1) << k, 1);
}

MomentReport make_moment_report(int n, int k, const TruncationConfig& cfg) {
  MomentReport report;
  report.n = n;
  report.k = k;
  report.value = moment_even(n, k, cfg);
  report.uniform_value = uniform_moment(k);
  report.side = classify_side(report.value, report.uniform_value);
  return report;
}

double spectral_moment(const BandedHermitianOperator& op, int n, int power) {
  if (n < 0 || n >= op.dim) throw IndexOutOfRange("spectral_moment: n outside basis");
  std::vector<cx> u(op.dim, cx(0.0));
  u[n] = 1.0;
  for (int t = 0; t < power; ++t) u = op.mat.apply(u);
  return u[n].real();
}

double uniform_moment(int k) {
  if (k < 1 || k > 30) throw DomainError("uniform_moment: k must be in 1..30");
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r *= (2.0 * i - 1.0) / (2.0 * i);
  return r;
}

Rational uniform_moment_exact(int k) {
  if (k < 1) throw DomainError("uniform_moment_exact: k must be >= 1");
  Rational r(1);
  for (int i = 1; i <= k; ++i) r = r * Rational(2 * i - 1, 2 * i);
  return r;
}

UniformLimitIdentity uniform_limit_identity(int k) {
  if (k < 1 || k > 20) throw DomainError("uniform_limit_identity: k must be in 1..20");
  Rational sum(0);
  for (int m = 0; m <= k / 2; ++m) {
    Rational term = binomial_rational(k, 2 * m) * binomial_rational(2 * m, m) /
                    Rational::from_int128(__int128(1) << (2 * m), 1);
    sum = sum + term;
  }
  sum = sum / Rational::from_int128(__int128(1) << k, 1);
  return {sum, uniform_moment_exact(k)};
}

std::vector<PhaseDensityRow> phase_distribution(const FockVector& state,
                                                const PhaseStateTable& table) {
  if (state.dim() != table.state_dim())
    throw DimensionMismatch("phase_distribution: state/table dimensions differ");
  const int q = table.nodes();
  std::vector<PhaseDensityRow> rows;
  rows.reserve(2 * q);
  for (int b = 0; b < 2; ++b) {
    SignBranch branch = b == 0 ? SignBranch::Plus : SignBranch::Minus;
    for (int k = 0; k < q; ++k) {
      auto v = table.row(k, branch);
      cx overlap = 0.0;
      for (int n = 0; n < table.state_dim(); ++n) overlap += v[n] * std::conj(state.amp[n]);
      double density = 2.0 * std::sin(2.0 * table.grid.phi[k]) * std::norm(overlap);
      rows.push_back({phi_display_label(table.grid.lambda[k], branch), branch, density});
    }
  }
  return rows;
}

double phase_distribution_total(const std::vector<PhaseDensityRow>& rows,
                                const QuadratureRule& grid) {
  const int q = grid.size();
  if (int(rows.size()) != 2 * q)
    throw DimensionMismatch("phase_distribution_total: rows do not match grid");
  double total = 0.0;
  for (int b = 0; b < 2; ++b)
    for (int k = 0; k < q; ++k) total += grid.weight[k] * rows[size_t(b) * q + k].density;
  return total;
}

double phase_density_at(const FockVector& state, double phi, SignBranch branch) {
  if (branch == SignBranch::Minus && phi > M_PI) phi -= M_PI;
  if (!(phi > 0.0 && phi < 0.5 * M_PI))
    throw DomainError("phase_density_at: angle outside the open branch interval");
  double lambda = std::cos(2.0 * phi);
  cx overlap = 0.0;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int n = 0; n < state.dim(); ++n) {
    double c;
    if (n % 2 == 0)
      c = inv_sqrt2 * phase_coeff(Parity::Even, n / 2, lambda);
    else
      c = inv_sqrt2 * phase_coeff(Parity::Odd, (n - 1) / 2, lambda) *
          (branch == SignBranch::Plus ? 1.0 : -1.0);
    overlap += c * std::conj(state.amp[n]);
  }
  return 2.0 * std::sin(2.0 * phi) * std::norm(overlap);
}

double coherent_series_factor(double x) {
  if (x < 0.0) throw DomainError("coherent_series_factor: x must be nonnegative");
  if (x == 0.0) return 0.0;
  // past n ~ x + 10 sqrt(x) the term ratio is bounded well below 1, so a
  // 1e-16 relative term cutoff leaves a tail under 1e-14 of the sum
  const double safe_n = x + 10.0 * std::sqrt(x) + 10.0;
  double sum = 0.0;
  double term = std::exp(-x) * x / std::sqrt(2.5 * 0.5);
  int n = 0;
  while (true) {
    sum += term;
    ++n;
    term *= x / n * std::sqrt(((n + 1.5) * (n - 0.5)) / ((n + 2.5) * (n + 0.5)));
    if (term <= 1e-16 * sum && n > safe_n) break;
    if (n > 1000000) break;
  }
  return sum;
}

double coherent_cos2phi_series(double abs_alpha, double phase_angle) {
  return std::cos(2.0 * phase_angle) * coherent_series_factor(abs_alpha * abs_alpha);
}

double coherent_comm_h_series(double abs_alpha, double phase_angle) {
  return 2.0 * std::sin(2.0 * phase_angle) * coherent_series_factor(abs_alpha * abs_alpha);
}

double coherent_cos2phi_matrix(double abs_alpha, double phase_angle,
                               const TruncationConfig& cfg) {
  FockVector psi = coherent_state(cfg, abs_alpha, phase_angle);
  return expectation(build_cos2phi(cfg), psi);
}

double coherent_comm_h_matrix(double abs_alpha, double phase_angle,
                              const TruncationConfig& cfg) {
  FockVector psi = coherent_state(cfg, abs_alpha, phase_angle);
  BandedHermitianOperator c2 = build_cos2phi(cfg);
  BandedHermitianOperator h = build_quadratures(cfg).hamiltonian;
  Matrix comm = commutator(c2.mat, h.mat) * cx(0.0, -1.0);
  std::vector<cx> w = comm.apply(psi.amp);
  return inner(psi.amp, w).real();
}

std::vector<ClassicalLimitRow> classical_limit_report(const std::vector<double>& abs_alphas,
                                                      double phase_angle,
                                                      const TruncationConfig& cfg) {
  BandedHermitianOperator c2 = build_cos2phi(cfg);
  BandedHermitianOperator cos_sq = build_cos_sq(cfg);
  BandedHermitianOperator sin_sq = build_sin_sq(cfg);
  BandedHermitianOperator h = build_quadratures(cfg).hamiltonian;
  const cx minus_i(0.0, -1.0);
  Matrix comm_c2 = commutator(c2.mat, h.mat) * minus_i;
  Matrix comm_cos_sq = commutator(cos_sq.mat, h.mat) * minus_i;
  Matrix comm_sin_sq = commutator(sin_sq.mat, h.mat) * minus_i;

  double c = std::cos(2.0 * phase_angle);
  double s = std::sin(2.0 * phase_angle);

  std::vector<ClassicalLimitRow> rows;
  for (double a : abs_alphas) {
    FockVector psi = coherent_state(cfg, a, phase_angle);
    double factor = coherent_series_factor(a * a);
    auto expect = [&](const Matrix& m) {
      std::vector<cx> w = m.apply(psi.amp);
      return inner(psi.amp, w).real();
    };
    struct Item {
      const char* name;
      double quantum;
      double series;
      double classical;
    };
    Item items[] = {
        {"cos2phi", expectation(c2, psi), c * factor, c},
        {"comm_cos2phi_h", expect(comm_c2), 2.0 * s * factor, 2.0 * s},
        {"comm_cos_sq_h", expect(comm_cos_sq), s * factor, s},
        {"comm_sin_sq_h", expect(comm_sin_sq), -s * factor, -s},
    };
    for (const Item& item : items) {
      ClassicalLimitRow row;
      row.abs_alpha = a;
      row.quantity = item.name;
      row.quantum = item.quantum;
      row.series = item.series;
      row.classical = item.classical;
      row.abs_dev = std::fabs(item.quantum - item.classical);
      row.rel_dev = item.classical == 0.0 ? row.abs_dev
                                          : row.abs_dev / std::fabs(item.classical);
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace phasekit
