#include "phasekit/phase_operators.hpp"

#include <algorithm>
#include <cmath>

#include "phasekit/parallel.hpp"

namespace phasekit {

BandedHermitianOperator build_cos2phi(const TruncationConfig& cfg) {
  cfg.validate();
  const int d = cfg.dim();
  BandedHermitianOperator op{d, 2, Matrix(d, d)};
  for (int n = 0; n + 2 < d; ++n) {
    double v = 0.5 * std::sqrt(f_ratio(n + 1));
    op.mat(n, n + 2) = v;
    op.mat(n + 2, n) = v;
  }
  return op;
}

BandedHermitianOperator build_sin2phi(const TruncationConfig& cfg) {
  cfg.validate();
  const int d = cfg.dim();
  BandedHermitianOperator op{d, 2, Matrix(d, d)};
  for (int n = 0; n + 2 < d; ++n) {
    double v = 0.5 * std::sqrt(f_ratio(n + 1));
    op.mat(n, n + 2) = cx(0.0, -v);
    op.mat(n + 2, n) = cx(0.0, v);
  }
  return op;
}

BandedHermitianOperator build_cos_sq(const TruncationConfig& cfg) {
  BandedHermitianOperator c2 = build_cos2phi(cfg);
  const int d = c2.dim;
  BandedHermitianOperator op{d, 2, Matrix(d, d)};
  for (int i = 0; i < d; ++i) {
    op.mat(i, i) = 0.5;
    for (int j : {i - 2, i + 2})
      if (j >= 0 && j < d) op.mat(i, j) = 0.5 * c2.mat(i, j);
  }
  return op;
}

BandedHermitianOperator build_sin_sq(const TruncationConfig& cfg) {
  BandedHermitianOperator c2 = build_cos2phi(cfg);
  const int d = c2.dim;
  BandedHermitianOperator op{d, 2, Matrix(d, d)};
  for (int i = 0; i < d; ++i) {
    op.mat(i, i) = 0.5;
    for (int j : {i - 2, i + 2})
      if (j >= 0 && j < d) op.mat(i, j) = -0.5 * c2.mat(i, j);
  }
  return op;
}

namespace {

// D A D with D = diag(1/sqrt(n + 1/2)).
Matrix energy_normalized(const TruncationConfig& cfg, const Matrix& a) {
  const int d = cfg.dim();
  Matrix r(d, d);
  for (int i = 0; i < d; ++i) {
    double di = 1.0 / std::sqrt(i + 0.5);
    for (int j = 0; j < d; ++j) r(i, j) = di * a(i, j) / std::sqrt(j + 0.5);
  }
  return r;
}

}  // namespace

BandedHermitianOperator build_cos_sq_direct(const TruncationConfig& cfg) {
  QuadratureOperators ops = build_quadratures(cfg);
  Matrix q2 = ops.position.mat * ops.position.mat;
  return {cfg.dim(), 2, energy_normalized(cfg, q2)};
}

BandedHermitianOperator build_sin_sq_direct(const TruncationConfig& cfg) {
  QuadratureOperators ops = build_quadratures(cfg);
  Matrix p2 = ops.momentum.mat * ops.momentum.mat;
  return {cfg.dim(), 2, energy_normalized(cfg, p2)};
}

BandedHermitianOperator build_spectral_operator(const PhaseStateTable& table,
                                                const SpectralFunction& func,
                                                const SpectralBuildOptions& opts,
                                                SpectralBuildInfo* info) {
  const int d = table.state_dim();
  const int q = table.nodes();
  // Per-node scalar factors: phi-measure times branch symbol.
  std::vector<double> cp(q), cm(q);
  std::vector<char> keep(q, 1);
  int dropped = 0;
  for (int k = 0; k < q; ++k) {
    double phi = table.grid.phi[k];
    double gp = func.plus(phi);
    double gm = func.minus(phi - M_PI);
    if (opts.symbol_cap > 0.0 &&
        (std::fabs(gp) > opts.symbol_cap || std::fabs(gm) > opts.symbol_cap)) {
      keep[k] = 0;
      ++dropped;
      continue;
    }
    double measure = table.grid.weight[k] * 2.0 * std::sin(2.0 * phi);
    cp[k] = measure * gp;
    cm[k] = measure * gm;
  }
  if (info) info->dropped_nodes = dropped;

  // Upper triangle accumulated in ascending node order for every (i, j);
  // mirrored afterwards so the output is symmetric to the bit.
  std::vector<double> acc(size_t(d) * d, 0.0);
  const int block = 48;
  const int nblocks = (d + block - 1) / block;
  parallel_for(nblocks, [&](int blo, int bhi) {
    for (int b = blo; b < bhi; ++b) {
      const int ilo = b * block;
      const int ihi = std::min(d, ilo + block);
      for (int k = 0; k < q; ++k) {
        if (!keep[k]) continue;
        const double* vp = table.plus.data() + size_t(k) * d;
        const double* vm = table.minus.data() + size_t(k) * d;
        for (int i = ilo; i < ihi; ++i) {
          double ap = cp[k] * vp[i];
          double am = cm[k] * vm[i];
          double* out = acc.data() + size_t(i) * d;
          for (int j = i; j < d; ++j) out[j] += ap * vp[j] + am * vm[j];
        }
      }
    }
  });

  BandedHermitianOperator op{d, d - 1, Matrix(d, d)};
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      op.mat(i, j) = acc[size_t(i) * d + j];
      op.mat(j, i) = acc[size_t(i) * d + j];
    }
  return op;
}

BandedHermitianOperator build_resolution_identity(const PhaseStateTable& table) {
  return build_spectral_operator(
      table, {[](double) { return 1.0; }, [](double) { return 1.0; }});
}

BandedHermitianOperator build_phi(const PhaseStateTable& table) {
  return build_spectral_operator(
      table, {[](double phi) { return phi; }, [](double ev) { return ev; }});
}

BandedHermitianOperator build_phi_display(const PhaseStateTable& table) {
  return build_spectral_operator(
      table, {[](double phi) { return phi; }, [](double ev) { return ev + 2.0 * M_PI; }});
}

BandedHermitianOperator build_cos_phi(const PhaseStateTable& table) {
  return build_spectral_operator(
      table, {[](double phi) { return std::cos(phi); }, [](double ev) { return std::cos(ev); }});
}

BandedHermitianOperator build_sin_phi(const PhaseStateTable& table) {
  return build_spectral_operator(
      table, {[](double phi) { return std::sin(phi); }, [](double ev) { return std::sin(ev); }});
}

BandedHermitianOperator build_tan_phi(const PhaseStateTable& table, double symbol_cap,
                                      SpectralBuildInfo* info) {
  SpectralBuildOptions opts;
  opts.symbol_cap = symbol_cap;
  return build_spectral_operator(
      table, {[](double phi) { return std::tan(phi); }, [](double ev) { return std::tan(ev); }},
      opts, info);
}

CommutatorReport check_comm_relations(const TruncationConfig& cfg) {
  const int top = cfg.interior_max();
  BandedHermitianOperator c2 = build_cos2phi(cfg);
  QuadratureOperators qo = build_quadratures(cfg);
  LadderPair ladder = build_ladder(cfg);

  Matrix lhs = commutator(c2.mat, qo.number.mat);
  Matrix rhs = energy_normalized(
      cfg, ladder.annihilation * ladder.annihilation - ladder.creation * ladder.creation);

  auto interior_max_diff = [&](const Matrix& a, const Matrix& b) {
    double m = 0.0;
    for (int i = 0; i <= top; ++i)
      for (int j = 0; j <= top; ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
  };

  CommutatorReport report;
  report.dev_cos2phi_number = interior_max_diff(lhs, rhs);
  Matrix half = lhs * cx(0.5);
  report.dev_cos_sq_number =
      interior_max_diff(commutator(build_cos_sq(cfg).mat, qo.number.mat), half);
  Matrix neg_half = lhs * cx(-0.5);
  report.dev_sin_sq_number =
      interior_max_diff(commutator(build_sin_sq(cfg).mat, qo.number.mat), neg_half);
  return report;
}

EigenRange cos2phi_block_eigen_range(const TruncationConfig& cfg, Parity parity) {
  cfg.validate();
  // Sector indices m with states |2m> resp. |2m+1>; couplings are the
  // (m, m+1) entries sqrt(f(2m+1))/2 resp. sqrt(f(2m+2))/2.
  int count = parity == Parity::Even ? cfg.n_max / 2 + 1 : cfg.n_max / 2;
  std::vector<double> diag(count, 0.0), off(count - 1);
  for (int m = 0; m + 1 < count; ++m) {
    long idx = parity == Parity::Even ? 2L * m + 1 : 2L * m + 2;
    off[m] = 0.5 * std::sqrt(f_ratio(idx));
  }
  return tridiagonal_eigen_range(diag, off);
}

double expectation(const BandedHermitianOperator& op, const FockVector& psi) {
  if (op.dim != psi.dim()) throw DimensionMismatch("expectation: dimension mismatch");
  std::vector<cx> w = op.mat.apply(psi.amp);
  return inner(psi.amp, w).real();
}

}  // namespace phasekit
