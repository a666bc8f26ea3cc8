#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "phasekit/fock.hpp"
#include "phasekit/quadrature.hpp"

namespace phasekit {

// Even spans {|0>,|2>,...}, Odd spans {|1>,|3>,...}. The doubled-angle
// operator preserves each sector, so its eigenstates split by parity.
enum class Parity { Even, Odd };

// Plus/Minus are the 1/sqrt(2) (even +- odd) mixtures that diagonalize the
// phase operator itself.
enum class SignBranch { Plus, Minus };

// Parity-sector eigenstate coefficient at lambda in (-1, 1):
//   Even: <2n|lambda,e>   = (1-l^2)^(-1/8) C_n^(1/4)(l) / N_n(1/4)
//   Odd : <2n+1|lambda,o> = (1-l^2)^(+1/8) C_n^(3/4)(l) / N_n(3/4)
// Throws DomainError when |lambda| >= 1 (the even factor diverges there).
double phase_coeff(Parity parity, int n, double lambda);

// Max absolute defect of the three-term coupling relation
//   sqrt(f(2n+1)) c_{n+1} = 2 lambda c_n - sqrt(f(2n-1)) c_{n-1}   (even)
//   sqrt(f(2n+2)) c_{n+1} = 2 lambda c_n - sqrt(f(2n))   c_{n-1}   (odd)
// over n = 0..n_limit, evaluated with phase_coeff. Rounding-level output
// is the working proof that the ultraspherical solution solves the
// eigenvalue problem of the doubled-angle operator.
double recurrence_residual(Parity parity, double lambda, int n_limit);

// Phase eigenvalue of the branch: Plus -> phi in (0, pi/2),
// Minus -> phi - pi in (-pi, -pi/2), with phi = acos(lambda)/2.
double phi_label(double lambda, SignBranch branch);

// Presentation label placing the Minus branch at phi + pi in (pi, 3pi/2);
// equals phi_label + 2pi there.
double phi_display_label(double lambda, SignBranch branch);

// <n|lambda_k,+-> for every grid node; in this construction the
// coefficients are real. Row k spans n = 0..n_max. Even-index entries agree
// across branches; odd-index entries flip sign.
struct PhaseStateTable {
  TruncationConfig cfg;
  QuadratureRule grid;
  std::vector<double> plus;   // size Q * (n_max+1), row-major by node
  std::vector<double> minus;

  int nodes() const { return grid.size(); }
  int state_dim() const { return cfg.dim(); }

  std::span<const double> plus_row(int k) const {
    return {plus.data() + size_t(k) * state_dim(), size_t(state_dim())};
  }
  std::span<const double> minus_row(int k) const {
    return {minus.data() + size_t(k) * state_dim(), size_t(state_dim())};
  }
  std::span<const double> row(int k, SignBranch b) const {
    return b == SignBranch::Plus ? plus_row(k) : minus_row(k);
  }
};

PhaseStateTable build_phase_table(const TruncationConfig& cfg, const QuadratureRule& grid);

// Columnar dump: node,lambda,phi,branch,n,coefficient.
void write_phase_table_csv(std::ostream& out, const PhaseStateTable& table);

}  // namespace phasekit
