// Seeded-generator property checks for the invariants that hold on whole
// input families rather than at hand-picked points.

#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <sstream>

#include "phasekit/dynamics.hpp"
#include "phasekit/matrix_io.hpp"
#include "phasekit/observables.hpp"
#include "phasekit/phase_operators.hpp"

using namespace phasekit;

namespace {

// xorshift64*: small, seeded, portable
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    state ^= state >> 12;
    state ^= state << 25;
    state ^= state >> 27;
    return state * 0x2545f4914f6cdd1dull;
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * (next() >> 11) * 0x1.0p-53;
  }

  int integer(int lo, int hi) { return lo + int(next() % std::uint64_t(hi - lo + 1)); }
};

Matrix random_hermitian(Rng& rng, int d) {
  Matrix m(d, d);
  for (int i = 0; i < d; ++i) {
    m(i, i) = rng.uniform(-1.0, 1.0);
    for (int j = i + 1; j < d; ++j) {
      cx v(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
      m(i, j) = v;
      m(j, i) = std::conj(v);
    }
  }
  return m;
}

FockVector random_state(Rng& rng, const TruncationConfig& cfg) {
  FockVector v;
  v.amp.resize(cfg.dim());
  for (auto& a : v.amp) a = cx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  double norm = v.norm();
  for (auto& a : v.amp) a /= norm;
  return v;
}

}  // namespace

TEST_CASE("coupling recurrence holds across the whole open interval") {
  Rng rng(0x5eed0001);
  for (int trial = 0; trial < 40; ++trial) {
    double lambda = rng.uniform(-0.999, 0.999);
    Parity parity = rng.integer(0, 1) == 0 ? Parity::Even : Parity::Odd;
    CHECK(recurrence_residual(parity, lambda, 150) <= 1e-10);
  }
}

TEST_CASE("exact and floating moment routes agree on random (n, k)") {
  TruncationConfig cfg(96, 4);
  Rng rng(0x5eed0002);
  for (int trial = 0; trial < 25; ++trial) {
    int k = rng.integer(1, 4);
    int n = rng.integer(0, cfg.interior_max() - 2 * k);
    double band = moment_even(n, k, cfg);
    double exact = moment_even_exact(n, k).to_double();
    CHECK(band == doctest::Approx(exact).epsilon(1e-13));
    // every even moment lies in (0, 1]
    CHECK(band > 0.0);
    CHECK(band <= 1.0);
  }
}

TEST_CASE("transport composes and preserves norms on random operators") {
  Rng rng(0x5eed0003);
  TruncationConfig cfg(24, 2);
  for (int trial = 0; trial < 12; ++trial) {
    BandedHermitianOperator a{cfg.dim(), cfg.dim() - 1, random_hermitian(rng, cfg.dim())};
    double t1 = rng.uniform(-6.0, 6.0);
    double t2 = rng.uniform(-6.0, 6.0);
    BandedHermitianOperator one = heisenberg(heisenberg(a, EvolutionTime{t1}), EvolutionTime{t2});
    BandedHermitianOperator both = heisenberg(a, EvolutionTime{t1 + t2});
    CHECK(one.mat.max_abs_diff(both.mat) <= 1e-12);
    CHECK(heisenberg(a, EvolutionTime{t1}).mat.frobenius_norm() ==
          doctest::Approx(a.mat.frobenius_norm()).epsilon(1e-12));
    // Hermiticity survives transport
    CHECK(heisenberg(a, EvolutionTime{t1}).mat.hermiticity_error() <= 1e-15);
  }
}

TEST_CASE("state evolution is unitary and composes on random states") {
  Rng rng(0x5eed0004);
  TruncationConfig cfg(64, 4);
  for (int trial = 0; trial < 12; ++trial) {
    FockVector v = random_state(rng, cfg);
    double t1 = rng.uniform(-4.0, 4.0), t2 = rng.uniform(-4.0, 4.0);
    FockVector w = evolve_state(evolve_state(v, EvolutionTime{t1}), EvolutionTime{t2});
    FockVector u = evolve_state(v, EvolutionTime{t1 + t2});
    double worst = 0.0;
    for (int n = 0; n < cfg.dim(); ++n) worst = std::fmax(worst, std::abs(w.amp[n] - u.amp[n]));
    CHECK(worst <= 1e-13);
    CHECK(std::fabs(w.norm() - 1.0) <= 1e-13);
  }
}

TEST_CASE("expectations of Hermitian operators are real on random states") {
  Rng rng(0x5eed0005);
  TruncationConfig cfg(64, 4);
  BandedHermitianOperator c2 = build_cos2phi(cfg);
  BandedHermitianOperator cos_sq = build_cos_sq(cfg);
  for (int trial = 0; trial < 10; ++trial) {
    FockVector v = random_state(rng, cfg);
    std::vector<cx> w = c2.mat.apply(v.amp);
    CHECK(std::fabs(inner(v.amp, w).imag()) <= 1e-14);
    // squared-cosine expectation lies in [0, 1]
    double e = expectation(cos_sq, v);
    CHECK(e >= -1e-12);
    CHECK(e <= 1.0 + 1e-12);
    // doubled-angle expectation lies in (-1, 1)
    double d = expectation(c2, v);
    CHECK(std::fabs(d) <= 1.0);
  }
}

TEST_CASE("matrix container round-trips random payloads") {
  Rng rng(0x5eed0006);
  for (int trial = 0; trial < 8; ++trial) {
    int rows = rng.integer(1, 12), cols = rng.integer(1, 12);
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        m(i, j) = cx(rng.uniform(-1e12, 1e12), rng.uniform(-1.0, 1.0) * 1e-200);
    std::stringstream buf(std::ios::in | std::ios::out | std::ios::binary);
    write_matrix_binary(buf, m);
    CHECK(read_matrix_binary(buf).bit_equal(m));
  }
}

TEST_CASE("rational arithmetic round-trips against doubles") {
  Rng rng(0x5eed0007);
  for (int trial = 0; trial < 50; ++trial) {
    long long p = rng.integer(-8000, 8000);
    long long q = rng.integer(1, 8000);
    long long r = rng.integer(-8000, 8000);
    long long s = rng.integer(1, 8000);
    Rational a(p, q), b(r, s);
    CHECK((a + b).to_double() ==
          doctest::Approx(a.to_double() + b.to_double()).epsilon(1e-12));
    CHECK((a * b).to_double() ==
          doctest::Approx(a.to_double() * b.to_double()).epsilon(1e-12));
    CHECK((a - b) + b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("coherent angle density peaks at the coherent phase") {
  TruncationConfig cfg(128, 4);
  PhaseStateTable table = build_phase_table(cfg, build_quadrature(512));
  for (double phase : {0.4, 0.9, 1.2}) {
    FockVector state = coherent_state(cfg, 3.0, phase);
    auto rows = phase_distribution(state, table);
    // Plus rows occupy the first half of the output
    int best = 0;
    for (int k = 0; k < table.nodes(); ++k)
      if (rows[k].density > rows[best].density) best = k;
    CHECK(std::fabs(rows[best].phi - phase) <= 0.05);
  }
}
