#include <doctest.h>

#include <cmath>

#include "phasekit/observables.hpp"

using namespace phasekit;

namespace {

const TruncationConfig kCfg(128, 4);

const PhaseStateTable& shared_table() {
  static PhaseStateTable table = build_phase_table(kCfg, build_quadrature(1024));
  return table;
}

// Independent series oracle for the coherent radial factor: termwise with
// tgamma factorials, no incremental recurrence.
double series_factor_oracle(double x) {
  double sum = 0.0;
  for (int n = 0; n < 400; ++n) {
    double term = std::exp(-x + (n + 1) * std::log(x) - std::lgamma(n + 1.0)) /
                  std::sqrt((n + 2.5) * (n + 0.5));
    sum += term;
  }
  return sum;
}

}  // namespace

TEST_CASE("exact fractions of the low number states") {
  const Rational m4[] = {Rational(7, 20), Rational(9, 28), Rational(5, 12)};
  const Rational m6[] = {Rational(11, 40), Rational(13, 56), Rational(3, 8)};
  for (int n = 0; n < 3; ++n) {
    CHECK(moment_even_exact(n, 2) == m4[n]);
    CHECK(moment_even_exact(n, 3) == m6[n]);
  }
  CHECK(moment_even_exact(0, 2).to_string() == "7/20");
  CHECK(moment_even_exact(2, 3).to_string() == "3/8");
  for (int n = 0; n <= 50; ++n) CHECK(moment_even_exact(n, 1) == Rational(1, 2));
}

TEST_CASE("closed form of the squared doubled-angle diagonal") {
  // <n| cos^2 2phi |n> = (f(n+1) + f(n-1))/4 drives the k = 2, 3 moments
  for (int n = 0; n <= 10; ++n) {
    double expect = 0.25 + (f_ratio(n + 1) + f_ratio(n - 1)) / 16.0;
    CHECK(moment_even(n, 2, kCfg) == doctest::Approx(expect).epsilon(1e-14));
  }
}

TEST_CASE("band route matches the exact route in floating point") {
  for (int k = 1; k <= 3; ++k)
    for (int n = 0; n <= 10; ++n)
      CHECK(moment_even(n, k, kCfg) ==
            doctest::Approx(moment_even_exact(n, k).to_double()).epsilon(1e-14));
}

TEST_CASE("band power guard") {
  TruncationConfig tiny(8, 2);
  CHECK_THROWS_AS(moment_even(4, 2, tiny), TruncationInsufficient);
  CHECK_THROWS_AS(moment_even(0, -1, tiny), DomainError);
}

TEST_CASE("uniform moments") {
  CHECK(uniform_moment(1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(uniform_moment(2) == doctest::Approx(0.375).epsilon(1e-15));
  CHECK(uniform_moment(3) == doctest::Approx(0.3125).epsilon(1e-15));
  CHECK(uniform_moment(4) == doctest::Approx(35.0 / 128.0).epsilon(1e-15));
  CHECK(uniform_moment_exact(3) == Rational(5, 16));
  CHECK_THROWS_AS(uniform_moment(0), DomainError);
  CHECK_THROWS_AS(uniform_moment(31), DomainError);
}

TEST_CASE("combinatorial limit identity") {
  for (int k = 1; k <= 20; ++k) {
    UniformLimitIdentity id = uniform_limit_identity(k);
    CHECK(id.combinatorial == id.uniform);
  }
  UniformLimitIdentity two = uniform_limit_identity(2);
  CHECK(two.combinatorial == Rational(3, 8));
}

TEST_CASE("high number states approach the uniform moments") {
  TruncationConfig big(1012, 4);
  CHECK(std::fabs(moment_even(1000, 2, big) - uniform_moment(2)) <= 1e-5);
  CHECK(std::fabs(moment_even(1000, 3, big) - uniform_moment(3)) <= 1e-5);
}

TEST_CASE("moment sidedness against the uniform values") {
  for (int k : {2, 3, 4})
    for (int n = 0; n <= 10; ++n) {
      MomentReport report = make_moment_report(n, k, kCfg);
      if (n <= 1)
        CHECK(report.side == MomentSide::BelowUniform);
      else
        CHECK(report.side == MomentSide::AboveUniform);
    }
  MomentReport base = make_moment_report(5, 1, kCfg);
  CHECK(base.side == MomentSide::Equal);
}

TEST_CASE("odd spectral moments vanish; even ones match the band route") {
  const PhaseStateTable& table = shared_table();
  BandedHermitianOperator cos_phi = build_cos_phi(table);
  BandedHermitianOperator sin_phi = build_sin_phi(table);
  for (int n : {0, 3})
    for (int k : {0, 1}) {
      CHECK(std::fabs(spectral_moment(cos_phi, n, 2 * k + 1)) <= 1e-8);
      CHECK(std::fabs(spectral_moment(sin_phi, n, 2 * k + 1)) <= 1e-8);
    }
  for (int k = 1; k <= 3; ++k)
    for (int n = 0; n <= 10; ++n) {
      double band = moment_even(n, k, kCfg);
      CHECK(std::fabs(spectral_moment(cos_phi, n, 2 * k) - band) <= 2e-3);
      CHECK(std::fabs(spectral_moment(sin_phi, n, 2 * k) - band) <= 2e-3);
      // the cosine and sine routes also agree with each other
      CHECK(std::fabs(spectral_moment(cos_phi, n, 2 * k) -
                      spectral_moment(sin_phi, n, 2 * k)) <= 2e-3);
    }
}

TEST_CASE("vacuum angle distribution") {
  const PhaseStateTable& table = shared_table();
  FockVector vac = fock_state(kCfg, 0);
  auto rows = phase_distribution(vac, table);

  SUBCASE("unit mass under the grid weights") {
    CHECK(std::fabs(phase_distribution_total(rows, table.grid) - 1.0) <= 1e-6);
  }

  SUBCASE("peak value at the interval midpoint") {
    double expect = 1.0 / (std::sqrt(M_PI) * std::tgamma(0.75) / std::tgamma(1.25));
    double got = phase_density_at(vac, 0.25 * M_PI, SignBranch::Plus);
    CHECK(got == doctest::Approx(expect).epsilon(1e-12));
    CHECK(got == doctest::Approx(0.41731342083703643).epsilon(1e-12));
    // Minus branch accepts the display label
    CHECK(phase_density_at(vac, 1.25 * M_PI, SignBranch::Minus) ==
          doctest::Approx(got).epsilon(1e-12));
  }

  SUBCASE("density dies toward the interval ends") {
    double peak = phase_density_at(vac, 0.25 * M_PI, SignBranch::Plus);
    double mid = phase_density_at(vac, 0.1, SignBranch::Plus);
    double edge = phase_density_at(vac, 1e-3, SignBranch::Plus);
    CHECK(edge < mid);
    CHECK(mid < peak);
    CHECK(edge < 0.05);
  }

  SUBCASE("visibly non-uniform: spread exceeds a factor of two") {
    double lo = 1e300, hi = 0.0;
    for (const auto& row : rows) {
      lo = std::fmin(lo, row.density);
      hi = std::fmax(hi, row.density);
    }
    CHECK(hi / lo > 2.0);
  }

  SUBCASE("branches carry their display intervals") {
    for (const auto& row : rows) {
      if (row.branch == SignBranch::Plus) {
        CHECK(row.phi > 0.0);
        CHECK(row.phi < 0.5 * M_PI);
      } else {
        CHECK(row.phi > M_PI);
        CHECK(row.phi < 1.5 * M_PI);
      }
    }
  }
}

TEST_CASE("coherent series factor") {
  CHECK(coherent_series_factor(0.0) == 0.0);
  // frozen from the termwise oracle
  CHECK(coherent_series_factor(4.0) == doctest::Approx(0.89279782634033567).epsilon(1e-13));
  for (double x : {1.0, 4.0, 16.0, 64.0})
    CHECK(coherent_series_factor(x) == doctest::Approx(series_factor_oracle(x)).epsilon(1e-13));
  // monotone approach to one
  CHECK(coherent_series_factor(16.0) > coherent_series_factor(4.0));
  CHECK(coherent_series_factor(64.0) > coherent_series_factor(16.0));
  CHECK(coherent_series_factor(64.0) < 1.0);
}

TEST_CASE("coherent expectations: series against matrices") {
  TruncationConfig small(64, 4);
  CHECK(coherent_cos2phi_series(0.0, 0.7) == 0.0);
  // the angle-dependent prefactor kills the expectation at phase pi/4
  CHECK(std::fabs(coherent_cos2phi_series(2.0, 0.25 * M_PI)) <= 1e-15);
  for (double phase : {0.0, 0.3, 1.2}) {
    CHECK(std::fabs(coherent_cos2phi_series(2.0, phase) -
                    coherent_cos2phi_matrix(2.0, phase, small)) <= 1e-10);
    CHECK(std::fabs(coherent_comm_h_series(2.0, phase) -
                    coherent_comm_h_matrix(2.0, phase, small)) <= 1e-10);
  }
}

TEST_CASE("classical limit table") {
  TruncationConfig cfg(256, 4);
  auto rows = classical_limit_report({2.0, 4.0, 8.0}, M_PI / 6.0, cfg);
  REQUIRE(rows.size() == 12);

  SUBCASE("relative deviations shrink as |alpha| grows") {
    for (int q = 0; q < 4; ++q) {
      CHECK(rows[4 + q].rel_dev < rows[q].rel_dev);
      CHECK(rows[8 + q].rel_dev < rows[4 + q].rel_dev);
    }
  }

  SUBCASE("one percent at the largest amplitude") {
    for (int q = 0; q < 4; ++q) CHECK(rows[8 + q].rel_dev <= 1e-2);
    // the doubled-angle expectation is also inside 0.01 absolutely
    CHECK(rows[8].abs_dev <= 1e-2);
  }

  SUBCASE("matrix and series routes agree row by row") {
    for (const auto& row : rows) CHECK(std::fabs(row.quantum - row.series) <= 1e-10);
  }

  SUBCASE("classical targets carry the bracket values") {
    CHECK(rows[0].classical == doctest::Approx(std::cos(M_PI / 3.0)));
    CHECK(rows[1].classical == doctest::Approx(2.0 * std::sin(M_PI / 3.0)));
    CHECK(rows[2].classical == doctest::Approx(std::sin(M_PI / 3.0)));
    CHECK(rows[3].classical == doctest::Approx(-std::sin(M_PI / 3.0)));
  }

  SUBCASE("amplitude beyond the basis propagates the guard") {
    TruncationConfig tiny(32, 4);
    CHECK_THROWS_AS(classical_limit_report({8.0}, 0.0, tiny), TruncationInsufficient);
  }
}
