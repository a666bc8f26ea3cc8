#include <doctest.h>

#include <cmath>

#include "phasekit/gegenbauer.hpp"
#include "phasekit/quadrature.hpp"

using namespace phasekit;

TEST_CASE("grid geometry") {
  QuadratureRule rule = build_quadrature(128);
  CHECK(rule.size() == 128);
  CHECK(rule.weight_sum() == doctest::Approx(0.5 * M_PI).epsilon(1e-14));
  for (int k = 0; k < rule.size(); ++k) {
    CHECK(rule.phi[k] > 0.0);
    CHECK(rule.phi[k] < 0.5 * M_PI);
    CHECK(std::fabs(rule.lambda[k]) < 1.0);
    if (k > 0) {
      CHECK(rule.phi[k] > rule.phi[k - 1]);
      CHECK(rule.lambda[k] < rule.lambda[k - 1]);
    }
  }
  CHECK_THROWS_AS(build_quadrature(32), DomainError);
}

TEST_CASE("plain measure integrates constants") {
  QuadratureRule rule = build_quadrature(256);
  double total = integrate_lambda(rule, [](double) { return 1.0; });
  CHECK(total == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("polynomial exactness") {
  QuadratureRule rule = build_quadrature(64);
  // int_-1^1 l^2 dl = 2/3, smooth integrand in phi
  double got = integrate_lambda(rule, [](double l) { return l * l; });
  CHECK(got == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("singular-weight cross term vanishes") {
  QuadratureRule rule = build_quadrature(512);
  GegenbauerOrder quarter(0.25);
  double got = integrate_lambda(rule, [&](double l) {
    double w = std::pow(1.0 - l * l, -0.25);
    return w * gegenbauer_eval(quarter, 0, l) * gegenbauer_eval(quarter, 1, l);
  });
  CHECK(std::fabs(got) <= 1e-10);
}

TEST_CASE("singular-weight self product reaches the norm constant") {
  QuadratureRule rule = build_quadrature(2048);
  GegenbauerOrder quarter(0.25);
  double got = integrate_lambda(rule, [&](double l) { return std::pow(1.0 - l * l, -0.25); });
  double expect = gegenbauer_norm_sq(quarter, 0);
  CHECK(got == doctest::Approx(expect).epsilon(1e-6 / expect));
}

TEST_CASE("orthogonality defect decreases with node count") {
  GegenbauerOrder order(0.75);
  auto defect = [&](int q) {
    QuadratureRule rule = build_quadrature(q);
    double worst = 0.0;
    for (int m = 0; m <= 8; ++m)
      for (int n = m; n <= 8; ++n) {
        double got = integrate_lambda(rule, [&](double l) {
          return std::pow(1.0 - l * l, 0.25) * gegenbauer_eval(order, m, l) *
                 gegenbauer_eval(order, n, l);
        });
        double expect = m == n ? gegenbauer_norm_sq(order, n) : 0.0;
        worst = std::fmax(worst, std::fabs(got - expect));
      }
    return worst;
  };
  double e256 = defect(256), e1024 = defect(1024), e4096 = defect(4096);
  CHECK(e1024 < e256);
  CHECK(e4096 < e1024);
  CHECK(e4096 < 1e-8);
}
