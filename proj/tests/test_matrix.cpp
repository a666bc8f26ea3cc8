#include <doctest.h>

#include <cstdlib>

#include "phasekit/matrix.hpp"
#include "phasekit/parallel.hpp"

using namespace phasekit;

TEST_CASE("matrix basics") {
  Matrix a(2, 2);
  a(0, 0) = {1.0, 0.0};
  a(0, 1) = {0.0, 1.0};
  a(1, 0) = {2.0, 0.0};
  a(1, 1) = {0.0, -3.0};

  Matrix adj = a.adjoint();
  CHECK(adj(1, 0) == cx(0.0, -1.0));
  CHECK(adj(0, 1) == cx(2.0, 0.0));
  CHECK(adj(1, 1) == cx(0.0, 3.0));

  Matrix id = Matrix::identity(2);
  CHECK((a * id).bit_equal(a));
  CHECK((id * a).bit_equal(a));

  CHECK(a.max_abs() == doctest::Approx(3.0));
  CHECK(a.frobenius_norm() == doctest::Approx(std::sqrt(1.0 + 1.0 + 4.0 + 9.0)));
}

TEST_CASE("commutator and dimension guards") {
  Matrix x(2, 2), n(2, 2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  n(1, 1) = 1.0;
  Matrix c = commutator(x, n);
  CHECK(c(0, 1) == cx(1.0));
  CHECK(c(1, 0) == cx(-1.0));
  CHECK(c(0, 0) == cx(0.0));

  Matrix rect(2, 3);
  CHECK_THROWS_AS(commutator(x, rect), DimensionMismatch);
  CHECK_THROWS_AS(x + rect, DimensionMismatch);
  CHECK_THROWS_AS((void)x.apply(std::vector<cx>(3)), DimensionMismatch);
}

TEST_CASE("hermiticity and band measures") {
  Matrix a(3, 3);
  a(0, 1) = {0.0, 1.0};
  a(1, 0) = {0.0, -1.0};
  CHECK(a.hermiticity_error() == 0.0);
  a(2, 0) = 0.25;
  CHECK(a.band_violation(1) == doctest::Approx(0.25));
  CHECK(a.band_violation(2) == 0.0);
  CHECK(a.hermiticity_error() == doctest::Approx(0.25));
}

TEST_CASE("matmul is deterministic across thread counts") {
  const int n = 67;
  Matrix a(n, n), b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a(i, j) = cx(std::sin(0.1 * i + 0.3 * j), std::cos(0.2 * i - 0.1 * j));
      b(i, j) = cx(std::cos(0.05 * i * j), std::sin(0.07 * i + j));
    }
  setenv("PHASEKIT_THREADS", "1", 1);
  Matrix serial = a * b;
  setenv("PHASEKIT_THREADS", "7", 1);
  Matrix threaded = a * b;
  unsetenv("PHASEKIT_THREADS");
  CHECK(serial.bit_equal(threaded));
}

TEST_CASE("parallel_for covers every index once") {
  std::vector<int> hits(1000, 0);
  parallel_for(1000, [&](int lo, int hi) {
    for (int i = lo; i < hi; ++i) hits[i] += 1;
  });
  for (int h : hits) CHECK(h == 1);
}
