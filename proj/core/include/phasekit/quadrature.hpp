#pragma once

#include <functional>
#include <vector>

#include "phasekit/errors.hpp"

namespace phasekit {

// Gauss-Legendre rule on phi in (0, pi/2) with lambda_k = cos(2 phi_k).
//
// Spectral integrals over lambda in (-1,1) are evaluated in the phi
// variable: d(lambda) = -2 sin(2 phi) d(phi), and the half-power weights
// (1-lambda^2)^(±1/4) become bounded powers of sin(2 phi), so a plain
// Gauss-Legendre grid handles the endpoint-singular even-sector weight.
struct QuadratureRule {
  std::vector<double> phi;     // ascending, strictly inside (0, pi/2)
  std::vector<double> lambda;  // cos(2 phi), strictly monotone in (-1, 1)
  std::vector<double> weight;  // phi-integration weights, sum = pi/2

  int size() const { return static_cast<int>(phi.size()); }

  // Measure of node k for integrals over lambda.
  double lambda_weight(int k) const;

  double weight_sum() const;
};

// Q >= 64 nodes.
QuadratureRule build_quadrature(int q);

// Integral of f(lambda) d(lambda) over (-1, 1).
double integrate_lambda(const QuadratureRule& rule, const std::function<double(double)>& f);

// Integral of f(phi) d(phi) over (0, pi/2).
double integrate_phi(const QuadratureRule& rule, const std::function<double(double)>& f);

}  // namespace phasekit
