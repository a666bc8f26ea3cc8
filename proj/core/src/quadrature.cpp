#include "phasekit/quadrature.hpp"

#include <cmath>

namespace phasekit {

double QuadratureRule::lambda_weight(int k) const {
  return weight[k] * 2.0 * std::sin(2.0 * phi[k]);
}

double QuadratureRule::weight_sum() const {
  double s = 0.0;
  for (double w : weight) s += w;
  return s;
}

namespace {

// Legendre nodes and weights on [-1, 1] by Newton iteration on P_q.
void gauss_legendre_unit(int q, std::vector<double>& x, std::vector<double>& w) {
  x.assign(q, 0.0);
  w.assign(q, 0.0);
  const int half = (q + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (q + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < q; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = q * (z * p0 - p1) / (z * z - 1.0);
      double dz = p0 / pp;
      z -= dz;
      if (std::fabs(dz) < 1e-15) break;
    }
    x[i] = -z;
    x[q - 1 - i] = z;
    double wi = 2.0 / ((1.0 - z * z) * pp * pp);
    w[i] = wi;
    w[q - 1 - i] = wi;
  }
}

}  // namespace

QuadratureRule build_quadrature(int q) {
  if (q < 64) throw DomainError("build_quadrature: at least 64 nodes required");
  std::vector<double> x, w;
  gauss_legendre_unit(q, x, w);
  QuadratureRule rule;
  rule.phi.resize(q);
  rule.lambda.resize(q);
  rule.weight.resize(q);
  for (int k = 0; k < q; ++k) {
    double phi = 0.25 * M_PI * (x[k] + 1.0);
    rule.phi[k] = phi;
    rule.lambda[k] = std::cos(2.0 * phi);
    rule.weight[k] = 0.25 * M_PI * w[k];
  }
  return rule;
}

double integrate_lambda(const QuadratureRule& rule, const std::function<double(double)>& f) {
  double s = 0.0;
  for (int k = 0; k < rule.size(); ++k) s += rule.lambda_weight(k) * f(rule.lambda[k]);
  return s;
}

double integrate_phi(const QuadratureRule& rule, const std::function<double(double)>& f) {
  double s = 0.0;
  for (int k = 0; k < rule.size(); ++k) s += rule.weight[k] * f(rule.phi[k]);
  return s;
}

}  // namespace phasekit
