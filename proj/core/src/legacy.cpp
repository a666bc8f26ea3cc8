#include "phasekit/legacy.hpp"

namespace phasekit {

Matrix build_shift(const TruncationConfig& cfg) {
  cfg.validate();
  const int d = cfg.dim();
  Matrix e(d, d);
  for (int n = 0; n + 1 < d; ++n) e(n, n + 1) = 1.0;
  return e;
}

SusskindGlogowerPair build_sg(const TruncationConfig& cfg) {
  cfg.validate();
  const int d = cfg.dim();
  SusskindGlogowerPair pair;
  pair.cosine = {d, 1, Matrix(d, d)};
  pair.sine = {d, 1, Matrix(d, d)};
  for (int n = 0; n + 1 < d; ++n) {
    pair.cosine.mat(n, n + 1) = 0.5;
    pair.cosine.mat(n + 1, n) = 0.5;
    pair.sine.mat(n, n + 1) = cx(0.0, -0.5);
    pair.sine.mat(n + 1, n) = cx(0.0, 0.5);
  }
  return pair;
}

Matrix pb_cycling(PBDimension pb) {
  const int d = pb.dim();
  Matrix u(d, d);
  for (int n = 0; n + 1 < d; ++n) u(n, n + 1) = 1.0;
  u(d - 1, 0) = 1.0;
  return u;
}

double pb_divergence(PBDimension pb) {
  const int d = pb.dim();
  Matrix u = pb_cycling(pb);
  std::vector<cx> ground(d, cx(0.0));
  ground[0] = 1.0;
  std::vector<cx> cycled = u.apply(ground);
  double value = 0.0;
  for (int n = 0; n < d; ++n) value += n * std::norm(cycled[n]);
  return value;
}

}  // namespace phasekit
