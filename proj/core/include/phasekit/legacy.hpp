#pragma once

#include "phasekit/fock.hpp"

namespace phasekit {

// One-sided shift E = sum_n |n><n+1| on the truncated basis. E^dag E equals
// I - |0><0| exactly; E E^dag picks up an extra |n_max><n_max| hole from the
// cut.
Matrix build_shift(const TruncationConfig& cfg);

// Susskind-Glogower cosine/sine pair C = (E + E^dag)/2, S = (E - E^dag)/(2i).
struct SusskindGlogowerPair {
  BandedHermitianOperator cosine;
  BandedHermitianOperator sine;
};

SusskindGlogowerPair build_sg(const TruncationConfig& cfg);

// (s+1)-dimensional truncated space of the cycling construction.
struct PBDimension {
  int s;

  explicit PBDimension(int s_) : s(s_) {
    if (s < 1) throw DomainError("PBDimension: s must be >= 1");
  }

  int dim() const { return s + 1; }
};

// Cycling unitary |0><1| + ... + |s-1><s| + |s><0|; the wrap-around term
// joins the two ends of the finite number ladder.
Matrix pb_cycling(PBDimension pb);

// <0| U^dag N U |0> for the cycling unitary U: evaluates to s, growing
// without bound as the truncation is widened.
double pb_divergence(PBDimension pb);

}  // namespace phasekit
