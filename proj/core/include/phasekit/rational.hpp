#pragma once

#include <cstdint>
#include <string>

#include "phasekit/errors.hpp"

namespace phasekit {

// Exact fraction on __int128 with eager gcd reduction. Arithmetic throws
// std::overflow_error instead of wrapping silently.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d);

  static Rational from_int128(__int128 n, __int128 d);

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }

  bool is_zero() const { return num_ == 0; }

  double to_double() const;
  // Reduced form "p/q", or "p" when q == 1.
  std::string to_string() const;

  __int128 num() const { return num_; }
  __int128 den() const { return den_; }

 private:
  void normalize();

  __int128 num_;
  __int128 den_;  // > 0
};

Rational binomial_rational(int n, int k);

}  // namespace phasekit
