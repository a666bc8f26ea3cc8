#include "phasekit/rational.hpp"

#include <stdexcept>

namespace phasekit {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

__int128 checked_mul(__int128 a, __int128 b) {
  __int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Rational: 128-bit overflow");
  return r;
}

__int128 checked_add(__int128 a, __int128 b) {
  __int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Rational: 128-bit overflow");
  return r;
}

std::string int128_to_string(__int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  if (neg) v = -v;
  std::string s;
  while (v > 0) {
    s.push_back(char('0' + int(v % 10)));
    v /= 10;
  }
  if (neg) s.push_back('-');
  return std::string(s.rbegin(), s.rend());
}

}  // namespace

Rational::Rational(long long n, long long d) : num_(n), den_(d) {
  if (d == 0) throw DomainError("Rational: zero denominator");
  normalize();
}

Rational Rational::from_int128(__int128 n, __int128 d) {
  if (d == 0) throw DomainError("Rational: zero denominator");
  Rational r;
  r.num_ = n;
  r.den_ = d;
  r.normalize();
  return r;
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  __int128 g = gcd128(num_, den_);
  num_ /= g;
  den_ /= g;
}

Rational Rational::operator+(const Rational& o) const {
  __int128 g = gcd128(den_, o.den_);
  __int128 lhs_scale = o.den_ / g;
  __int128 rhs_scale = den_ / g;
  return from_int128(checked_add(checked_mul(num_, lhs_scale), checked_mul(o.num_, rhs_scale)),
                     checked_mul(den_, lhs_scale));
}

Rational Rational::operator-(const Rational& o) const {
  Rational neg = o;
  neg.num_ = -neg.num_;
  return *this + neg;
}

Rational Rational::operator*(const Rational& o) const {
  __int128 g1 = gcd128(num_, o.den_);
  __int128 g2 = gcd128(o.num_, den_);
  return from_int128(checked_mul(num_ / g1, o.num_ / g2),
                     checked_mul(den_ / g2, o.den_ / g1));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw DomainError("Rational: division by zero");
  return *this * from_int128(o.den_, o.num_);
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return int128_to_string(num_);
  return int128_to_string(num_) + "/" + int128_to_string(den_);
}

Rational binomial_rational(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  Rational r(1);
  for (int i = 1; i <= k; ++i)
    r = r * Rational::from_int128(n - k + i, i);
  return r;
}

}  // namespace phasekit
