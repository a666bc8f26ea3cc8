#pragma once

#include <complex>
#include <vector>

#include "phasekit/errors.hpp"

namespace phasekit {

using cx = std::complex<double>;

// Dense complex matrix, row-major. All reductions run in a fixed index
// order so results are reproducible across runs and thread counts.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  cx& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const cx& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  const std::vector<cx>& data() const { return a_; }
  std::vector<cx>& data() { return a_; }

  Matrix adjoint() const;
  Matrix transpose() const;

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;  // dense product
  Matrix operator*(cx s) const;

  std::vector<cx> apply(const std::vector<cx>& v) const;

  double frobenius_norm() const;
  double max_abs() const;

  // Largest |entry| of (*this - o); dimensions must match.
  double max_abs_diff(const Matrix& o) const;

  // Largest |A(i,j) - conj(A(j,i))|.
  double hermiticity_error() const;

  // Largest |entry| outside the band |i-j| <= bandwidth.
  double band_violation(int bandwidth) const;

  // Entrywise IEEE equality (no tolerance; signed zeros compare equal).
  bool bit_equal(const Matrix& o) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<cx> a_;
};

Matrix commutator(const Matrix& a, const Matrix& b);

inline cx inner(const std::vector<cx>& x, const std::vector<cx>& y) {
  if (x.size() != y.size()) throw DimensionMismatch("inner: size mismatch");
  cx s = 0.0;
  for (size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

double vector_norm(const std::vector<cx>& x);

}  // namespace phasekit
