#include "phasekit/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "phasekit/parallel.hpp"

namespace phasekit {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::adjoint() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix add");
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sub");
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix mul");
  Matrix r(rows_, o.cols_);
  const int n = o.cols_;
  parallel_for(rows_, [&](int lo, int hi) {
    for (int i = lo; i < hi; ++i) {
      cx* out = &r.a_[size_t(i) * n];
      for (int k = 0; k < cols_; ++k) {
        cx aik = (*this)(i, k);
        if (aik == cx(0.0)) continue;
        const cx* row = &o.a_[size_t(k) * n];
        for (int j = 0; j < n; ++j) out[j] += aik * row[j];
      }
    }
  });
  return r;
}

Matrix Matrix::operator*(cx s) const {
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

std::vector<cx> Matrix::apply(const std::vector<cx>& v) const {
  if (int(v.size()) != cols_) throw DimensionMismatch("matrix apply");
  std::vector<cx> r(rows_);
  for (int i = 0; i < rows_; ++i) {
    cx s = 0.0;
    const cx* row = &a_[size_t(i) * cols_];
    for (int j = 0; j < cols_; ++j) s += row[j] * v[j];
    r[i] = s;
  }
  return r;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (const cx& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (const cx& v : a_) m = std::max(m, std::abs(v));
  return m;
}

double Matrix::max_abs_diff(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix diff");
  double m = 0.0;
  for (size_t i = 0; i < a_.size(); ++i) m = std::max(m, std::abs(a_[i] - o.a_[i]));
  return m;
}

double Matrix::hermiticity_error() const {
  double m = 0.0;
  for (int i = 0; i < rows_; ++i)
    for (int j = i; j < cols_; ++j)
      m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return m;
}

double Matrix::band_violation(int bandwidth) const {
  double m = 0.0;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (std::abs(i - j) > bandwidth) m = std::max(m, std::abs((*this)(i, j)));
  return m;
}

bool Matrix::bit_equal(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    throw DimensionMismatch("commutator: square matrices of equal size required");
  return a * b - b * a;
}

double vector_norm(const std::vector<cx>& x) {
  double s = 0.0;
  for (const cx& v : x) s += std::norm(v);
  return std::sqrt(s);
}

}  // namespace phasekit
