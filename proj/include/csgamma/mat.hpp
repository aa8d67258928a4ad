#pragma once

#include <stdexcept>
#include <vector>

#include "csgamma/scalar.hpp"

namespace csgamma {

/// Dense complex matrix, row-major.  Small sizes only; no view machinery.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative shape");
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Complex& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Complex& operator()(int r, int c) const {
    return a_[static_cast<size_t>(r) * cols_ + c];
  }

  std::vector<Complex> col(int c) const {
    std::vector<Complex> v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  void set_col(int c, const std::vector<Complex>& v) {
    for (int r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  Mat conj_transpose() const {
    Mat m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
  }

  bool all_finite() const {
    for (const Complex& z : a_)
      if (!is_finite(z)) return false;
    return true;
  }

  bool all_real() const {
    for (const Complex& z : a_)
      if (z.imag() != 0.0) return false;
    return true;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Complex> a_;
};

inline Mat matmul(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
  Mat c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

}  // namespace csgamma
