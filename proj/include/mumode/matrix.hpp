#pragma once

#include <complex>
#include <string>
#include <vector>

#include "mumode/errors.hpp"
#include "mumode/shape.hpp"

namespace mumode::core {

using cplx = std::complex<double>;

/// Dense column-major matrix. Leading dimension always equals rows.
template <class T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(index_t rows, index_t cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {
    if (rows < 1 || cols < 1) throw ArgumentError("matrix dimensions must be positive");
  }
  Matrix(index_t rows, index_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (static_cast<index_t>(data_.size()) != rows * cols)
      throw SizeError("matrix data length does not match rows*cols");
  }

  [[nodiscard]] index_t rows() const { return rows_; }
  [[nodiscard]] index_t cols() const { return cols_; }
  [[nodiscard]] index_t numel() const { return rows_ * cols_; }

  T& operator()(index_t i, index_t j) { return data_[static_cast<std::size_t>(i + j * rows_)]; }
  const T& operator()(index_t i, index_t j) const {
    return data_[static_cast<std::size_t>(i + j * rows_)];
  }

  [[nodiscard]] T* data() { return data_.data(); }
  [[nodiscard]] const T* data() const { return data_.data(); }
  [[nodiscard]] std::vector<T>& storage() { return data_; }
  [[nodiscard]] const std::vector<T>& storage() const { return data_; }

  static Matrix identity(index_t n) {
    Matrix I(n, n);
    for (index_t i = 0; i < n; ++i) I(i, i) = T{1};
    return I;
  }

  bool operator==(const Matrix& other) const = default;

 private:
  index_t rows_, cols_;
  std::vector<T> data_;
};

template <class T>
Matrix<T> transpose(const Matrix<T>& A) {
  Matrix<T> B(A.cols(), A.rows());
  for (index_t j = 0; j < A.cols(); ++j)
    for (index_t i = 0; i < A.rows(); ++i) B(j, i) = A(i, j);
  return B;
}

inline Matrix<cplx> conj_transpose(const Matrix<cplx>& A) {
  Matrix<cplx> B(A.cols(), A.rows());
  for (index_t j = 0; j < A.cols(); ++j)
    for (index_t i = 0; i < A.rows(); ++i) B(j, i) = std::conj(A(i, j));
  return B;
}

inline Matrix<double> conj_transpose(const Matrix<double>& A) { return transpose(A); }

inline Matrix<cplx> to_complex(const Matrix<double>& A) {
  Matrix<cplx> B(A.rows(), A.cols());
  for (index_t k = 0; k < A.numel(); ++k) B.data()[k] = A.data()[k];
  return B;
}

}  // namespace mumode::core
