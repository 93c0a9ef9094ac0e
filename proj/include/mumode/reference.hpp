#pragma once

#include "mumode/tensor.hpp"

namespace mumode::reference {

using core::index_t;
using core::Matrix;
using core::ModeIndex;
using core::Shape;
using core::Tensor;

/// Textbook triple-loop matrix product, kept deliberately serial and
/// unblocked as the baseline the BLAS-backed paths are benchmarked against.
template <class T>
Matrix<T> matmul_loops(const Matrix<T>& A, const Matrix<T>& B) {
  if (A.cols() != B.rows()) throw core::SizeError("matmul_loops: inner dimensions");
  Matrix<T> C(A.rows(), B.cols());
  for (index_t i = 0; i < A.rows(); ++i)
    for (index_t j = 0; j < B.cols(); ++j) {
      T s{};
      for (index_t k = 0; k < A.cols(); ++k) s += A(i, k) * B(k, j);
      C(i, j) = s;
    }
  return C;
}

/// Triple-loop product A * B^T (second factor transposed in place of a copy).
template <class T>
Matrix<T> matmul_loops_bt(const Matrix<T>& A, const Matrix<T>& B) {
  if (A.cols() != B.cols()) throw core::SizeError("matmul_loops_bt: inner dimensions");
  Matrix<T> C(A.rows(), B.rows());
  for (index_t i = 0; i < A.rows(); ++i)
    for (index_t j = 0; j < B.rows(); ++j) {
      T s{};
      for (index_t k = 0; k < A.cols(); ++k) s += A(i, k) * B(j, k);
      C(i, j) = s;
    }
  return C;
}

/// The two-dimensional transform S = L1 * T * L2^T evaluated as its defining
/// quadruple sum, one output element at a time.
template <class T>
Matrix<T> sum2d_loops(const Matrix<T>& L1, const Matrix<T>& T2, const Matrix<T>& L2) {
  if (L1.cols() != T2.rows() || L2.cols() != T2.cols())
    throw core::SizeError("sum2d_loops: dimension mismatch");
  Matrix<T> S(L1.rows(), L2.rows());
  for (index_t i1 = 0; i1 < L1.rows(); ++i1)
    for (index_t i2 = 0; i2 < L2.rows(); ++i2) {
      T s{};
      for (index_t j1 = 0; j1 < T2.rows(); ++j1)
        for (index_t j2 = 0; j2 < T2.cols(); ++j2)
          s += L1(i1, j1) * L2(i2, j2) * T2(j1, j2);
      S(i1, i2) = s;
    }
  return S;
}

/// Nested-loop mu-mode product oracle: sums over the mu index element by
/// element. O(numel * n_mu * m_mu); intended for tiny shapes only.
template <class T>
Tensor<T> mode_product_loops(const Tensor<T>& t, const Matrix<T>& L, ModeIndex mu) {
  if (L.cols() != t.extent(mu)) throw core::SizeError("mode_product_loops: dimensions");
  std::vector<index_t> ext = t.shape().extents();
  ext[static_cast<std::size_t>(mu - 1)] = L.rows();
  Tensor<T> out{Shape(ext)};
  for (index_t f = 0; f < out.numel(); ++f) {
    auto j = core::multi_index(out.shape(), f);
    const index_t i = j[static_cast<std::size_t>(mu - 1)];
    T s{};
    for (index_t k = 1; k <= t.extent(mu); ++k) {
      j[static_cast<std::size_t>(mu - 1)] = k;
      s += L(i - 1, k - 1) * t.at(j);
    }
    j[static_cast<std::size_t>(mu - 1)] = i;
    out[f] = s;
  }
  return out;
}

}  // namespace mumode::reference
