#pragma once

#include <utility>
#include <vector>

#include "mumode/permute.hpp"

namespace mumode::core {

/// Permutation (mu, 1, ..., mu-1, mu+1, ..., d) that brings mode mu to the
/// front, keeping the remaining modes in their original order.
inline std::vector<index_t> front_permutation(index_t d, index_t mu) {
  std::vector<index_t> p;
  p.reserve(static_cast<std::size_t>(d));
  p.push_back(mu);
  for (index_t k = 1; k <= d; ++k)
    if (k != mu) p.push_back(k);
  return p;
}

/// mu-matricization: the m_mu x (prod of other extents) matrix whose columns
/// are the mu-fibers, ordered by the remaining indices with the earliest
/// varying fastest. Mode 1 is a pure reshape.
template <class T>
Matrix<T> matricize(const Tensor<T>& t, ModeIndex mu) {
  t.shape().check_mode(mu);
  const index_t rows = t.extent(mu);
  const index_t cols = t.numel() / rows;
  if (mu == 1) return Matrix<T>(rows, cols, t.storage());
  Tensor<T> fronted = permute(t, front_permutation(t.order(), mu));
  return Matrix<T>(rows, cols, std::move(fronted.storage()));
}

/// Inverse of matricize. The output shape equals s with extent mu replaced by
/// the row count of M (they coincide in the roundtrip case).
template <class T>
Tensor<T> dematricize(const Matrix<T>& M, ModeIndex mu, const Shape& s) {
  s.check_mode(mu);
  if (M.cols() != s.numel_except(mu))
    throw SizeError("dematricize: column count does not match remaining extents");

  std::vector<index_t> out_ext = s.extents();
  out_ext[static_cast<std::size_t>(mu - 1)] = M.rows();

  if (mu == 1) return Tensor<T>(Shape(out_ext), M.storage());

  // Shape in fronted order, then undo the front permutation.
  std::vector<index_t> fronted_ext;
  fronted_ext.reserve(out_ext.size());
  fronted_ext.push_back(M.rows());
  for (index_t k = 1; k <= s.order(); ++k)
    if (k != mu) fronted_ext.push_back(out_ext[static_cast<std::size_t>(k - 1)]);

  Tensor<T> fronted(Shape(fronted_ext), M.storage());
  return ipermute(fronted, front_permutation(s.order(), mu));
}

}  // namespace mumode::core
