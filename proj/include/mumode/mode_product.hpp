#pragma once

#include <functional>
#include <string>
#include <utility>

#include "mumode/gemm.hpp"
#include "mumode/matricize.hpp"

namespace mumode::core {

namespace detail {

/// Product along mode 1 without data movement: the 1-matricization is the
/// flat buffer itself, so one GEMM suffices. opA selects L or L^H.
template <class T>
Tensor<T> mode1_product(const Tensor<T>& t, const Matrix<T>& L, la::Op opA) {
  const index_t m = t.extent(1);
  const index_t rest = t.numel() / m;
  const index_t n = (opA == la::Op::None) ? L.rows() : L.cols();
  std::vector<index_t> ext = t.shape().extents();
  ext[0] = n;
  Tensor<T> out{Shape(ext)};
  la::gemm_raw(opA, la::Op::None, n, rest, m, L.data(), L.rows(), t.data(), m,
               out.data(), n);
  return out;
}

/// Product along the last mode without data movement: the flat buffer viewed
/// as (prod of leading extents) x m_d, multiplied by L^T (or conj(L)) on the
/// right. conj(L) has no BLAS op code, so the conjugate path copies the small
/// per-mode matrix once.
template <class T>
Tensor<T> moded_product(const Tensor<T>& t, const Matrix<T>& L, bool conj_adjoint) {
  const index_t d = t.order();
  const index_t m = t.extent(d);
  const index_t lead = t.numel() / m;
  const index_t n = conj_adjoint ? L.cols() : L.rows();
  std::vector<index_t> ext = t.shape().extents();
  ext[static_cast<std::size_t>(d - 1)] = n;
  Tensor<T> out{Shape(ext)};
  if (conj_adjoint) {
    Matrix<T> Lc(L.rows(), L.cols());
    for (index_t k = 0; k < L.numel(); ++k) {
      if constexpr (std::is_same_v<T, cplx>)
        Lc.data()[k] = std::conj(L.data()[k]);
      else
        Lc.data()[k] = L.data()[k];
    }
    la::gemm_raw(la::Op::None, la::Op::None, lead, n, m, t.data(), lead, Lc.data(),
                 m, out.data(), lead);
  } else {
    la::gemm_raw(la::Op::None, la::Op::Trans, lead, n, m, t.data(), lead, L.data(),
                 L.rows(), out.data(), lead);
  }
  return out;
}

}  // namespace detail

/// mu-mode product: applies L to every mu-fiber as one matrix-matrix product
/// on the mu-matricization. Modes 1 and d skip the permutation entirely;
/// interior modes permute, multiply, and permute back.
template <class T>
Tensor<T> mode_product(const Tensor<T>& t, const Matrix<T>& L, ModeIndex mu) {
  t.shape().check_mode(mu);
  if (L.cols() != t.extent(mu))
    throw SizeError("mode_product: matrix columns (" + std::to_string(L.cols()) +
                    ") do not match extent of mode " + std::to_string(mu.mu));
  const index_t d = t.order();
  if (mu == 1) return detail::mode1_product(t, L, la::Op::None);
  if (mu == d) return detail::moded_product(t, L, false);
  auto p = front_permutation(d, mu);
  Tensor<T> fronted = permute(t, p);
  Tensor<T> res = detail::mode1_product(fronted, L, la::Op::None);
  return ipermute(res, p);
}

/// Promoting overload: real tensor, complex matrix.
inline Tensor<cplx> mode_product(const Tensor<double>& t, const Matrix<cplx>& L,
                                 ModeIndex mu) {
  return mode_product(to_complex(t), L, mu);
}

/// mu-mode action: applies a columnwise operator to the full canonical
/// mu-matricization. Equals mode_product when the operator multiplies by a
/// matrix.
template <class T>
Tensor<T> mode_action(const Tensor<T>& t,
                      const std::function<Matrix<T>(const Matrix<T>&)>& op,
                      ModeIndex mu) {
  t.shape().check_mode(mu);
  Matrix<T> X = matricize(t, mu);
  Matrix<T> Y = op(X);
  if (Y.cols() != X.cols())
    throw ContractError("mode_action: operator changed the column count on mode " +
                        std::to_string(mu.mu));
  return dematricize(Y, mu, t.shape());
}

}  // namespace mumode::core
