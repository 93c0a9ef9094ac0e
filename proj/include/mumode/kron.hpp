#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mumode/gemm.hpp"
#include "mumode/tensor.hpp"
#include "mumode/tucker.hpp"

namespace mumode::kronref {

using core::cplx;
using core::index_t;
using core::Matrix;
using core::SizeError;
using core::Tensor;

/// Standard Kronecker product: block (i,j) of the result is a_ij * B.
template <class T>
Matrix<T> kron(const Matrix<T>& A, const Matrix<T>& B) {
  Matrix<T> K(A.rows() * B.rows(), A.cols() * B.cols());
  for (index_t j = 0; j < A.cols(); ++j)
    for (index_t i = 0; i < A.rows(); ++i) {
      const T a = A(i, j);
      for (index_t q = 0; q < B.cols(); ++q)
        for (index_t p = 0; p < B.rows(); ++p)
          K(i * B.rows() + p, j * B.cols() + q) = a * B(p, q);
    }
  return K;
}

namespace detail {

/// A_d (x) A_{d-1} (x) ... (x) A_1 for a stack listed in mode order 1..d.
template <class T>
Matrix<T> chain_desc(const std::vector<Matrix<T>>& Ms) {
  Matrix<T> acc = Ms.back();
  for (std::size_t k = Ms.size() - 1; k-- > 0;) acc = kron(acc, Ms[k]);
  return acc;
}

}  // namespace detail

/// Kronecker sum A_d + ... + A_1 (directions summed over), assembled as
/// sum_mu I (x) ... (x) A_mu (x) ... (x) I with A_mu in slot mu from the right.
template <class T>
Matrix<T> kronsum(const std::vector<Matrix<T>>& As) {
  const std::size_t d = As.size();
  if (d == 0) throw core::ArgumentError("kronsum: empty stack");
  for (std::size_t mu = 0; mu < d; ++mu)
    if (As[mu].rows() != As[mu].cols())
      throw core::ArgumentError("kronsum: matrix for mode " + std::to_string(mu + 1) +
                                " is not square");
  index_t N = 1;
  for (const auto& A : As) N *= A.rows();
  Matrix<T> S(N, N);
  for (std::size_t mu = 0; mu < d; ++mu) {
    std::vector<Matrix<T>> factors;
    factors.reserve(d);
    for (std::size_t k = 0; k < d; ++k)
      factors.push_back(k == mu ? As[k] : Matrix<T>::identity(As[k].rows()));
    Matrix<T> term = detail::chain_desc(factors);
    for (index_t j = 0; j < N; ++j)
      for (index_t i = 0; i < N; ++i) S(i, j) += term(i, j);
  }
  return S;
}

/// Brute-force oracle: assembles L_d (x) ... (x) L_1, multiplies vec(T) and
/// un-vecs the result. Deliberately inefficient; capped at 1e6 output
/// elements so it is never mistaken for a production path.
template <class T>
Tensor<T> kron_apply_oracle(const ops::MatrixStack<T>& Ls, const Tensor<T>& t) {
  const index_t d = t.order();
  if (static_cast<index_t>(Ls.size()) != d)
    throw SizeError("kron_apply_oracle: stack length does not match tensor order");
  std::vector<index_t> out_extents;
  index_t out_numel = 1;
  for (index_t mu = 1; mu <= d; ++mu) {
    const auto& L = Ls[static_cast<std::size_t>(mu - 1)];
    if (L.cols() != t.extent(mu))
      throw SizeError("kron_apply_oracle: matrix for mode " + std::to_string(mu) +
                      " expects extent " + std::to_string(L.cols()) + ", tensor has " +
                      std::to_string(t.extent(mu)));
    out_extents.push_back(L.rows());
    out_numel *= L.rows();
  }
  if (out_numel > 1000000)
    throw SizeError("kron_apply_oracle: output would have " + std::to_string(out_numel) +
                    " elements, oracle is capped at 1e6");

  Matrix<T> big = detail::chain_desc(Ls);
  Matrix<T> x(t.numel(), 1);
  const auto& v = core::vec(t);
  for (index_t k = 0; k < t.numel(); ++k) x(k, 0) = v[static_cast<std::size_t>(k)];
  Matrix<T> y = la::gemm(big, x);
  return core::unvec(y.storage(), core::Shape(out_extents));
}

/// One checked Kronecker-algebra identity.
struct IdentityResult {
  int property;
  std::string name;
  double max_rel_error;
  bool passed;
};

struct IdentityReport {
  std::vector<IdentityResult> results;
  bool all_passed;
};

/// Checks the eight classical Kronecker identities (bilinearity in both
/// arguments, scalar pull-out, associativity, transpose, inverse,
/// mixed-product, and the vec correspondence vec(ADC) = (C^T (x) A) vec(D))
/// on seeded random matrices of sizes <= 4. Failures are reported, not thrown.
IdentityReport appendix_identity_suite(std::uint64_t seed, int cases = 100,
                                       double tol = 1e-12);

}  // namespace mumode::kronref
