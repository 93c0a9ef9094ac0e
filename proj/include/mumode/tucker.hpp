#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "mumode/lu.hpp"
#include "mumode/mode_product.hpp"

namespace mumode::ops {

using core::cplx;
using core::index_t;
using core::Matrix;
using core::Shape;
using core::Tensor;

/// Per-mode matrices L_1..L_d, entry mu sized n_mu x m_mu.
template <class T>
using MatrixStack = std::vector<Matrix<T>>;

/// Columnwise linear operator with a declared output row count.
template <class T>
struct ColumnOperator {
  index_t out_rows;
  std::function<Matrix<T>(const Matrix<T>&)> apply;
};

template <class T>
using OperatorStack = std::vector<ColumnOperator<T>>;

/// Per-mode LU factorizations of square matrices P_1..P_d, built once and
/// reused across solves (constant-step time marching refactors nothing).
template <class T>
class FactorizedStack {
 public:
  explicit FactorizedStack(const MatrixStack<T>& Ps) {
    factors_.reserve(Ps.size());
    for (const auto& P : Ps) factors_.push_back(la::lu_factor(P));
  }

  [[nodiscard]] index_t size() const { return static_cast<index_t>(factors_.size()); }
  [[nodiscard]] const la::LuFactors<T>& factor(index_t mu) const {
    return factors_[static_cast<std::size_t>(mu - 1)];
  }

 private:
  std::vector<la::LuFactors<T>> factors_;
};

namespace detail {

using core::SizeError;

/// Fused multi-mode product engine. Keeps a bookkeeping vector `layout`
/// (layout[k] = original mode living on physical axis k) so that the inverse
/// permutation of one mode product and the forward permutation of the next
/// collapse into a single relayout. Modes are applied in order 1..d; mode 1
/// starts on the leading axis and the final mode always sits on the trailing
/// axis by then, so both endpoints run permutation-free and at most d-1
/// relayouts happen in total. `adjoint` applies L_mu^H instead of L_mu.
template <class T>
Tensor<T> tucker_engine(const Tensor<T>& t, const MatrixStack<T>& Ls, bool adjoint,
                        Tensor<T>* release_after_first = nullptr) {
  const index_t d = t.order();
  if (static_cast<index_t>(Ls.size()) != d)
    throw SizeError("tucker: stack holds " + std::to_string(Ls.size()) +
                    " matrices for an order-" + std::to_string(d) + " tensor");
  for (index_t mu = 1; mu <= d; ++mu) {
    const auto& L = Ls[static_cast<std::size_t>(mu - 1)];
    const index_t need = adjoint ? L.rows() : L.cols();
    if (need != t.extent(mu))
      throw SizeError("tucker: matrix for mode " + std::to_string(mu) +
                      " expects extent " + std::to_string(need) + ", tensor has " +
                      std::to_string(t.extent(mu)));
  }

  std::vector<index_t> layout(static_cast<std::size_t>(d));
  for (index_t k = 0; k < d; ++k) layout[static_cast<std::size_t>(k)] = k + 1;

  Tensor<T> cur;
  for (index_t mu = 1; mu <= d; ++mu) {
    const Tensor<T>& src = (mu == 1) ? t : cur;
    const auto& L = Ls[static_cast<std::size_t>(mu - 1)];
    auto pos_it = std::find(layout.begin(), layout.end(), mu);
    index_t pos = pos_it - layout.begin();

    if (mu == 2 && release_after_first != nullptr) *release_after_first = Tensor<T>();

    if (pos == d - 1 && d > 1) {
      cur = core::detail::moded_product(src, L, adjoint);
      continue;
    }
    if (pos != 0) {
      // One relayout brings the mode to the front; the bookkeeping absorbs
      // the inverse permutation that a standalone mode product would emit.
      std::vector<index_t> p;
      p.reserve(static_cast<std::size_t>(d));
      p.push_back(pos + 1);
      for (index_t k = 0; k < d; ++k)
        if (k != pos) p.push_back(k + 1);
      cur = core::permute(src, p);
      std::rotate(layout.begin(), layout.begin() + pos, layout.begin() + pos + 1);
      cur = core::detail::mode1_product(cur, L, adjoint ? la::Op::ConjTrans : la::Op::None);
      continue;
    }
    cur = core::detail::mode1_product(src, L, adjoint ? la::Op::ConjTrans : la::Op::None);
  }

  if (release_after_first != nullptr) *release_after_first = Tensor<T>();

  // Restore the canonical mode order with a single final relayout.
  std::vector<index_t> p(static_cast<std::size_t>(d));
  bool is_identity = true;
  for (index_t k = 1; k <= d; ++k) {
    auto it = std::find(layout.begin(), layout.end(), k);
    p[static_cast<std::size_t>(k - 1)] = (it - layout.begin()) + 1;
    if (p[static_cast<std::size_t>(k - 1)] != k) is_identity = false;
  }
  if (!is_identity) cur = core::permute(cur, p);
  return cur;
}

}  // namespace detail

/// Tucker operator S = T x_1 L_1 x_2 ... x_d L_d with permutation fusion.
template <class T>
Tensor<T> tucker(const Tensor<T>& t, const MatrixStack<T>& Ls) {
  return detail::tucker_engine(t, Ls, false);
}

/// Rvalue overload: the input's storage is released right after the first
/// mode product, trimming the peak footprint on large operands.
template <class T>
Tensor<T> tucker(Tensor<T>&& t, const MatrixStack<T>& Ls) {
  Tensor<T> local = std::move(t);
  return detail::tucker_engine(local, Ls, false, &local);
}

inline Tensor<cplx> tucker(const Tensor<double>& t, const MatrixStack<cplx>& Ls) {
  return detail::tucker_engine(core::to_complex(t), Ls, false);
}

/// Tucker operator with the conjugate transposes of the stack entries; the
/// conjugation happens inside the multiplies, no Psi^* is materialized.
template <class T>
Tensor<T> cttucker(const Tensor<T>& t, const MatrixStack<T>& Psis) {
  return detail::tucker_engine(t, Psis, true);
}

inline Tensor<cplx> cttucker(const Tensor<double>& t, const MatrixStack<cplx>& Psis) {
  return detail::tucker_engine(core::to_complex(t), Psis, true);
}

/// Naive sequential chain of standalone mode products; the reference the
/// fused engine is tested and benchmarked against.
template <class T>
Tensor<T> tucker_sequential(const Tensor<T>& t, const MatrixStack<T>& Ls) {
  if (static_cast<index_t>(Ls.size()) != t.order())
    throw core::SizeError("tucker_sequential: stack length");
  Tensor<T> cur = core::mode_product(t, Ls[0], 1);
  for (index_t mu = 2; mu <= t.order(); ++mu)
    cur = core::mode_product(cur, Ls[static_cast<std::size_t>(mu - 1)], mu);
  return cur;
}

/// Operator-action Tucker: applies one columnwise operator per mode, in mode
/// order 1..d (generic operators need not commute across modes).
template <class T>
Tensor<T> tuckerfun(const Tensor<T>& t, const OperatorStack<T>& ops) {
  if (static_cast<index_t>(ops.size()) != t.order())
    throw core::SizeError("tuckerfun: stack length does not match tensor order");
  Tensor<T> cur = t;
  for (index_t mu = 1; mu <= t.order(); ++mu) {
    const auto& op = ops[static_cast<std::size_t>(mu - 1)];
    cur = core::mode_action(cur, op.apply, mu);
    if (cur.extent(mu) != op.out_rows)
      throw core::ContractError("tuckerfun: operator on mode " + std::to_string(mu) +
                                " produced " + std::to_string(cur.extent(mu)) +
                                " rows, declared " + std::to_string(op.out_rows));
  }
  return cur;
}

/// Inverse Tucker S = T x_1 P_1^-1 ... x_d P_d^-1 via per-mode triangular
/// solves on the matricizations; no inverse is ever formed.
template <class T>
Tensor<T> itucker(const Tensor<T>& t, const FactorizedStack<T>& Ps) {
  if (Ps.size() != t.order())
    throw core::SizeError("itucker: stack length does not match tensor order");
  Tensor<T> cur = t;
  for (index_t mu = 1; mu <= t.order(); ++mu) {
    const auto& f = Ps.factor(mu);
    if (f.lu.rows() != cur.extent(mu))
      throw core::SizeError("itucker: factor size does not match extent of mode " +
                            std::to_string(mu));
    Matrix<T> X = core::matricize(cur, mu);
    Matrix<T> Y = la::lu_solve(f, X);
    cur = core::dematricize(Y, mu, cur.shape());
  }
  return cur;
}

/// Action of the Kronecker sum A_d + ... + A_1 on vec(V), computed as
/// sum_mu V x_mu A_mu without materializing the big matrix.
template <class T>
Tensor<T> kronsumv(const Tensor<T>& v, const MatrixStack<T>& As) {
  const index_t d = v.order();
  if (static_cast<index_t>(As.size()) != d)
    throw core::SizeError("kronsumv: stack length does not match tensor order");
  for (index_t mu = 1; mu <= d; ++mu) {
    const auto& A = As[static_cast<std::size_t>(mu - 1)];
    if (A.rows() != A.cols())
      throw core::SizeError("kronsumv: matrix for mode " + std::to_string(mu) +
                            " is not square");
    if (A.cols() != v.extent(mu))
      throw core::SizeError("kronsumv: matrix size does not match extent of mode " +
                            std::to_string(mu));
  }
  Tensor<T> acc = core::mode_product(v, As[0], 1);
  for (index_t mu = 2; mu <= d; ++mu) {
    Tensor<T> term = core::mode_product(v, As[static_cast<std::size_t>(mu - 1)], mu);
    T* a = acc.data();
    const T* b = term.data();
    const index_t n = acc.numel();
#pragma omp parallel for if (n > (1 << 16)) schedule(static)
    for (index_t k = 0; k < n; ++k) a[k] += b[k];
  }
  return acc;
}

}  // namespace mumode::ops
