#pragma once

#include <vector>

#include "mumode/tensor.hpp"

namespace mumode::core {

inline void check_permutation(const std::vector<index_t>& p, index_t d) {
  if (static_cast<index_t>(p.size()) != d)
    throw ArgumentError("permutation length does not match tensor order");
  std::vector<bool> seen(static_cast<std::size_t>(d), false);
  for (index_t v : p) {
    if (v < 1 || v > d || seen[static_cast<std::size_t>(v - 1)])
      throw ArgumentError("not a valid permutation of 1..d");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

/// Generalized transpose: result extent k = extent p(k) of the input, and
/// result(j_{p(1)},...,j_{p(d)}) = T(j_1,...,j_d).
template <class T>
Tensor<T> permute(const Tensor<T>& t, const std::vector<index_t>& p) {
  const index_t d = t.order();
  check_permutation(p, d);

  std::vector<index_t> out_ext(static_cast<std::size_t>(d));
  for (index_t k = 0; k < d; ++k)
    out_ext[static_cast<std::size_t>(k)] = t.extent(p[static_cast<std::size_t>(k)]);
  Tensor<T> out{Shape(out_ext)};

  // Input stride of the mode feeding output axis k.
  std::vector<index_t> gather_stride(static_cast<std::size_t>(d));
  for (index_t k = 0; k < d; ++k)
    gather_stride[static_cast<std::size_t>(k)] = t.shape().stride(p[static_cast<std::size_t>(k)]);

  const index_t n_outer = out.numel() / out_ext[0];  // slabs over axes 2..d
  const index_t n0 = out_ext[0];
  const index_t s0 = gather_stride[0];
  const T* src = t.data();
  T* dst = out.data();

#pragma omp parallel for if (out.numel() > (1 << 16)) schedule(static)
  for (index_t slab = 0; slab < n_outer; ++slab) {
    // Decode slab into indices of output axes 2..d, accumulate input offset.
    index_t rem = slab, in_off = 0;
    for (index_t k = 1; k < d; ++k) {
      const index_t ext = out_ext[static_cast<std::size_t>(k)];
      in_off += (rem % ext) * gather_stride[static_cast<std::size_t>(k)];
      rem /= ext;
    }
    T* o = dst + slab * n0;
    if (s0 == 1) {
      const T* i = src + in_off;
      for (index_t j = 0; j < n0; ++j) o[j] = i[j];
    } else {
      for (index_t j = 0; j < n0; ++j) o[j] = src[in_off + j * s0];
    }
  }
  return out;
}

/// Inverse of permute with the same p: ipermute(permute(T,p),p) = T.
template <class T>
Tensor<T> ipermute(const Tensor<T>& t, const std::vector<index_t>& p) {
  check_permutation(p, t.order());
  std::vector<index_t> q(p.size());
  for (std::size_t k = 0; k < p.size(); ++k)
    q[static_cast<std::size_t>(p[k] - 1)] = static_cast<index_t>(k + 1);
  return permute(t, q);
}

}  // namespace mumode::core
