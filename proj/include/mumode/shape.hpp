#pragma once

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "mumode/errors.hpp"

namespace mumode::core {

using index_t = std::int64_t;

/// Extents m_1..m_d of an order-d tensor. Modes are numbered 1..d throughout
/// the library; extents are strictly positive (empty tensors are rejected).
class Shape {
 public:
  Shape() = default;
  Shape(std::initializer_list<index_t> ext) : extents_(ext) { validate(); }
  explicit Shape(std::vector<index_t> ext) : extents_(std::move(ext)) { validate(); }

  [[nodiscard]] index_t order() const { return static_cast<index_t>(extents_.size()); }

  [[nodiscard]] index_t extent(index_t mu) const {
    check_mode(mu);
    return extents_[static_cast<std::size_t>(mu - 1)];
  }

  [[nodiscard]] const std::vector<index_t>& extents() const { return extents_; }

  [[nodiscard]] index_t numel() const {
    return std::accumulate(extents_.begin(), extents_.end(), index_t{1},
                           std::multiplies<>());
  }

  /// Product of extents of all modes except mu.
  [[nodiscard]] index_t numel_except(index_t mu) const {
    return numel() / extent(mu);
  }

  /// Column-major stride of mode mu: prod of extents of modes < mu.
  [[nodiscard]] index_t stride(index_t mu) const {
    check_mode(mu);
    index_t s = 1;
    for (index_t k = 1; k < mu; ++k) s *= extents_[static_cast<std::size_t>(k - 1)];
    return s;
  }

  void check_mode(index_t mu) const {
    if (mu < 1 || mu > order())
      throw ArgumentError("mode index " + std::to_string(mu) +
                          " out of range 1.." + std::to_string(order()));
  }

  bool operator==(const Shape& other) const = default;

 private:
  void validate() const {
    if (extents_.empty()) throw ArgumentError("tensor order must be >= 1");
    for (index_t m : extents_)
      if (m < 1) throw ArgumentError("tensor extents must be positive");
  }

  std::vector<index_t> extents_;
};

/// Column-major linearization: (j_1,...,j_d) with 1-based j maps to
/// j_1-1 + sum_{mu>=2} (j_mu - 1) * prod_{k<mu} m_k.
inline index_t flat_index(const Shape& s, const std::vector<index_t>& j) {
  index_t flat = 0, stride = 1;
  for (index_t mu = 1; mu <= s.order(); ++mu) {
    flat += (j[static_cast<std::size_t>(mu - 1)] - 1) * stride;
    stride *= s.extent(mu);
  }
  return flat;
}

/// Inverse of flat_index; returns 1-based multi-index.
inline std::vector<index_t> multi_index(const Shape& s, index_t flat) {
  std::vector<index_t> j(static_cast<std::size_t>(s.order()));
  for (index_t mu = 1; mu <= s.order(); ++mu) {
    j[static_cast<std::size_t>(mu - 1)] = flat % s.extent(mu) + 1;
    flat /= s.extent(mu);
  }
  return j;
}

/// Mode selector, 1-based. Kept as a distinct type so call sites read
/// mode_product(T, L, ModeIndex{2}) rather than a bare integer.
struct ModeIndex {
  index_t mu;
  constexpr ModeIndex(index_t m) : mu(m) {}  // NOLINT: implicit by design
  constexpr operator index_t() const { return mu; }
};

}  // namespace mumode::core
