#pragma once

#include <vector>

#include "mumode/matrix.hpp"
#include "mumode/shape.hpp"

namespace mumode::core {

/// Order-d dense tensor, flat storage in the column-major linearization of
/// shape.hpp. Operations return new tensors; values are immutable from the
/// caller's perspective and safe to share read-only across threads.
template <class T>
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(Shape shape)
      : shape_(std::move(shape)), data_(static_cast<std::size_t>(shape_.numel())) {}
  Tensor(Shape shape, std::vector<T> data)
      : shape_(std::move(shape)), data_(std::move(data)) {
    if (static_cast<index_t>(data_.size()) != shape_.numel())
      throw SizeError("tensor data length does not match shape element count");
  }

  [[nodiscard]] const Shape& shape() const { return shape_; }
  [[nodiscard]] index_t order() const { return shape_.order(); }
  [[nodiscard]] index_t extent(index_t mu) const { return shape_.extent(mu); }
  [[nodiscard]] index_t numel() const { return static_cast<index_t>(data_.size()); }

  T& operator[](index_t flat) { return data_[static_cast<std::size_t>(flat)]; }
  const T& operator[](index_t flat) const { return data_[static_cast<std::size_t>(flat)]; }

  T& at(const std::vector<index_t>& j) { return data_[static_cast<std::size_t>(flat_index(shape_, j))]; }
  const T& at(const std::vector<index_t>& j) const {
    return data_[static_cast<std::size_t>(flat_index(shape_, j))];
  }

  [[nodiscard]] T* data() { return data_.data(); }
  [[nodiscard]] const T* data() const { return data_.data(); }
  [[nodiscard]] std::vector<T>& storage() { return data_; }
  [[nodiscard]] const std::vector<T>& storage() const { return data_; }

 private:
  Shape shape_;
  std::vector<T> data_;
};

/// Flat data in the column-major linearization (the vec operator).
template <class T>
const std::vector<T>& vec(const Tensor<T>& t) {
  return t.storage();
}

/// Rebuild a tensor from its vec form.
template <class T>
Tensor<T> unvec(std::vector<T> v, const Shape& s) {
  if (static_cast<index_t>(v.size()) != s.numel())
    throw SizeError("unvec: vector length does not match shape element count");
  return Tensor<T>(s, std::move(v));
}

inline Tensor<cplx> to_complex(const Tensor<double>& t) {
  std::vector<cplx> d(t.storage().begin(), t.storage().end());
  return Tensor<cplx>(t.shape(), std::move(d));
}

template <class T>
double max_abs(const Tensor<T>& t) {
  double m = 0;
  for (index_t k = 0; k < t.numel(); ++k) m = std::max(m, std::abs(t[k]));
  return m;
}

template <class T>
double max_abs_diff(const Tensor<T>& a, const Tensor<T>& b) {
  double m = 0;
  for (index_t k = 0; k < a.numel(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

/// Relative max-norm distance, the comparison used across the test suite.
template <class T>
double rel_max_dist(const Tensor<T>& a, const Tensor<T>& b) {
  double scale = std::max(max_abs(a), max_abs(b));
  if (scale == 0) return 0;
  return max_abs_diff(a, b) / scale;
}

}  // namespace mumode::core
