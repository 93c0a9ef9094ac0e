#include "mumode/chebyshev.hpp"

#include <cmath>
#include <numbers>

#include "mumode/errors.hpp"

namespace mumode::basis {

std::pair<std::vector<double>, std::vector<double>> chebyshev_points_weights(index_t m) {
  if (m < 1) throw core::ArgumentError("chebyshev_points_weights: m must be positive");
  std::vector<double> nodes(static_cast<std::size_t>(m)), weights(static_cast<std::size_t>(m));
  for (index_t k = 1; k <= m; ++k) {
    const double angle = (2.0 * double(k) - 1.0) * std::numbers::pi / (2.0 * double(m));
    nodes[static_cast<std::size_t>(k - 1)] = std::cos(angle);
    weights[static_cast<std::size_t>(k - 1)] = (k % 2 == 1 ? 1.0 : -1.0) * std::sin(angle);
  }
  return {nodes, weights};
}

Matrix<double> barycentric_matrix(const std::vector<double>& nodes,
                                  const std::vector<double>& weights,
                                  const std::vector<double>& x) {
  const index_t m = static_cast<index_t>(nodes.size());
  if (m < 1) throw core::ArgumentError("barycentric_matrix: no nodes");
  if (weights.size() != nodes.size())
    throw core::ArgumentError("barycentric_matrix: node/weight length mismatch");
  for (index_t i = 0; i < m; ++i)
    for (index_t j = i + 1; j < m; ++j)
      if (nodes[static_cast<std::size_t>(i)] == nodes[static_cast<std::size_t>(j)])
        throw core::ArgumentError("barycentric_matrix: duplicate nodes");

  Matrix<double> L(static_cast<index_t>(x.size()), m);
  for (index_t l = 0; l < L.rows(); ++l) {
    const double xl = x[static_cast<std::size_t>(l)];
    index_t hit = -1;
    for (index_t i = 0; i < m; ++i)
      if (xl == nodes[static_cast<std::size_t>(i)]) {
        hit = i;
        break;
      }
    if (hit >= 0) {
      L(l, hit) = 1.0;  // interpolation property, no division by zero
      continue;
    }
    double denom = 0.0;
    for (index_t i = 0; i < m; ++i)
      denom += weights[static_cast<std::size_t>(i)] / (xl - nodes[static_cast<std::size_t>(i)]);
    for (index_t i = 0; i < m; ++i)
      L(l, i) = weights[static_cast<std::size_t>(i)] /
                ((xl - nodes[static_cast<std::size_t>(i)]) * denom);
  }
  return L;
}

}  // namespace mumode::basis
