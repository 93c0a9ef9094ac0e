#pragma once

#include <utility>
#include <vector>

#include "mumode/matrix.hpp"

namespace mumode::basis {

using core::index_t;
using core::Matrix;

/// Chebyshev points of the first kind, xi_k = cos((2k-1)pi/(2m)) for
/// k = 1..m, paired with their closed-form barycentric weights
/// w_k = (-1)^(k+1) sin((2k-1)pi/(2m)).
std::pair<std::vector<double>, std::vector<double>> chebyshev_points_weights(index_t m);

/// Second barycentric form: L(l,i) = (w_i/(x_l - xi_i)) / sum_k w_k/(x_l - xi_k),
/// with evaluation points landing on a node special-cased to exact unit rows.
Matrix<double> barycentric_matrix(const std::vector<double>& nodes,
                                  const std::vector<double>& weights,
                                  const std::vector<double>& x);

}  // namespace mumode::basis
