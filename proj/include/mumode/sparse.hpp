#pragma once

#include <vector>

#include "mumode/matrix.hpp"

namespace mumode::la {

using core::index_t;
using core::Matrix;

/// Compressed-sparse-row matrix, enough for Kronecker-sum operators whose
/// dense form would not fit in memory.
struct CsrMatrix {
  index_t n = 0;
  std::vector<index_t> rowptr;  // length n+1
  std::vector<index_t> col;
  std::vector<double> val;

  std::vector<double> apply(const std::vector<double>& x) const;
};

/// Sparse assembly of the Kronecker sum A_d + ... + A_1 of small dense
/// square factors (listed in mode order 1..d, mode 1 fastest).
CsrMatrix kronsum_csr(const std::vector<Matrix<double>>& As);

}  // namespace mumode::la
