#include "mumode/sparse.hpp"

#include <algorithm>
#include <map>

#include "mumode/errors.hpp"

namespace mumode::la {

std::vector<double> CsrMatrix::apply(const std::vector<double>& x) const {
  if (static_cast<index_t>(x.size()) != n)
    throw core::SizeError("CsrMatrix::apply: vector length mismatch");
  std::vector<double> y(x.size());
#pragma omp parallel for schedule(static)
  for (index_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (index_t k = rowptr[static_cast<std::size_t>(i)];
         k < rowptr[static_cast<std::size_t>(i + 1)]; ++k)
      s += val[static_cast<std::size_t>(k)] *
           x[static_cast<std::size_t>(col[static_cast<std::size_t>(k)])];
    y[static_cast<std::size_t>(i)] = s;
  }
  return y;
}

CsrMatrix kronsum_csr(const std::vector<Matrix<double>>& As) {
  const std::size_t d = As.size();
  if (d == 0) throw core::ArgumentError("kronsum_csr: empty stack");
  std::vector<index_t> dims(d), strides(d);
  index_t N = 1;
  for (std::size_t mu = 0; mu < d; ++mu) {
    if (As[mu].rows() != As[mu].cols())
      throw core::ArgumentError("kronsum_csr: factors must be square");
    dims[mu] = As[mu].rows();
    strides[mu] = N;
    N *= dims[mu];
  }

  CsrMatrix S;
  S.n = N;
  S.rowptr.resize(static_cast<std::size_t>(N + 1), 0);

  std::vector<index_t> ji(d, 0);  // per-mode index of the current row
  std::map<index_t, double> row;
  for (index_t i = 0; i < N; ++i) {
    row.clear();
    for (std::size_t mu = 0; mu < d; ++mu) {
      const index_t jmu = ji[mu];
      for (index_t k = 0; k < dims[mu]; ++k) {
        const double a = As[mu](jmu, k);
        if (a != 0.0) row[i + (k - jmu) * strides[mu]] += a;
      }
    }
    for (const auto& [c, v] : row) {
      S.col.push_back(c);
      S.val.push_back(v);
    }
    S.rowptr[static_cast<std::size_t>(i + 1)] = static_cast<index_t>(S.col.size());
    for (std::size_t mu = 0; mu < d; ++mu) {
      if (++ji[mu] < dims[mu]) break;
      ji[mu] = 0;
    }
  }
  return S;
}

}  // namespace mumode::la
