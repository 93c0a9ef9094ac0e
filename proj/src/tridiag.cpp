#include "mumode/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mumode/errors.hpp"

namespace mumode::la {

SymEigResult symtridiag_eig(const TridiagSym& T, EigMode mode) {
  const index_t m = static_cast<index_t>(T.diag.size());
  if (m < 1) throw ArgumentError("symtridiag_eig: empty matrix");
  if (static_cast<index_t>(T.offdiag.size()) != m - 1)
    throw ArgumentError("symtridiag_eig: offdiag must have one entry fewer than diag");

  std::vector<double> d = T.diag;
  std::vector<double> e(T.offdiag);
  e.push_back(0.0);  // sentinel

  // Rotation accumulator: full basis, or just the first row of it.
  const index_t zrows = (mode == EigMode::FullVectors) ? m : 1;
  Matrix<double> z(zrows, m);
  if (mode == EigMode::FullVectors) {
    for (index_t i = 0; i < m; ++i) z(i, i) = 1.0;
  } else {
    z(0, 0) = 1.0;
  }

  const double eps = std::numeric_limits<double>::epsilon();
  for (index_t l = 0; l < m; ++l) {
    int iter = 0;
    index_t mm;
    do {
      for (mm = l; mm < m - 1; ++mm) {
        const double dd = std::abs(d[mm]) + std::abs(d[mm + 1]);
        if (std::abs(e[mm]) <= eps * dd) break;
      }
      if (mm != l) {
        if (iter++ == 50)
          throw NumericalError("symtridiag_eig: QL iteration did not converge");
        // Wilkinson shift from the trailing 2x2 of the active block.
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[mm] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        index_t i;
        for (i = mm; i-- > l;) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {  // deflate: rotation chain annihilated early
            d[i + 1] -= p;
            e[mm] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (index_t k = 0; k < zrows; ++k) {
            f = z(k, i + 1);
            z(k, i + 1) = s * z(k, i) + c * f;
            z(k, i) = c * z(k, i) - s * f;
          }
        }
        if (r == 0.0 && i + 1 > l) continue;
        d[l] -= p;
        e[l] = g;
        e[mm] = 0.0;
      }
    } while (mm != l);
  }

  // Sort ascending, carrying the accumulated vector columns along.
  std::vector<index_t> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), index_t{0});
  std::sort(order.begin(), order.end(),
            [&](index_t a, index_t b) { return d[a] < d[b]; });

  SymEigResult res;
  res.values.resize(static_cast<std::size_t>(m));
  res.vectors = Matrix<double>(zrows, m);
  for (index_t j = 0; j < m; ++j) {
    res.values[static_cast<std::size_t>(j)] = d[order[static_cast<std::size_t>(j)]];
    for (index_t k = 0; k < zrows; ++k)
      res.vectors(k, j) = z(k, order[static_cast<std::size_t>(j)]);
  }
  return res;
}

}  // namespace mumode::la
