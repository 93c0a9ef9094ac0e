#include "mumode/dft.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "mumode/errors.hpp"

namespace mumode::la {
namespace {

using core::cplx;
using core::index_t;
using core::Matrix;

/// Integer frequencies in DFT storage order: 0,1,..,ceil(m/2)-1,-floor(m/2),..,-1.
std::vector<double> frequencies(index_t m) {
  std::vector<double> f(static_cast<std::size_t>(m));
  const index_t half = (m + 1) / 2;
  for (index_t k = 0; k < half; ++k) f[static_cast<std::size_t>(k)] = double(k);
  for (index_t k = half; k < m; ++k) f[static_cast<std::size_t>(k)] = double(k - m);
  return f;
}

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

Matrix<cplx> dft_synthesis_at(index_t m, const std::vector<double>& x, double a, double b) {
  if (m < 1) throw core::ArgumentError("dft_synthesis_at: m must be positive");
  if (b <= a) throw core::ArgumentError("dft_synthesis_at: empty interval");
  const auto freq = frequencies(m);
  const bool even = (m % 2 == 0);
  Matrix<cplx> S(static_cast<index_t>(x.size()), m);
  for (index_t l = 0; l < S.rows(); ++l) {
    const double theta = (x[static_cast<std::size_t>(l)] - a) / (b - a);
    for (index_t k = 0; k < m; ++k) {
      // Nyquist mode -m/2 lives at storage slot m/2 for even m.
      if (even && k == m / 2) {
        S(l, k) = cplx(std::cos(kTwoPi * (double(m) / 2.0) * theta), 0.0);
      } else {
        const double phase = kTwoPi * freq[static_cast<std::size_t>(k)] * theta;
        S(l, k) = cplx(std::cos(phase), std::sin(phase));
      }
    }
  }
  return S;
}

DftPair dft_matrices(index_t m, index_t n, double a, double b) {
  if (m < 1 || n < 1) throw core::ArgumentError("dft_matrices: counts must be positive");
  if (b <= a) throw core::ArgumentError("dft_matrices: empty interval");

  DftPair pair;
  pair.analysis = Matrix<cplx>(m, m);
  const auto freq = frequencies(m);
  for (index_t j = 0; j < m; ++j)
    for (index_t k = 0; k < m; ++k) {
      const double phase = -kTwoPi * freq[static_cast<std::size_t>(k)] * double(j) / double(m);
      pair.analysis(k, j) = cplx(std::cos(phase) / double(m), std::sin(phase) / double(m));
    }

  std::vector<double> x(static_cast<std::size_t>(n));
  for (index_t l = 0; l < n; ++l)
    x[static_cast<std::size_t>(l)] = a + (b - a) * double(l) / double(n);
  pair.synthesis = dft_synthesis_at(m, x, a, b);
  return pair;
}

}  // namespace mumode::la
