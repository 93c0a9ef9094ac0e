#include "mumode/expm.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "mumode/errors.hpp"
#include "mumode/gemm.hpp"
#include "mumode/lu.hpp"

namespace mumode::la {
namespace {

using core::cplx;
using core::index_t;
using core::Matrix;

template <class T>
double norm1(const Matrix<T>& A) {
  double best = 0.0;
  for (index_t j = 0; j < A.cols(); ++j) {
    double colsum = 0.0;
    for (index_t i = 0; i < A.rows(); ++i) colsum += std::abs(A(i, j));
    best = std::max(best, colsum);
  }
  return best;
}

template <class T>
Matrix<T> scaled_identity(index_t n, double c) {
  Matrix<T> I(n, n);
  for (index_t i = 0; i < n; ++i) I(i, i) = T(c);
  return I;
}

template <class T>
Matrix<T>& axpy(Matrix<T>& Y, double a, const Matrix<T>& X) {
  for (std::size_t k = 0; k < Y.storage().size(); ++k) Y.storage()[k] += T(a) * X.storage()[k];
  return Y;
}

// Numerator coefficients b_0..b_m of the [m/m] diagonal Pade approximant
// to exp; the denominator uses the same table with alternating signs.
constexpr std::array<double, 4> kB3 = {120, 60, 12, 1};
constexpr std::array<double, 6> kB5 = {30240, 15120, 3360, 420, 30, 1};
constexpr std::array<double, 8> kB7 = {17297280, 8648640, 1995840, 277200,
                                       25200,    1512,    56,      1};
constexpr std::array<double, 10> kB9 = {17643225600.0, 8821612800.0, 2075673600.0,
                                        302702400.0,   30270240.0,   2162160.0,
                                        110880.0,      3960.0,       90.0,
                                        1.0};
constexpr std::array<double, 14> kB13 = {
    64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
    1187353796428800.0,  129060195264000.0,   10559470521600.0,
    670442572800.0,      33522128640.0,       1323241920.0,
    40840800.0,          960960.0,            16380.0,
    182.0,               1.0};

// 1-norm thresholds theta_m below which order m meets double precision.
constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

/// Solves (V - U) X = (V + U), the common tail of every Pade order.
template <class T>
Matrix<T> pade_solve(const Matrix<T>& U, const Matrix<T>& V) {
  Matrix<T> P = V, Q = V;
  for (std::size_t k = 0; k < P.storage().size(); ++k) {
    P.storage()[k] += U.storage()[k];
    Q.storage()[k] -= U.storage()[k];
  }
  auto f = lu_factor(Q);
  return lu_solve(f, P);
}

/// Evaluates odd/even polynomial halves from precomputed even powers of A:
/// U = A * sum_k b_{2k+1} A^{2k}, V = sum_k b_{2k} A^{2k}.
template <class T, std::size_t N>
Matrix<T> pade_low_order(const Matrix<T>& A, const std::array<double, N>& b) {
  const index_t n = A.rows();
  std::vector<Matrix<T>> even;  // I, A^2, A^4, ...
  even.push_back(scaled_identity<T>(n, 1.0));
  Matrix<T> A2 = gemm(A, A);
  even.push_back(A2);
  for (std::size_t k = 2; 2 * k < N; ++k) even.push_back(gemm(even.back(), A2));

  Matrix<T> Usum(n, n), V(n, n);
  for (std::size_t k = 0; 2 * k + 1 < N; ++k) axpy(Usum, b[2 * k + 1], even[k]);
  for (std::size_t k = 0; 2 * k < N; ++k) axpy(V, b[2 * k], even[k]);
  Matrix<T> U = gemm(A, Usum);
  return pade_solve(U, V);
}

template <class T>
Matrix<T> expm_impl(const Matrix<T>& A) {
  if (A.rows() != A.cols()) throw core::SizeError("expm: matrix is not square");
  for (const auto& v : A.storage())
    if (!std::isfinite(std::abs(v)))
      throw core::ArgumentError("expm: input has non-finite entries");

  const double nrm = norm1(A);
  if (nrm <= kTheta3) return pade_low_order(A, kB3);
  if (nrm <= kTheta5) return pade_low_order(A, kB5);
  if (nrm <= kTheta7) return pade_low_order(A, kB7);
  if (nrm <= kTheta9) return pade_low_order(A, kB9);

  int s = 0;
  if (nrm > kTheta13) s = static_cast<int>(std::ceil(std::log2(nrm / kTheta13)));
  Matrix<T> As = A;
  const double scale = std::ldexp(1.0, -s);
  for (auto& v : As.storage()) v *= T(scale);

  const index_t n = A.rows();
  Matrix<T> A2 = gemm(As, As);
  Matrix<T> A4 = gemm(A2, A2);
  Matrix<T> A6 = gemm(A2, A4);
  const auto& b = kB13;

  Matrix<T> W(n, n);  // b13 A6 + b11 A4 + b9 A2
  axpy(W, b[13], A6);
  axpy(W, b[11], A4);
  axpy(W, b[9], A2);
  Matrix<T> Usum = gemm(A6, W);
  axpy(Usum, b[7], A6);
  axpy(Usum, b[5], A4);
  axpy(Usum, b[3], A2);
  axpy(Usum, b[1], scaled_identity<T>(n, 1.0));
  Matrix<T> U = gemm(As, Usum);

  Matrix<T> W2(n, n);  // b12 A6 + b10 A4 + b8 A2
  axpy(W2, b[12], A6);
  axpy(W2, b[10], A4);
  axpy(W2, b[8], A2);
  Matrix<T> V = gemm(A6, W2);
  axpy(V, b[6], A6);
  axpy(V, b[4], A4);
  axpy(V, b[2], A2);
  axpy(V, b[0], scaled_identity<T>(n, 1.0));

  Matrix<T> X = pade_solve(U, V);
  for (int k = 0; k < s; ++k) X = gemm(X, X);
  return X;
}

}  // namespace

Matrix<double> expm(const Matrix<double>& A) { return expm_impl(A); }
Matrix<cplx> expm(const Matrix<cplx>& A) { return expm_impl(A); }

}  // namespace mumode::la
