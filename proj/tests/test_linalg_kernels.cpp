#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "doctest.h"
#include "mumode/dft.hpp"
#include "mumode/expm.hpp"
#include "mumode/gemm.hpp"
#include "mumode/kron.hpp"
#include "mumode/lu.hpp"
#include "mumode/pcg.hpp"
#include "mumode/reference.hpp"
#include "mumode/tridiag.hpp"
#include "test_util.hpp"

using namespace mumode;
using core::cplx;
using core::index_t;
using core::Matrix;

namespace {

/// Number of eigenvalues of a symmetric tridiagonal matrix strictly below x,
/// by the classical Sturm / LDL^T sign-count recurrence. Independent of the
/// QL implementation under test.
index_t eig_count_below(const la::TridiagSym& T, double x) {
  const std::size_t m = T.diag.size();
  index_t count = 0;
  double q = T.diag[0] - x;
  if (q < 0.0) ++count;
  for (std::size_t k = 1; k < m; ++k) {
    const double e = T.offdiag[k - 1];
    if (q == 0.0) q = 1e-300;
    q = T.diag[k] - x - e * e / q;
    if (q < 0.0) ++count;
  }
  return count;
}

/// k-th smallest eigenvalue (1-based) by bisection on the sign count.
double eig_by_bisection(const la::TridiagSym& T, index_t k) {
  double rad = 0.0;
  for (std::size_t i = 0; i < T.diag.size(); ++i) {
    double r = std::abs(T.diag[i]);
    if (i > 0) r += std::abs(T.offdiag[i - 1]);
    if (i + 1 < T.diag.size()) r += std::abs(T.offdiag[i]);
    rad = std::max(rad, r);
  }
  double lo = -rad - 1.0, hi = rad + 1.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (eig_count_below(T, mid) >= k)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

Matrix<double> random_spd(std::mt19937_64& g, index_t n) {
  Matrix<double> R = testutil::random_matrix(g, n, n);
  Matrix<double> A = la::gemm(R, R, la::Op::Trans, la::Op::None);
  for (index_t i = 0; i < n; ++i) A(i, i) += 1.0;
  return A;
}

la::LinearOperator matrix_operator(const Matrix<double>& A) {
  return {A.rows(), [&A](const std::vector<double>& v) {
            std::vector<double> out(std::size_t(A.rows()), 0.0);
            for (index_t j = 0; j < A.cols(); ++j)
              for (index_t i = 0; i < A.rows(); ++i)
                out[std::size_t(i)] += A(i, j) * v[std::size_t(j)];
            return out;
          }};
}

template <class T>
Matrix<T> taylor_expm(const Matrix<T>& A, int terms) {
  Matrix<T> acc = Matrix<T>::identity(A.rows());
  Matrix<T> power = Matrix<T>::identity(A.rows());
  double fact = 1.0;
  for (int k = 1; k <= terms; ++k) {
    power = la::gemm(power, A);
    fact *= double(k);
    for (index_t j = 0; j < A.cols(); ++j)
      for (index_t i = 0; i < A.rows(); ++i) acc(i, j) += power(i, j) / T(fact);
  }
  return acc;
}

}  // namespace

// ---------------------------------------------------------------- gemm

TEST_CASE("gemm times identity is a no-op") {
  auto g = testutil::rng(200);
  auto A = testutil::random_matrix(g, 4, 6);
  CHECK(testutil::rel_dist(la::gemm(A, Matrix<double>::identity(6)), A) == 0.0);
}

TEST_CASE("gemm small integer example") {
  Matrix<double> A(2, 2), x(2, 1);
  A(0, 0) = 1.0; A(0, 1) = 2.0; A(1, 0) = 3.0; A(1, 1) = 4.0;
  x(0, 0) = 1.0; x(1, 0) = 1.0;
  Matrix<double> y = la::gemm(A, x);
  CHECK(y(0, 0) == 3.0);
  CHECK(y(1, 0) == 7.0);
}

TEST_CASE("gemm agrees with the naive triple loop on random sizes up to 30") {
  auto g = testutil::rng(201);
  for (int rep = 0; rep < 20; ++rep) {
    const index_t m = 1 + index_t(g() % 30);
    const index_t k = 1 + index_t(g() % 30);
    const index_t n = 1 + index_t(g() % 30);
    auto A = testutil::random_matrix(g, m, k);
    auto B = testutil::random_matrix(g, k, n);
    CHECK(testutil::rel_dist(la::gemm(A, B), reference::matmul_loops(A, B)) < 1e-13);
  }
}

TEST_CASE("gemm transpose and conjugate-transpose flags") {
  auto g = testutil::rng(202);
  auto A = testutil::random_matrix(g, 5, 3);
  auto B = testutil::random_matrix(g, 5, 4);
  Matrix<double> C = la::gemm(A, B, la::Op::Trans, la::Op::None);
  CHECK(testutil::rel_dist(C, reference::matmul_loops(core::transpose(A), B)) < 1e-13);

  auto Ac = testutil::random_matrix_c(g, 4, 3);
  auto Bc = testutil::random_matrix_c(g, 4, 2);
  Matrix<cplx> Cc = la::gemm(Ac, Bc, la::Op::ConjTrans, la::Op::None);
  CHECK(testutil::rel_dist(Cc, reference::matmul_loops(core::conj_transpose(Ac), Bc)) <
        1e-13);
}

TEST_CASE("gemm rejects inner-dimension mismatch") {
  Matrix<double> A(2, 3), B(2, 2);
  CHECK_THROWS_AS(la::gemm(A, B), core::SizeError);
}

// ---------------------------------------------------------------- lu

TEST_CASE("lu solve with the identity returns the right-hand side") {
  auto g = testutil::rng(210);
  auto f = la::lu_factor(Matrix<double>::identity(5));
  auto B = testutil::random_matrix(g, 5, 3);
  CHECK(testutil::rel_dist(la::lu_solve(f, B), B) == 0.0);
}

TEST_CASE("lu solve with a diagonal matrix divides elementwise") {
  Matrix<double> D(3, 3);
  D(0, 0) = 2.0; D(1, 1) = -4.0; D(2, 2) = 0.5;
  auto f = la::lu_factor(D);
  Matrix<double> B(3, 1);
  B(0, 0) = 2.0; B(1, 0) = 8.0; B(2, 0) = 1.0;
  Matrix<double> X = la::lu_solve(f, B);
  CHECK(X(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(X(1, 0) == doctest::Approx(-2.0).epsilon(1e-15));
  CHECK(X(2, 0) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("lu factors reconstruct the pivoted matrix") {
  auto g = testutil::rng(211);
  for (int rep = 0; rep < 10; ++rep) {
    auto A = testutil::random_matrix(g, 6, 6);
    auto f = la::lu_factor(A);
    Matrix<double> L = Matrix<double>::identity(6);
    Matrix<double> U(6, 6);
    for (index_t j = 0; j < 6; ++j)
      for (index_t i = 0; i < 6; ++i)
        (i > j ? L(i, j) : U(i, j)) = f.lu(i, j);
    Matrix<double> PA = A;
    for (index_t k = 0; k < 6; ++k) {
      const index_t p = f.piv[std::size_t(k)];
      if (p != k)
        for (index_t j = 0; j < 6; ++j) std::swap(PA(k, j), PA(p, j));
    }
    CHECK(testutil::rel_dist(la::gemm(L, U), PA) < 1e-13);
  }
}

TEST_CASE("lu solve residual stays small on well-conditioned systems") {
  auto g = testutil::rng(212);
  for (int rep = 0; rep < 5; ++rep) {
    auto A = testutil::random_matrix(g, 12, 12);
    for (index_t i = 0; i < 12; ++i) A(i, i) += 6.0;
    auto B = testutil::random_matrix(g, 12, 4);
    Matrix<double> X = la::lu_solve(la::lu_factor(A), B);
    CHECK(testutil::rel_dist(la::gemm(A, X), B) < 1e-12);
  }
}

TEST_CASE("lu complex roundtrip") {
  auto g = testutil::rng(213);
  auto A = testutil::random_matrix_c(g, 5, 5);
  for (index_t i = 0; i < 5; ++i) A(i, i) += 4.0;
  auto B = testutil::random_matrix_c(g, 5, 2);
  Matrix<cplx> X = la::lu_solve(la::lu_factor(A), B);
  CHECK(testutil::rel_dist(la::gemm(A, X), B) < 1e-12);
}

TEST_CASE("lu refuses exactly singular matrices") {
  Matrix<double> S(2, 2);
  S(0, 0) = 1.0; S(0, 1) = 2.0; S(1, 0) = 2.0; S(1, 1) = 4.0;
  CHECK_THROWS_AS(la::lu_factor(S), core::NumericalError);
  CHECK_THROWS_AS(la::lu_factor(Matrix<double>(3, 2)), core::SizeError);
}

// ---------------------------------------------------------------- symtridiag_eig

TEST_CASE("symtridiag 1x1 returns the diagonal entry") {
  la::TridiagSym T{{3.25}, {}};
  auto r = la::symtridiag_eig(T);
  REQUIRE(r.values.size() == 1);
  CHECK(r.values[0] == doctest::Approx(3.25).epsilon(1e-15));
  CHECK(std::abs(r.vectors(0, 0)) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("symtridiag 2x2 closed form") {
  la::TridiagSym T{{0.0, 0.0}, {1.0}};
  auto r = la::symtridiag_eig(T);
  REQUIRE(r.values.size() == 2);
  CHECK(r.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(r.values[1] == doctest::Approx(1.0).epsilon(1e-14));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(r.vectors(0, 0)) == doctest::Approx(inv_sqrt2).epsilon(1e-13));
  CHECK(std::abs(r.vectors(0, 1)) == doctest::Approx(inv_sqrt2).epsilon(1e-13));
}

TEST_CASE("symtridiag eigenvalues match the bisection oracle") {
  auto g = testutil::rng(220);
  for (int rep = 0; rep < 8; ++rep) {
    const index_t m = 2 + index_t(g() % 9);  // up to 10
    la::TridiagSym T;
    for (index_t k = 0; k < m; ++k)
      T.diag.push_back(2.0 * double(g() % 1000) / 1000.0 - 1.0);
    for (index_t k = 0; k + 1 < m; ++k)
      T.offdiag.push_back(2.0 * double(g() % 1000) / 1000.0 - 1.0);
    auto r = la::symtridiag_eig(T);
    REQUIRE(index_t(r.values.size()) == m);
    for (index_t k = 0; k + 1 < m; ++k) CHECK(r.values[std::size_t(k)] <= r.values[std::size_t(k) + 1]);
    for (index_t k = 1; k <= m; ++k)
      CHECK(r.values[std::size_t(k - 1)] ==
            doctest::Approx(eig_by_bisection(T, k)).epsilon(1e-10));
  }
}

TEST_CASE("symtridiag full vectors give small residuals and orthonormality") {
  auto g = testutil::rng(221);
  const index_t m = 12;
  la::TridiagSym T;
  for (index_t k = 0; k < m; ++k) T.diag.push_back(double(g() % 7) - 3.0);
  for (index_t k = 0; k + 1 < m; ++k) T.offdiag.push_back(0.25 + double(g() % 4));
  auto r = la::symtridiag_eig(T, la::EigMode::FullVectors);
  REQUIRE(r.vectors.rows() == m);
  REQUIRE(r.vectors.cols() == m);
  double normT = 0.0;
  for (double v : T.diag) normT = std::max(normT, std::abs(v));
  for (double v : T.offdiag) normT = std::max(normT, std::abs(v));
  for (index_t j = 0; j < m; ++j) {
    // residual ||T v - lambda v||
    double res = 0.0;
    for (index_t i = 0; i < m; ++i) {
      double tv = T.diag[std::size_t(i)] * r.vectors(i, j);
      if (i > 0) tv += T.offdiag[std::size_t(i - 1)] * r.vectors(i - 1, j);
      if (i + 1 < m) tv += T.offdiag[std::size_t(i)] * r.vectors(i + 1, j);
      res = std::max(res, std::abs(tv - r.values[std::size_t(j)] * r.vectors(i, j)));
    }
    CHECK(res <= 1e-12 * normT * 3.0);
    for (index_t k = 0; k <= j; ++k) {
      double d = 0.0;
      for (index_t i = 0; i < m; ++i) d += r.vectors(i, j) * r.vectors(i, k);
      CHECK(d == doctest::Approx(j == k ? 1.0 : 0.0).epsilon(1e-12));
    }
  }
  // FirstComponents mode reproduces row one of the full accumulation
  auto rf = la::symtridiag_eig(T, la::EigMode::FirstComponents);
  for (index_t j = 0; j < m; ++j)
    CHECK(std::abs(rf.vectors(0, j)) ==
          doctest::Approx(std::abs(r.vectors(0, j))).epsilon(1e-12));
}

// ---------------------------------------------------------------- expm

TEST_CASE("expm of the zero matrix is the identity") {
  Matrix<double> Z(4, 4);
  CHECK(testutil::rel_dist(la::expm(Z), Matrix<double>::identity(4)) == 0.0);
}

TEST_CASE("expm of a nilpotent matrix terminates the series") {
  Matrix<double> N(2, 2);
  N(0, 1) = 1.0;
  Matrix<double> E = la::expm(N);
  CHECK(E(0, 0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(E(0, 1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(E(1, 0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(E(1, 1) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("expm agrees with a truncated Taylor series for small norms") {
  auto g = testutil::rng(230);
  for (int rep = 0; rep < 8; ++rep) {
    auto A = testutil::random_matrix(g, 5, 5);
    for (index_t j = 0; j < 5; ++j)
      for (index_t i = 0; i < 5; ++i) A(i, j) *= 0.2;  // ||A|| <= 1
    CHECK(testutil::rel_dist(la::expm(A), taylor_expm(A, 30)) < 1e-12);
  }
}

TEST_CASE("expm complex agrees with the Taylor oracle") {
  auto g = testutil::rng(231);
  auto A = testutil::random_matrix_c(g, 4, 4);
  for (index_t j = 0; j < 4; ++j)
    for (index_t i = 0; i < 4; ++i) A(i, j) *= 0.2;
  CHECK(testutil::rel_dist(la::expm(A), taylor_expm(A, 30)) < 1e-12);
}

TEST_CASE("expm inverse identity holds at moderate norms") {
  auto g = testutil::rng(232);
  for (double scale : {0.5, 2.0, 10.0}) {
    auto A = testutil::random_matrix(g, 6, 6);
    double nrm = 0.0;
    for (index_t j = 0; j < 6; ++j) {
      double c = 0.0;
      for (index_t i = 0; i < 6; ++i) c += std::abs(A(i, j));
      nrm = std::max(nrm, c);
    }
    for (index_t j = 0; j < 6; ++j)
      for (index_t i = 0; i < 6; ++i) A(i, j) *= scale / nrm;
    Matrix<double> Am = A;
    for (index_t j = 0; j < 6; ++j)
      for (index_t i = 0; i < 6; ++i) Am(i, j) = -A(i, j);
    Matrix<double> P = la::gemm(la::expm(A), la::expm(Am));
    CHECK(testutil::rel_dist(P, Matrix<double>::identity(6)) < 1e-10);
  }
}

TEST_CASE("expm of a Kronecker sum is the Kronecker product of exponentials") {
  auto g = testutil::rng(233);
  for (int rep = 0; rep < 5; ++rep) {
    auto A1 = testutil::random_matrix(g, 3, 3);
    auto A2 = testutil::random_matrix(g, 3, 3);
    Matrix<double> S = kronref::kronsum(std::vector<Matrix<double>>{A1, A2});
    Matrix<double> lhs = la::expm(S);
    Matrix<double> rhs = kronref::kron(la::expm(A2), la::expm(A1));
    CHECK(testutil::rel_dist(lhs, rhs) < 1e-10);
  }
}

TEST_CASE("expm triggers the high-norm squaring path correctly") {
  // diagonal matrix: exact answer is elementwise exp
  Matrix<double> D(3, 3);
  D(0, 0) = 14.0; D(1, 1) = -9.0; D(2, 2) = 3.0;
  Matrix<double> E = la::expm(D);
  CHECK(E(0, 0) == doctest::Approx(std::exp(14.0)).epsilon(1e-12));
  CHECK(E(1, 1) == doctest::Approx(std::exp(-9.0)).epsilon(1e-12));
  CHECK(E(2, 2) == doctest::Approx(std::exp(3.0)).epsilon(1e-12));
  CHECK(std::abs(E(0, 1)) < 1e-12);
}

TEST_CASE("expm rejects non-square and non-finite input") {
  CHECK_THROWS_AS(la::expm(Matrix<double>(2, 3)), core::SizeError);
  Matrix<double> B(2, 2);
  B(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(la::expm(B), core::ArgumentError);
}

// ---------------------------------------------------------------- dft

TEST_CASE("dft constant samples resample to the same constant") {
  for (index_t m : {5, 8}) {
    auto pair = la::dft_matrices(m, 13, 0.0, 1.0);
    Matrix<cplx> s(m, 1);
    for (index_t k = 0; k < m; ++k) s(k, 0) = 4.5;
    Matrix<cplx> r = la::gemm(pair.synthesis, la::gemm(pair.analysis, s));
    for (index_t l = 0; l < 13; ++l) {
      CHECK(r(l, 0).real() == doctest::Approx(4.5).epsilon(1e-13));
      CHECK(std::abs(r(l, 0).imag()) < 1e-13);
    }
  }
}

TEST_CASE("dft roundtrip at equal sample and eval counts is the identity") {
  for (index_t m : {7, 8}) {
    auto pair = la::dft_matrices(m, m, -2.0, 3.0);
    Matrix<cplx> R = la::gemm(pair.synthesis, pair.analysis);
    CHECK(testutil::rel_dist(R, Matrix<cplx>::identity(m)) < 1e-12);
  }
}

TEST_CASE("dft reproduces a bandlimited sine exactly on a finer grid") {
  const index_t m = 8, n = 16;
  auto pair = la::dft_matrices(m, n, 0.0, 1.0);
  Matrix<cplx> s(m, 1);
  for (index_t j = 0; j < m; ++j)
    s(j, 0) = std::sin(2.0 * M_PI * double(j) / double(m));
  Matrix<cplx> r = la::gemm(pair.synthesis, la::gemm(pair.analysis, s));
  for (index_t l = 0; l < n; ++l) {
    const double x = double(l) / double(n);
    CHECK(r(l, 0).real() == doctest::Approx(std::sin(2.0 * M_PI * x)).epsilon(1e-12));
    CHECK(std::abs(r(l, 0).imag()) < 1e-12);
  }
}

TEST_CASE("dft real input gives a real resample for even m") {
  auto g = testutil::rng(241);
  const index_t m = 10, n = 23;
  auto pair = la::dft_matrices(m, n, 0.0, 2.0);
  Matrix<cplx> s(m, 1);
  for (index_t k = 0; k < m; ++k) s(k, 0) = double(g() % 100) / 25.0 - 2.0;
  Matrix<cplx> r = la::gemm(pair.synthesis, la::gemm(pair.analysis, s));
  for (index_t l = 0; l < n; ++l) CHECK(std::abs(r(l, 0).imag()) < 1e-12);
}

TEST_CASE("dft synthesis at explicit points matches the synthesis matrix") {
  const index_t m = 9, n = 5;
  const double a = 0.5, b = 2.5;
  auto pair = la::dft_matrices(m, n, a, b);
  std::vector<double> x;
  for (index_t l = 0; l < n; ++l) x.push_back(a + (b - a) * double(l) / double(n));
  Matrix<cplx> S = la::dft_synthesis_at(m, x, a, b);
  CHECK(testutil::rel_dist(S, pair.synthesis) < 1e-14);
}

// ---------------------------------------------------------------- pcg

TEST_CASE("pcg on the identity converges in one iteration") {
  auto g = testutil::rng(250);
  la::LinearOperator I{6, [](const std::vector<double>& v) { return v; }};
  std::vector<double> b(6);
  for (auto& v : b) v = double(g() % 100) / 10.0 + 1.0;
  auto [x, rep] = la::pcg(I, b, {}, 1e-12, 50);
  CHECK(rep.converged);
  CHECK(rep.iterations == 1);
  for (std::size_t k = 0; k < b.size(); ++k)
    CHECK(x[k] == doctest::Approx(b[k]).epsilon(1e-12));
}

TEST_CASE("pcg solves diag(2,1) in at most two iterations") {
  la::LinearOperator A{2, [](const std::vector<double>& v) {
                         return std::vector<double>{2.0 * v[0], v[1]};
                       }};
  auto [x, rep] = la::pcg(A, {2.0, 1.0}, {}, 1e-10, 10);
  CHECK(rep.converged);
  CHECK(rep.iterations <= 2);
  CHECK(x[0] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(x[1] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("pcg with the exact inverse preconditioner needs one iteration") {
  auto g = testutil::rng(251);
  Matrix<double> A = random_spd(g, 10);
  Matrix<double> Ainv = la::lu_solve(la::lu_factor(A), Matrix<double>::identity(10));
  la::LinearOperator Aop = matrix_operator(A);
  la::LinearOperator Mop = matrix_operator(Ainv);
  std::vector<double> b(10, 1.0);
  auto [x, rep] = la::pcg(Aop, b, {}, 1e-10, 50, &Mop);
  CHECK(rep.converged);
  CHECK(rep.iterations == 1);
}

TEST_CASE("pcg iteration count is bounded by the number of distinct eigenvalues") {
  // diagonal operator with 3 distinct values spread over 30 entries
  const index_t n = 30;
  std::vector<double> d(std::size_t(n), 0.0);
  for (index_t k = 0; k < n; ++k) d[std::size_t(k)] = 1.0 + double(k % 3);
  la::LinearOperator A{n, [d](const std::vector<double>& v) {
                         std::vector<double> out(v.size());
                         for (std::size_t k = 0; k < v.size(); ++k) out[k] = d[k] * v[k];
                         return out;
                       }};
  std::vector<double> b(std::size_t(n), 1.0);
  for (std::size_t k = 0; k < b.size(); ++k) b[k] = 1.0 + 0.01 * double(k);
  auto [x, rep] = la::pcg(A, b, {}, 1e-12, 50);
  CHECK(rep.converged);
  CHECK(rep.iterations <= 3);
}

TEST_CASE("pcg reports non-convergence at maxit without throwing") {
  auto g = testutil::rng(252);
  Matrix<double> A = random_spd(g, 40);
  la::LinearOperator Aop = matrix_operator(A);
  std::vector<double> b(40, 1.0);
  auto [x, rep] = la::pcg(Aop, b, {}, 1e-14, 1);
  CHECK_FALSE(rep.converged);
  CHECK(rep.iterations == 1);
}

TEST_CASE("pcg throws on a non-SPD operator") {
  la::LinearOperator A{3, [](const std::vector<double>& v) {
                         std::vector<double> out(v.size());
                         for (std::size_t k = 0; k < v.size(); ++k) out[k] = -v[k];
                         return out;
                       }};
  std::vector<double> b{1.0, 2.0, 3.0};
  CHECK_THROWS_AS(la::pcg(A, b, {}, 1e-10, 10), core::NumericalError);
}

TEST_CASE("pcg handles zero right-hand sides and exact warm starts") {
  la::LinearOperator I{3, [](const std::vector<double>& v) { return v; }};
  auto [x0, rep0] = la::pcg(I, {0.0, 0.0, 0.0}, {}, 1e-12, 10);
  CHECK(rep0.converged);
  for (double v : x0) CHECK(v == 0.0);
  std::vector<double> b{1.0, -2.0, 0.5};
  auto [x1, rep1] = la::pcg(I, b, b, 1e-12, 10);
  CHECK(rep1.converged);
  CHECK(rep1.iterations == 0);
}

TEST_CASE("pcg converged flag implies the residual meets the tolerance") {
  auto g = testutil::rng(253);
  Matrix<double> A = random_spd(g, 25);
  la::LinearOperator Aop = matrix_operator(A);
  std::vector<double> b(25);
  for (auto& v : b) v = double(g() % 200) / 100.0 - 1.0;
  for (double tol : {1e-4, 1e-8, 1e-12}) {
    auto [x, rep] = la::pcg(Aop, b, {}, tol, 200);
    if (rep.converged) CHECK(rep.final_residual <= tol);
  }
}
