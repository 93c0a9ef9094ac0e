#include <complex>
#include <vector>

#include "doctest.h"
#include "mumode/kron.hpp"
#include "mumode/tucker.hpp"
#include "test_util.hpp"

using namespace mumode;
using core::cplx;
using core::index_t;
using core::Matrix;
using core::Shape;
using core::Tensor;

TEST_CASE("kron of identity with B is block diagonal") {
  Matrix<double> I2 = Matrix<double>::identity(2);
  Matrix<double> B(2, 2);
  B(0, 0) = 1.0; B(0, 1) = 2.0; B(1, 0) = 3.0; B(1, 1) = 4.0;
  Matrix<double> K = kronref::kron(I2, B);
  REQUIRE(K.rows() == 4);
  REQUIRE(K.cols() == 4);
  for (index_t i = 0; i < 4; ++i)
    for (index_t j = 0; j < 4; ++j) {
      const bool same_block = (i / 2) == (j / 2);
      const double want = same_block ? B(i % 2, j % 2) : 0.0;
      CHECK(K(i, j) == want);
    }
}

TEST_CASE("kron 2x2 example expands blockwise") {
  Matrix<double> A(2, 2), B(2, 2);
  A(0, 0) = 1.0; A(0, 1) = 2.0; A(1, 0) = 3.0; A(1, 1) = 4.0;
  B(0, 0) = 0.0; B(0, 1) = 1.0; B(1, 0) = 1.0; B(1, 1) = 0.0;
  Matrix<double> K = kronref::kron(A, B);
  for (index_t bi = 0; bi < 2; ++bi)
    for (index_t bj = 0; bj < 2; ++bj)
      for (index_t p = 0; p < 2; ++p)
        for (index_t q = 0; q < 2; ++q)
          CHECK(K(2 * bi + p, 2 * bj + q) == A(bi, bj) * B(p, q));
}

TEST_CASE("kron mixed-product rule on random 2x2 matrices") {
  auto g = testutil::rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    auto A = testutil::random_matrix(g, 2, 2);
    auto B = testutil::random_matrix(g, 2, 2);
    auto D = testutil::random_matrix(g, 2, 2);
    auto E = testutil::random_matrix(g, 2, 2);
    Matrix<double> lhs = la::gemm(kronref::kron(A, B), kronref::kron(D, E));
    Matrix<double> rhs = kronref::kron(la::gemm(A, D), la::gemm(B, E));
    CHECK(testutil::rel_dist(lhs, rhs) < 1e-13);
  }
}

TEST_CASE("kronsum of a single matrix is the matrix itself") {
  auto g = testutil::rng(12);
  auto A = testutil::random_matrix(g, 3, 3);
  Matrix<double> S = kronref::kronsum(std::vector<Matrix<double>>{A});
  CHECK(testutil::rel_dist(S, A) == 0.0);
}

TEST_CASE("kronsum of 1x1 matrices adds the scalars") {
  Matrix<double> A(1, 1), B(1, 1);
  A(0, 0) = 3.5;
  B(0, 0) = -1.25;
  Matrix<double> S = kronref::kronsum(std::vector<Matrix<double>>{A, B});
  REQUIRE(S.rows() == 1);
  REQUIRE(S.cols() == 1);
  CHECK(S(0, 0) == 2.25);
}

TEST_CASE("kronsum d=2 matches the textbook two-term formula") {
  auto g = testutil::rng(13);
  auto A1 = testutil::random_matrix(g, 2, 2);
  auto A2 = testutil::random_matrix(g, 3, 3);
  // A2 (+) A1 = A2 (x) I1 + I2 (x) A1
  Matrix<double> want = kronref::kron(A2, Matrix<double>::identity(2));
  Matrix<double> t2 = kronref::kron(Matrix<double>::identity(3), A1);
  for (index_t j = 0; j < want.cols(); ++j)
    for (index_t i = 0; i < want.rows(); ++i) want(i, j) += t2(i, j);
  Matrix<double> S = kronref::kronsum(std::vector<Matrix<double>>{A1, A2});
  CHECK(testutil::rel_dist(S, want) < 1e-15);
}

TEST_CASE("kronsum rejects non-square input naming the mode") {
  auto g = testutil::rng(14);
  std::vector<Matrix<double>> As{testutil::random_matrix(g, 2, 2),
                                 testutil::random_matrix(g, 2, 3)};
  CHECK_THROWS_WITH_AS(kronref::kronsum(As), doctest::Contains("mode 2"),
                       core::ArgumentError);
}

TEST_CASE("kronsum action agrees with kronsumv on random d=3 stacks") {
  auto g = testutil::rng(15);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<Matrix<double>> As{testutil::random_matrix(g, 2, 2),
                                   testutil::random_matrix(g, 2, 2),
                                   testutil::random_matrix(g, 2, 2)};
    Tensor<double> V = testutil::random_tensor(g, Shape({2, 2, 2}));
    Matrix<double> S = kronref::kronsum(As);
    Matrix<double> x(V.numel(), 1);
    for (index_t k = 0; k < V.numel(); ++k) x(k, 0) = core::vec(V)[std::size_t(k)];
    Matrix<double> y = la::gemm(S, x);
    Tensor<double> W = ops::kronsumv(V, As);
    double diff = 0.0, scale = 0.0;
    for (index_t k = 0; k < V.numel(); ++k) {
      diff = std::max(diff, std::abs(y(k, 0) - core::vec(W)[std::size_t(k)]));
      scale = std::max(scale, std::abs(y(k, 0)));
    }
    CHECK(diff / scale < 1e-13);
  }
}

TEST_CASE("kronsum of symmetric matrices is symmetric") {
  auto g = testutil::rng(16);
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<Matrix<double>> As;
    for (int mu = 0; mu < 3; ++mu) {
      auto A = testutil::random_matrix(g, 3, 3);
      for (index_t i = 0; i < 3; ++i)
        for (index_t j = 0; j < i; ++j) A(i, j) = A(j, i);
      As.push_back(std::move(A));
    }
    Matrix<double> S = kronref::kronsum(As);
    for (index_t i = 0; i < S.rows(); ++i)
      for (index_t j = 0; j < S.cols(); ++j) CHECK(S(i, j) == S(j, i));
  }
}

TEST_CASE("kron_apply_oracle with identity stack returns the tensor") {
  auto g = testutil::rng(17);
  Tensor<double> T = testutil::random_tensor(g, Shape({2, 3, 2}));
  ops::MatrixStack<double> Ls{Matrix<double>::identity(2), Matrix<double>::identity(3),
                              Matrix<double>::identity(2)};
  Tensor<double> S = kronref::kron_apply_oracle(Ls, T);
  CHECK(core::max_abs_diff(S, T) == 0.0);
}

TEST_CASE("kron_apply_oracle d=2 equals L1 * T * L2^T") {
  auto g = testutil::rng(18);
  for (int rep = 0; rep < 10; ++rep) {
    Tensor<double> T = testutil::random_tensor(g, Shape({3, 4}));
    auto L1 = testutil::random_matrix(g, 2, 3);
    auto L2 = testutil::random_matrix(g, 5, 4);
    Tensor<double> S = kronref::kron_apply_oracle({L1, L2}, T);
    Matrix<double> Tm(3, 4);
    for (index_t j = 0; j < 4; ++j)
      for (index_t i = 0; i < 3; ++i) Tm(i, j) = T.at({i + 1, j + 1});
    Matrix<double> want = la::gemm(la::gemm(L1, Tm), L2, la::Op::None, la::Op::Trans);
    double diff = 0.0;
    for (index_t j = 0; j < 5; ++j)
      for (index_t i = 0; i < 2; ++i)
        diff = std::max(diff, std::abs(S.at({i + 1, j + 1}) - want(i, j)));
    CHECK(diff / core::max_abs(S) < 1e-14);
  }
}

TEST_CASE("kron_apply_oracle d=4 agrees with quadruple-loop element sums") {
  auto g = testutil::rng(19);
  Shape in({2, 3, 2, 3});
  std::vector<index_t> out{3, 2, 3, 2};
  Tensor<double> T = testutil::random_tensor(g, in);
  ops::MatrixStack<double> Ls;
  for (index_t mu = 1; mu <= 4; ++mu)
    Ls.push_back(testutil::random_matrix(g, out[std::size_t(mu - 1)], in.extent(mu)));
  Tensor<double> S = kronref::kron_apply_oracle(Ls, T);
  // s_{i1..i4} = sum_{j1..j4} t_{j1..j4} * prod_mu L_mu(i_mu, j_mu)
  double diff = 0.0;
  std::vector<index_t> iv(4), jv(4);
  for (iv[0] = 1; iv[0] <= 3; ++iv[0])
    for (iv[1] = 1; iv[1] <= 2; ++iv[1])
      for (iv[2] = 1; iv[2] <= 3; ++iv[2])
        for (iv[3] = 1; iv[3] <= 2; ++iv[3]) {
          double acc = 0.0;
          for (jv[0] = 1; jv[0] <= 2; ++jv[0])
            for (jv[1] = 1; jv[1] <= 3; ++jv[1])
              for (jv[2] = 1; jv[2] <= 2; ++jv[2])
                for (jv[3] = 1; jv[3] <= 3; ++jv[3]) {
                  double w = T.at(jv);
                  for (int mu = 0; mu < 4; ++mu)
                    w *= Ls[std::size_t(mu)](iv[std::size_t(mu)] - 1, jv[std::size_t(mu)] - 1);
                  acc += w;
                }
          diff = std::max(diff, std::abs(S.at(iv) - acc));
        }
  CHECK(diff / core::max_abs(S) < 1e-13);
}

TEST_CASE("kron_apply_oracle rejects size mismatches and oversize outputs") {
  auto g = testutil::rng(20);
  Tensor<double> T = testutil::random_tensor(g, Shape({2, 2}));
  CHECK_THROWS_AS(kronref::kron_apply_oracle({Matrix<double>::identity(2)}, T),
                  core::SizeError);
  CHECK_THROWS_WITH_AS(
      kronref::kron_apply_oracle({Matrix<double>::identity(3), Matrix<double>::identity(2)}, T),
      doctest::Contains("mode 1"), core::SizeError);
  // 1100^2 > 1e6 output elements must be refused before any allocation.
  Tensor<double> small = testutil::random_tensor(g, Shape({2, 2}));
  ops::MatrixStack<double> big{Matrix<double>(1100, 2), Matrix<double>(1100, 2)};
  CHECK_THROWS_WITH_AS(kronref::kron_apply_oracle(big, small),
                       doctest::Contains("capped"), core::SizeError);
}

TEST_CASE("identity suite passes on several seeds") {
  for (std::uint64_t seed : {1ull, 42ull, 977ull}) {
    auto rep = kronref::appendix_identity_suite(seed);
    REQUIRE(rep.results.size() == 8);
    for (const auto& r : rep.results) {
      CAPTURE(r.property);
      CAPTURE(r.name);
      CHECK(r.passed);
      CHECK(r.max_rel_error < 1e-12);
    }
    CHECK(rep.all_passed);
    // properties are numbered 1..8 in order
    for (std::size_t k = 0; k < 8; ++k)
      CHECK(rep.results[k].property == int(k) + 1);
  }
}

TEST_CASE("identity suite reports errors well below tolerance but nonzero") {
  auto rep = kronref::appendix_identity_suite(7, 50, 1e-12);
  double worst = 0.0;
  for (const auto& r : rep.results) worst = std::max(worst, r.max_rel_error);
  CHECK(worst > 0.0);      // floating arithmetic, not symbolic
  CHECK(worst < 1e-13);    // comfortable margin under the gate
}

TEST_CASE("identity suite flags failures with an impossible tolerance") {
  auto rep = kronref::appendix_identity_suite(7, 20, 1e-18);
  CHECK_FALSE(rep.all_passed);
}
