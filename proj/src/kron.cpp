#include "mumode/kron.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "mumode/lu.hpp"

namespace mumode::kronref {
namespace {

using core::flat_index;
using core::Shape;

Matrix<cplx> rand_matrix(std::mt19937_64& rng, index_t rows, index_t cols) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix<cplx> A(rows, cols);
  for (index_t j = 0; j < cols; ++j)
    for (index_t i = 0; i < rows; ++i) A(i, j) = cplx(u(rng), u(rng));
  return A;
}

/// Random square matrix kept well conditioned by a diagonal shift, so the
/// inverse identity can be checked at full tolerance.
Matrix<cplx> rand_invertible(std::mt19937_64& rng, index_t n) {
  Matrix<cplx> A = rand_matrix(rng, n, n);
  for (index_t i = 0; i < n; ++i) A(i, i) += cplx(4.0, 0.0);
  return A;
}

Matrix<cplx> inverse(const Matrix<cplx>& A) {
  auto f = la::lu_factor(A);
  return la::lu_solve(f, Matrix<cplx>::identity(A.rows()));
}

double rel_dist(const Matrix<cplx>& A, const Matrix<cplx>& B) {
  double diff = 0.0, scale = 0.0;
  const auto& a = A.storage();
  const auto& b = B.storage();
  for (std::size_t k = 0; k < a.size(); ++k) {
    diff = std::max(diff, std::abs(a[k] - b[k]));
    scale = std::max({scale, std::abs(a[k]), std::abs(b[k])});
  }
  return scale > 0.0 ? diff / scale : diff;
}

index_t rand_dim(std::mt19937_64& rng) {
  return std::uniform_int_distribution<index_t>(1, 4)(rng);
}

}  // namespace

IdentityReport appendix_identity_suite(std::uint64_t seed, int cases, double tol) {
  std::mt19937_64 rng(seed);
  IdentityReport report;
  report.results = {
      {1, "(A+B) (x) C = A (x) C + B (x) C", 0.0, true},
      {2, "A (x) (B+C) = A (x) B + A (x) C", 0.0, true},
      {3, "(aA) (x) B = a(A (x) B) = A (x) (aB)", 0.0, true},
      {4, "(A (x) B) (x) C = A (x) (B (x) C)", 0.0, true},
      {5, "(A (x) B)^T = A^T (x) B^T", 0.0, true},
      {6, "(A (x) B)^-1 = A^-1 (x) B^-1", 0.0, true},
      {7, "(A (x) B)(D (x) E) = (AD) (x) (BE)", 0.0, true},
      {8, "vec(ADC) = (C^T (x) A) vec(D)", 0.0, true},
  };
  auto record = [&](int prop, double err) {
    auto& r = report.results[static_cast<std::size_t>(prop - 1)];
    r.max_rel_error = std::max(r.max_rel_error, err);
  };

  for (int c = 0; c < cases; ++c) {
    const index_t m = rand_dim(rng), n = rand_dim(rng), p = rand_dim(rng),
                  q = rand_dim(rng), r = rand_dim(rng), s = rand_dim(rng);

    {  // 1, 2: bilinearity in each argument
      auto A = rand_matrix(rng, m, n), B = rand_matrix(rng, m, n),
           C = rand_matrix(rng, p, q);
      Matrix<cplx> ApB(m, n);
      for (index_t j = 0; j < n; ++j)
        for (index_t i = 0; i < m; ++i) ApB(i, j) = A(i, j) + B(i, j);
      Matrix<cplx> lhs = kron(ApB, C);
      Matrix<cplx> rhs = kron(A, C);
      Matrix<cplx> BC = kron(B, C);
      for (std::size_t k = 0; k < rhs.storage().size(); ++k)
        rhs.storage()[k] += BC.storage()[k];
      record(1, rel_dist(lhs, rhs));

      Matrix<cplx> lhs2 = kron(C, ApB);
      Matrix<cplx> rhs2 = kron(C, A);
      Matrix<cplx> CB = kron(C, B);
      for (std::size_t k = 0; k < rhs2.storage().size(); ++k)
        rhs2.storage()[k] += CB.storage()[k];
      record(2, rel_dist(lhs2, rhs2));
    }

    {  // 3: scalar pull-out, both placements
      auto A = rand_matrix(rng, m, n), B = rand_matrix(rng, p, q);
      const cplx alpha(std::uniform_real_distribution<double>(-2.0, 2.0)(rng),
                       std::uniform_real_distribution<double>(-2.0, 2.0)(rng));
      Matrix<cplx> aA = A, aB = B;
      for (auto& v : aA.storage()) v *= alpha;
      for (auto& v : aB.storage()) v *= alpha;
      Matrix<cplx> mid = kron(A, B);
      for (auto& v : mid.storage()) v *= alpha;
      record(3, std::max(rel_dist(kron(aA, B), mid), rel_dist(kron(A, aB), mid)));
    }

    {  // 4: associativity
      auto A = rand_matrix(rng, m, n), B = rand_matrix(rng, p, q),
           C = rand_matrix(rng, r, s);
      record(4, rel_dist(kron(kron(A, B), C), kron(A, kron(B, C))));
    }

    {  // 5: transpose rule
      auto A = rand_matrix(rng, m, n), B = rand_matrix(rng, p, q);
      record(5, rel_dist(core::transpose(kron(A, B)),
                         kron(core::transpose(A), core::transpose(B))));
    }

    {  // 6: inverse rule
      auto A = rand_invertible(rng, m), B = rand_invertible(rng, p);
      record(6, rel_dist(inverse(kron(A, B)), kron(inverse(A), inverse(B))));
    }

    {  // 7: mixed product
      auto A = rand_matrix(rng, m, n), B = rand_matrix(rng, p, q);
      auto D = rand_matrix(rng, n, r), E = rand_matrix(rng, q, s);
      record(7, rel_dist(la::gemm(kron(A, B), kron(D, E)),
                         kron(la::gemm(A, D), la::gemm(B, E))));
    }

    {  // 8: vec correspondence
      auto A = rand_matrix(rng, m, n), D = rand_matrix(rng, n, p),
           C = rand_matrix(rng, p, q);
      Matrix<cplx> ADC = la::gemm(la::gemm(A, D), C);
      Matrix<cplx> big = kron(core::transpose(C), A);
      Matrix<cplx> vecD(n * p, 1);
      std::copy(D.storage().begin(), D.storage().end(), vecD.storage().begin());
      Matrix<cplx> rhs = la::gemm(big, vecD);
      Matrix<cplx> lhs(m * q, 1);
      std::copy(ADC.storage().begin(), ADC.storage().end(), lhs.storage().begin());
      record(8, rel_dist(lhs, rhs));
    }
  }

  report.all_passed = true;
  for (auto& res : report.results) {
    res.passed = res.max_rel_error <= tol;
    report.all_passed = report.all_passed && res.passed;
  }
  return report;
}

}  // namespace mumode::kronref
