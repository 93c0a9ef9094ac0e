#pragma once

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "mumode/errors.hpp"
#include "mumode/shape.hpp"

namespace mumode::la {

using core::index_t;

/// Matrix-free symmetric positive definite operator on length-dim vectors.
struct LinearOperator {
  index_t dim;
  std::function<std::vector<double>(const std::vector<double>&)> apply;
};

struct CGReport {
  index_t iterations = 0;
  double final_residual = 0.0;  // relative, ||b - Ax|| / ||b||
  bool converged = false;
};

namespace detail {

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

inline double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

}  // namespace detail

/// Preconditioned conjugate gradient with warm start. Stops when the
/// recurrence residual satisfies ||r||/||b|| <= tol; the report carries a
/// recomputed true residual. Exceeding maxit returns converged=false;
/// nonpositive curvature (non-SPD operator) throws.
inline std::pair<std::vector<double>, CGReport> pcg(
    const LinearOperator& A, const std::vector<double>& b, const std::vector<double>& x0,
    double tol, index_t maxit, const LinearOperator* Minv = nullptr) {
  if (static_cast<index_t>(b.size()) != A.dim)
    throw core::SizeError("pcg: right-hand side length does not match operator");
  if (!x0.empty() && x0.size() != b.size())
    throw core::SizeError("pcg: warm start length does not match right-hand side");

  const double normb = detail::norm2(b);
  std::vector<double> x = x0.empty() ? std::vector<double>(b.size(), 0.0) : x0;
  CGReport rep;
  if (normb == 0.0) {
    std::fill(x.begin(), x.end(), 0.0);
    rep.converged = true;
    return {x, rep};
  }

  std::vector<double> r = b;
  {
    std::vector<double> Ax = A.apply(x);
    for (std::size_t k = 0; k < r.size(); ++k) r[k] -= Ax[k];
  }
  double relres = detail::norm2(r) / normb;
  if (relres <= tol) {
    rep.final_residual = relres;
    rep.converged = true;
    return {x, rep};
  }

  std::vector<double> z = Minv ? Minv->apply(r) : r;
  std::vector<double> p = z;
  double rz = detail::dot(r, z);

  for (index_t it = 1; it <= maxit; ++it) {
    std::vector<double> q = A.apply(p);
    const double pq = detail::dot(p, q);
    if (pq <= 0.0)
      throw core::NumericalError("pcg: nonpositive curvature, operator is not SPD");
    const double alpha = rz / pq;
    for (std::size_t k = 0; k < x.size(); ++k) {
      x[k] += alpha * p[k];
      r[k] -= alpha * q[k];
    }
    relres = detail::norm2(r) / normb;
    rep.iterations = it;
    if (relres <= tol) {
      rep.converged = true;
      break;
    }
    z = Minv ? Minv->apply(r) : r;
    const double rz_new = detail::dot(r, z);
    const double beta = rz_new / rz;
    rz = rz_new;
    for (std::size_t k = 0; k < p.size(); ++k) p[k] = z[k] + beta * p[k];
  }

  // Final check against the recomputed true residual.
  std::vector<double> Ax = A.apply(x);
  std::vector<double> rt = b;
  for (std::size_t k = 0; k < rt.size(); ++k) rt[k] -= Ax[k];
  rep.final_residual = detail::norm2(rt) / normb;
  rep.converged = rep.converged && rep.final_residual <= tol;
  return {x, rep};
}

}  // namespace mumode::la
