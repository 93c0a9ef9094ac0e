#include "mumode/stencils.hpp"

#include "mumode/errors.hpp"

namespace mumode::basis {

StencilMatrix ada_stencil(index_t n, double b, double a, double g) {
  if (n < 3) throw core::ArgumentError("ada_stencil: need at least 3 grid points");
  const double h = 2.0 / double(n);
  StencilMatrix st;
  st.left = BoundaryCondition::DirichletHomogeneous;
  st.right = BoundaryCondition::NeumannHomogeneous;
  st.grid.resize(static_cast<std::size_t>(n));
  st.A = Matrix<double>(n, n);
  const double c0 = -(b + g / 3.0);
  for (index_t i = 0; i < n; ++i) {
    const double x = double(i + 1) * h;
    st.grid[static_cast<std::size_t>(i)] = x;
    const double c1 = 2.0 * a * b * b * x - b * x;  // advection coefficient
    const double c2 = a * b * b * x * x;            // diffusion coefficient
    const double lower = -c1 / (2.0 * h) + c2 / (h * h);
    const double diag = -2.0 * c2 / (h * h) + c0;
    const double upper = c1 / (2.0 * h) + c2 / (h * h);
    st.A(i, i) = diag;
    if (i + 1 < n) st.A(i, i + 1) = upper;
    if (i > 0) st.A(i, i - 1) = lower;
    // Neumann end: the ghost value mirrors the last interior neighbour,
    // so the upper coefficient folds onto the lower one.
    if (i == n - 1) st.A(i, i - 1) = lower + upper;
  }
  return st;
}

StencilMatrix laplacian_stencil(index_t n) {
  if (n < 1) throw core::ArgumentError("laplacian_stencil: need at least 1 grid point");
  const double h = 1.0 / double(n + 1);
  const double w = 1.0 / (h * h);
  StencilMatrix st;
  st.left = BoundaryCondition::DirichletHomogeneous;
  st.right = BoundaryCondition::DirichletHomogeneous;
  st.grid.resize(static_cast<std::size_t>(n));
  st.A = Matrix<double>(n, n);
  for (index_t i = 0; i < n; ++i) {
    st.grid[static_cast<std::size_t>(i)] = double(i + 1) * h;
    st.A(i, i) = -2.0 * w;
    if (i > 0) st.A(i, i - 1) = w;
    if (i + 1 < n) st.A(i, i + 1) = w;
  }
  return st;
}

}  // namespace mumode::basis
