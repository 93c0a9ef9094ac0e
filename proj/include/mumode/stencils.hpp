#pragma once

#include <vector>

#include "mumode/matrix.hpp"

namespace mumode::basis {

using core::index_t;
using core::Matrix;

enum class BoundaryCondition { DirichletHomogeneous, NeumannHomogeneous };

/// One-dimensional finite-difference operator on the interior grid points,
/// with the boundary conditions already folded into the rows.
struct StencilMatrix {
  Matrix<double> A;
  std::vector<double> grid;
  BoundaryCondition left;
  BoundaryCondition right;
};

/// Second-order centered discretization of
///   (2 a b^2 x - b x) d/dx + a b^2 x^2 d^2/dx^2 - (b + g/3)
/// on the uniform grid x_l = l h, h = 2/n, l = 1..n: homogeneous Dirichlet
/// at x = 0 (no unknown) and homogeneous Neumann at x = 2 via second-order
/// ghost-point elimination (mirror u_{n+1} = u_{n-1}).
StencilMatrix ada_stencil(index_t n, double b, double a, double g);

/// Second-order centered Laplacian on (0,1) with homogeneous Dirichlet ends:
/// interior grid x_l = l h, h = 1/(n+1), rows (1,-2,1)/h^2.
StencilMatrix laplacian_stencil(index_t n);

}  // namespace mumode::basis
