// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qgt/complex_matrix.hpp"

namespace qgt {

inline constexpr double kDefaultTol = 1e-9;

struct EigenSystem {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // orthonormal columns; values[k] pairs with column k
};

/// Diagonalizes a Hermitian matrix with cyclic Jacobi rotations.
/// Throws std::invalid_argument if ||a - adjoint(a)||_max > tol and
/// std::runtime_error if the sweep limit is exhausted without convergence.
EigenSystem hermitian_eigensystem(const ComplexMatrix& a, double tol = kDefaultTol);

/// Hermitian within tol, trace within tol of 1, eigenvalues >= -tol.
bool is_density_matrix(const ComplexMatrix& a, double tol = kDefaultTol);

/// ||a * adjoint(a) - I||_max <= tol.
bool is_unitary(const ComplexMatrix& a, double tol = kDefaultTol);

}  // namespace qgt
