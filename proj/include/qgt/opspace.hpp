// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <vector>

#include "qgt/complex_matrix.hpp"

namespace qgt {

enum class BasisKind { Classical, Quantum, Custom };

/// Ordered orthonormal basis of an operator space: every element is a
/// unitary on the object's state space and the set is orthonormal under
/// <A|B> = tr(adjoint(A) * B) / dim.
struct OperatorBasis {
  std::size_t object_dim = 0;
  BasisKind kind = BasisKind::Custom;
  std::vector<ComplexMatrix> elements;

  std::size_t size() const { return elements.size(); }
};

using BasisPtr = std::shared_ptr<const OperatorBasis>;

/// Angles of the standard 2x2 unitary parametrization
/// U = e^{i alpha} (cos(g/2)cos((b+d)/2) I + i sin(g/2)sin((b-d)/2) X
///                  - i sin(g/2)cos((b-d)/2) Y - i cos(g/2)sin((b+d)/2) Z).
struct UnitaryParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
};

/// Density matrix over an operator basis: a player's (possibly mixed or
/// superposed) strategy state.
struct StrategyDensity {
  BasisPtr basis;
  ComplexMatrix rho;
};

/// <A|B> = tr(adjoint(A) * B) / dim.
cplx inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// (I, X, Y, Z), in exactly that order.
BasisPtr pauli_basis();

/// The d cyclic-shift permutation matrices; {I, X} for d == 2.
BasisPtr classical_basis(std::size_t d);

/// The d^2 clock-shift products X^a Z^b, a-major; extension hook for
/// quantum objects of dimension above 2.
BasisPtr heisenberg_weyl_basis(std::size_t d);

/// User-supplied elements; validated unitary and orthonormal.
BasisPtr custom_basis(std::vector<ComplexMatrix> elements);

bool verify_orthonormal(const OperatorBasis& b, double tol);
bool basis_equal(const OperatorBasis& a, const OperatorBasis& b, double tol = 1e-12);

/// coeffs[k] = inner(b.elements[k], u). Throws if u lies outside the span
/// (reconstruction residual above 1e-9).
std::vector<cplx> decompose(const ComplexMatrix& u, const OperatorBasis& b);

/// Sum of coeffs[k] * b.elements[k].
ComplexMatrix reconstruct(const std::vector<cplx>& coeffs, const OperatorBasis& b);

ComplexMatrix unitary_from_params(const UnitaryParams& p);

/// Rank-1 strategy state rho = c * adjoint(c) from the decomposition of u;
/// requires the coefficient norm to be 1 within 1e-9 (true for unitaries
/// over an orthonormal basis).
StrategyDensity pure_strategy_state(const ComplexMatrix& u, BasisPtr b);

/// Strictly diagonal state from a probability distribution over the basis.
StrategyDensity classical_mixture_state(const std::vector<double>& pdf, BasisPtr b);

/// Wraps an explicit density matrix after validation.
StrategyDensity density_state(ComplexMatrix rho, BasisPtr b);

}  // namespace qgt
