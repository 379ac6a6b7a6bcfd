// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include "qgt/linalg.hpp"
#include "qgt/opspace.hpp"
#include "qgt/rng.hpp"

namespace qgt::test {

inline ComplexMatrix mat2(cplx a, cplx b, cplx c, cplx d) {
  ComplexMatrix m(2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

inline ComplexMatrix pauli_i() { return ComplexMatrix::identity(2); }
inline ComplexMatrix pauli_x() { return mat2(0, 1, 1, 0); }
inline ComplexMatrix pauli_y() { return mat2(0, cplx{0, -1}, cplx{0, 1}, 0); }
inline ComplexMatrix pauli_z() { return mat2(1, 0, 0, -1); }

inline ComplexMatrix random_matrix(std::size_t n, Rng& rng) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = cplx{rng.normal(), rng.normal()};
  return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  ComplexMatrix g = random_matrix(n, rng);
  ComplexMatrix h = g;
  h += adjoint(g);
  h *= 0.5;
  return h;
}

inline ComplexMatrix random_density(std::size_t n, Rng& rng) {
  ComplexMatrix g = random_matrix(n, rng);
  ComplexMatrix w = matmul(g, adjoint(g));
  w *= 1.0 / trace(w).real();
  return w;
}

inline UnitaryParams random_params(Rng& rng) {
  return {rng.uniform(0.0, 4.0 * M_PI), rng.uniform(0.0, 4.0 * M_PI),
          rng.uniform(0.0, 4.0 * M_PI), rng.uniform(0.0, 4.0 * M_PI)};
}

// Gram-Schmidt on the columns of a random matrix.
inline ComplexMatrix random_unitary_gs(std::size_t n, Rng& rng) {
  ComplexMatrix g = random_matrix(n, rng);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t prev = 0; prev < c; ++prev) {
      cplx overlap{};
      for (std::size_t r = 0; r < n; ++r) overlap += std::conj(g(r, prev)) * g(r, c);
      for (std::size_t r = 0; r < n; ++r) g(r, c) -= overlap * g(r, prev);
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < n; ++r) norm += std::norm(g(r, c));
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < n; ++r) g(r, c) /= norm;
  }
  return g;
}

}  // namespace qgt::test
