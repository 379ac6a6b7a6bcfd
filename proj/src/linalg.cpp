// SPDX-License-Identifier: Apache-2.0
#include "qgt/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qgt {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

EigenSystem hermitian_eigensystem(const ComplexMatrix& a, double tol) {
  const std::size_t n = a.dim();
  if (n == 0) throw std::invalid_argument("hermitian_eigensystem: empty matrix");
  if (max_abs_diff(a, adjoint(a)) > tol)
    throw std::invalid_argument("hermitian_eigensystem: matrix is not Hermitian within tol");

  // Exact symmetrization removes the sub-tol asymmetry.
  ComplexMatrix m = a;
  m += adjoint(a);
  m *= 0.5;

  ComplexMatrix v = ComplexMatrix::identity(n);
  const double target = 1e-13 * frobenius_norm(m);
  constexpr int kMaxSweeps = 100;

  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    const double off = off_diagonal_norm(m);
    if (off <= target || off == 0.0) {
      converged = true;
      break;
    }
    const double skip = target / static_cast<double>(n * n);
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx g = m(p, q);
        const double ag = std::abs(g);
        if (ag <= skip) continue;
        const cplx phase = g / ag;
        const double alpha = m(p, p).real();
        const double beta = m(q, q).real();
        const double d = 0.5 * (alpha - beta);
        const double r = std::hypot(d, ag);
        const double t = ag / (d >= 0.0 ? d + r : d - r);
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // m <- adjoint(J) * m * J with the rotation acting on (p, q)
        for (std::size_t k = 0; k < n; ++k) {
          const cplx mkp = m(k, p), mkq = m(k, q);
          m(k, p) = c * mkp + s * std::conj(phase) * mkq;
          m(k, q) = -s * phase * mkp + c * mkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx mpk = m(p, k), mqk = m(q, k);
          m(p, k) = c * mpk + s * phase * mqk;
          m(q, k) = -s * std::conj(phase) * mpk + c * mqk;
        }
        m(p, q) = 0.0;
        m(q, p) = 0.0;
        m(p, p) = m(p, p).real();
        m(q, q) = m(q, q).real();

        for (std::size_t k = 0; k < n; ++k) {
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp + s * std::conj(phase) * vkq;
          v(k, q) = -s * phase * vkp + c * vkq;
        }
      }
    }
  }
  if (!converged && off_diagonal_norm(m) > target)
    throw std::runtime_error("hermitian_eigensystem: Jacobi sweeps did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return m(i, i).real() > m(j, j).real(); });

  EigenSystem out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = m(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

bool is_density_matrix(const ComplexMatrix& a, double tol) {
  if (a.dim() == 0 || !all_finite(a)) return false;
  if (max_abs_diff(a, adjoint(a)) > tol) return false;
  if (std::abs(trace(a) - cplx{1.0, 0.0}) > tol) return false;
  const auto eig = hermitian_eigensystem(a, tol);
  return eig.values.back() >= -tol;
}

bool is_unitary(const ComplexMatrix& a, double tol) {
  if (a.dim() == 0 || !all_finite(a)) return false;
  return max_abs_diff(matmul(a, adjoint(a)), ComplexMatrix::identity(a.dim())) <= tol;
}

}  // namespace qgt
