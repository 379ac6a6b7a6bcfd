// SPDX-License-Identifier: Apache-2.0
#include "qgt/opspace.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qgt/linalg.hpp"

namespace qgt {

namespace {

constexpr double kBasisTol = 1e-10;
constexpr double kSpanTol = 1e-9;

BasisPtr make_checked(std::vector<ComplexMatrix> elements, BasisKind kind) {
  if (elements.empty()) throw std::invalid_argument("operator basis must not be empty");
  const std::size_t d = elements.front().dim();
  for (const auto& e : elements) {
    if (e.dim() != d) throw std::invalid_argument("basis elements must share one dimension");
    if (!all_finite(e)) throw std::invalid_argument("basis element has non-finite entries");
    if (!is_unitary(e, kBasisTol)) throw std::invalid_argument("basis element is not unitary");
  }
  auto b = std::make_shared<OperatorBasis>(OperatorBasis{d, kind, std::move(elements)});
  if (!verify_orthonormal(*b, kBasisTol))
    throw std::invalid_argument("basis is not orthonormal under the operator inner product");
  return b;
}

ComplexMatrix cyclic_shift(std::size_t d, std::size_t k) {
  ComplexMatrix m(d);
  for (std::size_t j = 0; j < d; ++j) m((j + k) % d, j) = 1.0;
  return m;
}

}  // namespace

cplx inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("inner: dimension mismatch");
  cplx s{};
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) s += std::conj(a(i, j)) * b(i, j);
  return s / static_cast<double>(a.dim());
}

BasisPtr pauli_basis() {
  static const BasisPtr basis = [] {
    ComplexMatrix i2 = ComplexMatrix::identity(2);
    ComplexMatrix x(2), y(2), z(2);
    x(0, 1) = 1.0;
    x(1, 0) = 1.0;
    y(0, 1) = cplx{0.0, -1.0};
    y(1, 0) = cplx{0.0, 1.0};
    z(0, 0) = 1.0;
    z(1, 1) = -1.0;
    return make_checked({i2, x, y, z}, BasisKind::Quantum);
  }();
  return basis;
}

BasisPtr classical_basis(std::size_t d) {
  if (d < 2) throw std::invalid_argument("classical_basis: need at least two configurations");
  std::vector<ComplexMatrix> shifts;
  shifts.reserve(d);
  for (std::size_t k = 0; k < d; ++k) shifts.push_back(cyclic_shift(d, k));
  return make_checked(std::move(shifts), BasisKind::Classical);
}

BasisPtr heisenberg_weyl_basis(std::size_t d) {
  if (d < 2) throw std::invalid_argument("heisenberg_weyl_basis: need dimension >= 2");
  ComplexMatrix clock(d);
  for (std::size_t j = 0; j < d; ++j) {
    const double phi = 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(d);
    clock(j, j) = cplx{std::cos(phi), std::sin(phi)};
  }
  std::vector<ComplexMatrix> zpow;
  zpow.push_back(ComplexMatrix::identity(d));
  for (std::size_t b = 1; b < d; ++b) zpow.push_back(matmul(zpow.back(), clock));
  std::vector<ComplexMatrix> elems;
  elems.reserve(d * d);
  for (std::size_t a = 0; a < d; ++a) {
    const ComplexMatrix xa = cyclic_shift(d, a);
    for (std::size_t b = 0; b < d; ++b) elems.push_back(matmul(xa, zpow[b]));
  }
  return make_checked(std::move(elems), BasisKind::Quantum);
}

BasisPtr custom_basis(std::vector<ComplexMatrix> elements) {
  return make_checked(std::move(elements), BasisKind::Custom);
}

bool verify_orthonormal(const OperatorBasis& b, double tol) {
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      const cplx expect = (i == j) ? cplx{1.0, 0.0} : cplx{};
      if (std::abs(inner(b.elements[i], b.elements[j]) - expect) > tol) return false;
    }
  return true;
}

bool basis_equal(const OperatorBasis& a, const OperatorBasis& b, double tol) {
  if (a.object_dim != b.object_dim || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (max_abs_diff(a.elements[i], b.elements[i]) > tol) return false;
  return true;
}

std::vector<cplx> decompose(const ComplexMatrix& u, const OperatorBasis& b) {
  if (u.dim() != b.object_dim) throw std::invalid_argument("decompose: dimension mismatch");
  std::vector<cplx> coeffs(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) coeffs[k] = inner(b.elements[k], u);
  const double residual = max_abs_diff(reconstruct(coeffs, b), u);
  if (residual > kSpanTol)
    throw std::invalid_argument("decompose: operator lies outside the basis span (residual " +
                                std::to_string(residual) + ")");
  return coeffs;
}

ComplexMatrix reconstruct(const std::vector<cplx>& coeffs, const OperatorBasis& b) {
  if (coeffs.size() != b.size())
    throw std::invalid_argument("reconstruct: coefficient count does not match basis size");
  ComplexMatrix out(b.object_dim);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == cplx{}) continue;
    ComplexMatrix term = b.elements[k];
    term *= coeffs[k];
    out += term;
  }
  return out;
}

ComplexMatrix unitary_from_params(const UnitaryParams& p) {
  const cplx phase{std::cos(p.alpha), std::sin(p.alpha)};
  const double cg = std::cos(p.gamma / 2.0), sg = std::sin(p.gamma / 2.0);
  const double half_sum = (p.beta + p.delta) / 2.0;
  const double half_diff = (p.beta - p.delta) / 2.0;
  const cplx i{0.0, 1.0};
  const std::vector<cplx> coeffs = {
      phase * (cg * std::cos(half_sum)),
      phase * i * (sg * std::sin(half_diff)),
      phase * (-i) * (sg * std::cos(half_diff)),
      phase * (-i) * (cg * std::sin(half_sum)),
  };
  return reconstruct(coeffs, *pauli_basis());
}

StrategyDensity pure_strategy_state(const ComplexMatrix& u, BasisPtr b) {
  if (!b) throw std::invalid_argument("pure_strategy_state: null basis");
  const auto coeffs = decompose(u, *b);
  double norm = 0.0;
  for (const auto& c : coeffs) norm += std::norm(c);
  if (std::abs(norm - 1.0) > kSpanTol)
    throw std::invalid_argument("pure_strategy_state: coefficient norm is " +
                                std::to_string(norm) + ", expected 1");
  ComplexMatrix rho(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      rho(i, j) = coeffs[i] * std::conj(coeffs[j]) / norm;
  return {std::move(b), std::move(rho)};
}

StrategyDensity classical_mixture_state(const std::vector<double>& pdf, BasisPtr b) {
  if (!b) throw std::invalid_argument("classical_mixture_state: null basis");
  if (pdf.size() != b->size())
    throw std::invalid_argument("classical_mixture_state: pdf length does not match basis size");
  double sum = 0.0;
  for (double w : pdf) {
    if (!std::isfinite(w) || w < 0.0)
      throw std::invalid_argument("classical_mixture_state: negative or non-finite weight");
    sum += w;
  }
  if (std::abs(sum - 1.0) > kSpanTol)
    throw std::invalid_argument("classical_mixture_state: weights sum to " + std::to_string(sum));
  ComplexMatrix rho(pdf.size());
  for (std::size_t i = 0; i < pdf.size(); ++i) rho(i, i) = pdf[i] / sum;
  return {std::move(b), std::move(rho)};
}

StrategyDensity density_state(ComplexMatrix rho, BasisPtr b) {
  if (!b) throw std::invalid_argument("density_state: null basis");
  if (rho.dim() != b->size())
    throw std::invalid_argument("density_state: matrix dimension does not match basis size");
  if (!is_density_matrix(rho, kDefaultTol))
    throw std::invalid_argument("density_state: matrix is not a density matrix");
  return {std::move(b), std::move(rho)};
}

}  // namespace qgt
