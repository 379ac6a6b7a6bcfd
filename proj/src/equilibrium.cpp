// SPDX-License-Identifier: Apache-2.0
#include "qgt/equilibrium.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qgt/linalg.hpp"
#include "qgt/rng.hpp"

namespace qgt {

namespace {

std::vector<std::size_t> profile_sizes(const Profile& p) {
  std::vector<std::size_t> sizes;
  sizes.reserve(p.states.size());
  for (const auto& s : p.states) {
    if (!s.basis) throw std::invalid_argument("profile state has no basis");
    sizes.push_back(s.basis->size());
  }
  return sizes;
}

BestResponse point_mass_response(const ComplexMatrix& r, const StrategyDensity& current) {
  const std::size_t k = r.dim();
  std::size_t best = 0;
  double value = r(0, 0).real();
  for (std::size_t i = 1; i < k; ++i) {
    if (r(i, i).real() > value) {
      value = r(i, i).real();
      best = i;
    }
  }
  ComplexMatrix rho(k);
  rho(best, best) = 1.0;
  return {{current.basis, std::move(rho)}, value};
}

// Coefficient vectors of the unitaries inside the span, when they form a
// phased real sphere c = e^{i phi} diag(d) r with r on the unit sphere:
// every 2x2 unitary is e^{i phi}(r0 I + i(r1 X + r2 Y + r3 Z)), and the
// unitaries in span{I, X} are e^{i phi}(cos I + i sin X).
std::vector<cplx> sphere_phases(const OperatorBasis& basis) {
  const cplx i{0.0, 1.0};
  if (basis.object_dim == 2 && basis.size() == 4) return {1.0, i, i, i};
  if (basis.object_dim == 2 && basis.size() == 2 && basis.kind == BasisKind::Classical)
    return {1.0, i};
  return {};
}

// Best admissible response in operator-density mode. Deviations are
// mixtures of pure unitary strategies, so the optimum sits at a pure
// unitary state; over a phased real sphere the search is the top
// eigenpair of a real symmetric matrix.
BestResponse unitary_response(const ComplexMatrix& r, const StrategyDensity& current) {
  const OperatorBasis& basis = *current.basis;
  std::vector<cplx> d = sphere_phases(basis);
  if (d.empty()) return point_mass_response(r, current);

  ComplexMatrix r_frame = r;
  const bool rotate = basis.object_dim == 2 && basis.size() == 4 &&
                      !basis_equal(basis, *pauli_basis());
  ComplexMatrix t(basis.size());
  if (rotate) {
    const auto& pauli = *pauli_basis();
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t mu = 0; mu < 4; ++mu) t(k, mu) = inner(basis.elements[k], pauli.elements[mu]);
    r_frame = matmul(adjoint(t), matmul(r, t));
  }

  const std::size_t n = d.size();
  ComplexMatrix s(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      s(p, q) = (std::conj(d[p]) * r_frame(p, q) * d[q]).real();
  // symmetrize away the antisymmetric rounding residue
  ComplexMatrix sym = s;
  sym += adjoint(s);
  sym *= 0.5;
  const auto eig = hermitian_eigensystem(sym, 1e-8);

  std::vector<cplx> coeffs(n);
  for (std::size_t p = 0; p < n; ++p) coeffs[p] = d[p] * eig.vectors(p, 0).real();
  if (rotate) {
    std::vector<cplx> back(n);
    for (std::size_t k = 0; k < n; ++k) {
      cplx acc{};
      for (std::size_t mu = 0; mu < n; ++mu) acc += t(k, mu) * coeffs[mu];
      back[k] = acc;
    }
    coeffs = std::move(back);
  }
  ComplexMatrix rho(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) rho(p, q) = coeffs[p] * std::conj(coeffs[q]);
  return {{current.basis, std::move(rho)}, eig.values.front()};
}

BestResponse best_response_from(const ComplexMatrix& r, const StrategyDensity& current,
                                SolveMode mode) {
  if (mode == SolveMode::ClassicalDiagonal) return point_mass_response(r, current);
  return unitary_response(r, current);
}

StrategyDensity random_initial_state(BasisPtr basis, SolveMode mode, Rng& rng) {
  const std::size_t k = basis->size();
  if (mode == SolveMode::ClassicalDiagonal) {
    std::vector<double> weights(k);
    double sum = 0.0;
    for (auto& w : weights) {
      double u = rng.uniform();
      while (u <= 0.0) u = rng.uniform();
      w = -std::log(u);
      sum += w;
    }
    ComplexMatrix rho(k);
    for (std::size_t i = 0; i < k; ++i) rho(i, i) = weights[i] / sum;
    return {std::move(basis), std::move(rho)};
  }
  ComplexMatrix gin(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gin(i, j) = cplx{rng.normal(), rng.normal()};
  ComplexMatrix rho = matmul(gin, adjoint(gin));
  rho *= 1.0 / trace(rho).real();
  return {std::move(basis), std::move(rho)};
}

}  // namespace

ComplexMatrix effective_payoff_operator(const PayoffOperator& h, const Profile& p,
                                        std::size_t player) {
  if (player >= p.states.size())
    throw std::invalid_argument("effective_payoff_operator: player index out of range");
  const auto sizes = profile_sizes(p);
  std::size_t joint = 1;
  for (auto s : sizes) joint *= s;
  if (joint != h.joint_dim)
    throw std::invalid_argument("effective_payoff_operator: joint dimension mismatch");

  std::vector<std::vector<std::size_t>> digits(joint);
  for (std::size_t k = 0; k < joint; ++k) digits[k] = unflatten_index(k, sizes);

  ComplexMatrix r(sizes[player]);
  for (std::size_t jn = 0; jn < joint; ++jn) {
    for (std::size_t jm = 0; jm < joint; ++jm) {
      const cplx hval = h.matrix(jn, jm);
      if (hval == cplx{}) continue;
      cplx w{1.0, 0.0};
      for (std::size_t j = 0; j < sizes.size(); ++j) {
        if (j == player) continue;
        w *= p.states[j].rho(digits[jm][j], digits[jn][j]);
        if (w == cplx{}) break;
      }
      r(digits[jn][player], digits[jm][player]) += w * hval;
    }
  }
  return r;
}

BestResponse best_response(const PayoffOperator& h, const Profile& p, std::size_t player) {
  const ComplexMatrix r = effective_payoff_operator(h, p, player);
  return best_response_from(r, p.states[player], p.mode);
}

std::vector<double> profile_payoffs(const std::vector<PayoffOperator>& hs, const Profile& p) {
  std::vector<double> out;
  out.reserve(hs.size());
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const ComplexMatrix r = effective_payoff_operator(hs[i], p, i);
    out.push_back(trace_product(p.states[i].rho, r).real());
  }
  return out;
}

double exploitability(const std::vector<PayoffOperator>& hs, const Profile& p) {
  if (hs.size() != p.states.size())
    throw std::invalid_argument("exploitability: operator count does not match profile");
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const ComplexMatrix r = effective_payoff_operator(hs[i], p, i);
    const double current = trace_product(p.states[i].rho, r).real();
    const double best = best_response_from(r, p.states[i], p.mode).value;
    worst = std::max(worst, best - current);
  }
  return worst;
}

SolveReport solve(const GameDefinition& g, const std::vector<PayoffOperator>& hs,
                  SolveMode mode, double eps, std::size_t max_iters, std::uint64_t seed) {
  if (eps <= 0.0) throw std::invalid_argument("solve: eps must be positive");
  if (hs.size() != g.player_count())
    throw std::invalid_argument("solve: need one payoff operator per player");

  Rng rng(seed);
  Profile prof;
  prof.mode = mode;
  prof.states.reserve(g.player_count());
  for (const auto& player : g.players)
    prof.states.push_back(random_initial_state(player.basis, mode, rng));

  const std::size_t n = g.player_count();
  std::vector<double> payoffs(n, 0.0);
  std::vector<BestResponse> responses(n);

  auto evaluate = [&]() {
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      const ComplexMatrix r = effective_payoff_operator(hs[i], prof, i);
      payoffs[i] = trace_product(prof.states[i].rho, r).real();
      responses[i] = best_response_from(r, prof.states[i], mode);
      worst = std::max(worst, responses[i].value - payoffs[i]);
    }
    return worst;
  };

  double expl = evaluate();
  bool converged = false;
  std::size_t iters = 0;
  if (max_iters > 0) {
    while (true) {
      if (expl <= eps) {
        converged = true;
        break;
      }
      if (iters == max_iters) break;
      // Simultaneous move toward the best responses computed on the frozen
      // profile; the weight makes the state a running average.
      const double w = 1.0 / static_cast<double>(iters + 2);
      for (std::size_t i = 0; i < n; ++i) {
        ComplexMatrix next = prof.states[i].rho;
        next *= (1.0 - w);
        ComplexMatrix step = responses[i].state.rho;
        step *= w;
        next += step;
        prof.states[i].rho = std::move(next);
      }
      ++iters;
      expl = evaluate();
    }
  }
  return {std::move(prof), expl, payoffs, iters, converged};
}

RealizabilityReport unitary_realizability(const StrategyDensity& s, double tol) {
  if (!s.basis) throw std::invalid_argument("unitary_realizability: state has no basis");
  const auto eig = hermitian_eigensystem(s.rho, std::max(tol, kDefaultTol));
  if (eig.values.size() > 1 && eig.values[1] > tol)
    return {Realizability::MixedNotChecked, 0.0};
  std::vector<cplx> coeffs(eig.values.size());
  const double scale = std::sqrt(std::max(eig.values.front(), 0.0));
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = scale * eig.vectors(i, 0);
  const ComplexMatrix u = reconstruct(coeffs, *s.basis);
  const double residual =
      max_abs_diff(matmul(u, adjoint(u)), ComplexMatrix::identity(u.dim()));
  return {residual <= tol ? Realizability::Realizable : Realizability::NotRealizable, residual};
}

}  // namespace qgt
