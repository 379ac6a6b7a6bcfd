// SPDX-License-Identifier: Apache-2.0
#include "qgt/payoff.hpp"

#include <cmath>
#include <stdexcept>

#include "qgt/linalg.hpp"
#include "qgt/rng.hpp"

namespace qgt {

namespace {

constexpr double kConsistencyTol = 1e-10;

void require_valid(const GameDefinition& g) {
  const auto violations = validate_game(g);
  if (!violations.empty())
    throw std::invalid_argument("invalid game: " + violations.front());
}

// One pure strategy inside the player's admissible space: any unitary for
// the 2x2 quantum basis, otherwise a basis element with a random phase.
ComplexMatrix sample_pure_strategy(const OperatorBasis& basis, Rng& rng) {
  if (basis.kind == BasisKind::Quantum && basis.object_dim == 2) {
    const UnitaryParams p{rng.uniform(0.0, 4.0 * M_PI), rng.uniform(0.0, 4.0 * M_PI),
                          rng.uniform(0.0, 4.0 * M_PI), rng.uniform(0.0, 4.0 * M_PI)};
    return unitary_from_params(p);
  }
  const std::size_t k = rng.index(basis.size());
  const double theta = rng.uniform(0.0, 2.0 * M_PI);
  ComplexMatrix u = basis.elements[k];
  u *= cplx{std::cos(theta), std::sin(theta)};
  return u;
}

}  // namespace

PayoffOperator build_payoff_operator(const GameDefinition& g, std::size_t player) {
  require_valid(g);
  if (player >= g.player_count())
    throw std::invalid_argument("build_payoff_operator: player index out of range");
  const auto sizes = g.basis_sizes();
  const std::size_t joint = g.joint_dim();
  ComplexMatrix h(joint);

  if (g.classical()) {
    // Classical strategy spaces: the operator is the diagonal table of
    // pure-profile payoffs; off-diagonal entries stay exactly zero.
    for (std::size_t k = 0; k < joint; ++k) {
      const auto digits = unflatten_index(k, sizes);
      PureProfile profile;
      profile.strategies.reserve(g.player_count());
      for (std::size_t i = 0; i < g.player_count(); ++i)
        profile.strategies.push_back(g.players[i].basis->elements[digits[i]]);
      h(k, k) = manipulative_payoff(g, profile)[player];
    }
    return {player, joint, std::move(h)};
  }

  // Joint-basis monomials composed by the game's rule.
  std::vector<ComplexMatrix> monomial(joint);
  for (std::size_t k = 0; k < joint; ++k) {
    const auto digits = unflatten_index(k, sizes);
    ComplexMatrix m = ComplexMatrix::identity(g.object_dim);
    for (std::size_t i = 0; i < g.player_count(); ++i)
      m = matmul(g.players[i].basis->elements[digits[i]], m);
    monomial[k] = std::move(m);
  }
  std::vector<ComplexMatrix> scaled(joint);   // P^i * M_nu * rho_0
  std::vector<ComplexMatrix> adjoints(joint); // adjoint(M_mu)
  const ComplexMatrix& scale = g.players[player].scale;
  for (std::size_t k = 0; k < joint; ++k) {
    scaled[k] = matmul(scale, matmul(monomial[k], g.initial_state));
    adjoints[k] = adjoint(monomial[k]);
  }
  for (std::size_t m = 0; m < joint; ++m)
    for (std::size_t n = 0; n < joint; ++n) h(m, n) = trace_product(scaled[n], adjoints[m]);
  return {player, joint, std::move(h)};
}

std::vector<PayoffOperator> build_all_payoff_operators(const GameDefinition& g) {
  std::vector<PayoffOperator> out;
  out.reserve(g.player_count());
  for (std::size_t i = 0; i < g.player_count(); ++i) out.push_back(build_payoff_operator(g, i));
  return out;
}

PayoffOperator classical_payoff_operator(const ClassicalTableGame& g, std::size_t player) {
  if (player >= g.n_players)
    throw std::invalid_argument("classical_payoff_operator: player index out of range");
  const std::size_t joint = g.joint_dim();
  ComplexMatrix h(joint);
  for (std::size_t k = 0; k < joint; ++k) h(k, k) = g.tables[player][k];
  return {player, joint, std::move(h)};
}

JointStrategyState joint_state(const GameDefinition& g,
                               const std::vector<StrategyDensity>& states) {
  if (states.size() != g.player_count())
    throw std::invalid_argument("joint_state: state count does not match player count");
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (!states[i].basis || !g.players[i].basis)
      throw std::invalid_argument("joint_state: missing basis");
    if (!basis_equal(*states[i].basis, *g.players[i].basis))
      throw std::invalid_argument("joint_state: basis of player " + std::to_string(i + 1) +
                                  " does not match the game");
  }
  ComplexMatrix m = states.front().rho;
  for (std::size_t i = 1; i < states.size(); ++i) m = kron(m, states[i].rho);
  return {std::move(m), states};
}

double expected_payoff(const JointStrategyState& s, const PayoffOperator& h) {
  if (s.matrix.dim() != h.joint_dim)
    throw std::invalid_argument("expected_payoff: dimension mismatch");
  const cplx value = trace_product(s.matrix, h.matrix);
  if (std::abs(value.imag()) > kDefaultTol)
    throw std::runtime_error("expected_payoff: imaginary residue " +
                             std::to_string(value.imag()));
  return value.real();
}

ConsistencyReport consistency_check(const GameDefinition& g, std::size_t trials,
                                    std::uint64_t seed) {
  require_valid(g);
  const auto hs = build_all_payoff_operators(g);
  Rng rng(seed);
  double max_dev = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    PureProfile profile;
    std::vector<StrategyDensity> states;
    profile.strategies.reserve(g.player_count());
    states.reserve(g.player_count());
    for (const auto& player : g.players) {
      ComplexMatrix u = sample_pure_strategy(*player.basis, rng);
      states.push_back(pure_strategy_state(u, player.basis));
      profile.strategies.push_back(std::move(u));
    }
    const auto direct = manipulative_payoff(g, profile);
    const auto js = joint_state(g, states);
    for (std::size_t i = 0; i < hs.size(); ++i)
      max_dev = std::max(max_dev, std::abs(expected_payoff(js, hs[i]) - direct[i]));
  }
  return {trials, max_dev, max_dev <= kConsistencyTol};
}

}  // namespace qgt
