// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qgt/payoff.hpp"

namespace qgt {

enum class SolveMode { OperatorDensity, ClassicalDiagonal };

struct Profile {
  std::vector<StrategyDensity> states;
  SolveMode mode = SolveMode::OperatorDensity;
};

struct BestResponse {
  StrategyDensity state;
  double value = 0.0;
};

struct SolveReport {
  Profile profile;
  double exploitability = 0.0;
  std::vector<double> payoffs;
  std::size_t iterations = 0;
  bool converged = false;
};

enum class Realizability { Realizable, NotRealizable, MixedNotChecked };

struct RealizabilityReport {
  Realizability status = Realizability::MixedNotChecked;
  double residual = 0.0;  // ||U * adjoint(U) - I||_max for the rank-1 case
};

/// Hermitian matrix R^i on player i's basis with
/// E^i = Re tr(rho^i * R^i) for every rho^i, all other players held fixed.
ComplexMatrix effective_payoff_operator(const PayoffOperator& h, const Profile& p,
                                        std::size_t player);

/// Operator-density mode: the best admissible deviation, i.e. the best
/// mixture of pure unitary strategies; the optimum is a pure unitary state
/// found as the top eigenpair of the effective operator reduced to the
/// unitary coefficient sphere (first eigenvector on ties). Classical-diagonal
/// mode: best diagonal entry (lowest index on ties).
BestResponse best_response(const PayoffOperator& h, const Profile& p, std::size_t player);

std::vector<double> profile_payoffs(const std::vector<PayoffOperator>& hs, const Profile& p);

/// max over players of (best-response value - current payoff); zero exactly
/// at a Nash equilibrium.
double exploitability(const std::vector<PayoffOperator>& hs, const Profile& p);

/// Averaged best-response iteration (fictitious play): at step t every
/// player's state moves toward its best response with weight 1/(t+1).
/// Stops when exploitability <= eps or after max_iters updates. The
/// initial profile is drawn from the seed; identical seeds reproduce the
/// report bitwise.
SolveReport solve(const GameDefinition& g, const std::vector<PayoffOperator>& hs,
                  SolveMode mode, double eps, std::size_t max_iters, std::uint64_t seed);

/// For a rank-1 state, reports whether the underlying coefficient vector
/// reconstructs to a unitary within tol; mixed states are not checked.
RealizabilityReport unitary_realizability(const StrategyDensity& s, double tol);

}  // namespace qgt
