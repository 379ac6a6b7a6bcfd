// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "qgt/game.hpp"

namespace qgt {

// Malformed input (unreadable file, bad JSON, wrong document shape).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Well-formed input that violates a semantic invariant.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Game files: {"object_dim": n, "initial_state": matrix, "players": [...]}.
// Matrices are row-major nested arrays whose entries are [re, im] pairs; a
// player's "basis" is "pauli", "classical", or an explicit element list.
GameDefinition load_game(const std::filesystem::path& file);
void save_game(const GameDefinition& g, const std::filesystem::path& file);

// Profile files: {"players": [entry, ...]} where each entry is one of
// {"unitary": matrix}, {"params": [alpha,beta,gamma,delta]},
// {"pdf": [..]}, {"density": matrix}.
std::vector<StrategyDensity> load_profile(const std::filesystem::path& file,
                                          const GameDefinition& g);

// Matrix documents: {"dim": n, "matrix": rows}; unknown keys are ignored.
ComplexMatrix load_matrix(const std::filesystem::path& file);
void save_matrix(const ComplexMatrix& m, const std::filesystem::path& file);
std::string matrix_document(const ComplexMatrix& m);

std::string format_real(double v);                  // locale-independent, 12 significant digits
std::string format_matrix(const ComplexMatrix& m);  // human-readable rows of (re, im)

}  // namespace qgt
