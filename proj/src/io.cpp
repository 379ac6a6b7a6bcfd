// SPDX-License-Identifier: Apache-2.0
#include "qgt/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qgt/linalg.hpp"

namespace qgt {

namespace {

using nlohmann::json;

json complex_to_json(const cplx& v) { return json::array({v.real(), v.imag()}); }

cplx complex_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError(where + ": complex values must be [re, im] number pairs");
  const cplx v{j[0].get<double>(), j[1].get<double>()};
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw ValidationError(where + ": non-finite complex value");
  return v;
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ParseError(where + ": matrix must be a non-empty array");
  const std::size_t n = j.size();
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n)
      throw ParseError(where + ": matrix must be square (row " + std::to_string(i) + ")");
    for (std::size_t k = 0; k < n; ++k)
      m(i, k) = complex_from_json(j[i][k], where);
  }
  return m;
}

json load_json(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw ParseError("cannot open '" + file.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("parse error in '" + file.string() + "': " + e.what());
  }
}

void write_text(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + file.string() + "'");
  out << text;
}

BasisPtr basis_from_json(const json& j, std::size_t object_dim, const std::string& where) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "pauli") {
      if (object_dim != 2)
        throw ValidationError(where + ": pauli basis requires object_dim 2");
      return pauli_basis();
    }
    if (name == "classical") {
      try {
        return classical_basis(object_dim);
      } catch (const std::invalid_argument& e) {
        throw ValidationError(where + ": " + e.what());
      }
    }
    throw ParseError(where + ": unknown basis '" + name + "' (expected pauli, classical, or an element list)");
  }
  if (j.is_array()) {
    std::vector<ComplexMatrix> elems;
    elems.reserve(j.size());
    for (std::size_t k = 0; k < j.size(); ++k)
      elems.push_back(matrix_from_json(j[k], where + " element " + std::to_string(k)));
    try {
      return custom_basis(std::move(elems));
    } catch (const std::invalid_argument& e) {
      throw ValidationError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": basis must be a string or an element list");
}

json basis_to_json(const OperatorBasis& b) {
  if (b.kind == BasisKind::Classical) return json("classical");
  if (b.kind == BasisKind::Quantum && b.object_dim == 2 && basis_equal(b, *pauli_basis()))
    return json("pauli");
  json elems = json::array();
  for (const auto& e : b.elements) elems.push_back(matrix_to_json(e));
  return elems;
}

const json& require_key(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing key '" + key + "'");
  return *it;
}

}  // namespace

GameDefinition load_game(const std::filesystem::path& file) {
  const json j = load_json(file);
  if (!j.is_object()) throw ParseError(file.string() + ": game document must be an object");
  GameDefinition g;
  const json& jd = require_key(j, "object_dim", file.string());
  if (!jd.is_number_unsigned() || jd.get<std::size_t>() == 0)
    throw ParseError(file.string() + ": object_dim must be a positive integer");
  g.object_dim = jd.get<std::size_t>();
  g.initial_state = matrix_from_json(require_key(j, "initial_state", file.string()),
                                     file.string() + ": initial_state");
  const json& jp = require_key(j, "players", file.string());
  if (!jp.is_array() || jp.empty())
    throw ParseError(file.string() + ": players must be a non-empty array");
  for (std::size_t i = 0; i < jp.size(); ++i) {
    const std::string where = file.string() + ": player " + std::to_string(i + 1);
    if (!jp[i].is_object()) throw ParseError(where + ": must be an object");
    PlayerSpec spec;
    const json& jn = require_key(jp[i], "name", where);
    if (!jn.is_string()) throw ParseError(where + ": name must be a string");
    spec.name = jn.get<std::string>();
    spec.basis = basis_from_json(require_key(jp[i], "basis", where), g.object_dim, where);
    spec.scale = matrix_from_json(require_key(jp[i], "scale", where), where + ": scale");
    g.players.push_back(std::move(spec));
  }
  const auto violations = validate_game(g);
  if (!violations.empty()) {
    std::string msg = file.string() + ": invalid game:";
    for (const auto& v : violations) msg += "\n  - " + v;
    throw ValidationError(msg);
  }
  return g;
}

void save_game(const GameDefinition& g, const std::filesystem::path& file) {
  json j;
  j["object_dim"] = g.object_dim;
  j["initial_state"] = matrix_to_json(g.initial_state);
  json players = json::array();
  for (const auto& p : g.players) {
    json jp;
    jp["name"] = p.name;
    jp["basis"] = basis_to_json(*p.basis);
    jp["scale"] = matrix_to_json(p.scale);
    players.push_back(std::move(jp));
  }
  j["players"] = std::move(players);
  write_text(file, j.dump(2) + "\n");
}

std::vector<StrategyDensity> load_profile(const std::filesystem::path& file,
                                          const GameDefinition& g) {
  const json j = load_json(file);
  if (!j.is_object()) throw ParseError(file.string() + ": profile document must be an object");
  const json& jp = require_key(j, "players", file.string());
  if (!jp.is_array()) throw ParseError(file.string() + ": players must be an array");
  if (jp.size() != g.player_count())
    throw ValidationError(file.string() + ": profile has " + std::to_string(jp.size()) +
                          " entries for a game with " + std::to_string(g.player_count()) +
                          " players");
  std::vector<StrategyDensity> states;
  states.reserve(jp.size());
  for (std::size_t i = 0; i < jp.size(); ++i) {
    const std::string where = file.string() + ": player " + std::to_string(i + 1);
    const json& entry = jp[i];
    if (!entry.is_object()) throw ParseError(where + ": entry must be an object");
    const BasisPtr basis = g.players[i].basis;
    try {
      if (entry.contains("unitary")) {
        ComplexMatrix u = matrix_from_json(entry["unitary"], where + ": unitary");
        if (u.dim() != g.object_dim)
          throw ValidationError(where + ": unitary dimension does not match object_dim");
        if (!is_unitary(u, kDefaultTol))
          throw ValidationError(where + ": matrix under 'unitary' is not unitary");
        states.push_back(pure_strategy_state(u, basis));
      } else if (entry.contains("params")) {
        const json& ja = entry["params"];
        if (!ja.is_array() || ja.size() != 4)
          throw ParseError(where + ": params must be [alpha, beta, gamma, delta]");
        if (g.object_dim != 2)
          throw ValidationError(where + ": params are only defined for object_dim 2");
        UnitaryParams p{ja[0].get<double>(), ja[1].get<double>(), ja[2].get<double>(),
                        ja[3].get<double>()};
        states.push_back(pure_strategy_state(unitary_from_params(p), basis));
      } else if (entry.contains("pdf")) {
        const json& jw = entry["pdf"];
        if (!jw.is_array()) throw ParseError(where + ": pdf must be an array of reals");
        std::vector<double> pdf;
        for (const auto& w : jw) pdf.push_back(w.get<double>());
        states.push_back(classical_mixture_state(pdf, basis));
      } else if (entry.contains("density")) {
        states.push_back(
            density_state(matrix_from_json(entry["density"], where + ": density"), basis));
      } else {
        throw ParseError(where + ": expected one of unitary, params, pdf, density");
      }
    } catch (const std::invalid_argument& e) {
      throw ValidationError(where + ": " + e.what());
    }
  }
  return states;
}

ComplexMatrix load_matrix(const std::filesystem::path& file) {
  const json j = load_json(file);
  if (!j.is_object()) throw ParseError(file.string() + ": matrix document must be an object");
  const json& jd = require_key(j, "dim", file.string());
  ComplexMatrix m =
      matrix_from_json(require_key(j, "matrix", file.string()), file.string() + ": matrix");
  if (!jd.is_number_unsigned() || jd.get<std::size_t>() != m.dim())
    throw ParseError(file.string() + ": dim header does not match the matrix");
  return m;
}

std::string matrix_document(const ComplexMatrix& m) {
  json j;
  j["dim"] = m.dim();
  j["matrix"] = matrix_to_json(m);
  return j.dump(2) + "\n";
}

void save_matrix(const ComplexMatrix& m, const std::filesystem::path& file) {
  write_text(file, matrix_document(m));
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string format_matrix(const ComplexMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j) out << ' ';
      out << '(' << format_real(m(i, j).real()) << ", " << format_real(m(i, j).imag()) << ')';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace qgt
