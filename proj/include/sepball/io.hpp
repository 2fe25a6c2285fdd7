#pragma once

#include "sepball/state.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <string>
#include <vector>

namespace sepball {

inline nlohmann::json matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(nlohmann::json::array({m(i, j).real(), m(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

inline ComplexMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("state file: matrix must be a nonempty array of rows");
  }
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j.front().is_array() ? j.front().size() : 0);
  if (cols == 0) {
    throw std::invalid_argument("state file: matrix rows must be nonempty arrays");
  }
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const nlohmann::json& row = j.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw std::invalid_argument("state file: matrix rows must all have the same length");
    }
    for (Eigen::Index k = 0; k < cols; ++k) {
      const nlohmann::json& entry = row.at(static_cast<std::size_t>(k));
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        throw std::invalid_argument("state file: matrix entries must be [re, im] pairs");
      }
      m(i, k) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return m;
}

inline nlohmann::json state_to_json(const QuantumState& state) {
  nlohmann::json j;
  j["dims"] = state.profile().dims();
  j["normalized"] = state.normalized();
  j["matrix"] = matrix_to_json(state.matrix());
  j["metadata"] = state.metadata();
  return j;
}

inline QuantumState state_from_json(const nlohmann::json& j) {
  if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].empty()) {
    throw std::invalid_argument("state file: missing 'dims' array");
  }
  if (!j.contains("normalized") || !j["normalized"].is_boolean()) {
    throw std::invalid_argument("state file: missing 'normalized' flag");
  }
  if (!j.contains("matrix")) {
    throw std::invalid_argument("state file: missing 'matrix'");
  }
  std::vector<int> dims;
  for (const auto& d : j["dims"]) {
    if (!d.is_number_integer() || d.get<int>() < 1) {
      throw std::invalid_argument("state file: 'dims' must be positive integers");
    }
    dims.push_back(d.get<int>());
  }
  std::map<std::string, std::string> metadata;
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) {
      throw std::invalid_argument("state file: 'metadata' must be an object");
    }
    for (const auto& [key, value] : j["metadata"].items()) {
      metadata[key] = value.is_string() ? value.get<std::string>() : value.dump();
    }
  }
  return QuantumState(matrix_from_json(j["matrix"]), DimensionProfile(dims),
                      j["normalized"].get<bool>(), std::move(metadata));
}

inline void save_state(const QuantumState& state, const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("save_state: cannot open " + path);
  }
  out << state_to_json(state).dump(1) << '\n';
}

inline QuantumState load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("load_state: cannot open " + path);
  }
  nlohmann::json j;
  in >> j;
  return state_from_json(j);
}

}  // namespace sepball
