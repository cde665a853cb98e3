#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "pdpoly/graph.hpp"
#include "pdpoly/polynomial.hpp"

namespace testing {

inline oracle::Matrix to_matrix(const pdpoly::Graph& g) { return oracle::make_matrix(g.n(), g.edges()); }

inline pdpoly::IntPolynomial from_counts(const std::vector<long long>& counts) {
  std::vector<pdpoly::BigInt> coeffs;
  for (long long c : counts) coeffs.emplace_back(static_cast<long>(c));
  return pdpoly::IntPolynomial(std::move(coeffs));
}

inline pdpoly::IntPolynomial naive_pd(const pdpoly::Graph& g) {
  return from_counts(oracle::polynomial(to_matrix(g), oracle::Rule::power));
}

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(PDPOLY_TEST_DATA_DIR) / name;
}

inline std::vector<std::string> read_lines(const std::string& name) {
  std::ifstream in(data_path(name));
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) lines.push_back(line);
  return lines;
}

}  // namespace testing
