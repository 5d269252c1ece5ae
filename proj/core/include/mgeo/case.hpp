#pragma once

// A complete case description (space, immersion, parameter grid, analysis
// requests, numerics) and the built-in catalogue of cases.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mgeo/inequalities.hpp"

namespace mgeo {

struct GridAxis {
  double min = 0.0;
  double max = 0.0;
  int count = 1;
};

struct CaseConfig {
  std::string name;
  SpaceSpec space;
  int n = 0;
  std::vector<std::string> coords;
  std::vector<std::pair<std::string, double>> constants;

  /// Either one axis per parameter (tensor grid, last axis fastest) or an
  /// explicit list of points.
  std::vector<GridAxis> grid;
  std::vector<std::vector<double>> points;

  std::vector<TheoremId> theorems;
  std::vector<std::vector<int>> tuples;
  std::vector<int> k_values;
  std::vector<double> u_values;
  /// Distribution bases: each vector is n expressions giving its coefficients
  /// along d/du_1 .. d/du_n, as functions of u and the constants.
  std::vector<std::vector<std::string>> d1;
  std::vector<std::vector<std::string>> d2;

  std::uint64_t seed = 42;
  int restarts = 64;
  double tol = 1e-7;
  double eq_tol = 1e-8;
  Tr2Reading reading = Tr2Reading::outer;
};

/// Throws ArgumentError naming the offending field (grid empty, tolerances not
/// positive, parameter lists missing for requested theorems, ...).
void validate(const CaseConfig& cfg);

/// Grid points in order; explicit points win over axes.
std::vector<std::vector<double>> grid_points(const CaseConfig& cfg);

struct CatalogueEntry {
  CaseConfig config;
  std::string summary;
  std::vector<std::string> highlights;  ///< expected equality / strictness outcomes
};

const std::vector<CatalogueEntry>& catalogue();
/// nullptr when unknown.
const CatalogueEntry* find_example(const std::string& name);

}  // namespace mgeo
