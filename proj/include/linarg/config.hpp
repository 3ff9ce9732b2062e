#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linarg/equations.hpp"

namespace linarg {

struct ScanParams {
  double b = 0.0;
  double sigma = 0.0;
  double a_min = 0.0;
  double a_max = 0.0;
  int steps = 2;
};

struct AxiomParams {
  int samples = 1000;
  double tol = 1e-10;
};

// Everything a CLI subcommand needs, parsed and validated from a JSON
// document. Unknown keys and scenario constraint violations are rejected
// with messages naming the key or inequality.
struct RunConfig {
  AlgebraContext ctx = AlgebraContext::real();
  std::string shape = "general";
  std::optional<LinearArgEquation> eq;
  std::optional<Element> root;  // scenario shapes fill in their closed-form root
  // Explicit initial-value sets (each x_{-k}..x_0 oldest first); when empty,
  // random_init_count seeded sets are drawn at run time.
  std::vector<std::vector<Element>> inits;
  int random_init_count = 1;
  double init_scale = 1.0;
  int horizon = 100;
  double root_tol = 1e-9;
  std::uint64_t seed = 0;
  std::optional<ScanParams> scan;
  AxiomParams axioms;
};

RunConfig parse_config(const std::string& text);

// Explicit sets when given, otherwise seeded random draws.
std::vector<std::vector<Element>> resolve_inits(const RunConfig& config);

}  // namespace linarg
