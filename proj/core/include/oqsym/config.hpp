#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oqsym/catalog.hpp"
#include "oqsym/engine.hpp"
#include "oqsym/expression.hpp"
#include "oqsym/space_layout.hpp"
#include "oqsym/states.hpp"

namespace oqsym {

// One requested check from a run configuration.
struct CheckRequest {
  CheckKind kind = CheckKind::Independent;
  std::string candidate;                        // also the observable for constant kinds
  std::string state;
  std::vector<std::string> closure_candidates;  // closure kind only
  std::optional<std::vector<double>> times;
  std::optional<std::vector<double>> s_values;
  std::optional<double> tolerance;
  std::optional<int> guard;
  std::optional<bool> expect_pass;  // exit-code contract compares against this
};

struct CandidateSpec {
  std::string name;
  bool from_catalog = false;
  std::optional<OperatorExpression> expression;  // must assemble to a unitary
  std::optional<Matrix> matrix;
  std::optional<OperatorExpression> generator;   // U(θ) = e^{-iθJ}
  double theta = 0.0;
};

// Validated run configuration; parse_config resolves names and dimensions
// and fails with a located error otherwise.
struct RunConfig {
  unsigned long long seed = 42;
  std::optional<std::string> catalog;
  CatalogParams params;
  std::optional<std::vector<Factor>> factors;          // explicit system
  std::optional<OperatorExpression> hamiltonian;
  std::vector<CandidateSpec> candidates;
  std::vector<StateSpec> states;
  std::vector<CheckRequest> checks;
  std::string format = "human";  // "human" | "machine"
  std::optional<std::string> out_path;
};

// Parses the documented JSON config grammar. Throws ConfigError with the
// offending key path (or byte offset for syntax errors).
RunConfig parse_config(const std::string& text);
RunConfig parse_config_file(const std::string& path);

}  // namespace oqsym
