#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oqsym/engine.hpp"
#include "oqsym/operator_algebra.hpp"

namespace oqsym {

// One executed check with everything the serializer emits.
struct CheckOutcome {
  CheckKind kind = CheckKind::Independent;
  std::string candidate;
  std::string state;
  bool passes = false;
  std::optional<bool> expected_pass;
  bool matched = true;  // expectation comparison (true when no expectation)
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool interior_projected = false;
  std::optional<SymmetryVerdict> verdict;
  std::optional<RClassification> classification;
  std::optional<Theorem1Result> theorem1;
  std::optional<ClosureReport> closure;
  std::optional<CommutantClassification> commutant;
  std::optional<double> shift_residual;
};

struct Report {
  std::string tool_version;
  unsigned long long seed = 42;
  std::string model_name;
  int total_dim = 0;
  std::vector<std::string> factor_summary;
  std::vector<CheckOutcome> outcomes;
  bool all_matched = true;
};

// Machine-readable form: JSON with stable key ordering and no volatile
// fields, so identical configs produce byte-identical reports.
std::string emit_report_machine(const Report& report);
// Fixed-width human table.
std::string emit_report_human(const Report& report);
// Round-trips the machine form; parse(emit(r)) re-emits byte-identically.
Report parse_report(const std::string& text);

std::string tool_version();

}  // namespace oqsym
