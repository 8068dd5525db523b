#pragma once

#include <string>
#include <vector>

#include "oqsym/catalog.hpp"
#include "oqsym/config.hpp"
#include "oqsym/report.hpp"

namespace oqsym {

// Model resolved from a config: a catalog entry or a synthesized explicit
// system (default Q set, default settings).
struct ResolvedModel {
  PaperModel model;
  std::string display;
};

ResolvedModel resolve_model(const RunConfig& cfg);

// Executes the config's check list; deterministic given the config.
Report run_checks(const RunConfig& cfg);

// Eigenvalues of the configured H, ascending.
RealVector spectrum(const RunConfig& cfg);

struct RegressionRow {
  std::string model;
  std::string check;
  bool expected_pass = true;
  bool observed_pass = false;
  bool matched = false;
  double max_deviation = 0.0;
  bool interior = false;
  std::string notes;
};

struct RegressionSummary {
  std::vector<RegressionRow> rows;
  bool all_matched = true;
};

// Runs one catalog expectation (also used by the regression and tests).
RegressionRow run_expectation(const PaperModel& model, const ExpectedVerdict& expected,
                              const std::string& display);

// The paper-examples regression: every catalog entry with expected verdicts.
RegressionSummary run_paper_examples();

std::string format_regression_table(const RegressionSummary& summary);

}  // namespace oqsym
