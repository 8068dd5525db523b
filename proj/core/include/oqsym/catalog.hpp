#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oqsym/engine.hpp"
#include "oqsym/labeled_operator.hpp"
#include "oqsym/states.hpp"

namespace oqsym {

enum class SlopeFunction { Identity, Square };

struct CatalogParams {
  std::optional<Eigen::Vector3d> alpha;
  std::optional<Eigen::Vector3d> beta;
  std::optional<Eigen::Vector3d> gamma;
  std::optional<int> cutoff;            // boson levels per mode
  std::optional<int> guard;             // interior guard band
  std::optional<double> spin;           // angular-momentum chains
  std::optional<std::vector<double>> m_eigenvalues;  // §II.F M spectrum
  std::optional<SlopeFunction> slope;                // §II.F f
};

// Expected outcome of one regression check; drives `paper-examples`.
struct ExpectedVerdict {
  CheckKind kind = CheckKind::Independent;
  // Candidate label; for constant checks the observable label; for closure
  // rows the candidate whose adjoint is re-checked, or "*" for all pairwise
  // products of the model's verified candidates.
  std::string candidate;
  std::string state;  // state label for dependent/correlated/map rows
  bool expect_pass = true;
  std::optional<bool> expect_commutes_with_h;
  std::optional<double> expect_shift_r;
  std::optional<bool> expect_r_scalar;
  std::optional<bool> expect_r_commutes_h;
  std::optional<bool> expect_forces_commuting;
  std::optional<std::size_t> expect_commutant_dim;
  std::optional<bool> expect_shift_matches_g;
};

struct PaperModel {
  std::string name;
  LayoutPtr layout;
  LabeledOperator h;
  std::vector<CandidateSymmetry> candidates;
  std::vector<StateSpec> states;
  std::vector<LabeledOperator> q_set;
  CheckSettings settings;
  std::optional<LabeledOperator> shift_g;  // catalog G for the shift relation
  std::optional<double> shift_r;           // catalog scalar shift (for V)
  std::vector<ExpectedVerdict> expectations;

  const CandidateSymmetry& candidate(const std::string& label) const;
  const StateSpec& state(const std::string& label) const;
  const LabeledOperator& observable(const std::string& label) const;
};

// Named systems of §II.A-§II.G and §IV.A:
//   two_qubit_general, three_qubit_no_new, three_qubit_many_new,
//   angular_chain_JKL, angular_chain_JKLM, osc_with_bound, osc_without_bound,
//   two_osc_times_M, three_osc, dependent_qubits
PaperModel paper_catalog(const std::string& name, const CatalogParams& params = {});

std::vector<std::string> catalog_names();

struct RegressionEntry {
  std::string display;
  std::string catalog_name;
  CatalogParams params;
};

// Every catalog configuration the paper-examples regression exercises.
std::vector<RegressionEntry> paper_regression_entries();

}  // namespace oqsym
