#pragma once

#include <array>
#include <optional>
#include <vector>

#include "oqsym/labeled_operator.hpp"
#include "oqsym/numeric.hpp"
#include "oqsym/space_layout.hpp"

namespace oqsym {

// One term of an evolved Pauli expansion: coefficient times Σ_sigma ⊗ Ξ_xi,
// index 0 meaning identity on that qubit. Terms the candidate U = Σ₃ turns
// into obstructions are marked underlined.
struct PauliTerm {
  int sigma = 0;
  int xi = 0;
  double coefficient = 0.0;
  bool underlined = false;
};

// Exact expansions of e^{itH} Σ_q e^{-itH} for the two-qubit Hamiltonian
// H = ½(γ₁Σ₁Ξ₁ + γ₂Σ₂Ξ₂ + γ₃Σ₃Ξ₃); four terms per evolved Σ_q.
struct PauliEvolution {
  std::array<std::vector<PauliTerm>, 3> evolved;

  // Σ |coefficient|² per evolved operator; unitarity makes each exactly 1.
  std::array<double, 3> coefficient_norms() const;
};

PauliEvolution pauli_heisenberg_coefficients(const Eigen::Vector3d& gamma, double t);

// Dense matrix of a term list on a qubit ⊗ qubit layout.
Matrix assemble_pauli_terms(const std::vector<PauliTerm>& terms, const LayoutPtr& layout);

// Which of the paper's dependent cases (and correlated cases, when Γ is
// given) hold for U = Σ₃; empty means the symmetry is predicted to fail.
// Cases are decided with exact-zero semantics at the stated tolerance.
struct ConditionCases {
  std::vector<int> dependent;   // subset of {1,2,3,4}
  std::vector<int> correlated;  // subset of {1,2,3,4}, only when Γ was given
  bool gamma_given = false;

  bool dependent_pass() const { return !dependent.empty(); }
  bool correlated_pass() const { return !correlated.empty(); }
};

ConditionCases condition_case(const Eigen::Vector3d& gamma, const Eigen::Vector3d& bloch_r,
                              const std::optional<Eigen::Matrix3d>& corr = std::nullopt,
                              double zero_tolerance = 1e-12);

// Rotation-family reduced dynamics (γ₁ = γ₂, <Ξ₁> = <Ξ₂> = 0):
// Tr_R[ρ_R e^{itH} Σ₁ e^{-itH}] = A₁₁ Σ₁ - A₁₂ Σ₂ and the Σ₂ companion.
struct RotationCoefficients {
  double a11 = 0.0;
  double a12 = 0.0;
};

RotationCoefficients rotation_family_coefficients(const Eigen::Vector3d& gamma, double b3,
                                                  double t);

}  // namespace oqsym
