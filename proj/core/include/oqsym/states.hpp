#pragma once

#include <optional>
#include <string>

#include "oqsym/labeled_operator.hpp"
#include "oqsym/numeric.hpp"
#include "oqsym/space_layout.hpp"

namespace oqsym {

// Reservoir state plus optional subsystem Bloch data and correlation tensor.
// For two-qubit models the pieces assemble into a joint density matrix W.
struct StateSpec {
  std::string label;
  std::optional<Matrix> rho_r;               // explicit density matrix on R
  std::optional<Eigen::Vector3d> bloch_s;    // a_j = <Σ_j>
  std::optional<Eigen::Vector3d> bloch_r;    // b_k = <Ξ_k>
  std::optional<Eigen::Matrix3d> gamma;      // Γ_jk = <Σ_j Ξ_k> - <Σ_j><Ξ_k>
};

// Trace-1, Hermitian, eigenvalues ≥ -1e-10; throws InvalidStateError.
void validate_density(const Matrix& rho, const std::string& what);

Matrix qubit_density_from_bloch(const Eigen::Vector3d& bloch);

// Resolves the R-factor density matrix from whatever the spec carries.
Matrix resolve_rho_r(const StateSpec& spec, const SpaceLayout& layout);

// W = ¼[I⊗I + Σ a_j Σ_j⊗I + Σ b_k I⊗Ξ_k + Σ (Γ_jk + a_j b_k) Σ_j⊗Ξ_k].
// With Γ absent this is the product state ρ_S ⊗ ρ_R. Positivity enforced.
LabeledOperator assemble_two_qubit_state(const StateSpec& spec, const LayoutPtr& layout);

// Orthogonal projector onto basis states whose every bosonic occupation is
// below (cutoff - guard); excludes cutoff artifacts from assertions.
LabeledOperator interior_projector(const LayoutPtr& layout, int guard);
// Flat basis indices retained by that projector.
std::vector<int> interior_indices(const SpaceLayout& layout, int guard);

// Deterministic random helpers for sweeps and property tests; hand-rolled
// from mt19937_64 so the stream is identical across standard libraries.
class SweepRng {
 public:
  explicit SweepRng(unsigned long long seed) : state_(seed) {}
  double uniform(double lo, double hi);
  double normal();
  unsigned long long next_u64();

 private:
  unsigned long long state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Ginibre-induced random density matrix.
Matrix random_density(int dim, SweepRng& rng);
// Random Hermitian matrix with entries O(1).
Matrix random_hermitian(int dim, SweepRng& rng);

}  // namespace oqsym
