#include "oqsym/pauli_oracle.hpp"

#include <cmath>

#include "oqsym/errors.hpp"
#include "oqsym/factor_ops.hpp"
#include "oqsym/tensor_ops.hpp"

namespace oqsym {

std::array<double, 3> PauliEvolution::coefficient_norms() const {
  std::array<double, 3> out{};
  for (int q = 0; q < 3; ++q) {
    double acc = 0.0;
    for (const auto& term : evolved[q]) acc += term.coefficient * term.coefficient;
    out[q] = acc;
  }
  return out;
}

PauliEvolution pauli_heisenberg_coefficients(const Eigen::Vector3d& gamma, double t) {
  const double c1 = std::cos(gamma(0) * t), s1 = std::sin(gamma(0) * t);
  const double c2 = std::cos(gamma(1) * t), s2 = std::sin(gamma(1) * t);
  const double c3 = std::cos(gamma(2) * t), s3 = std::sin(gamma(2) * t);

  PauliEvolution out;
  // e^{itH} Σ₁ e^{-itH} = Σ₁ c₂c₃ + Ξ₁ s₂s₃ - Σ₂Ξ₃ c₂s₃ + Σ₃Ξ₂ s₂c₃
  out.evolved[0] = {{1, 0, c2 * c3, false},
                    {0, 1, s2 * s3, true},
                    {2, 3, -c2 * s3, false},
                    {3, 2, s2 * c3, true}};
  // e^{itH} Σ₂ e^{-itH} = Σ₂ c₃c₁ + Ξ₂ s₃s₁ - Σ₃Ξ₁ c₃s₁ + Σ₁Ξ₃ s₃c₁
  out.evolved[1] = {{2, 0, c3 * c1, false},
                    {0, 2, s3 * s1, true},
                    {3, 1, -c3 * s1, true},
                    {1, 3, s3 * c1, false}};
  // e^{itH} Σ₃ e^{-itH} = Σ₃ c₁c₂ + Ξ₃ s₁s₂ - Σ₁Ξ₂ c₁s₂ + Σ₂Ξ₁ s₁c₂
  out.evolved[2] = {{3, 0, c1 * c2, false},
                    {0, 3, s1 * s2, false},
                    {1, 2, -c1 * s2, true},
                    {2, 1, s1 * c2, true}};
  return out;
}

Matrix assemble_pauli_terms(const std::vector<PauliTerm>& terms, const LayoutPtr& layout) {
  if (layout->total_dim() != 4 || layout->dim_s() != 2)
    throw LayoutError("Pauli term assembly needs a qubit ⊗ qubit layout");
  auto paulis = qubit_operators();
  const Matrix* table[4] = {nullptr, &paulis["sigma1"], &paulis["sigma2"],
                            &paulis["sigma3"]};
  const Matrix id2 = Matrix::Identity(2, 2);
  Matrix acc = Matrix::Zero(4, 4);
  for (const auto& term : terms) {
    const Matrix& s = term.sigma == 0 ? id2 : *table[term.sigma];
    const Matrix& x = term.xi == 0 ? id2 : *table[term.xi];
    acc += term.coefficient * kron(s, x);
  }
  return acc;
}

ConditionCases condition_case(const Eigen::Vector3d& gamma, const Eigen::Vector3d& bloch_r,
                              const std::optional<Eigen::Matrix3d>& corr,
                              double zero_tolerance) {
  auto zero = [&](double x) { return std::abs(x) <= zero_tolerance; };
  const bool g1 = zero(gamma(0)), g2 = zero(gamma(1)), g3 = zero(gamma(2));
  const bool b1 = zero(bloch_r(0)), b2 = zero(bloch_r(1));

  ConditionCases out;
  if (g1 && g2) out.dependent.push_back(1);
  if (g2 && g3 && b1) out.dependent.push_back(2);
  if (g3 && g1 && b2) out.dependent.push_back(3);
  if (b1 && b2) out.dependent.push_back(4);

  if (corr) {
    out.gamma_given = true;
    const Eigen::Matrix3d& g = *corr;
    const bool c21 = zero(g(1, 0)), c31 = zero(g(2, 0));
    const bool c32 = zero(g(2, 1)), c12 = zero(g(0, 1));
    if (g1 && g2) out.correlated.push_back(1);
    if (g2 && g3 && c21 && c31 && b1) out.correlated.push_back(2);
    if (g3 && g1 && c32 && c12 && b2) out.correlated.push_back(3);
    if (c12 && c21 && c31 && c32 && b1 && b2) out.correlated.push_back(4);
  }
  return out;
}

RotationCoefficients rotation_family_coefficients(const Eigen::Vector3d& gamma, double b3,
                                                  double t) {
  if (std::abs(gamma(0) - gamma(1)) > 1e-12)
    throw ModelError("rotation family needs γ₁ = γ₂");
  RotationCoefficients out;
  out.a11 = std::cos(gamma(0) * t) * std::cos(gamma(2) * t);
  out.a12 = b3 * std::cos(gamma(0) * t) * std::sin(gamma(2) * t);
  return out;
}

}  // namespace oqsym
