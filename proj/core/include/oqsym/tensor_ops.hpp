#pragma once

#include "oqsym/labeled_operator.hpp"
#include "oqsym/numeric.hpp"
#include "oqsym/space_layout.hpp"

namespace oqsym {

Matrix kron(const Matrix& a, const Matrix& b);

// Identity on every factor except `slot`, where `op` acts.
Matrix embed_factor_matrix(const Matrix& op, std::size_t slot, const SpaceLayout& layout);

LabeledOperator embed_factor_operator(const Matrix& op, const std::string& factor_label,
                                      const LayoutPtr& layout, std::string result_label = "");

LabeledOperator identity_operator(const LayoutPtr& layout);

// Eigendecomposition of a Hermitian matrix, cached for repeated propagator
// and Heisenberg-evolution evaluations. Exactly diagonal input short-circuits
// the solver (catalog oscillator Hamiltonians are built diagonal).
class HermitianEigensystem {
 public:
  explicit HermitianEigensystem(const Matrix& h);  // throws NumericalError

  const RealVector& eigenvalues() const { return eigenvalues_; }
  bool diagonal_input() const { return diagonal_; }

  // e^{-i t H}
  Matrix propagator(double t) const;
  // e^{+i t H} q e^{-i t H}, via phase Hadamard in the eigenbasis
  Matrix evolve(const Matrix& q, double t) const;

 private:
  bool diagonal_ = false;
  RealVector eigenvalues_;
  Matrix vectors_;  // empty when diagonal_
};

// e^{-i t H}; requires the Hermitian flag.
LabeledOperator propagator(const LabeledOperator& h, double t);

// e^{+i t H} Q e^{-i t H}; preserves Hermiticity and the spectrum of Q.
LabeledOperator heisenberg_evolve(const LabeledOperator& q, const LabeledOperator& h,
                                  double t);

// Trace over all R-tagged factors; the result lives on the S-only layout.
Matrix partial_trace_r(const Matrix& a, const SpaceLayout& layout);
LabeledOperator partial_trace_r(const LabeledOperator& a);

}  // namespace oqsym
