#pragma once

#include <cstddef>
#include <vector>

#include "oqsym/labeled_operator.hpp"
#include "oqsym/numeric.hpp"
#include "oqsym/space_layout.hpp"

namespace oqsym {

// Hilbert-Schmidt-orthonormal operator span.
struct OperatorSpan {
  std::vector<Matrix> basis;
  LayoutPtr layout;
  bool truncated = false;  // closure stopped at max_dim before stabilizing

  std::size_t dimension() const { return basis.size(); }
  // ‖G - I‖ max-entry of the Gram matrix; should sit at roundoff.
  double gram_defect() const;
  // Norm of x minus its projection onto the span.
  double residual_after_projection(const Matrix& x) const;
  bool contains(const Matrix& x, double tolerance = 1e-8) const;
};

struct AlgebraOptions {
  std::size_t max_dim = 0;  // 0 -> total_dim²
  double residual_threshold = tol::span_residual;
  // When set, the closure also includes commutators [ad_generator, ·]; this
  // mechanizes "commutes with e^{isH} Q e^{-isH} for all s" as closure under
  // iterated commutators with H.
  const Matrix* ad_generator = nullptr;
};

// Closes the span of the seeds under matrix products (and commutators, which
// products subsume linearly) until it stabilizes or max_dim is reached.
OperatorSpan generate_operator_algebra(const std::vector<Matrix>& seeds,
                                       const LayoutPtr& layout, AlgebraOptions options = {});

// Orthonormal basis of {X : [X, A_i] = 0 for every basis element}, computed
// as the common null space of the maps X -> [X, A_i] via SVD, intersected one
// generator at a time. Singular values below rank_tol_scale·ε·σ_max count as
// zero; a negative scale selects the default, the layout's total_dim.
OperatorSpan commutant_basis(const OperatorSpan& span, double rank_tol_scale = -1.0);

// Intersection of two spans (used for centers), same rank tolerance rules.
OperatorSpan span_intersection(const OperatorSpan& a, const OperatorSpan& b,
                               double rank_tol_scale = -1.0);

struct CommutantClassification {
  std::size_t algebra_dim = 0;
  std::size_t commutant_dim = 0;
  bool algebra_truncated = false;
  double max_commutator_with_h = 0.0;  // max over commutant basis of ‖[X,H]‖_F
  bool forces_commuting = false;       // every commutant element commutes with H
};

// Theorem-1 mechanization: generates the algebra of Q_set together with all
// iterated commutators with H, takes its commutant (which contains every
// admissible R(t)), and reports whether that commutant commutes with H.
CommutantClassification classify_commutant(const LabeledOperator& h,
                                           const std::vector<LabeledOperator>& q_set,
                                           double commute_tolerance = 1e-9,
                                           double rank_tol_scale = -1.0);

}  // namespace oqsym
