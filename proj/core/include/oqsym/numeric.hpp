#pragma once

#include <complex>

#include <Eigen/Dense>

namespace oqsym {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

namespace tol {
// Flag-establishing tolerances for LabeledOperator.
inline constexpr double hermitian = 1e-12;
inline constexpr double unitary_scale = 1e-10;  // times total_dim
// Span membership threshold for Hilbert-Schmidt orthonormalization.
inline constexpr double span_residual = 1e-9;
// Default symmetry-check thresholds; bosonic checks are interior-projected
// and use the relaxed value (truncation leakage decays with the guard).
inline constexpr double check_default = 1e-9;
inline constexpr double check_bosonic = 1e-7;
}  // namespace tol

inline double frobenius_norm(const Matrix& a) { return a.norm(); }

// Hilbert-Schmidt inner product Tr(a† b), computed entrywise in O(dim²).
inline Complex hs_inner(const Matrix& a, const Matrix& b) {
  return (a.conjugate().cwiseProduct(b)).sum();
}

inline double hs_norm(const Matrix& a) { return a.norm(); }

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

// max-entry deviation of (a - a†)
double hermiticity_defect(const Matrix& a);
// Frobenius deviation of (a a† - I)
double unitarity_defect(const Matrix& a);

bool is_hermitian(const Matrix& a, double tolerance = tol::hermitian);
bool is_unitary(const Matrix& a, double tolerance_scale = tol::unitary_scale);

// (a + a†)/2, used to scrub roundoff from products that are Hermitian by
// construction before eigendecomposition.
Matrix hermitize(const Matrix& a);

}  // namespace oqsym
