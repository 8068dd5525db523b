#include "oqsym/numeric.hpp"

namespace oqsym {

double hermiticity_defect(const Matrix& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_defect(const Matrix& a) {
  const auto n = a.rows();
  return (a * a.adjoint() - Matrix::Identity(n, n)).norm();
}

bool is_hermitian(const Matrix& a, double tolerance) {
  return a.rows() == a.cols() && hermiticity_defect(a) <= tolerance;
}

bool is_unitary(const Matrix& a, double tolerance_scale) {
  return a.rows() == a.cols() &&
         unitarity_defect(a) <= tolerance_scale * static_cast<double>(a.rows());
}

Matrix hermitize(const Matrix& a) { return 0.5 * (a + a.adjoint()); }

}  // namespace oqsym
