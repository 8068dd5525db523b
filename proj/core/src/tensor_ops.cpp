#include "oqsym/tensor_ops.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "oqsym/errors.hpp"

namespace oqsym {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix embed_factor_matrix(const Matrix& op, std::size_t slot, const SpaceLayout& layout) {
  if (slot >= layout.factor_count()) throw LayoutError("factor slot out of range");
  const int d = layout.factor(slot).dim();
  if (op.rows() != d || op.cols() != d)
    throw LayoutError("operator dimension does not match factor '" +
                      layout.factor(slot).label + "'");
  const int pre = layout.dim_before(slot);
  const int post = layout.dim_after(slot);
  Matrix out = Matrix::Zero(layout.total_dim(), layout.total_dim());
  // kron(I_pre, op, I_post), written out directly
  for (int p = 0; p < pre; ++p)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        if (op(i, j) == Complex(0.0, 0.0)) continue;
        const int row0 = (p * d + i) * post;
        const int col0 = (p * d + j) * post;
        for (int q = 0; q < post; ++q) out(row0 + q, col0 + q) = op(i, j);
      }
  return out;
}

LabeledOperator embed_factor_operator(const Matrix& op, const std::string& factor_label,
                                      const LayoutPtr& layout, std::string result_label) {
  const std::size_t slot = layout->index_of(factor_label);
  return LabeledOperator(embed_factor_matrix(op, slot, *layout), layout,
                         std::move(result_label));
}

LabeledOperator identity_operator(const LayoutPtr& layout) {
  return LabeledOperator(Matrix::Identity(layout->total_dim(), layout->total_dim()),
                         layout, "I");
}

namespace {
bool exactly_diagonal(const Matrix& h) {
  for (Eigen::Index j = 0; j < h.cols(); ++j)
    for (Eigen::Index i = 0; i < h.rows(); ++i)
      if (i != j && h(i, j) != Complex(0.0, 0.0)) return false;
  return true;
}
}  // namespace

HermitianEigensystem::HermitianEigensystem(const Matrix& h) {
  if (exactly_diagonal(h)) {
    diagonal_ = true;
    eigenvalues_ = h.diagonal().real();
    return;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success)
    throw NumericalError("Hermitian eigendecomposition did not converge");
  eigenvalues_ = solver.eigenvalues();
  vectors_ = solver.eigenvectors();
}

Matrix HermitianEigensystem::propagator(double t) const {
  const Eigen::Index n = eigenvalues_.size();
  Vector phases(n);
  for (Eigen::Index i = 0; i < n; ++i)
    phases(i) = std::exp(Complex(0.0, -t * eigenvalues_(i)));
  if (diagonal_) {
    Matrix out = Matrix::Zero(n, n);
    out.diagonal() = phases;
    return out;
  }
  return vectors_ * phases.asDiagonal() * vectors_.adjoint();
}

Matrix HermitianEigensystem::evolve(const Matrix& q, double t) const {
  const Eigen::Index n = eigenvalues_.size();
  Vector phases(n);
  for (Eigen::Index i = 0; i < n; ++i)
    phases(i) = std::exp(Complex(0.0, t * eigenvalues_(i)));
  if (diagonal_) {
    // e^{itH} diagonal: pure phase Hadamard, no matrix products
    return phases.asDiagonal() * q * phases.conjugate().asDiagonal();
  }
  Matrix w = vectors_.adjoint() * q * vectors_;
  w = phases.asDiagonal() * w * phases.conjugate().asDiagonal();
  return vectors_ * w * vectors_.adjoint();
}

LabeledOperator propagator(const LabeledOperator& h, double t) {
  if (!h.hermitian())
    throw ModelError("propagator needs a Hermitian generator, got '" + h.label() + "'");
  HermitianEigensystem es(h.matrix());
  return LabeledOperator(es.propagator(t), h.layout(), "exp(-it " + h.label() + ")");
}

LabeledOperator heisenberg_evolve(const LabeledOperator& q, const LabeledOperator& h,
                                  double t) {
  if (!same_layout(q.layout(), h.layout()))
    throw LayoutError("Heisenberg evolution needs a common layout");
  if (!h.hermitian()) throw ModelError("Heisenberg evolution needs a Hermitian H");
  HermitianEigensystem es(h.matrix());
  return LabeledOperator(es.evolve(q.matrix(), t), q.layout(), q.label());
}

Matrix partial_trace_r(const Matrix& a, const SpaceLayout& layout) {
  if (!layout.has_r()) throw LayoutError("partial trace: layout has no R factors");
  const int ds = layout.dim_s();
  const int dr = layout.dim_r();
  if (a.rows() != layout.total_dim() || a.cols() != layout.total_dim())
    throw LayoutError("partial trace: operator does not match layout");
  Matrix out = Matrix::Zero(ds, ds);
  for (int i = 0; i < ds; ++i)
    for (int j = 0; j < ds; ++j) {
      Complex acc(0.0, 0.0);
      for (int r = 0; r < dr; ++r) acc += a(i * dr + r, j * dr + r);
      out(i, j) = acc;
    }
  return out;
}

LabeledOperator partial_trace_r(const LabeledOperator& a) {
  Matrix reduced = partial_trace_r(a.matrix(), *a.layout());
  return LabeledOperator(std::move(reduced), a.layout()->s_only(),
                         a.label().empty() ? "" : "Tr_R[" + a.label() + "]");
}

}  // namespace oqsym
