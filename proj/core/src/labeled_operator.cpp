#include "oqsym/labeled_operator.hpp"

#include "oqsym/errors.hpp"

namespace oqsym {

LabeledOperator::LabeledOperator(Matrix matrix, LayoutPtr layout, std::string label)
    : matrix_(std::move(matrix)), layout_(std::move(layout)), label_(std::move(label)) {
  if (!layout_) throw LayoutError("operator needs a layout");
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() != layout_->total_dim())
    throw LayoutError("matrix dimensions do not match layout, operator '" + label_ + "'");
  hermitian_ = is_hermitian(matrix_);
  unitary_ = is_unitary(matrix_);
}

LabeledOperator LabeledOperator::dagger() const {
  return LabeledOperator(matrix_.adjoint(), layout_,
                         label_.empty() ? "" : label_ + "†");
}

LabeledOperator LabeledOperator::with_label(std::string label) const {
  LabeledOperator out = *this;
  out.label_ = std::move(label);
  return out;
}

}  // namespace oqsym
