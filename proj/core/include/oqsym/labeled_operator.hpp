#pragma once

#include <string>
#include <utility>

#include "oqsym/numeric.hpp"
#include "oqsym/space_layout.hpp"

namespace oqsym {

// Dense complex matrix bound to a SpaceLayout. Hermitian/unitary flags are
// established by a numerical check at construction (1e-12 max-entry for
// Hermiticity, 1e-10·dim Frobenius for unitarity).
class LabeledOperator {
 public:
  LabeledOperator() = default;  // empty placeholder; valid() is false
  LabeledOperator(Matrix matrix, LayoutPtr layout, std::string label = "");

  bool valid() const { return layout_ != nullptr; }

  const Matrix& matrix() const { return matrix_; }
  const LayoutPtr& layout() const { return layout_; }
  const std::string& label() const { return label_; }
  int dim() const { return static_cast<int>(matrix_.rows()); }

  bool hermitian() const { return hermitian_; }
  bool unitary() const { return unitary_; }

  LabeledOperator dagger() const;
  LabeledOperator with_label(std::string label) const;

 private:
  Matrix matrix_;
  LayoutPtr layout_;
  std::string label_;
  bool hermitian_ = false;
  bool unitary_ = false;
};

}  // namespace oqsym
