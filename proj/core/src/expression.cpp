#include "oqsym/expression.hpp"

#include "oqsym/errors.hpp"
#include "oqsym/factor_ops.hpp"
#include "oqsym/tensor_ops.hpp"

namespace oqsym {

ExpressionTerm term(Complex coefficient,
                    std::vector<std::pair<std::string, std::string>> named_ops) {
  ExpressionTerm t;
  t.coefficient = coefficient;
  t.named_ops = std::move(named_ops);
  return t;
}

LabeledOperator assemble_expression(const OperatorExpression& expr, const LayoutPtr& layout,
                                    std::string label) {
  if (expr.terms.empty()) throw ModelError("operator expression has no terms");

  const int dim = layout->total_dim();
  Matrix acc = Matrix::Zero(dim, dim);

  // Per-factor operator tables, built once.
  std::vector<OperatorTable> tables;
  tables.reserve(layout->factor_count());
  for (std::size_t i = 0; i < layout->factor_count(); ++i)
    tables.push_back(factor_operators(layout->factor(i)));

  for (const auto& t : expr.terms) {
    Matrix product = Matrix::Identity(dim, dim);
    bool first = true;
    auto apply = [&](std::size_t slot, const Matrix& op) {
      Matrix embedded = embed_factor_matrix(op, slot, *layout);
      product = first ? std::move(embedded) : Matrix(product * embedded);
      first = false;
    };
    for (const auto& [flabel, opname] : t.named_ops)
      apply(layout->index_of(flabel), lookup_factor_op(tables[layout->index_of(flabel)], opname));
    for (const auto& [flabel, op] : t.literal_ops) apply(layout->index_of(flabel), op);
    acc += t.coefficient * product;
  }
  return LabeledOperator(std::move(acc), layout, std::move(label));
}

}  // namespace oqsym
