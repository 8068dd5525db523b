#pragma once

#include <string>
#include <utility>
#include <vector>

#include "oqsym/labeled_operator.hpp"
#include "oqsym/numeric.hpp"
#include "oqsym/space_layout.hpp"

namespace oqsym {

// One product term: coefficient times single-factor operators at the named
// slots. A factor listed twice contributes the ordered product at that slot.
struct ExpressionTerm {
  Complex coefficient{1.0, 0.0};
  std::vector<std::pair<std::string, std::string>> named_ops;  // (factor label, op name)
  std::vector<std::pair<std::string, Matrix>> literal_ops;     // (factor label, matrix)
};

struct OperatorExpression {
  std::vector<ExpressionTerm> terms;
};

// Σ_terms coefficient · (tensor-embedded product). Throws ModelError for an
// empty term list, LayoutError for unresolved labels or dimension mismatches.
LabeledOperator assemble_expression(const OperatorExpression& expr, const LayoutPtr& layout,
                                    std::string label = "");

// Convenience builders used throughout the catalog.
ExpressionTerm term(Complex coefficient,
                    std::vector<std::pair<std::string, std::string>> named_ops);

}  // namespace oqsym
