#pragma once

#include <map>
#include <string>

#include "oqsym/numeric.hpp"
#include "oqsym/space_layout.hpp"

namespace oqsym {

using OperatorTable = std::map<std::string, Matrix>;

// {sigma1, sigma2, sigma3, sigma_plus, sigma_minus, id}
OperatorTable qubit_operators();

// {j1, j2, j3, j_plus, j_minus, id} on dimension 2j+1.
// j_pm = (j1 ± i j2)/√2, so [j_plus, j_minus] = j3 and [j3, j_pm] = ±j_pm.
OperatorTable spin_operators(double j);

// {a, a_dag, n, id} with a|m> = √m |m-1> and a hard cutoff a_dag|N-1> = 0.
OperatorTable boson_operators(int levels);

OperatorTable factor_operators(const Factor& factor);

const Matrix& lookup_factor_op(const OperatorTable& table, const std::string& name);

}  // namespace oqsym
