#include "oqsym/factor_ops.hpp"

#include <cmath>

#include "oqsym/errors.hpp"

namespace oqsym {

OperatorTable qubit_operators() {
  OperatorTable t;
  Matrix s1(2, 2), s2(2, 2), s3(2, 2);
  s1 << 0, 1, 1, 0;
  s2 << 0, Complex(0, -1), Complex(0, 1), 0;
  s3 << 1, 0, 0, -1;
  t["sigma1"] = s1;
  t["sigma2"] = s2;
  t["sigma3"] = s3;
  t["sigma_plus"] = 0.5 * (s1 + Complex(0, 1) * s2);
  t["sigma_minus"] = 0.5 * (s1 - Complex(0, 1) * s2);
  t["id"] = Matrix::Identity(2, 2);
  return t;
}

OperatorTable spin_operators(double j) {
  const double twice = 2.0 * j;
  if (j < 0.5 || std::abs(twice - std::round(twice)) > 1e-12 || j > 4.5)
    throw ModelError("spin j must be a half-integer in [1/2, 9/2]");
  const int d = static_cast<int>(std::lround(twice)) + 1;

  // Basis |j,m> with m = j, j-1, ..., -j.
  Matrix jp_raw = Matrix::Zero(d, d);  // standard J+: [J+,J-] = 2 J3
  for (int k = 1; k < d; ++k) {
    const double m = j - k;  // J+ maps m -> m+1
    jp_raw(k - 1, k) = std::sqrt(j * (j + 1) - m * (m + 1));
  }
  Matrix jm_raw = jp_raw.adjoint();
  Matrix j3 = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) j3(k, k) = j - k;

  OperatorTable t;
  t["j1"] = 0.5 * (jp_raw + jm_raw);
  t["j2"] = Complex(0, -0.5) * (jp_raw - jm_raw);
  t["j3"] = j3;
  t["j_plus"] = jp_raw / std::sqrt(2.0);
  t["j_minus"] = jm_raw / std::sqrt(2.0);
  t["id"] = Matrix::Identity(d, d);
  return t;
}

OperatorTable boson_operators(int levels) {
  if (levels < 2) throw ModelError("boson cutoff must be at least 2");
  Matrix a = Matrix::Zero(levels, levels);
  for (int m = 1; m < levels; ++m) a(m - 1, m) = std::sqrt(static_cast<double>(m));
  OperatorTable t;
  t["a"] = a;
  t["a_dag"] = a.adjoint();
  Matrix n = Matrix::Zero(levels, levels);
  for (int m = 0; m < levels; ++m) n(m, m) = m;
  t["n"] = n;
  t["id"] = Matrix::Identity(levels, levels);
  return t;
}

OperatorTable factor_operators(const Factor& factor) {
  switch (factor.kind) {
    case FactorKind::Qubit:
      return qubit_operators();
    case FactorKind::Spin:
      return spin_operators(factor.spin);
    case FactorKind::Boson:
      return boson_operators(factor.levels);
  }
  throw ModelError("unknown factor kind");
}

const Matrix& lookup_factor_op(const OperatorTable& table, const std::string& name) {
  auto it = table.find(name);
  if (it == table.end()) throw ModelError("unknown factor operator '" + name + "'");
  return it->second;
}

}  // namespace oqsym
