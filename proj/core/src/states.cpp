#include "oqsym/states.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "oqsym/errors.hpp"
#include "oqsym/factor_ops.hpp"
#include "oqsym/tensor_ops.hpp"

namespace oqsym {

void validate_density(const Matrix& rho, const std::string& what) {
  if (rho.rows() != rho.cols()) throw InvalidStateError(what + ": not square");
  if (hermiticity_defect(rho) > 1e-10)
    throw InvalidStateError(what + ": not Hermitian");
  if (std::abs(rho.trace() - Complex(1.0, 0.0)) > 1e-12)
    throw InvalidStateError(what + ": trace differs from 1");
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw NumericalError(what + ": eigendecomposition failed");
  if (es.eigenvalues().minCoeff() < -1e-10)
    throw InvalidStateError(what + ": negative eigenvalue " +
                            std::to_string(es.eigenvalues().minCoeff()));
}

Matrix qubit_density_from_bloch(const Eigen::Vector3d& bloch) {
  if (bloch.norm() > 1.0 + 1e-12)
    throw InvalidStateError("Bloch vector longer than 1");
  auto paulis = qubit_operators();
  Matrix rho = 0.5 * Matrix::Identity(2, 2);
  rho += 0.5 * (bloch(0) * paulis["sigma1"] + bloch(1) * paulis["sigma2"] +
                bloch(2) * paulis["sigma3"]);
  return rho;
}

Matrix resolve_rho_r(const StateSpec& spec, const SpaceLayout& layout) {
  const int dr = layout.dim_r();
  if (spec.rho_r) {
    if (spec.rho_r->rows() != dr)
      throw InvalidStateError("rho_R dimension does not match the R factors");
    validate_density(*spec.rho_r, "rho_R");
    return *spec.rho_r;
  }
  if (spec.bloch_r) {
    if (dr != 2)
      throw InvalidStateError("Bloch data for rho_R needs a single R qubit");
    Matrix rho = qubit_density_from_bloch(*spec.bloch_r);
    validate_density(rho, "rho_R");
    return rho;
  }
  throw InvalidStateError("state '" + spec.label + "' does not define rho_R");
}

LabeledOperator assemble_two_qubit_state(const StateSpec& spec, const LayoutPtr& layout) {
  if (layout->total_dim() != 4 || layout->dim_s() != 2)
    throw LayoutError("two-qubit state assembly needs a qubit ⊗ qubit layout");
  const Eigen::Vector3d a = spec.bloch_s.value_or(Eigen::Vector3d::Zero());
  const Eigen::Vector3d b = spec.bloch_r.value_or(Eigen::Vector3d::Zero());
  const Eigen::Matrix3d g = spec.gamma.value_or(Eigen::Matrix3d::Zero());

  auto paulis = qubit_operators();
  const Matrix* sig[3] = {&paulis["sigma1"], &paulis["sigma2"], &paulis["sigma3"]};
  const Matrix id2 = Matrix::Identity(2, 2);

  Matrix w = kron(id2, id2);
  for (int j = 0; j < 3; ++j) w += a(j) * kron(*sig[j], id2);
  for (int k = 0; k < 3; ++k) w += b(k) * kron(id2, *sig[k]);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      w += (g(j, k) + a(j) * b(k)) * kron(*sig[j], *sig[k]);
  w *= 0.25;
  validate_density(w, "joint state W" +
                          (spec.label.empty() ? std::string() : " '" + spec.label + "'"));
  return LabeledOperator(std::move(w), layout, spec.label);
}

std::vector<int> interior_indices(const SpaceLayout& layout, int guard) {
  if (!layout.has_boson()) throw LayoutError("interior projector needs a boson factor");
  if (guard < 1 || guard >= layout.min_boson_levels())
    throw LayoutError("guard must satisfy 1 <= guard < cutoff");
  std::vector<int> keep;
  for (int flat = 0; flat < layout.total_dim(); ++flat) {
    const auto idx = layout.multi_index(flat);
    bool inside = true;
    for (std::size_t f = 0; f < layout.factor_count(); ++f) {
      const Factor& fac = layout.factor(f);
      if (fac.kind == FactorKind::Boson && idx[f] >= fac.levels - guard) {
        inside = false;
        break;
      }
    }
    if (inside) keep.push_back(flat);
  }
  return keep;
}

LabeledOperator interior_projector(const LayoutPtr& layout, int guard) {
  Matrix p = Matrix::Zero(layout->total_dim(), layout->total_dim());
  for (int i : interior_indices(*layout, guard)) p(i, i) = 1.0;
  return LabeledOperator(std::move(p), layout, "P_interior");
}

unsigned long long SweepRng::next_u64() {
  // splitmix64; deterministic across platforms
  state_ += 0x9E3779B97F4A7C15ULL;
  unsigned long long z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SweepRng::uniform(double lo, double hi) {
  const double u = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

double SweepRng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u = 0.0;
  do {
    u = uniform(0.0, 1.0);
  } while (u <= 1e-300);
  const double v = uniform(0.0, 1.0);
  const double r = std::sqrt(-2.0 * std::log(u));
  spare_ = r * std::sin(2.0 * M_PI * v);
  have_spare_ = true;
  return r * std::cos(2.0 * M_PI * v);
}

Matrix random_density(int dim, SweepRng& rng) {
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
  Matrix rho = g * g.adjoint();
  rho /= rho.trace();
  return rho;
}

Matrix random_hermitian(int dim, SweepRng& rng) {
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
  return hermitize(g);
}

}  // namespace oqsym
