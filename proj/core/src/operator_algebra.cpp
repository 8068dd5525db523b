#include "oqsym/operator_algebra.hpp"

#include <limits>

#include <Eigen/SVD>

#include "oqsym/errors.hpp"

namespace oqsym {

namespace {

// Modified Gram-Schmidt with one re-orthogonalization pass.
Matrix mgs_residual(const std::vector<Matrix>& basis, Matrix x) {
  for (int pass = 0; pass < 2; ++pass)
    for (const Matrix& b : basis) x -= hs_inner(b, x) * b;
  return x;
}

// Normalizes and appends x when its residual clears the span threshold.
bool try_add(std::vector<Matrix>& basis, const Matrix& x, double threshold) {
  const double n0 = hs_norm(x);
  if (n0 < 1e-14) return false;
  Matrix r = mgs_residual(basis, x / n0);
  const double rn = hs_norm(r);
  if (rn <= threshold) return false;
  basis.push_back(r / rn);
  return true;
}

Eigen::Map<const Vector> vec_view(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

}  // namespace

double OperatorSpan::gram_defect() const {
  const std::size_t n = basis.size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Complex g = hs_inner(basis[i], basis[j]);
      const double dev = std::abs(g - (i == j ? Complex(1, 0) : Complex(0, 0)));
      if (dev > worst) worst = dev;
    }
  return worst;
}

double OperatorSpan::residual_after_projection(const Matrix& x) const {
  return hs_norm(mgs_residual(basis, x));
}

bool OperatorSpan::contains(const Matrix& x, double tolerance) const {
  const double n = hs_norm(x);
  if (n < 1e-14) return true;
  return residual_after_projection(x / n) <= tolerance;
}

OperatorSpan generate_operator_algebra(const std::vector<Matrix>& seeds,
                                       const LayoutPtr& layout, AlgebraOptions options) {
  if (!layout) throw LayoutError("operator algebra needs a layout");
  const int d = layout->total_dim();
  const std::size_t full = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
  std::size_t max_dim = options.max_dim == 0 ? full : options.max_dim;
  if (max_dim > full) max_dim = full;

  OperatorSpan span;
  span.layout = layout;
  for (const Matrix& s : seeds) {
    if (s.rows() != d || s.cols() != d)
      throw LayoutError("algebra seed does not match the layout dimension");
    if (span.basis.size() >= max_dim) {
      span.truncated = true;
      return span;
    }
    try_add(span.basis, s, options.residual_threshold);
  }

  // Worklist closure: pairs where at least one element is new.
  std::size_t processed = 0;
  while (processed < span.basis.size()) {
    const std::size_t upto = span.basis.size();
    for (std::size_t j = processed; j < upto; ++j) {
      if (options.ad_generator) {
        const Matrix c = commutator(*options.ad_generator, span.basis[j]);
        if (span.basis.size() >= max_dim) {
          if (hs_norm(mgs_residual(span.basis, c)) > options.residual_threshold)
            span.truncated = true;
        } else {
          try_add(span.basis, c, options.residual_threshold);
        }
      }
      for (std::size_t i = 0; i < upto; ++i) {
        for (const Matrix& p : {Matrix(span.basis[i] * span.basis[j]),
                                Matrix(span.basis[j] * span.basis[i])}) {
          if (span.basis.size() >= max_dim) {
            const double n0 = hs_norm(p);
            if (n0 > 1e-14 &&
                hs_norm(mgs_residual(span.basis, p / n0)) > options.residual_threshold)
              span.truncated = true;
          } else {
            try_add(span.basis, p, options.residual_threshold);
          }
        }
        if (span.truncated) return span;
      }
      if (span.truncated) return span;
    }
    processed = upto;
  }
  return span;
}

namespace {

double default_rank_scale(const SpaceLayout& layout) {
  return static_cast<double>(layout.total_dim());
}

// Restricts the null-space basis (columns of `basis`, vectors in C^{d²}) to
// the null space of `map` (d² × d²) and returns the new basis. The rank cut
// is referenced to the map's own scale, not just the restricted block's
// largest singular value: once every surviving direction is null, that
// largest value is itself roundoff and cannot serve as the reference.
Matrix restrict_null_space(const Matrix& map, const Matrix& basis, double map_scale,
                           double rank_scale) {
  if (basis.cols() == 0) return basis;
  Matrix restricted = map * basis;  // d² × m
  Eigen::JacobiSVD<Matrix> svd(restricted, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double smax = std::max(sv.size() > 0 ? sv(0) : 0.0, map_scale);
  const double cut = rank_scale * std::numeric_limits<double>::epsilon() * smax;
  Eigen::Index keep_from = 0;
  while (keep_from < sv.size() && sv(keep_from) > cut) ++keep_from;
  const Eigen::Index null_dim = basis.cols() - keep_from;
  if (null_dim <= 0) return Matrix(basis.rows(), 0);
  return basis * svd.matrixV().rightCols(null_dim);
}

std::vector<Matrix> columns_to_operators(const Matrix& columns, int d) {
  std::vector<Matrix> out;
  out.reserve(columns.cols());
  for (Eigen::Index c = 0; c < columns.cols(); ++c) {
    Matrix m = Eigen::Map<const Matrix>(columns.col(c).data(), d, d);
    out.push_back(m);
  }
  return out;
}

}  // namespace

OperatorSpan commutant_basis(const OperatorSpan& span, double rank_tol_scale) {
  if (!span.layout) throw LayoutError("commutant needs a layout");
  if (span.basis.empty()) throw ModelError("commutant of an empty span");
  const int d = span.layout->total_dim();
  const double scale =
      rank_tol_scale > 0 ? rank_tol_scale : default_rank_scale(*span.layout);

  const Matrix id = Matrix::Identity(d, d);
  Matrix null_basis = Matrix::Identity(d * d, d * d);
  for (const Matrix& a : span.basis) {
    // vec([X, A]) = (I ⊗ A - Aᵀ ⊗ I) vec(X), column-major vec.
    // I ⊗ A: block-diagonal copies of A; Aᵀ ⊗ I: scaled identities.
    Matrix map = Matrix::Zero(d * d, d * d);
    for (int b = 0; b < d; ++b) map.block(b * d, b * d, d, d) = a;
    for (int bi = 0; bi < d; ++bi)
      for (int bj = 0; bj < d; ++bj) {
        const Complex v = a(bj, bi);  // (Aᵀ)(bi,bj)
        if (v != Complex(0.0, 0.0)) map.block(bi * d, bj * d, d, d) -= v * id;
      }
    null_basis = restrict_null_space(map, null_basis, 2.0 * hs_norm(a), scale);
    if (null_basis.cols() == 0) break;
  }

  OperatorSpan out;
  out.layout = span.layout;
  out.basis = columns_to_operators(null_basis, d);
  return out;
}

OperatorSpan span_intersection(const OperatorSpan& a, const OperatorSpan& b,
                               double rank_tol_scale) {
  if (!a.layout || !same_layout(a.layout, b.layout))
    throw LayoutError("span intersection needs a common layout");
  const int d = a.layout->total_dim();
  // Columns of basis_a are unit vectors, so an absolute cut works here.
  const double cut = rank_tol_scale > 0 ? rank_tol_scale : 1e-10;

  // x in both spans  <=>  (I - P_b) x = 0 restricted to span a.
  Matrix basis_a(d * d, a.basis.size());
  for (std::size_t c = 0; c < a.basis.size(); ++c) basis_a.col(c) = vec_view(a.basis[c]);
  Matrix basis_b(d * d, b.basis.size());
  for (std::size_t c = 0; c < b.basis.size(); ++c) basis_b.col(c) = vec_view(b.basis[c]);

  Matrix complement = basis_a - basis_b * (basis_b.adjoint() * basis_a);
  Eigen::JacobiSVD<Matrix> svd(complement, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  Eigen::Index keep_from = 0;
  while (keep_from < sv.size() && sv(keep_from) > cut) ++keep_from;
  const Eigen::Index null_dim = static_cast<Eigen::Index>(a.basis.size()) - keep_from;

  OperatorSpan out;
  out.layout = a.layout;
  if (null_dim > 0) {
    Matrix cols = basis_a * svd.matrixV().rightCols(null_dim);
    out.basis = columns_to_operators(cols, d);
  }
  return out;
}

CommutantClassification classify_commutant(const LabeledOperator& h,
                                           const std::vector<LabeledOperator>& q_set,
                                           double commute_tolerance,
                                           double rank_tol_scale) {
  std::vector<Matrix> seeds;
  seeds.reserve(q_set.size());
  for (const auto& q : q_set) {
    if (!same_layout(q.layout(), h.layout()))
      throw LayoutError("classify_commutant needs a common layout");
    seeds.push_back(q.matrix());
  }
  AlgebraOptions opts;
  opts.ad_generator = &h.matrix();
  OperatorSpan algebra = generate_operator_algebra(seeds, h.layout(), opts);
  OperatorSpan comm = commutant_basis(algebra, rank_tol_scale);

  CommutantClassification out;
  out.algebra_dim = algebra.dimension();
  out.algebra_truncated = algebra.truncated;
  out.commutant_dim = comm.dimension();
  for (const Matrix& x : comm.basis) {
    const double c = frobenius_norm(commutator(x, h.matrix()));
    if (c > out.max_commutator_with_h) out.max_commutator_with_h = c;
  }
  out.forces_commuting = out.max_commutator_with_h <= commute_tolerance;
  return out;
}

}  // namespace oqsym
