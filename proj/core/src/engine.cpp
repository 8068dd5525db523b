#include "oqsym/engine.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "oqsym/errors.hpp"
#include "oqsym/factor_ops.hpp"
#include "oqsym/tensor_ops.hpp"

namespace oqsym {

std::string to_string(Scope s) {
  switch (s) {
    case Scope::SOnly:
      return "S-only";
    case Scope::ROnly:
      return "R-only";
    case Scope::Joint:
      return "joint";
  }
  return "?";
}

std::string to_string(CheckKind k) {
  switch (k) {
    case CheckKind::Independent:
      return "independent";
    case CheckKind::Dependent:
      return "dependent";
    case CheckKind::Correlated:
      return "correlated";
    case CheckKind::Constant:
      return "constant";
    case CheckKind::DependentConstant:
      return "dependent_constant";
    case CheckKind::Classify:
      return "classify";
    case CheckKind::Theorem1:
      return "theorem1";
    case CheckKind::Shift:
      return "shift";
    case CheckKind::Closure:
      return "closure";
    case CheckKind::MapCovariance:
      return "map_covariance";
    case CheckKind::Commutant:
      return "commutant";
  }
  return "?";
}

std::vector<double> default_time_grid() {
  return {0.1, 0.37, 1.0, M_PI / 3.0, std::sqrt(2.0), 2.5, 5.0};
}

std::vector<double> default_s_grid() { return {0.1, 0.37, 1.0, std::sqrt(2.0)}; }

namespace {

// Trace over the S factors (layout stores S first), the mirror image of
// partial_trace_r.
Matrix partial_trace_s(const Matrix& a, const SpaceLayout& layout) {
  const int ds = layout.dim_s();
  const int dr = layout.dim_r();
  Matrix out = Matrix::Zero(dr, dr);
  for (int r = 0; r < dr; ++r)
    for (int s = 0; s < dr; ++s) {
      Complex acc(0.0, 0.0);
      for (int i = 0; i < ds; ++i) acc += a(i * dr + r, i * dr + s);
      out(r, s) = acc;
    }
  return out;
}

// Interior-projection context: empty keep list means no projection.
struct Projection {
  std::vector<int> keep;
  bool active = false;

  static Projection from(const SpaceLayout& layout, const CheckSettings& st) {
    Projection p;
    if (layout.has_boson() && st.guard >= 1) {
      p.keep = interior_indices(layout, st.guard);
      p.active = true;
    }
    return p;
  }

  double norm(const Matrix& x) const {
    if (!active) return x.norm();
    return x(keep, keep).norm();
  }

  Complex trace(const Matrix& x) const {
    if (!active) return x.trace();
    Complex acc(0.0, 0.0);
    for (int i : keep) acc += x(i, i);
    return acc;
  }

  int rank(int dim) const { return active ? static_cast<int>(keep.size()) : dim; }
};

void require_common_layout(const LabeledOperator& a, const LabeledOperator& b,
                           const char* what) {
  if (!same_layout(a.layout(), b.layout()))
    throw LayoutError(std::string(what) + ": layout mismatch");
}

void require_s_operators(const std::vector<LabeledOperator>& q_set,
                         const LabeledOperator& h, const CheckSettings& st,
                         const char* what) {
  if (q_set.empty()) throw ModelError(std::string(what) + ": empty Q set");
  for (const auto& q : q_set) {
    require_common_layout(q, h, what);
    if (st.enforce_s_locality && !is_s_local(q))
      throw ModelError(std::string(what) + ": scope violation, '" + q.label() +
                       "' is not an S operator");
  }
}

const char* kTaylor1 = "taylor1";
const char* kTaylor2 = "taylor2";

void finalize(SymmetryVerdict& v) {
  v.max_deviation = 0.0;
  for (const auto& e : v.deviations)
    if (e.value > v.max_deviation) v.max_deviation = e.value;
  v.passes = v.max_deviation <= v.tolerance;
}

}  // namespace

bool is_s_local(const LabeledOperator& op) {
  const SpaceLayout& layout = *op.layout();
  if (!layout.has_r()) return true;
  const int dr = layout.dim_r();
  Matrix block = partial_trace_r(op.matrix(), layout) / static_cast<double>(dr);
  Matrix rebuilt = kron(block, Matrix::Identity(dr, dr));
  const double scale = std::max(1.0, op.matrix().norm());
  return (op.matrix() - rebuilt).norm() <= 1e-9 * scale;
}

Matrix s_block(const LabeledOperator& u) {
  const SpaceLayout& layout = *u.layout();
  if (!layout.has_r()) return u.matrix();
  if (!is_s_local(u))
    throw ModelError("candidate '" + u.label() + "' is not an S-only operator");
  return partial_trace_r(u.matrix(), layout) / static_cast<double>(layout.dim_r());
}

Scope detect_scope(const LabeledOperator& u) {
  const SpaceLayout& layout = *u.layout();
  if (!layout.has_r()) return Scope::SOnly;
  const int ds = layout.dim_s();
  const int dr = layout.dim_r();
  const double scale = std::max(1.0, u.matrix().norm());

  Matrix us = partial_trace_r(u.matrix(), layout) / static_cast<double>(dr);
  const double s_resid = (u.matrix() - kron(us, Matrix::Identity(dr, dr))).norm();
  if (s_resid <= 1e-9 * scale) return Scope::SOnly;

  Matrix ur = partial_trace_s(u.matrix(), layout) / static_cast<double>(ds);
  const double r_resid = (u.matrix() - kron(Matrix::Identity(ds, ds), ur)).norm();
  if (r_resid <= 1e-9 * scale) return Scope::ROnly;
  return Scope::Joint;
}

CandidateSymmetry make_candidate(LabeledOperator u) {
  if (!u.unitary())
    throw ModelError("candidate '" + u.label() + "' failed the unitarity check");
  CandidateSymmetry c{std::move(u)};
  c.scope = detect_scope(c.u);
  return c;
}

CandidateSymmetry make_family_candidate(const LabeledOperator& generator, double theta,
                                        std::string label) {
  if (!generator.hermitian())
    throw ModelError("family generator must be Hermitian");
  HermitianEigensystem es(generator.matrix());
  LabeledOperator u(es.propagator(theta), generator.layout(), std::move(label));
  CandidateSymmetry c = make_candidate(std::move(u));
  c.generator = generator;
  c.family_theta = theta;
  return c;
}

std::vector<LabeledOperator> default_q_set(const LayoutPtr& layout) {
  std::vector<LabeledOperator> out;
  std::vector<std::vector<std::pair<std::string, Matrix>>> per_factor;
  for (std::size_t i = 0; i < layout->s_count(); ++i) {
    const Factor& f = layout->factor(i);
    auto table = factor_operators(f);
    std::vector<std::string> names;
    switch (f.kind) {
      case FactorKind::Qubit:
        names = {"sigma1", "sigma2", "sigma3"};
        break;
      case FactorKind::Spin:
        names = {"j1", "j2", "j3"};
        break;
      case FactorKind::Boson:
        names = {"a", "a_dag", "n"};
        break;
    }
    std::vector<std::pair<std::string, Matrix>> ops;
    for (const auto& n : names) ops.emplace_back(f.label + ":" + n, table[n]);
    per_factor.push_back(std::move(ops));
    for (const auto& [name, m] : per_factor.back())
      out.push_back(embed_factor_operator(m, f.label, layout, name));
  }
  // cross-factor products so multi-factor S observables are spanned
  for (std::size_t i = 0; i + 1 < per_factor.size(); ++i)
    for (std::size_t j = i + 1; j < per_factor.size(); ++j)
      for (const auto& [ni, mi] : per_factor[i])
        for (const auto& [nj, mj] : per_factor[j]) {
          auto a = embed_factor_operator(mi, layout->factor(i).label, layout);
          auto b = embed_factor_operator(mj, layout->factor(j).label, layout);
          out.emplace_back(Matrix(a.matrix() * b.matrix()), layout, ni + "*" + nj);
        }
  return out;
}

SymmetryVerdict check_independent(const LabeledOperator& h, const CandidateSymmetry& cand,
                                  const std::vector<LabeledOperator>& q_set,
                                  const CheckSettings& st) {
  require_common_layout(cand.u, h, "check_independent");
  require_s_operators(q_set, h, st, "check_independent");
  if (!h.hermitian()) throw ModelError("check_independent: H must be Hermitian");

  const Matrix& u = cand.u.matrix();
  const SpaceLayout& layout = *h.layout();
  const Projection proj = Projection::from(layout, st);

  HermitianEigensystem es(h.matrix());
  HermitianEigensystem es_conj(hermitize(u * h.matrix() * u.adjoint()));

  SymmetryVerdict v;
  v.kind = CheckKind::Independent;
  v.candidate = cand.u.label();
  v.tolerance = st.tolerance;
  v.interior_projected = proj.active;
  v.u_h_commutator_norm = commutator(u, h.matrix()).norm();
  v.commutes_with_h = v.u_h_commutator_norm <= st.tolerance;

  for (const auto& q : q_set) {
    const Matrix uqu = u.adjoint() * q.matrix() * u;
    for (double t : st.times) {
      const Matrix lhs = es.evolve(uqu, t);
      const Matrix evolved = es.evolve(q.matrix(), t);
      const Matrix rhs = u.adjoint() * evolved * u;
      const Matrix diff = lhs - rhs;
      v.deviations.push_back({q.label(), "t", t, proj.norm(diff)});

      // Eq.(3) route: same changes under the dynamics generated by UHU†.
      // Unprojected, the two routes are algebraically identical.
      const double dev_conj = (evolved - es_conj.evolve(q.matrix(), t)).norm();
      v.form_agreement = std::max(v.form_agreement, std::abs(diff.norm() - dev_conj));
    }
    // Order-2 Taylor certificate at t = 0.
    const Matrix c1_lhs = commutator(h.matrix(), uqu);
    const Matrix c1_rhs = u.adjoint() * commutator(h.matrix(), q.matrix()) * u;
    v.deviations.push_back({q.label(), kTaylor1, 0.0, proj.norm(c1_lhs - c1_rhs)});
    const Matrix c2_lhs = commutator(h.matrix(), c1_lhs);
    const Matrix c2_rhs =
        u.adjoint() * commutator(h.matrix(), commutator(h.matrix(), q.matrix())) * u;
    v.deviations.push_back({q.label(), kTaylor2, 0.0, proj.norm(c2_lhs - c2_rhs)});
  }
  finalize(v);
  return v;
}

LabeledOperator compute_r(const LabeledOperator& h, const LabeledOperator& u, double t) {
  require_common_layout(u, h, "compute_r");
  if (!h.hermitian()) throw ModelError("compute_r: H must be Hermitian");
  if (!u.unitary()) throw ModelError("compute_r: U must be unitary");
  HermitianEigensystem es(h.matrix());
  // R(t) = U e^{-itH} U† e^{itH} = U · (e^{-itH} U† e^{itH})
  Matrix r = u.matrix() * es.evolve(u.matrix().adjoint(), -t);
  return LabeledOperator(std::move(r), h.layout(),
                         "R(" + std::to_string(t) + ")");
}

namespace {

// Principal logarithm of a (near-)unitary matrix via complex Schur; for a
// normal matrix T is numerically diagonal, so the Schur vectors stay
// orthonormal even through eigenvalue clusters.
Matrix unitary_log_generator(const Matrix& r, double t) {
  Eigen::ComplexSchur<Matrix> schur(r);
  if (schur.info() != Eigen::Success)
    throw NumericalError("Schur decomposition failed in R(t) log");
  const Matrix& tt = schur.matrixT();
  const Matrix& qq = schur.matrixU();
  Vector logs(tt.rows());
  for (Eigen::Index i = 0; i < tt.rows(); ++i) {
    const Complex lambda = tt(i, i);
    logs(i) = Complex(0.0, 1.0) * std::log(lambda) / t;  // G = (i/t) log R
  }
  Matrix g = qq * logs.asDiagonal() * qq.adjoint();
  return hermitize(g);
}

}  // namespace

RClassification classify_r(const LabeledOperator& h, const CandidateSymmetry& cand,
                           const CheckSettings& st) {
  require_common_layout(cand.u, h, "classify_r");
  const SpaceLayout& layout = *h.layout();
  const Projection proj = Projection::from(layout, st);
  const int dim = layout.total_dim();
  const Matrix& u = cand.u.matrix();
  HermitianEigensystem es(h.matrix());

  std::vector<double> times = st.times;
  std::sort(times.begin(), times.end());

  RClassification out;
  std::vector<Matrix> rs;
  rs.reserve(times.size());
  std::vector<Complex> scalars;
  const Matrix id = Matrix::Identity(dim, dim);
  for (double t : times) {
    Matrix r = u * es.evolve(u.adjoint(), -t);
    const Complex lambda = proj.trace(r) / static_cast<double>(proj.rank(dim));
    out.scalar_deviation = std::max(out.scalar_deviation, proj.norm(r - lambda * id));
    out.commute_deviation =
        std::max(out.commute_deviation, proj.norm(commutator(r, h.matrix())));
    scalars.push_back(lambda);
    rs.push_back(std::move(r));
  }
  out.r_scalar = out.scalar_deviation <= st.tolerance;
  out.r_commutes_h = out.commute_deviation <= st.tolerance;

  if (out.r_scalar) {
    // R(t) = e^{-itr}: least squares on the unwrapped phase, branch
    // continuation from the smallest grid time.
    double sum_tt = 0.0, sum_tphi = 0.0;
    double r_hat = -std::arg(scalars[0]) / times[0];
    std::vector<double> unwrapped(times.size());
    for (std::size_t k = 0; k < times.size(); ++k) {
      const double raw = std::arg(scalars[k]);
      const double predicted = -r_hat * times[k];
      const double branch = std::round((predicted - raw) / (2.0 * M_PI));
      unwrapped[k] = raw + 2.0 * M_PI * branch;
      sum_tt += times[k] * times[k];
      sum_tphi += times[k] * unwrapped[k];
      r_hat = -sum_tphi / sum_tt;
    }
    for (std::size_t k = 0; k < times.size(); ++k)
      out.phase_fit_residual =
          std::max(out.phase_fit_residual, std::abs(unwrapped[k] + r_hat * times[k]));
    out.phase_fit_ok = out.phase_fit_residual <= 1e-6;
    if (out.phase_fit_ok) {
      out.shift_r = r_hat;
      Matrix g = r_hat * id;
      out.shift_relation_residual =
          proj.norm(u * h.matrix() * u.adjoint() - h.matrix() - g);
      out.shift_g = std::move(g);
      out.shift_g_norm = std::abs(r_hat) * std::sqrt(static_cast<double>(proj.rank(dim)));
    }
  } else if (out.r_commutes_h) {
    // Commuting but not scalar: extract G from the smallest time, verify the
    // whole grid reconstructs as e^{-itG} and U H U† = H + G.
    Matrix g = unitary_log_generator(rs[0], times[0]);
    HermitianEigensystem ges(g);
    for (std::size_t k = 0; k < times.size(); ++k)
      out.exp_reconstruction_residual = std::max(
          out.exp_reconstruction_residual, proj.norm(rs[k] - ges.propagator(times[k])));
    out.shift_relation_residual =
        proj.norm(u * h.matrix() * u.adjoint() - h.matrix() - g);
    out.shift_g_norm = proj.active ? g(proj.keep, proj.keep).norm() : g.norm();
    out.shift_g = std::move(g);
  }
  return out;
}

Theorem1Result theorem1_deviation(const LabeledOperator& h, const CandidateSymmetry& cand,
                                  const std::vector<LabeledOperator>& q_set,
                                  const CheckSettings& st) {
  require_common_layout(cand.u, h, "theorem1_deviation");
  require_s_operators(q_set, h, st, "theorem1_deviation");
  const SpaceLayout& layout = *h.layout();
  const Projection proj = Projection::from(layout, st);
  const Matrix& u = cand.u.matrix();
  HermitianEigensystem es(h.matrix());

  auto r_of = [&](double t) { return Matrix(u * es.evolve(u.adjoint(), -t)); };

  Theorem1Result out;
  std::vector<Matrix> rs;
  for (double t : st.times) rs.push_back(r_of(t));

  for (double s : st.s_values) {
    for (const auto& q : q_set) {
      const Matrix qs = es.evolve(q.matrix(), s);
      for (const Matrix& r : rs)
        out.commutator_max = std::max(out.commutator_max, proj.norm(commutator(r, qs)));
    }
    // Cocycle: R(s+t) = R(s) e^{-isH} R(t) e^{isH}
    const Matrix rsv = r_of(s);
    for (std::size_t k = 0; k < st.times.size(); ++k) {
      const double t = st.times[k];
      const Matrix lhs = r_of(s + t);
      const Matrix rhs = rsv * es.evolve(rs[k], -s);
      out.cocycle_max = std::max(out.cocycle_max, proj.norm(lhs - rhs));
    }
  }
  return out;
}

namespace {

Matrix lift_rho_r(const Matrix& rho_r, const SpaceLayout& layout) {
  const int ds = layout.dim_s();
  const int dr = layout.dim_r();
  if (rho_r.rows() != dr || rho_r.cols() != dr)
    throw InvalidStateError("rho_R dimension does not match the R factors");
  validate_density(rho_r, "rho_R");
  return kron(Matrix::Identity(ds, ds), rho_r);
}

}  // namespace

SymmetryVerdict check_dependent(const LabeledOperator& h, const CandidateSymmetry& cand,
                                const Matrix& rho_r,
                                const std::vector<LabeledOperator>& q_set,
                                const CheckSettings& st) {
  require_common_layout(cand.u, h, "check_dependent");
  require_s_operators(q_set, h, st, "check_dependent");
  const SpaceLayout& layout = *h.layout();
  const Matrix rho_full = lift_rho_r(rho_r, layout);
  const Matrix& u = cand.u.matrix();
  HermitianEigensystem es(h.matrix());

  SymmetryVerdict v;
  v.kind = CheckKind::Dependent;
  v.candidate = cand.u.label();
  v.tolerance = st.tolerance;
  v.u_h_commutator_norm = commutator(u, h.matrix()).norm();
  v.commutes_with_h = v.u_h_commutator_norm <= st.tolerance;

  // Alternative-form machinery per scope.
  std::optional<HermitianEigensystem> es_alt;
  const char* alt_tag = nullptr;
  if (cand.scope == Scope::SOnly) {
    es_alt.emplace(hermitize(u * h.matrix() * u.adjoint()));  // Eq.(39)
    alt_tag = "eq39";
  } else if (cand.scope == Scope::ROnly) {
    es_alt.emplace(hermitize(u.adjoint() * h.matrix() * u));  // Eq.(40)
    alt_tag = "eq40";
  }
  const Matrix rho_rotated =
      cand.scope == Scope::ROnly ? Matrix(u * rho_full * u.adjoint()) : Matrix();

  double alt_max = 0.0;
  double eq41_max = 0.0;
  for (const auto& q : q_set) {
    const Matrix uqu = u.adjoint() * q.matrix() * u;
    for (double t : st.times) {
      const Matrix lhs = es.evolve(uqu, t);
      const Matrix evolved = es.evolve(q.matrix(), t);
      const Matrix rhs = u.adjoint() * evolved * u;
      const Matrix d = partial_trace_r(Matrix(rho_full * (lhs - rhs)), layout);
      v.deviations.push_back({q.label(), "t", t, d.norm()});

      if (es_alt) {
        const Matrix reduced = partial_trace_r(Matrix(rho_full * evolved), layout);
        const Matrix reduced_alt =
            partial_trace_r(Matrix(rho_full * es_alt->evolve(q.matrix(), t)), layout);
        alt_max = std::max(alt_max, (reduced - reduced_alt).norm());
      }
      if (cand.scope == Scope::ROnly) {
        const Matrix d41 =
            partial_trace_r(Matrix((rho_full - rho_rotated) * evolved), layout);
        eq41_max = std::max(eq41_max, d41.norm());
      }
    }
    // Taylor certificate, reduced form.
    const Matrix c1 = partial_trace_r(
        Matrix(rho_full * (commutator(h.matrix(), uqu) -
                           u.adjoint() * commutator(h.matrix(), q.matrix()) * u)),
        layout);
    v.deviations.push_back({q.label(), kTaylor1, 0.0, c1.norm()});
  }
  finalize(v);
  if (alt_tag) {
    v.extra[std::string(alt_tag) + "_max"] = alt_max;
    v.forms_agree_on_verdict = (alt_max <= st.tolerance) == v.passes;
  }
  if (cand.scope == Scope::ROnly) {
    v.extra["eq41_max"] = eq41_max;
    v.forms_agree_on_verdict =
        v.forms_agree_on_verdict && ((eq41_max <= st.tolerance) == v.passes);
  }
  return v;
}

SymmetryVerdict check_correlated(const LabeledOperator& h, const CandidateSymmetry& cand,
                                 const Eigen::Vector3d& bloch_r,
                                 const Eigen::Matrix3d& gamma,
                                 const std::vector<LabeledOperator>& q_set,
                                 const CheckSettings& st) {
  require_common_layout(cand.u, h, "check_correlated");
  require_s_operators(q_set, h, st, "check_correlated");
  const SpaceLayout& layout = *h.layout();
  if (layout.total_dim() != 4 || layout.dim_s() != 2)
    throw LayoutError("check_correlated needs the qubit ⊗ qubit model");

  // Bloch design for a: center plus ±axis states, scaled to keep every W
  // positive (a pure marginal admits no correlations, so Γ ≠ 0 forces s < 1).
  std::vector<Eigen::Vector3d> axes = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                                       {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  double scale = 1.0;
  std::vector<Matrix> design;
  for (; scale >= 1.0 / 128.0; scale *= 0.5) {
    design.clear();
    try {
      StateSpec center;
      center.bloch_r = bloch_r;
      center.gamma = gamma;
      design.push_back(assemble_two_qubit_state(center, h.layout()).matrix());
      for (const auto& ax : axes) {
        StateSpec spec;
        spec.bloch_s = (scale * ax).eval();
        spec.bloch_r = bloch_r;
        spec.gamma = gamma;
        design.push_back(assemble_two_qubit_state(spec, h.layout()).matrix());
      }
      break;
    } catch (const InvalidStateError&) {
      design.clear();
    }
  }
  if (design.empty())
    throw InvalidStateError("no valid Bloch design: the (b, Γ) pair admits no joint state");

  const Matrix& u = cand.u.matrix();
  HermitianEigensystem es(h.matrix());

  SymmetryVerdict v;
  v.kind = CheckKind::Correlated;
  v.candidate = cand.u.label();
  v.tolerance = st.tolerance;
  v.extra["design_scale"] = scale;

  for (const auto& q : q_set) {
    const Matrix uqu = u.adjoint() * q.matrix() * u;
    for (double t : st.times) {
      const Matrix lhs = es.evolve(uqu, t);
      const Matrix rhs = u.adjoint() * es.evolve(q.matrix(), t) * u;
      const Matrix diff = lhs - rhs;
      for (std::size_t k = 0; k < design.size(); ++k) {
        const double dev = std::abs((design[k] * diff).trace());
        v.deviations.push_back(
            {q.label(), "design" + std::to_string(k), t, dev});
      }
    }
  }
  finalize(v);
  return v;
}

LabeledOperator heisenberg_reduced(const LabeledOperator& q, const LabeledOperator& h,
                                   const Matrix& rho_r, double t) {
  require_common_layout(q, h, "heisenberg_reduced");
  const SpaceLayout& layout = *h.layout();
  const Matrix rho_full = lift_rho_r(rho_r, layout);
  HermitianEigensystem es(h.matrix());
  Matrix reduced = partial_trace_r(Matrix(rho_full * es.evolve(q.matrix(), t)), layout);
  return LabeledOperator(std::move(reduced), layout.s_only(),
                         q.label().empty() ? "" : q.label() + "(t)");
}

Matrix schrodinger_map(const Matrix& rho_s, const Matrix& rho_r, const LabeledOperator& h,
                       double t) {
  const SpaceLayout& layout = *h.layout();
  if (rho_s.rows() != layout.dim_s())
    throw InvalidStateError("rho_S dimension does not match the S factors");
  validate_density(rho_s, "rho_S");
  validate_density(rho_r, "rho_R");
  HermitianEigensystem es(h.matrix());
  const Matrix w = kron(rho_s, rho_r);
  return partial_trace_r(es.evolve(w, -t), layout);
}

double duality_defect(const LabeledOperator& q, const Matrix& rho_s, const Matrix& rho_r,
                      const LabeledOperator& h, double t) {
  const Matrix reduced = heisenberg_reduced(q, h, rho_r, t).matrix();
  const Matrix mapped = schrodinger_map(rho_s, rho_r, h, t);
  const Complex lhs = (rho_s * reduced).trace();
  const SpaceLayout& layout = *h.layout();
  const Matrix q_s = partial_trace_r(q.matrix(), layout) / layout.dim_r();
  const Complex rhs = (mapped * q_s).trace();
  return std::abs(lhs - rhs);
}

SymmetryVerdict check_map_covariance(const LabeledOperator& h, const CandidateSymmetry& cand,
                                     const Matrix& rho_r, const CheckSettings& st) {
  require_common_layout(cand.u, h, "check_map_covariance");
  const SpaceLayout& layout = *h.layout();
  const Matrix us = s_block(cand.u);
  const int ds = layout.dim_s();
  if (ds != 2)
    throw LayoutError("map covariance spanning set is defined for a qubit S");
  validate_density(rho_r, "rho_R");
  HermitianEigensystem es(h.matrix());

  std::vector<Matrix> rho_s_set;
  rho_s_set.push_back(0.5 * Matrix::Identity(2, 2));
  for (int j = 0; j < 3; ++j)
    for (double sign : {1.0, -1.0}) {
      Eigen::Vector3d a = Eigen::Vector3d::Zero();
      a(j) = sign;
      rho_s_set.push_back(qubit_density_from_bloch(a));
    }

  SymmetryVerdict v;
  v.kind = CheckKind::MapCovariance;
  v.candidate = cand.u.label();
  v.tolerance = st.tolerance;
  for (double t : st.times) {
    const Matrix prop = es.propagator(t);
    auto phi = [&](const Matrix& rho_s) {
      const Matrix w = kron(rho_s, rho_r);
      return partial_trace_r(Matrix(prop * w * prop.adjoint()), layout);
    };
    for (std::size_t k = 0; k < rho_s_set.size(); ++k) {
      const Matrix& rho_s = rho_s_set[k];
      const Matrix lhs = us * phi(rho_s) * us.adjoint();
      const Matrix rhs = phi(Matrix(us * rho_s * us.adjoint()));
      v.deviations.push_back(
          {"rho_s" + std::to_string(k), "t", t, (lhs - rhs).norm()});
    }
  }
  finalize(v);
  return v;
}

SymmetryVerdict check_constant(const LabeledOperator& q, const LabeledOperator& h,
                               const CheckSettings& st) {
  require_common_layout(q, h, "check_constant");
  if (st.enforce_s_locality && !is_s_local(q))
    throw ModelError("check_constant: scope violation, '" + q.label() +
                     "' is not an S operator");
  const Projection proj = Projection::from(*h.layout(), st);
  HermitianEigensystem es(h.matrix());
  SymmetryVerdict v;
  v.kind = CheckKind::Constant;
  v.candidate = q.label();
  v.tolerance = st.tolerance;
  v.interior_projected = proj.active;
  for (double t : st.times)
    v.deviations.push_back(
        {q.label(), "t", t, proj.norm(es.evolve(q.matrix(), t) - q.matrix())});
  finalize(v);
  return v;
}

SymmetryVerdict check_dependent_constant(const LabeledOperator& q, const LabeledOperator& h,
                                         const Matrix& rho_r, const CheckSettings& st) {
  require_common_layout(q, h, "check_dependent_constant");
  if (!is_s_local(q))
    throw ModelError("check_dependent_constant: '" + q.label() +
                     "' is not an S operator");
  const SpaceLayout& layout = *h.layout();
  const Matrix rho_full = lift_rho_r(rho_r, layout);
  const Matrix q_s = partial_trace_r(q.matrix(), layout) / layout.dim_r();
  HermitianEigensystem es(h.matrix());
  SymmetryVerdict v;
  v.kind = CheckKind::DependentConstant;
  v.candidate = q.label();
  v.tolerance = st.tolerance;
  for (double t : st.times) {
    const Matrix reduced =
        partial_trace_r(Matrix(rho_full * es.evolve(q.matrix(), t)), layout);
    v.deviations.push_back({q.label(), "t", t, (reduced - q_s).norm()});
  }
  finalize(v);
  return v;
}

double verify_shift_relation(const LabeledOperator& u, const LabeledOperator& h,
                             const Matrix& g, const CheckSettings& st) {
  require_common_layout(u, h, "verify_shift_relation");
  if (!is_hermitian(g, 1e-10))
    throw ModelError("verify_shift_relation: G must be Hermitian");
  const Projection proj = Projection::from(*h.layout(), st);
  return proj.norm(u.matrix() * h.matrix() * u.matrix().adjoint() - h.matrix() - g);
}

double verify_shift_relation(const LabeledOperator& u, const LabeledOperator& h, double r,
                             const CheckSettings& st) {
  const Matrix g = r * Matrix::Identity(h.dim(), h.dim());
  return verify_shift_relation(u, h, g, st);
}

ClosureReport closure_check(const std::vector<CandidateSymmetry>& verified,
                            const LabeledOperator& h,
                            const std::vector<LabeledOperator>& q_set,
                            const CheckSettings& st, const std::optional<Matrix>& rho_r) {
  auto run = [&](const CandidateSymmetry& c) {
    return rho_r ? check_dependent(h, c, *rho_r, q_set, st)
                 : check_independent(h, c, q_set, st);
  };
  ClosureReport report;
  for (std::size_t i = 0; i < verified.size(); ++i) {
    for (std::size_t j = 0; j < verified.size(); ++j) {
      const std::string label =
          verified[i].u.label() + "*" + verified[j].u.label();
      LabeledOperator prod(Matrix(verified[i].u.matrix() * verified[j].u.matrix()),
                           h.layout(), label);
      CandidateSymmetry c = make_candidate(std::move(prod));
      const auto verdict = run(c);
      report.products.push_back({label, verdict.passes, verdict.max_deviation});
    }
  }
  for (const auto& cand : verified) {
    CandidateSymmetry c = make_candidate(cand.u.dagger());
    const auto verdict = run(c);
    report.adjoints.push_back(
        {cand.u.label() + "†", verdict.passes, verdict.max_deviation});
  }
  return report;
}

}  // namespace oqsym
