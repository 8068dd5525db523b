#include "oqsym/catalog.hpp"

#include <cmath>

#include "oqsym/errors.hpp"
#include "oqsym/expression.hpp"
#include "oqsym/factor_ops.hpp"
#include "oqsym/tensor_ops.hpp"

namespace oqsym {

const CandidateSymmetry& PaperModel::candidate(const std::string& label) const {
  for (const auto& c : candidates)
    if (c.u.label() == label) return c;
  throw ModelError("model '" + name + "' has no candidate '" + label + "'");
}

const StateSpec& PaperModel::state(const std::string& label) const {
  for (const auto& s : states)
    if (s.label == label) return s;
  throw ModelError("model '" + name + "' has no state '" + label + "'");
}

const LabeledOperator& PaperModel::observable(const std::string& label) const {
  for (const auto& q : q_set)
    if (q.label() == label) return q;
  throw ModelError("model '" + name + "' has no observable '" + label + "'");
}

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", x);
  return buf;
}

std::vector<LabeledOperator> pauli_q_set(const LayoutPtr& layout,
                                         const std::string& s_label) {
  auto paulis = qubit_operators();
  return {embed_factor_operator(paulis["sigma1"], s_label, layout, "Sigma1"),
          embed_factor_operator(paulis["sigma2"], s_label, layout, "Sigma2"),
          embed_factor_operator(paulis["sigma3"], s_label, layout, "Sigma3")};
}

// Ladder-triple observable set {A, A†, A†A} from an explicit lowering matrix.
std::vector<LabeledOperator> ladder_q_set(const Matrix& a, const LayoutPtr& layout) {
  return {LabeledOperator(a, layout, "A"), LabeledOperator(a.adjoint(), layout, "A_dag"),
          LabeledOperator(Matrix(a.adjoint() * a), layout, "A_dagA")};
}

// V† of §II.E on the J⊗K Fock lattice (J index most significant):
//   V†|j,k> = |j,k-1>   for k > j
//   V†|j,k> = |j+1,k>   for j >= k
// The j = n-1 row would leave the truncated lattice; those sources are
// rerouted to the otherwise-unreached |·, n-1> column so V stays unitary.
// Rerouted cells live at occupation n-1 and never touch the interior.
Matrix zigzag_shift_adjoint(int n) {
  Matrix vd = Matrix::Zero(n * n, n * n);
  auto idx = [n](int j, int k) { return j * n + k; };
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      int dj, dk;
      if (k > j) {
        dj = j;
        dk = k - 1;
      } else if (j + 1 <= n - 1) {
        dj = j + 1;
        dk = k;
      } else {
        dj = k;
        dk = n - 1;
      }
      vd(idx(dj, dk), idx(j, k)) = 1.0;
    }
  return vd;
}

// U† of §II.G on the J⊗K⊗L Fock lattice:
//   U†|j,0,l> = |j+1,1,l>,  U†|j,1,l> = |j,0,l>,
//   U†|0,k,l> = |0,k-1,l> (k>1),  U†|j,k,l> = |j,k,l> (j>0, k>1).
// The j = n-1, k = 0 sources are rerouted to the unreached |0,n-1,l>.
Matrix three_osc_shift_adjoint(int n) {
  Matrix ud = Matrix::Zero(n * n * n, n * n * n);
  auto idx = [n](int j, int k, int l) { return (j * n + k) * n + l; };
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        int dj = j, dk = k;
        if (k == 0) {
          if (j + 1 <= n - 1) {
            dj = j + 1;
            dk = 1;
          } else {
            dj = 0;
            dk = n - 1;
          }
        } else if (k == 1) {
          dk = 0;
        } else if (j == 0) {
          dk = k - 1;
        }
        ud(idx(dj, dk, l), idx(j, k, l)) = 1.0;
      }
  return ud;
}

PaperModel two_qubit_general(const CatalogParams& p) {
  const Eigen::Vector3d alpha = p.alpha.value_or(Eigen::Vector3d(0.25, -0.35, 0.15));
  const Eigen::Vector3d beta = p.beta.value_or(Eigen::Vector3d(0.4, -0.3, 0.8));
  const Eigen::Vector3d gamma = p.gamma.value_or(Eigen::Vector3d(0.7, 1.3, 2.1));

  PaperModel m;
  m.name = "two_qubit_general";
  m.layout = make_layout({{"S1", FactorKind::Qubit, 0, 0, SubsystemTag::S},
                          {"R1", FactorKind::Qubit, 0, 0, SubsystemTag::R}});

  OperatorExpression expr;
  const char* s_names[3] = {"sigma1", "sigma2", "sigma3"};
  for (int j = 0; j < 3; ++j) {
    if (alpha(j) != 0.0) expr.terms.push_back(term(0.5 * alpha(j), {{"S1", s_names[j]}}));
    if (beta(j) != 0.0) expr.terms.push_back(term(0.5 * beta(j), {{"R1", s_names[j]}}));
    if (gamma(j) != 0.0)
      expr.terms.push_back(term(0.5 * gamma(j), {{"S1", s_names[j]}, {"R1", s_names[j]}}));
  }
  m.h = assemble_expression(expr, m.layout, "H");
  m.q_set = pauli_q_set(m.layout, "S1");
  m.settings = CheckSettings{};

  auto paulis = qubit_operators();
  m.candidates.push_back(make_candidate(
      embed_factor_operator(paulis["sigma3"], "S1", m.layout, "Sigma3")));

  const int nonzero_gammas = (gamma(0) != 0.0) + (gamma(1) != 0.0) + (gamma(2) != 0.0);
  ExpectedVerdict commutant_row;
  commutant_row.kind = CheckKind::Commutant;
  commutant_row.expect_forces_commuting = true;
  if (nonzero_gammas >= 2) commutant_row.expect_commutant_dim = 1;
  m.expectations.push_back(commutant_row);

  ExpectedVerdict s3;
  s3.kind = CheckKind::Independent;
  s3.candidate = "Sigma3";
  s3.expect_pass = false;  // generic couplings: Σ₃ does not commute with H
  if (nonzero_gammas >= 2) m.expectations.push_back(s3);
  return m;
}

PaperModel three_qubit(bool many_new) {
  PaperModel m;
  m.name = many_new ? "three_qubit_many_new" : "three_qubit_no_new";
  m.layout = make_layout({{"S1", FactorKind::Qubit, 0, 0, SubsystemTag::S},
                          {"R1", FactorKind::Qubit, 0, 0, SubsystemTag::R},
                          {"R2", FactorKind::Qubit, 0, 0, SubsystemTag::R}});
  OperatorExpression expr;
  if (many_new) {
    // H = Σ₃Ξ₃ + Ξ₃Π₃
    expr.terms.push_back(term(1.0, {{"S1", "sigma3"}, {"R1", "sigma3"}}));
    expr.terms.push_back(term(1.0, {{"R1", "sigma3"}, {"R2", "sigma3"}}));
  } else {
    // H = Σ₃Ξ₃ + Σ₃Π₃
    expr.terms.push_back(term(1.0, {{"S1", "sigma3"}, {"R1", "sigma3"}}));
    expr.terms.push_back(term(1.0, {{"S1", "sigma3"}, {"R2", "sigma3"}}));
  }
  m.h = assemble_expression(expr, m.layout, "H");
  m.q_set = pauli_q_set(m.layout, "S1");
  m.settings = CheckSettings{};

  auto paulis = qubit_operators();
  m.candidates.push_back(
      make_candidate(embed_factor_operator(paulis["sigma1"], "R2", m.layout, "Pi1")));

  if (many_new) {
    m.candidates.push_back(
        make_candidate(embed_factor_operator(paulis["sigma2"], "R2", m.layout, "Pi2")));
    m.candidates.push_back(make_family_candidate(
        embed_factor_operator(paulis["sigma1"], "R2", m.layout, "Pi1"), 0.9,
        "rot_Pi1(0.9)"));

    ExpectedVerdict pi1{CheckKind::Independent, "Pi1"};
    pi1.expect_commutes_with_h = false;
    m.expectations.push_back(pi1);
    m.expectations.push_back({CheckKind::Independent, "Pi2"});
    m.expectations.push_back({CheckKind::Independent, "rot_Pi1(0.9)"});
    m.expectations.push_back({CheckKind::Theorem1, "Pi1"});
    m.expectations.push_back({CheckKind::Closure, "*"});
    m.expectations.push_back({CheckKind::Closure, "Pi1"});
  } else {
    ExpectedVerdict pi1{CheckKind::Independent, "Pi1"};
    pi1.expect_pass = false;
    m.expectations.push_back(pi1);
    ExpectedVerdict comm;
    comm.kind = CheckKind::Commutant;
    comm.expect_forces_commuting = true;
    m.expectations.push_back(comm);
  }
  return m;
}

PaperModel angular_chain(bool with_m, const CatalogParams& p) {
  const double j = p.spin.value_or(0.5);
  PaperModel m;
  m.name = with_m ? "angular_chain_JKLM" : "angular_chain_JKL";
  std::vector<Factor> factors = {{"J", FactorKind::Spin, j, 0, SubsystemTag::S},
                                 {"K", FactorKind::Spin, j, 0, SubsystemTag::R},
                                 {"L", FactorKind::Spin, j, 0, SubsystemTag::R}};
  if (with_m) factors.push_back({"M", FactorKind::Spin, j, 0, SubsystemTag::R});
  m.layout = make_layout(std::move(factors));

  OperatorExpression expr;
  // H = J₊K₋ + J₋K₊ + K₊L₋ + K₋L₊ (+ L₊M₋ + L₋M₊)
  expr.terms.push_back(term(1.0, {{"J", "j_plus"}, {"K", "j_minus"}}));
  expr.terms.push_back(term(1.0, {{"J", "j_minus"}, {"K", "j_plus"}}));
  expr.terms.push_back(term(1.0, {{"K", "j_plus"}, {"L", "j_minus"}}));
  expr.terms.push_back(term(1.0, {{"K", "j_minus"}, {"L", "j_plus"}}));
  if (with_m) {
    expr.terms.push_back(term(1.0, {{"L", "j_plus"}, {"M", "j_minus"}}));
    expr.terms.push_back(term(1.0, {{"L", "j_minus"}, {"M", "j_plus"}}));
  }
  m.h = assemble_expression(expr, m.layout, "H");

  auto spins = spin_operators(j);
  m.q_set = {embed_factor_operator(spins["j1"], "J", m.layout, "J1"),
             embed_factor_operator(spins["j2"], "J", m.layout, "J2"),
             embed_factor_operator(spins["j3"], "J", m.layout, "J3")};
  m.settings = CheckSettings{};

  OperatorExpression total3;
  total3.terms.push_back(term(1.0, {{"J", "j3"}}));
  total3.terms.push_back(term(1.0, {{"K", "j3"}}));
  total3.terms.push_back(term(1.0, {{"L", "j3"}}));
  if (with_m) total3.terms.push_back(term(1.0, {{"M", "j3"}}));
  m.candidates.push_back(make_family_candidate(
      assemble_expression(total3, m.layout, "total_J3"), 0.8, "rot_total(0.8)"));
  m.candidates.push_back(make_family_candidate(
      embed_factor_operator(spins["j3"], "J", m.layout, "J3"), 0.8, "rot_J(0.8)"));

  ExpectedVerdict tot{CheckKind::Independent, "rot_total(0.8)"};
  tot.expect_commutes_with_h = true;
  m.expectations.push_back(tot);
  ExpectedVerdict jrow{CheckKind::Independent, "rot_J(0.8)"};
  jrow.expect_pass = false;
  m.expectations.push_back(jrow);
  if (!with_m) {
    // The JKLM commutant forces commuting as well but costs a 256-dim
    // algebra closure; the JKL row already exercises that machinery.
    ExpectedVerdict comm;
    comm.kind = CheckKind::Commutant;
    comm.expect_forces_commuting = true;
    comm.expect_commutant_dim = 1;
    m.expectations.push_back(comm);
  }
  return m;
}

PaperModel osc_with_bound(const CatalogParams& p) {
  const int n = p.cutoff.value_or(12);
  PaperModel m;
  m.name = "osc_with_bound";
  m.layout = make_layout({{"A", FactorKind::Boson, 0, n, SubsystemTag::S},
                          {"B", FactorKind::Boson, 0, n, SubsystemTag::R}});
  OperatorExpression expr;
  // H = (A+B)†(A+B) = A†A + B†B + AB† + A†B
  expr.terms.push_back(term(1.0, {{"A", "n"}}));
  expr.terms.push_back(term(1.0, {{"B", "n"}}));
  expr.terms.push_back(term(1.0, {{"A", "a"}, {"B", "a_dag"}}));
  expr.terms.push_back(term(1.0, {{"A", "a_dag"}, {"B", "a"}}));
  m.h = assemble_expression(expr, m.layout, "H");

  auto bos = boson_operators(n);
  m.q_set = ladder_q_set(embed_factor_operator(bos["a"], "A", m.layout).matrix(), m.layout);
  m.settings.tolerance = tol::check_bosonic;
  m.settings.guard = p.guard.value_or(2);

  OperatorExpression total_n;
  total_n.terms.push_back(term(1.0, {{"A", "n"}}));
  total_n.terms.push_back(term(1.0, {{"B", "n"}}));
  m.candidates.push_back(make_family_candidate(
      assemble_expression(total_n, m.layout, "N_total"), 0.7, "rot_N(0.7)"));
  m.candidates.push_back(make_family_candidate(
      embed_factor_operator(bos["n"], "A", m.layout, "N_A"), 0.9, "rot_NA(0.9)"));

  ExpectedVerdict tot{CheckKind::Independent, "rot_N(0.7)"};
  tot.expect_commutes_with_h = true;
  m.expectations.push_back(tot);
  ExpectedVerdict cls{CheckKind::Classify, "rot_N(0.7)"};
  cls.expect_r_scalar = true;
  cls.expect_shift_r = 0.0;
  m.expectations.push_back(cls);
  ExpectedVerdict na{CheckKind::Independent, "rot_NA(0.9)"};
  na.expect_pass = false;
  m.expectations.push_back(na);
  return m;
}

PaperModel osc_without_bound(const CatalogParams& p) {
  const int n = p.cutoff.value_or(10);
  PaperModel m;
  m.name = "osc_without_bound";
  // Built natively in the transformed J,K Fock basis (H diagonal, V an exact
  // permutation); A = (J+K)/√2 recovers the S oscillator. The S/R factor
  // tags are nominal here, so S-locality enforcement is off.
  m.layout = make_layout({{"J", FactorKind::Boson, 0, n, SubsystemTag::S},
                          {"K", FactorKind::Boson, 0, n, SubsystemTag::R}});
  OperatorExpression expr;  // H = J†J - K†K
  expr.terms.push_back(term(1.0, {{"J", "n"}}));
  expr.terms.push_back(term(-1.0, {{"K", "n"}}));
  m.h = assemble_expression(expr, m.layout, "H");

  auto bos = boson_operators(n);
  const Matrix a_op = (embed_factor_operator(bos["a"], "J", m.layout).matrix() +
                       embed_factor_operator(bos["a"], "K", m.layout).matrix()) /
                      std::sqrt(2.0);
  m.q_set = ladder_q_set(a_op, m.layout);
  m.settings.tolerance = tol::check_bosonic;
  m.settings.guard = p.guard.value_or(3);  // V^3 paths need three free shells
  m.settings.enforce_s_locality = false;

  const Matrix vd = zigzag_shift_adjoint(n);
  const Matrix v = vd.adjoint();
  m.candidates.push_back(make_candidate(LabeledOperator(v, m.layout, "V")));
  m.candidates.push_back(make_candidate(LabeledOperator(Matrix(v * v), m.layout, "V^2")));
  m.candidates.push_back(
      make_candidate(LabeledOperator(Matrix(v * v * v), m.layout, "V^3")));
  m.shift_r = 1.0;

  ExpectedVerdict vrow{CheckKind::Independent, "V"};
  vrow.expect_commutes_with_h = false;
  m.expectations.push_back(vrow);
  for (int r = 1; r <= 3; ++r) {
    ExpectedVerdict cls{CheckKind::Classify,
                        r == 1 ? "V" : "V^" + std::to_string(r)};
    cls.expect_r_scalar = true;
    cls.expect_shift_r = static_cast<double>(r);
    m.expectations.push_back(cls);
  }
  m.expectations.push_back({CheckKind::Shift, "V"});
  return m;
}

PaperModel two_osc_times_m(const CatalogParams& p) {
  const int n = p.cutoff.value_or(10);
  const std::vector<double> mvals = p.m_eigenvalues.value_or(std::vector<double>{1, 2, 3});
  const SlopeFunction slope = p.slope.value_or(SlopeFunction::Identity);
  if (mvals.size() < 2) throw ModelError("two_osc_times_M needs at least 2 M eigenvalues");

  PaperModel m;
  m.name = "two_osc_times_M";
  const double m_spin = (static_cast<double>(mvals.size()) - 1.0) / 2.0;
  m.layout = make_layout({{"J", FactorKind::Boson, 0, n, SubsystemTag::S},
                          {"K", FactorKind::Boson, 0, n, SubsystemTag::S},
                          {"M", FactorKind::Spin, m_spin, 0, SubsystemTag::R}});
  const int dm = static_cast<int>(mvals.size());
  const int dim = n * n * dm;

  // H = f(J†J - K†K) M, diagonal in the J,K Fock ⊗ M eigenbasis.
  auto f = [slope](double x) { return slope == SlopeFunction::Square ? x * x : x; };
  Matrix h = Matrix::Zero(dim, dim);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int q = 0; q < dm; ++q) {
        const int idx = (j * n + k) * dm + q;
        h(idx, idx) = f(static_cast<double>(j - k)) * mvals[q];
      }
  m.h = LabeledOperator(std::move(h), m.layout, "H");

  auto bos = boson_operators(n);
  const Matrix ja = embed_factor_operator(bos["a"], "J", m.layout).matrix();
  const Matrix ka = embed_factor_operator(bos["a"], "K", m.layout).matrix();
  const Matrix a_op = (ja + ka) / std::sqrt(2.0);
  const Matrix b_op = (ja - ka) / std::sqrt(2.0);
  m.q_set = ladder_q_set(a_op, m.layout);
  m.q_set.push_back(LabeledOperator(b_op, m.layout, "B"));
  m.q_set.push_back(LabeledOperator(b_op.adjoint(), m.layout, "B_dag"));
  m.q_set.push_back(
      LabeledOperator(Matrix(a_op * b_op.adjoint() + a_op.adjoint() * b_op), m.layout,
                      "AB_dag+A_dagB"));
  m.settings.tolerance = tol::check_bosonic;
  m.settings.guard = p.guard.value_or(2);

  const Matrix v_jk = zigzag_shift_adjoint(n).adjoint();
  const Matrix v = kron(v_jk, Matrix::Identity(dm, dm));
  m.candidates.push_back(make_candidate(LabeledOperator(v, m.layout, "V")));

  Matrix m_diag = Matrix::Zero(dm, dm);
  for (int q = 0; q < dm; ++q) m_diag(q, q) = mvals[q];
  m.shift_g = embed_factor_operator(m_diag, "M", m.layout, "M");

  ExpectedVerdict vrow{CheckKind::Independent, "V"};
  vrow.expect_pass = slope == SlopeFunction::Identity;
  if (slope == SlopeFunction::Identity) vrow.expect_commutes_with_h = false;
  m.expectations.push_back(vrow);
  if (slope == SlopeFunction::Identity) {
    ExpectedVerdict cls{CheckKind::Classify, "V"};
    cls.expect_r_scalar = false;
    cls.expect_r_commutes_h = true;
    cls.expect_shift_matches_g = true;
    m.expectations.push_back(cls);
    m.expectations.push_back({CheckKind::Shift, "V"});
  }
  return m;
}

PaperModel three_osc(const CatalogParams& p) {
  const int n = p.cutoff.value_or(8);
  PaperModel m;
  m.name = "three_osc";
  // Transformed J,K,L Fock basis; A = √(1/3) J + √(2/3) L. Tags nominal.
  m.layout = make_layout({{"J", FactorKind::Boson, 0, n, SubsystemTag::S},
                          {"K", FactorKind::Boson, 0, n, SubsystemTag::R},
                          {"L", FactorKind::Boson, 0, n, SubsystemTag::R}});
  OperatorExpression expr;  // H = 3 J†J + 3/2
  expr.terms.push_back(term(3.0, {{"J", "n"}}));
  expr.terms.push_back(term(1.5, {{"J", "id"}}));
  m.h = assemble_expression(expr, m.layout, "H");

  auto bos = boson_operators(n);
  const Matrix a_op = std::sqrt(1.0 / 3.0) *
                          embed_factor_operator(bos["a"], "J", m.layout).matrix() +
                      std::sqrt(2.0 / 3.0) *
                          embed_factor_operator(bos["a"], "L", m.layout).matrix();
  m.q_set = ladder_q_set(a_op, m.layout);
  m.settings.tolerance = tol::check_bosonic;
  m.settings.guard = p.guard.value_or(2);
  m.settings.enforce_s_locality = false;

  const Matrix u = three_osc_shift_adjoint(n).adjoint();
  m.candidates.push_back(make_candidate(LabeledOperator(u, m.layout, "U")));

  // G = 3 on k = 0, zero elsewhere.
  Matrix e00 = Matrix::Zero(n, n);
  e00(0, 0) = 1.0;
  m.shift_g = embed_factor_operator(Matrix(3.0 * e00), "K", m.layout, "G");

  ExpectedVerdict urow{CheckKind::Independent, "U"};
  urow.expect_commutes_with_h = false;
  m.expectations.push_back(urow);
  ExpectedVerdict cls{CheckKind::Classify, "U"};
  cls.expect_r_scalar = false;
  cls.expect_r_commutes_h = true;
  cls.expect_shift_matches_g = true;
  m.expectations.push_back(cls);
  m.expectations.push_back({CheckKind::Shift, "U"});
  ExpectedVerdict adj{CheckKind::Closure, "U"};
  adj.expect_pass = false;  // U† is not a symmetry here
  m.expectations.push_back(adj);
  return m;
}

PaperModel dependent_qubits(const CatalogParams& p) {
  const Eigen::Vector3d gamma = p.gamma.value_or(Eigen::Vector3d(0.7, 1.3, 2.1));
  PaperModel m;
  m.name = "dependent_qubits";
  m.layout = make_layout({{"S1", FactorKind::Qubit, 0, 0, SubsystemTag::S},
                          {"R1", FactorKind::Qubit, 0, 0, SubsystemTag::R}});
  OperatorExpression expr;  // H = ½ Σ_j γ_j Σ_j Ξ_j
  const char* s_names[3] = {"sigma1", "sigma2", "sigma3"};
  for (int j = 0; j < 3; ++j)
    if (gamma(j) != 0.0)
      expr.terms.push_back(term(0.5 * gamma(j), {{"S1", s_names[j]}, {"R1", s_names[j]}}));
  if (expr.terms.empty()) throw ModelError("dependent_qubits needs a nonzero gamma");
  m.h = assemble_expression(expr, m.layout, "H");
  m.q_set = pauli_q_set(m.layout, "S1");
  m.settings = CheckSettings{};

  auto paulis = qubit_operators();
  m.candidates.push_back(
      make_candidate(embed_factor_operator(paulis["sigma3"], "S1", m.layout, "Sigma3")));
  m.candidates.push_back(
      make_candidate(embed_factor_operator(paulis["sigma3"], "R1", m.layout, "Xi3")));
  const LabeledOperator half_sigma3 = embed_factor_operator(
      Matrix(0.5 * paulis["sigma3"]), "S1", m.layout, "Sigma3/2");
  for (double u : {0.3, 1.1, 2.9})
    m.candidates.push_back(
        make_family_candidate(half_sigma3, u, "rot_z(" + fmt(u) + ")"));

  auto add_state = [&](StateSpec s) { m.states.push_back(std::move(s)); };
  {
    StateSpec s;
    s.label = "mixed";
    s.bloch_r = Eigen::Vector3d(0, 0, 0);
    add_state(s);
  }
  {
    StateSpec s;
    s.label = "polarized_z";
    s.bloch_r = Eigen::Vector3d(0, 0, 0.8);
    add_state(s);
  }
  {
    StateSpec s;
    s.label = "polarized_z04";
    s.bloch_r = Eigen::Vector3d(0, 0, 0.4);
    add_state(s);
  }
  {
    StateSpec s;
    s.label = "polarized_x";
    s.bloch_r = Eigen::Vector3d(1, 0, 0);
    add_state(s);
  }
  {
    StateSpec s;  // allowed correlations: Γ₁₁, Γ₂₂, Γ₃₃, Γ₁₃, Γ₂₃ free
    s.label = "corr_ok";
    s.bloch_r = Eigen::Vector3d(0, 0, 0.4);
    Eigen::Matrix3d g = Eigen::Matrix3d::Zero();
    g(0, 0) = 0.15;
    g(1, 2) = 0.1;
    g(2, 2) = -0.1;
    s.gamma = g;
    add_state(s);
  }
  {
    StateSpec s;  // Γ₁₂ ≠ 0 obstructs U = Σ₃
    s.label = "corr_bad";
    s.bloch_r = Eigen::Vector3d(0, 0, 0);
    Eigen::Matrix3d g = Eigen::Matrix3d::Zero();
    g(0, 1) = 0.15;
    s.gamma = g;
    add_state(s);
  }

  const bool rotation_family = std::abs(gamma(0) - gamma(1)) < 1e-12 && gamma(0) != 0.0;
  const bool commuting = gamma(0) == 0.0 && gamma(1) == 0.0;

  if (commuting) {
    // γ₁ = γ₂ = 0: Σ₃ commutes with H; it is a constant of the motion and a
    // symmetry for every reservoir state.
    m.expectations.push_back({CheckKind::Constant, "Sigma3"});
    m.expectations.push_back({CheckKind::Dependent, "Sigma3", "polarized_x"});
  } else if (rotation_family) {
    for (double u : {0.3, 1.1, 2.9})
      m.expectations.push_back(
          {CheckKind::Dependent, "rot_z(" + fmt(u) + ")", "polarized_z04"});
    m.expectations.push_back({CheckKind::Dependent, "Sigma3", "polarized_z04"});
  } else {
    m.expectations.push_back({CheckKind::Dependent, "Sigma3", "mixed"});
    m.expectations.push_back({CheckKind::Dependent, "Sigma3", "polarized_z"});
    ExpectedVerdict fail_x{CheckKind::Dependent, "Sigma3", "polarized_x"};
    fail_x.expect_pass = false;
    m.expectations.push_back(fail_x);
    m.expectations.push_back({CheckKind::Dependent, "Xi3", "polarized_z"});
    ExpectedVerdict xi_x{CheckKind::Dependent, "Xi3", "polarized_x"};
    xi_x.expect_pass = false;
    m.expectations.push_back(xi_x);
    ExpectedVerdict dc{CheckKind::DependentConstant, "Sigma3", "polarized_z"};
    dc.expect_pass = false;
    m.expectations.push_back(dc);
    m.expectations.push_back({CheckKind::MapCovariance, "Sigma3", "mixed"});
    ExpectedVerdict cov_x{CheckKind::MapCovariance, "Sigma3", "polarized_x"};
    cov_x.expect_pass = false;
    m.expectations.push_back(cov_x);
    m.expectations.push_back({CheckKind::Correlated, "Sigma3", "corr_ok"});
    ExpectedVerdict corr_bad{CheckKind::Correlated, "Sigma3", "corr_bad"};
    corr_bad.expect_pass = false;
    m.expectations.push_back(corr_bad);
  }
  return m;
}

}  // namespace

PaperModel paper_catalog(const std::string& name, const CatalogParams& params) {
  if (name == "two_qubit_general") return two_qubit_general(params);
  if (name == "three_qubit_no_new") return three_qubit(false);
  if (name == "three_qubit_many_new") return three_qubit(true);
  if (name == "angular_chain_JKL") return angular_chain(false, params);
  if (name == "angular_chain_JKLM") return angular_chain(true, params);
  if (name == "osc_with_bound") return osc_with_bound(params);
  if (name == "osc_without_bound") return osc_without_bound(params);
  if (name == "two_osc_times_M") return two_osc_times_m(params);
  if (name == "three_osc") return three_osc(params);
  if (name == "dependent_qubits") return dependent_qubits(params);
  throw ModelError("unknown catalog name '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"two_qubit_general", "three_qubit_no_new", "three_qubit_many_new",
          "angular_chain_JKL", "angular_chain_JKLM", "osc_with_bound",
          "osc_without_bound", "two_osc_times_M",    "three_osc",
          "dependent_qubits"};
}

std::vector<RegressionEntry> paper_regression_entries() {
  std::vector<RegressionEntry> out;
  out.push_back({"two_qubit_general", "two_qubit_general", {}});
  {
    CatalogParams p;
    p.gamma = Eigen::Vector3d(0, 0, 2.1);
    out.push_back({"two_qubit_general[gamma3-only]", "two_qubit_general", p});
  }
  out.push_back({"three_qubit_no_new", "three_qubit_no_new", {}});
  out.push_back({"three_qubit_many_new", "three_qubit_many_new", {}});
  out.push_back({"angular_chain_JKL", "angular_chain_JKL", {}});
  out.push_back({"angular_chain_JKLM", "angular_chain_JKLM", {}});
  out.push_back({"osc_with_bound", "osc_with_bound", {}});
  out.push_back({"osc_without_bound", "osc_without_bound", {}});
  out.push_back({"two_osc_times_M[f=x]", "two_osc_times_M", {}});
  {
    CatalogParams p;
    p.slope = SlopeFunction::Square;
    out.push_back({"two_osc_times_M[f=x^2]", "two_osc_times_M", p});
  }
  out.push_back({"three_osc", "three_osc", {}});
  out.push_back({"dependent_qubits", "dependent_qubits", {}});
  {
    CatalogParams p;
    p.gamma = Eigen::Vector3d(1, 1, 2);
    out.push_back({"dependent_qubits[rotation]", "dependent_qubits", p});
  }
  {
    CatalogParams p;
    p.gamma = Eigen::Vector3d(0, 0, 2.1);
    out.push_back({"dependent_qubits[uncoupled-z]", "dependent_qubits", p});
  }
  return out;
}

}  // namespace oqsym
