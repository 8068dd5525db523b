#include "oqsym/runner.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "oqsym/errors.hpp"
#include "oqsym/expression.hpp"
#include "oqsym/tensor_ops.hpp"

namespace oqsym {

namespace {

constexpr double kShiftResidualBound = 1e-10;  // pinned shift-relation bound
constexpr double kShiftFitBound = 1e-6;        // |fitted r - expected r|
constexpr double kShiftGMatchBound = 1e-9;     // ‖G_extracted - G_catalog‖ interior

double projected_norm(const Matrix& x, const SpaceLayout& layout, int guard) {
  if (!layout.has_boson() || guard < 1) return x.norm();
  const std::vector<int> keep = interior_indices(layout, guard);
  return x(keep, keep).norm();
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

const StateSpec& find_state(const PaperModel& model, const std::vector<StateSpec>& extra,
                            const std::string& label) {
  for (const auto& s : extra)
    if (s.label == label) return s;
  return model.state(label);
}

}  // namespace

ResolvedModel resolve_model(const RunConfig& cfg) {
  ResolvedModel out;
  if (cfg.catalog) {
    out.model = paper_catalog(*cfg.catalog, cfg.params);
    out.display = *cfg.catalog;
  } else {
    PaperModel m;
    m.name = "explicit";
    m.layout = make_layout(*cfg.factors);
    m.h = assemble_expression(*cfg.hamiltonian, m.layout, "H");
    if (!m.h.hermitian())
      throw ModelError("configured Hamiltonian failed the Hermiticity check");
    m.q_set = default_q_set(m.layout);
    if (m.layout->has_boson()) m.settings.tolerance = tol::check_bosonic;
    out.model = std::move(m);
    out.display = "explicit";
  }

  // Config-level candidates extend or select from the catalog's.
  if (!cfg.candidates.empty()) {
    std::vector<CandidateSymmetry> resolved;
    for (const auto& spec : cfg.candidates) {
      if (spec.from_catalog) {
        resolved.push_back(out.model.candidate(spec.name));
      } else if (spec.generator) {
        LabeledOperator gen =
            assemble_expression(*spec.generator, out.model.layout, spec.name + "_gen");
        resolved.push_back(make_family_candidate(gen, spec.theta, spec.name));
      } else if (spec.expression) {
        resolved.push_back(make_candidate(
            assemble_expression(*spec.expression, out.model.layout, spec.name)));
      } else if (spec.matrix) {
        resolved.push_back(
            make_candidate(LabeledOperator(*spec.matrix, out.model.layout, spec.name)));
      }
    }
    out.model.candidates = std::move(resolved);
  }
  return out;
}

namespace {

CheckSettings settings_for(const PaperModel& model, const CheckRequest& req) {
  CheckSettings st = model.settings;
  if (req.times) st.times = *req.times;
  if (req.s_values) st.s_values = *req.s_values;
  if (req.tolerance) st.tolerance = *req.tolerance;
  if (req.guard) st.guard = *req.guard;
  return st;
}

CheckOutcome execute_request(const PaperModel& model, const CheckRequest& req,
                             const std::vector<StateSpec>& extra_states) {
  const CheckSettings st = settings_for(model, req);
  CheckOutcome o;
  o.kind = req.kind;
  o.candidate = req.candidate;
  o.state = req.state;
  o.tolerance = st.tolerance;

  auto fill_verdict = [&](SymmetryVerdict v) {
    o.passes = v.passes;
    o.max_deviation = v.max_deviation;
    o.interior_projected = v.interior_projected;
    o.verdict = std::move(v);
  };

  switch (req.kind) {
    case CheckKind::Independent:
      fill_verdict(check_independent(model.h, model.candidate(req.candidate),
                                     model.q_set, st));
      break;
    case CheckKind::Dependent: {
      const StateSpec& spec = find_state(model, extra_states, req.state);
      fill_verdict(check_dependent(model.h, model.candidate(req.candidate),
                                   resolve_rho_r(spec, *model.layout), model.q_set, st));
      break;
    }
    case CheckKind::Correlated: {
      const StateSpec& spec = find_state(model, extra_states, req.state);
      fill_verdict(check_correlated(
          model.h, model.candidate(req.candidate),
          spec.bloch_r.value_or(Eigen::Vector3d::Zero()),
          spec.gamma.value_or(Eigen::Matrix3d::Zero()), model.q_set, st));
      break;
    }
    case CheckKind::Constant:
      fill_verdict(check_constant(model.observable(req.candidate), model.h, st));
      break;
    case CheckKind::DependentConstant: {
      const StateSpec& spec = find_state(model, extra_states, req.state);
      fill_verdict(check_dependent_constant(model.observable(req.candidate), model.h,
                                            resolve_rho_r(spec, *model.layout), st));
      break;
    }
    case CheckKind::Classify: {
      RClassification rc = classify_r(model.h, model.candidate(req.candidate), st);
      o.passes = rc.phase_fit_ok;
      o.max_deviation = rc.r_scalar ? rc.scalar_deviation : rc.commute_deviation;
      o.classification = std::move(rc);
      break;
    }
    case CheckKind::Theorem1: {
      Theorem1Result t =
          theorem1_deviation(model.h, model.candidate(req.candidate), model.q_set, st);
      o.passes = t.within(st.tolerance);
      o.max_deviation = std::max(t.commutator_max, t.cocycle_max);
      o.theorem1 = t;
      break;
    }
    case CheckKind::Shift: {
      const auto& cand = model.candidate(req.candidate);
      double residual = 0.0;
      if (model.shift_g)
        residual = verify_shift_relation(cand.u, model.h, model.shift_g->matrix(), st);
      else if (model.shift_r)
        residual = verify_shift_relation(cand.u, model.h, *model.shift_r, st);
      else
        throw ModelError("model '" + model.name + "' has no catalog shift operator");
      o.shift_residual = residual;
      o.max_deviation = residual;
      o.passes = residual <= st.tolerance;
      break;
    }
    case CheckKind::Closure: {
      std::vector<CandidateSymmetry> cands;
      if (req.closure_candidates.empty()) {
        cands = model.candidates;
      } else {
        for (const auto& name : req.closure_candidates)
          cands.push_back(model.candidate(name));
      }
      ClosureReport rep = closure_check(cands, model.h, model.q_set, st);
      o.passes = true;
      for (const auto& row : rep.products) {
        o.passes = o.passes && row.passes;
        o.max_deviation = std::max(o.max_deviation, row.max_deviation);
      }
      o.closure = std::move(rep);
      break;
    }
    case CheckKind::MapCovariance: {
      const StateSpec& spec = find_state(model, extra_states, req.state);
      fill_verdict(check_map_covariance(model.h, model.candidate(req.candidate),
                                        resolve_rho_r(spec, *model.layout), st));
      break;
    }
    case CheckKind::Commutant: {
      CommutantClassification c = classify_commutant(model.h, model.q_set, st.tolerance);
      o.passes = !c.algebra_truncated;
      o.max_deviation = c.max_commutator_with_h;
      o.commutant = c;
      break;
    }
  }
  o.expected_pass = req.expect_pass;
  o.matched = req.expect_pass ? (o.passes == *req.expect_pass) : o.passes;
  return o;
}

}  // namespace

Report run_checks(const RunConfig& cfg) {
  ResolvedModel rm = resolve_model(cfg);
  Report report;
  report.tool_version = tool_version();
  report.seed = cfg.seed;
  report.model_name = rm.display;
  report.total_dim = rm.model.layout->total_dim();
  for (const auto& f : rm.model.layout->factors()) {
    std::string kind = f.kind == FactorKind::Qubit
                           ? "qubit"
                           : (f.kind == FactorKind::Spin ? "spin" : "boson");
    report.factor_summary.push_back(f.label + ":" + kind +
                                    (f.tag == SubsystemTag::S ? ":S" : ":R"));
  }
  for (const auto& req : cfg.checks) {
    CheckOutcome o = execute_request(rm.model, req, cfg.states);
    report.all_matched = report.all_matched && o.matched;
    report.outcomes.push_back(std::move(o));
  }
  return report;
}

RealVector spectrum(const RunConfig& cfg) {
  ResolvedModel rm = resolve_model(cfg);
  Eigen::SelfAdjointEigenSolver<Matrix> es(rm.model.h.matrix(), Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw NumericalError("spectrum: eigendecomposition failed");
  return es.eigenvalues();
}

RegressionRow run_expectation(const PaperModel& model, const ExpectedVerdict& e,
                              const std::string& display) {
  RegressionRow row;
  row.model = display;
  row.expected_pass = e.expect_pass;

  const CheckSettings& st = model.settings;
  switch (e.kind) {
    case CheckKind::Independent: {
      row.check = "independent " + e.candidate;
      SymmetryVerdict v =
          check_independent(model.h, model.candidate(e.candidate), model.q_set, st);
      row.observed_pass = v.passes;
      row.max_deviation = v.max_deviation;
      row.interior = v.interior_projected;
      row.matched = v.passes == e.expect_pass;
      if (e.expect_commutes_with_h) {
        row.matched = row.matched && (v.commutes_with_h == *e.expect_commutes_with_h);
        row.notes += v.commutes_with_h ? "[U,H]=0 " : "[U,H]!=0 ";
      }
      row.matched = row.matched && v.form_agreement <= 1e-10;
      break;
    }
    case CheckKind::Dependent: {
      row.check = "dependent " + e.candidate + " @" + e.state;
      SymmetryVerdict v =
          check_dependent(model.h, model.candidate(e.candidate),
                          resolve_rho_r(model.state(e.state), *model.layout),
                          model.q_set, st);
      row.observed_pass = v.passes;
      row.max_deviation = v.max_deviation;
      row.matched = v.passes == e.expect_pass && v.forms_agree_on_verdict;
      break;
    }
    case CheckKind::Correlated: {
      row.check = "correlated " + e.candidate + " @" + e.state;
      const StateSpec& spec = model.state(e.state);
      SymmetryVerdict v = check_correlated(
          model.h, model.candidate(e.candidate),
          spec.bloch_r.value_or(Eigen::Vector3d::Zero()),
          spec.gamma.value_or(Eigen::Matrix3d::Zero()), model.q_set, st);
      row.observed_pass = v.passes;
      row.max_deviation = v.max_deviation;
      row.matched = v.passes == e.expect_pass;
      break;
    }
    case CheckKind::Constant: {
      row.check = "constant " + e.candidate;
      SymmetryVerdict v = check_constant(model.observable(e.candidate), model.h, st);
      row.observed_pass = v.passes;
      row.max_deviation = v.max_deviation;
      row.matched = v.passes == e.expect_pass;
      break;
    }
    case CheckKind::DependentConstant: {
      row.check = "dep_constant " + e.candidate + " @" + e.state;
      SymmetryVerdict v = check_dependent_constant(
          model.observable(e.candidate), model.h,
          resolve_rho_r(model.state(e.state), *model.layout), st);
      row.observed_pass = v.passes;
      row.max_deviation = v.max_deviation;
      row.matched = v.passes == e.expect_pass;
      break;
    }
    case CheckKind::Classify: {
      row.check = "classify " + e.candidate;
      RClassification rc = classify_r(model.h, model.candidate(e.candidate), st);
      bool ok = true;
      if (e.expect_r_scalar) {
        ok = ok && rc.r_scalar == *e.expect_r_scalar;
        row.notes += rc.r_scalar ? "R~I " : "R!~I ";
      }
      if (e.expect_r_commutes_h) ok = ok && rc.r_commutes_h == *e.expect_r_commutes_h;
      if (e.expect_shift_r) {
        ok = ok && rc.shift_r.has_value() &&
             std::abs(*rc.shift_r - *e.expect_shift_r) <= kShiftFitBound;
        if (rc.shift_r) row.notes += "r=" + fmt(*rc.shift_r) + " ";
      }
      if (e.expect_shift_matches_g) {
        const bool have = rc.shift_g.size() > 0 && model.shift_g.has_value();
        const double gap =
            have ? projected_norm(rc.shift_g - model.shift_g->matrix(), *model.layout,
                                  st.guard)
                 : 1.0;
        ok = ok && have && gap <= kShiftGMatchBound;
        row.notes += "|G-G_cat|=" + fmt(gap) + " ";
      }
      row.observed_pass = ok && rc.phase_fit_ok;
      row.max_deviation = std::max(rc.scalar_deviation, rc.commute_deviation);
      row.interior = model.layout->has_boson();
      row.matched = row.observed_pass == e.expect_pass;
      break;
    }
    case CheckKind::Theorem1: {
      row.check = "theorem1 " + e.candidate;
      Theorem1Result t =
          theorem1_deviation(model.h, model.candidate(e.candidate), model.q_set, st);
      row.observed_pass = t.within(st.tolerance);
      row.max_deviation = std::max(t.commutator_max, t.cocycle_max);
      row.matched = row.observed_pass == e.expect_pass;
      break;
    }
    case CheckKind::Shift: {
      row.check = "shift " + e.candidate;
      const auto& cand = model.candidate(e.candidate);
      double residual = 0.0;
      if (model.shift_g)
        residual = verify_shift_relation(cand.u, model.h, model.shift_g->matrix(), st);
      else if (model.shift_r)
        residual = verify_shift_relation(cand.u, model.h, *model.shift_r, st);
      row.max_deviation = residual;
      row.observed_pass = residual <= kShiftResidualBound;
      row.interior = model.layout->has_boson();
      row.matched = row.observed_pass == e.expect_pass;
      row.notes = "UHU†=H+G ";
      break;
    }
    case CheckKind::Closure: {
      if (e.candidate == "*") {
        row.check = "closure products";
        // re-verify candidates, then close over the passing ones
        std::vector<CandidateSymmetry> passing;
        for (const auto& c : model.candidates)
          if (check_independent(model.h, c, model.q_set, st).passes) passing.push_back(c);
        ClosureReport rep = closure_check(passing, model.h, model.q_set, st);
        bool all = !rep.products.empty();
        for (const auto& r : rep.products) {
          all = all && r.passes;
          row.max_deviation = std::max(row.max_deviation, r.max_deviation);
        }
        row.observed_pass = all;
        row.notes = std::to_string(rep.products.size()) + " products ";
      } else {
        row.check = "closure adjoint " + e.candidate;
        ClosureReport rep =
            closure_check({model.candidate(e.candidate)}, model.h, model.q_set, st);
        row.observed_pass = rep.adjoints.at(0).passes;
        row.max_deviation = rep.adjoints.at(0).max_deviation;
      }
      row.interior = model.layout->has_boson();
      row.matched = row.observed_pass == e.expect_pass;
      break;
    }
    case CheckKind::MapCovariance: {
      row.check = "map_covariance " + e.candidate + " @" + e.state;
      SymmetryVerdict v = check_map_covariance(
          model.h, model.candidate(e.candidate),
          resolve_rho_r(model.state(e.state), *model.layout), st);
      row.observed_pass = v.passes;
      row.max_deviation = v.max_deviation;
      row.matched = v.passes == e.expect_pass;
      break;
    }
    case CheckKind::Commutant: {
      row.check = "commutant";
      CommutantClassification c = classify_commutant(model.h, model.q_set, st.tolerance);
      bool ok = !c.algebra_truncated;
      if (e.expect_forces_commuting) ok = ok && c.forces_commuting == *e.expect_forces_commuting;
      if (e.expect_commutant_dim) ok = ok && c.commutant_dim == *e.expect_commutant_dim;
      row.observed_pass = ok;
      row.max_deviation = c.max_commutator_with_h;
      row.notes = "alg_dim=" + std::to_string(c.algebra_dim) +
                  " comm_dim=" + std::to_string(c.commutant_dim) + " ";
      row.matched = row.observed_pass == e.expect_pass;
      break;
    }
  }
  return row;
}

RegressionSummary run_paper_examples() {
  RegressionSummary summary;
  for (const auto& entry : paper_regression_entries()) {
    PaperModel model = paper_catalog(entry.catalog_name, entry.params);
    for (const auto& e : model.expectations) {
      RegressionRow row = run_expectation(model, e, entry.display);
      summary.all_matched = summary.all_matched && row.matched;
      summary.rows.push_back(std::move(row));
    }
  }
  return summary;
}

std::string format_regression_table(const RegressionSummary& summary) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof(line), "%-34s %-34s %-6s %-6s %-7s %-11s %s\n", "model",
                "check", "expect", "got", "match", "max_dev", "notes");
  out << line;
  out << std::string(112, '-') << "\n";
  for (const auto& r : summary.rows) {
    std::string notes = r.notes;
    if (r.interior) notes += "interior";
    std::snprintf(line, sizeof(line), "%-34s %-34s %-6s %-6s %-7s %-11.3e %s\n",
                  r.model.c_str(), r.check.c_str(), r.expected_pass ? "pass" : "fail",
                  r.observed_pass ? "pass" : "fail", r.matched ? "OK" : "FAIL",
                  r.max_deviation, notes.c_str());
    out << line;
  }
  out << std::string(112, '-') << "\n";
  out << (summary.all_matched ? "PASS: every catalog expectation matched\n"
                              : "FAIL: at least one expectation mismatched\n");
  return out.str();
}

}  // namespace oqsym
