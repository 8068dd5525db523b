#include "oqsym/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "oqsym/errors.hpp"

namespace oqsym {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json verdict_to_json(const SymmetryVerdict& v) {
  ordered_json j;
  j["kind"] = to_string(v.kind);
  j["candidate"] = v.candidate;
  j["state"] = v.state;
  j["passes"] = v.passes;
  j["max_deviation"] = v.max_deviation;
  j["tolerance"] = v.tolerance;
  j["interior_projected"] = v.interior_projected;
  j["commutes_with_h"] = v.commutes_with_h;
  j["u_h_commutator_norm"] = v.u_h_commutator_norm;
  j["form_agreement"] = v.form_agreement;
  j["forms_agree_on_verdict"] = v.forms_agree_on_verdict;
  ordered_json extras = ordered_json::object();
  for (const auto& [k, val] : v.extra) extras[k] = val;
  j["extra"] = extras;
  ordered_json devs = ordered_json::array();
  for (const auto& d : v.deviations) {
    ordered_json e;
    e["q"] = d.q_label;
    e["point"] = d.point;
    e["t"] = d.t;
    e["value"] = d.value;
    devs.push_back(e);
  }
  j["deviations"] = devs;
  return j;
}

SymmetryVerdict verdict_from_json(const ordered_json& j) {
  SymmetryVerdict v;
  // kind is restored by the outcome wrapper
  v.candidate = j.value("candidate", std::string());
  v.state = j.value("state", std::string());
  v.passes = j.value("passes", false);
  v.max_deviation = j.value("max_deviation", 0.0);
  v.tolerance = j.value("tolerance", 0.0);
  v.interior_projected = j.value("interior_projected", false);
  v.commutes_with_h = j.value("commutes_with_h", false);
  v.u_h_commutator_norm = j.value("u_h_commutator_norm", 0.0);
  v.form_agreement = j.value("form_agreement", 0.0);
  v.forms_agree_on_verdict = j.value("forms_agree_on_verdict", true);
  if (j.contains("extra"))
    for (auto it = j["extra"].begin(); it != j["extra"].end(); ++it)
      v.extra[it.key()] = it.value().get<double>();
  if (j.contains("deviations"))
    for (const auto& e : j["deviations"])
      v.deviations.push_back({e.value("q", std::string()), e.value("point", std::string()),
                              e.value("t", 0.0), e.value("value", 0.0)});
  return v;
}

CheckKind kind_from_string(const std::string& s) {
  for (CheckKind k : {CheckKind::Independent, CheckKind::Dependent, CheckKind::Correlated,
                      CheckKind::Constant, CheckKind::DependentConstant,
                      CheckKind::Classify, CheckKind::Theorem1, CheckKind::Shift,
                      CheckKind::Closure, CheckKind::MapCovariance, CheckKind::Commutant})
    if (to_string(k) == s) return k;
  throw ConfigError("unknown check kind '" + s + "' in report");
}

ordered_json classification_to_json(const RClassification& c) {
  ordered_json j;
  j["r_scalar"] = c.r_scalar;
  j["r_commutes_h"] = c.r_commutes_h;
  j["scalar_deviation"] = c.scalar_deviation;
  j["commute_deviation"] = c.commute_deviation;
  if (c.shift_r)
    j["shift_r"] = *c.shift_r;
  else
    j["shift_r"] = nullptr;
  j["phase_fit_residual"] = c.phase_fit_residual;
  j["phase_fit_ok"] = c.phase_fit_ok;
  if (c.shift_g_norm)
    j["shift_g_norm"] = *c.shift_g_norm;
  else
    j["shift_g_norm"] = nullptr;
  j["shift_relation_residual"] = c.shift_relation_residual;
  j["exp_reconstruction_residual"] = c.exp_reconstruction_residual;
  return j;
}

RClassification classification_from_json(const ordered_json& j) {
  RClassification c;
  c.r_scalar = j.value("r_scalar", false);
  c.r_commutes_h = j.value("r_commutes_h", false);
  c.scalar_deviation = j.value("scalar_deviation", 0.0);
  c.commute_deviation = j.value("commute_deviation", 0.0);
  if (j.contains("shift_r") && !j["shift_r"].is_null())
    c.shift_r = j["shift_r"].get<double>();
  c.phase_fit_residual = j.value("phase_fit_residual", 0.0);
  c.phase_fit_ok = j.value("phase_fit_ok", true);
  if (j.contains("shift_g_norm") && !j["shift_g_norm"].is_null())
    c.shift_g_norm = j["shift_g_norm"].get<double>();
  c.shift_relation_residual = j.value("shift_relation_residual", 0.0);
  c.exp_reconstruction_residual = j.value("exp_reconstruction_residual", 0.0);
  return c;
}

ordered_json closure_to_json(const ClosureReport& c) {
  ordered_json j;
  auto rows = [](const std::vector<ClosureRow>& rs) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rs) {
      ordered_json e;
      e["label"] = r.label;
      e["passes"] = r.passes;
      e["max_deviation"] = r.max_deviation;
      arr.push_back(e);
    }
    return arr;
  };
  j["products"] = rows(c.products);
  j["adjoints"] = rows(c.adjoints);
  return j;
}

ClosureReport closure_from_json(const ordered_json& j) {
  ClosureReport c;
  auto rows = [](const ordered_json& arr) {
    std::vector<ClosureRow> out;
    for (const auto& e : arr)
      out.push_back({e.value("label", std::string()), e.value("passes", false),
                     e.value("max_deviation", 0.0)});
    return out;
  };
  if (j.contains("products")) c.products = rows(j["products"]);
  if (j.contains("adjoints")) c.adjoints = rows(j["adjoints"]);
  return c;
}

}  // namespace

std::string tool_version() { return "0.1.0"; }

std::string emit_report_machine(const Report& report) {
  ordered_json root;
  root["oqsym"] = {{"version", report.tool_version}, {"schema", 1}};
  root["seed"] = report.seed;
  ordered_json model;
  model["name"] = report.model_name;
  model["total_dim"] = report.total_dim;
  model["factors"] = report.factor_summary;
  root["model"] = model;

  ordered_json checks = ordered_json::array();
  for (const auto& o : report.outcomes) {
    ordered_json j;
    j["kind"] = to_string(o.kind);
    j["candidate"] = o.candidate;
    j["state"] = o.state;
    j["passes"] = o.passes;
    if (o.expected_pass)
      j["expected"] = *o.expected_pass ? "pass" : "fail";
    else
      j["expected"] = nullptr;
    j["matched"] = o.matched;
    j["max_deviation"] = o.max_deviation;
    j["tolerance"] = o.tolerance;
    j["interior_projected"] = o.interior_projected;
    if (o.verdict) j["verdict"] = verdict_to_json(*o.verdict);
    if (o.classification) j["classification"] = classification_to_json(*o.classification);
    if (o.theorem1)
      j["theorem1"] = {{"commutator_max", o.theorem1->commutator_max},
                       {"cocycle_max", o.theorem1->cocycle_max}};
    if (o.closure) j["closure"] = closure_to_json(*o.closure);
    if (o.commutant) {
      ordered_json c;
      c["algebra_dim"] = o.commutant->algebra_dim;
      c["commutant_dim"] = o.commutant->commutant_dim;
      c["algebra_truncated"] = o.commutant->algebra_truncated;
      c["max_commutator_with_h"] = o.commutant->max_commutator_with_h;
      c["forces_commuting"] = o.commutant->forces_commuting;
      j["commutant"] = c;
    }
    if (o.shift_residual) j["shift_residual"] = *o.shift_residual;
    checks.push_back(j);
  }
  root["checks"] = checks;
  root["summary"] = {{"checks", report.outcomes.size()},
                     {"all_matched", report.all_matched}};
  return root.dump(2) + "\n";
}

Report parse_report(const std::string& text) {
  ordered_json root;
  try {
    root = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ConfigError(std::string("report parse error: ") + e.what());
  }
  Report r;
  r.tool_version = root["oqsym"].value("version", std::string());
  r.seed = root.value("seed", 42ULL);
  r.model_name = root["model"].value("name", std::string());
  r.total_dim = root["model"].value("total_dim", 0);
  if (root["model"].contains("factors"))
    for (const auto& f : root["model"]["factors"])
      r.factor_summary.push_back(f.get<std::string>());
  for (const auto& j : root["checks"]) {
    CheckOutcome o;
    o.kind = kind_from_string(j.value("kind", std::string("independent")));
    o.candidate = j.value("candidate", std::string());
    o.state = j.value("state", std::string());
    o.passes = j.value("passes", false);
    if (j.contains("expected") && !j["expected"].is_null())
      o.expected_pass = j["expected"].get<std::string>() == "pass";
    o.matched = j.value("matched", true);
    o.max_deviation = j.value("max_deviation", 0.0);
    o.tolerance = j.value("tolerance", 0.0);
    o.interior_projected = j.value("interior_projected", false);
    if (j.contains("verdict")) {
      o.verdict = verdict_from_json(j["verdict"]);
      o.verdict->kind = o.kind;
    }
    if (j.contains("classification"))
      o.classification = classification_from_json(j["classification"]);
    if (j.contains("theorem1")) {
      Theorem1Result t;
      t.commutator_max = j["theorem1"].value("commutator_max", 0.0);
      t.cocycle_max = j["theorem1"].value("cocycle_max", 0.0);
      o.theorem1 = t;
    }
    if (j.contains("closure")) o.closure = closure_from_json(j["closure"]);
    if (j.contains("commutant")) {
      CommutantClassification c;
      c.algebra_dim = j["commutant"].value("algebra_dim", 0ULL);
      c.commutant_dim = j["commutant"].value("commutant_dim", 0ULL);
      c.algebra_truncated = j["commutant"].value("algebra_truncated", false);
      c.max_commutator_with_h = j["commutant"].value("max_commutator_with_h", 0.0);
      c.forces_commuting = j["commutant"].value("forces_commuting", false);
      o.commutant = c;
    }
    if (j.contains("shift_residual")) o.shift_residual = j["shift_residual"].get<double>();
    r.outcomes.push_back(std::move(o));
  }
  r.all_matched = root["summary"].value("all_matched", true);
  return r;
}

std::string emit_report_human(const Report& report) {
  std::ostringstream out;
  out << "oqsym " << report.tool_version << "  model=" << report.model_name
      << "  dim=" << report.total_dim << "  seed=" << report.seed << "\n";
  char line[256];
  std::snprintf(line, sizeof(line), "%-20s %-22s %-14s %-8s %-8s %-12s %s\n", "check",
                "candidate", "state", "result", "match", "max_dev", "notes");
  out << line;
  out << std::string(100, '-') << "\n";
  for (const auto& o : report.outcomes) {
    std::string notes;
    if (o.classification) {
      const auto& c = *o.classification;
      notes += c.r_scalar ? "R~I " : "";
      notes += c.r_commutes_h ? "[R,H]=0 " : "";
      if (c.shift_r) {
        char b[40];
        std::snprintf(b, sizeof(b), "r=%.6g ", *c.shift_r);
        notes += b;
      }
    }
    if (o.verdict && o.verdict->commutes_with_h) notes += "[U,H]=0 ";
    if (o.interior_projected) notes += "interior ";
    std::snprintf(line, sizeof(line), "%-20s %-22s %-14s %-8s %-8s %-12.3e %s\n",
                  to_string(o.kind).c_str(), o.candidate.c_str(), o.state.c_str(),
                  o.passes ? "pass" : "fail", o.matched ? "ok" : "MISMATCH",
                  o.max_deviation, notes.c_str());
    out << line;
  }
  out << std::string(100, '-') << "\n";
  out << (report.all_matched ? "all checks matched expectations\n"
                             : "EXPECTATION MISMATCH\n");
  return out.str();
}

}  // namespace oqsym
