#include "oqsym/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "oqsym/errors.hpp"

namespace oqsym {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ConfigError("config error at " + path + ": " + message);
}

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

Complex as_complex(const json& j, const std::string& path) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Complex(j[0].get<double>(), j[1].get<double>());
  fail(path, "expected a number or [re, im] pair");
}

Eigen::Vector3d as_vector3(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) fail(path, "expected a 3-vector");
  Eigen::Vector3d v;
  for (int i = 0; i < 3; ++i) v(i) = as_number(j[i], path + "[" + std::to_string(i) + "]");
  return v;
}

Eigen::Matrix3d as_matrix3(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) fail(path, "expected a 3x3 real matrix");
  Eigen::Matrix3d m;
  for (int r = 0; r < 3; ++r) {
    const auto& row = j[r];
    const std::string rp = path + "[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != 3) fail(rp, "expected a row of 3 numbers");
    for (int c = 0; c < 3; ++c) m(r, c) = as_number(row[c], rp);
  }
  return m;
}

Matrix as_complex_matrix(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a matrix (array of rows)");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) fail(path, "expected nonempty rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = j[r];
    const std::string rp = path + "[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != cols) fail(rp, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = as_complex(row[c], rp + "[" + std::to_string(c) + "]");
  }
  return m;
}

std::vector<double> as_number_list(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a nonempty list of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(as_number(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

Factor parse_factor(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected a factor object");
  Factor f;
  if (!j.contains("label") || !j["label"].is_string()) fail(path, "factor needs a label");
  f.label = j["label"].get<std::string>();
  const std::string kind = j.value("kind", std::string("qubit"));
  if (kind == "qubit") {
    f.kind = FactorKind::Qubit;
  } else if (kind == "spin") {
    f.kind = FactorKind::Spin;
    if (!j.contains("j")) fail(path, "spin factor needs j");
    f.spin = as_number(j["j"], path + ".j");
  } else if (kind == "boson") {
    f.kind = FactorKind::Boson;
    if (!j.contains("levels")) fail(path, "boson factor needs levels");
    f.levels = static_cast<int>(as_number(j["levels"], path + ".levels"));
  } else {
    fail(path + ".kind", "unknown kind '" + kind + "'");
  }
  const std::string tag = j.value("tag", std::string("S"));
  if (tag == "S")
    f.tag = SubsystemTag::S;
  else if (tag == "R")
    f.tag = SubsystemTag::R;
  else
    fail(path + ".tag", "tag must be S or R");
  return f;
}

OperatorExpression parse_expression(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("terms")) fail(path, "expected {\"terms\": [...]}");
  const auto& jterms = j["terms"];
  if (!jterms.is_array() || jterms.empty()) fail(path + ".terms", "expected a nonempty list");
  OperatorExpression expr;
  for (std::size_t i = 0; i < jterms.size(); ++i) {
    const auto& jt = jterms[i];
    const std::string tp = path + ".terms[" + std::to_string(i) + "]";
    if (!jt.is_object()) fail(tp, "expected a term object");
    ExpressionTerm t;
    t.coefficient = jt.contains("coefficient")
                        ? as_complex(jt["coefficient"], tp + ".coefficient")
                        : Complex(1.0, 0.0);
    if (jt.contains("factors")) {
      const auto& jf = jt["factors"];
      if (!jf.is_object()) fail(tp + ".factors", "expected {label: op, ...}");
      for (auto it = jf.begin(); it != jf.end(); ++it) {
        if (it.value().is_string())
          t.named_ops.emplace_back(it.key(), it.value().get<std::string>());
        else
          t.literal_ops.emplace_back(
              it.key(), as_complex_matrix(it.value(), tp + ".factors." + it.key()));
      }
    }
    expr.terms.push_back(std::move(t));
  }
  return expr;
}

CheckKind parse_kind(const std::string& kind, const std::string& path) {
  if (kind == "independent") return CheckKind::Independent;
  if (kind == "dependent") return CheckKind::Dependent;
  if (kind == "correlated") return CheckKind::Correlated;
  if (kind == "constant") return CheckKind::Constant;
  if (kind == "dependent_constant") return CheckKind::DependentConstant;
  if (kind == "classify") return CheckKind::Classify;
  if (kind == "theorem1") return CheckKind::Theorem1;
  if (kind == "shift") return CheckKind::Shift;
  if (kind == "closure") return CheckKind::Closure;
  if (kind == "map_covariance") return CheckKind::MapCovariance;
  if (kind == "commutant") return CheckKind::Commutant;
  fail(path, "unknown check kind '" + kind + "'");
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config syntax error: ") + e.what());
  }
  if (!root.is_object()) throw ConfigError("config error at $: expected an object");

  RunConfig cfg;
  cfg.seed = root.value("seed", 42ULL);

  if (root.contains("model")) {
    const auto& jm = root["model"];
    if (!jm.is_object() || !jm.contains("catalog"))
      fail("$.model", "expected {\"catalog\": name, ...}");
    cfg.catalog = jm["catalog"].get<std::string>();
    if (jm.contains("parameters")) {
      const auto& jp = jm["parameters"];
      const std::string pp = "$.model.parameters";
      if (!jp.is_object()) fail(pp, "expected an object");
      if (jp.contains("alpha")) cfg.params.alpha = as_vector3(jp["alpha"], pp + ".alpha");
      if (jp.contains("beta")) cfg.params.beta = as_vector3(jp["beta"], pp + ".beta");
      if (jp.contains("gamma")) cfg.params.gamma = as_vector3(jp["gamma"], pp + ".gamma");
      if (jp.contains("cutoff"))
        cfg.params.cutoff = static_cast<int>(as_number(jp["cutoff"], pp + ".cutoff"));
      if (jp.contains("guard"))
        cfg.params.guard = static_cast<int>(as_number(jp["guard"], pp + ".guard"));
      if (jp.contains("spin")) cfg.params.spin = as_number(jp["spin"], pp + ".spin");
      if (jp.contains("m_eigenvalues"))
        cfg.params.m_eigenvalues = as_number_list(jp["m_eigenvalues"], pp + ".m_eigenvalues");
      if (jp.contains("f")) {
        const std::string f = jp["f"].get<std::string>();
        if (f == "identity")
          cfg.params.slope = SlopeFunction::Identity;
        else if (f == "square")
          cfg.params.slope = SlopeFunction::Square;
        else
          fail(pp + ".f", "expected \"identity\" or \"square\"");
      }
    }
  }

  if (root.contains("system")) {
    const auto& js = root["system"];
    if (!js.is_object() || !js.contains("factors"))
      fail("$.system", "expected {\"factors\": [...]}");
    std::vector<Factor> factors;
    const auto& jf = js["factors"];
    if (!jf.is_array() || jf.empty()) fail("$.system.factors", "expected a nonempty list");
    for (std::size_t i = 0; i < jf.size(); ++i)
      factors.push_back(parse_factor(jf[i], "$.system.factors[" + std::to_string(i) + "]"));
    cfg.factors = std::move(factors);
  }
  if (!cfg.catalog && !cfg.factors)
    throw ConfigError("config error at $: needs either model.catalog or system.factors");
  if (root.contains("hamiltonian"))
    cfg.hamiltonian = parse_expression(root["hamiltonian"], "$.hamiltonian");
  if (cfg.factors && !cfg.hamiltonian)
    throw ConfigError("config error at $.hamiltonian: explicit systems need a Hamiltonian");

  if (root.contains("candidates")) {
    const auto& jc = root["candidates"];
    if (!jc.is_array()) fail("$.candidates", "expected a list");
    for (std::size_t i = 0; i < jc.size(); ++i) {
      const auto& j = jc[i];
      const std::string cp = "$.candidates[" + std::to_string(i) + "]";
      if (!j.is_object() || !j.contains("name")) fail(cp, "candidate needs a name");
      CandidateSpec spec;
      spec.name = j["name"].get<std::string>();
      spec.from_catalog = j.value("catalog", false);
      if (j.contains("terms")) spec.expression = parse_expression(j, cp);
      if (j.contains("matrix")) spec.matrix = as_complex_matrix(j["matrix"], cp + ".matrix");
      if (j.contains("generator")) {
        spec.generator = parse_expression(j["generator"], cp + ".generator");
        spec.theta = j.contains("theta") ? as_number(j["theta"], cp + ".theta") : 0.0;
      }
      if (!spec.from_catalog && !spec.expression && !spec.matrix && !spec.generator)
        fail(cp, "candidate needs catalog:true, terms, matrix, or generator");
      cfg.candidates.push_back(std::move(spec));
    }
  }

  if (root.contains("states")) {
    const auto& js = root["states"];
    if (!js.is_array()) fail("$.states", "expected a list");
    for (std::size_t i = 0; i < js.size(); ++i) {
      const auto& j = js[i];
      const std::string sp = "$.states[" + std::to_string(i) + "]";
      if (!j.is_object() || !j.contains("name")) fail(sp, "state needs a name");
      StateSpec spec;
      spec.label = j["name"].get<std::string>();
      if (j.contains("rho_r")) spec.rho_r = as_complex_matrix(j["rho_r"], sp + ".rho_r");
      if (j.contains("bloch_s")) spec.bloch_s = as_vector3(j["bloch_s"], sp + ".bloch_s");
      if (j.contains("bloch_r")) spec.bloch_r = as_vector3(j["bloch_r"], sp + ".bloch_r");
      if (j.contains("correlations"))
        spec.gamma = as_matrix3(j["correlations"], sp + ".correlations");
      cfg.states.push_back(std::move(spec));
    }
  }

  if (root.contains("checks")) {
    const auto& jc = root["checks"];
    if (!jc.is_array()) fail("$.checks", "expected a list");
    for (std::size_t i = 0; i < jc.size(); ++i) {
      const auto& j = jc[i];
      const std::string cp = "$.checks[" + std::to_string(i) + "]";
      if (!j.is_object() || !j.contains("kind")) fail(cp, "check needs a kind");
      CheckRequest req;
      req.kind = parse_kind(j["kind"].get<std::string>(), cp + ".kind");
      if (j.contains("candidate")) req.candidate = j["candidate"].get<std::string>();
      if (j.contains("observable")) req.candidate = j["observable"].get<std::string>();
      if (j.contains("state")) req.state = j["state"].get<std::string>();
      if (j.contains("candidates")) {
        for (const auto& c : j["candidates"])
          req.closure_candidates.push_back(c.get<std::string>());
      }
      if (j.contains("times")) req.times = as_number_list(j["times"], cp + ".times");
      if (j.contains("s_values"))
        req.s_values = as_number_list(j["s_values"], cp + ".s_values");
      if (j.contains("tolerance"))
        req.tolerance = as_number(j["tolerance"], cp + ".tolerance");
      if (j.contains("guard"))
        req.guard = static_cast<int>(as_number(j["guard"], cp + ".guard"));
      if (j.contains("expect")) {
        const std::string e = j["expect"].get<std::string>();
        if (e == "pass")
          req.expect_pass = true;
        else if (e == "fail")
          req.expect_pass = false;
        else
          fail(cp + ".expect", "expected \"pass\" or \"fail\"");
      }
      cfg.checks.push_back(std::move(req));
    }
  }

  if (root.contains("output")) {
    const auto& jo = root["output"];
    if (jo.contains("format")) {
      cfg.format = jo["format"].get<std::string>();
      if (cfg.format != "human" && cfg.format != "machine")
        fail("$.output.format", "expected \"human\" or \"machine\"");
    }
    if (jo.contains("path") && jo["path"].is_string())
      cfg.out_path = jo["path"].get<std::string>();
  }
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace oqsym
