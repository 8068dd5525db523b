// oqsym: decides whether a unitary is a symmetry of the open dynamics of a
// subsystem, numerically, for the built-in example catalog or a configured
// model. Exit codes: 0 all checks pass/match, 1 a check failed or an
// expectation mismatched, 2 configuration error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "oqsym/config.hpp"
#include "oqsym/errors.hpp"
#include "oqsym/report.hpp"
#include "oqsym/runner.hpp"

namespace {

struct CommonFlags {
  std::optional<double> tol;
  std::optional<std::string> times;
  std::optional<int> guard;
  std::optional<unsigned long long> seed;
  std::optional<std::string> format;
  std::optional<std::string> out;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--tol", flags.tol, "Override the pass tolerance");
  cmd->add_option("--times", flags.times, "Comma-separated t grid override");
  cmd->add_option("--guard", flags.guard, "Truncation guard band override");
  cmd->add_option("--seed", flags.seed, "Seed for randomized sweeps");
  cmd->add_option("--format", flags.format, "Report format: human or machine")
      ->check(CLI::IsMember({"human", "machine"}));
  cmd->add_option("--out", flags.out, "Write the report to this path");
}

std::vector<double> parse_times(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw oqsym::ConfigError("--times: cannot parse '" + item + "'");
    }
  }
  if (out.empty()) throw oqsym::ConfigError("--times: empty grid");
  return out;
}

oqsym::RunConfig load_config(const std::string& path, const CommonFlags& flags) {
  oqsym::RunConfig cfg = oqsym::parse_config_file(path);
  if (flags.seed) cfg.seed = *flags.seed;
  if (flags.format) cfg.format = *flags.format;
  if (flags.out) cfg.out_path = *flags.out;
  for (auto& check : cfg.checks) {
    if (flags.tol) check.tolerance = *flags.tol;
    if (flags.guard) check.guard = *flags.guard;
    if (flags.times) check.times = parse_times(*flags.times);
  }
  return cfg;
}

void write_output(const std::string& text, const std::optional<std::string>& path) {
  if (path) {
    std::ofstream out(*path);
    if (!out) throw oqsym::ConfigError("cannot open output path '" + *path + "'");
    out << text;
  } else {
    std::cout << text;
  }
}

int emit_and_code(const oqsym::Report& report, const oqsym::RunConfig& cfg) {
  const std::string text = cfg.format == "machine" ? oqsym::emit_report_machine(report)
                                                   : oqsym::emit_report_human(report);
  write_output(text, cfg.out_path);
  return report.all_matched ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symmetry checks for open quantum dynamics"};
  app.require_subcommand(1);

  std::string config_path;
  CommonFlags flags;

  auto* check = app.add_subcommand("check", "Run the checks listed in a config");
  check->add_option("config", config_path, "JSON config file")->required();
  add_common_flags(check, flags);

  auto* classify = app.add_subcommand(
      "classify", "Classify R(t) for every candidate of the configured model");
  classify->add_option("config", config_path, "JSON config file")->required();
  add_common_flags(classify, flags);

  auto* spectrum_cmd =
      app.add_subcommand("spectrum", "Print the eigenvalues of the configured H");
  spectrum_cmd->add_option("config", config_path, "JSON config file")->required();
  add_common_flags(spectrum_cmd, flags);

  auto* paper = app.add_subcommand(
      "paper-examples", "Run the full example regression with expected verdicts");
  add_common_flags(paper, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) {
      oqsym::RunConfig cfg = load_config(config_path, flags);
      return emit_and_code(oqsym::run_checks(cfg), cfg);
    }
    if (classify->parsed()) {
      oqsym::RunConfig cfg = load_config(config_path, flags);
      // synthesize classify+shift requests for every candidate
      oqsym::ResolvedModel rm = oqsym::resolve_model(cfg);
      cfg.checks.clear();
      for (const auto& cand : rm.model.candidates) {
        oqsym::CheckRequest req;
        req.kind = oqsym::CheckKind::Classify;
        req.candidate = cand.u.label();
        if (flags.tol) req.tolerance = *flags.tol;
        if (flags.guard) req.guard = *flags.guard;
        if (flags.times) req.times = parse_times(*flags.times);
        cfg.checks.push_back(req);
      }
      return emit_and_code(oqsym::run_checks(cfg), cfg);
    }
    if (spectrum_cmd->parsed()) {
      oqsym::RunConfig cfg = load_config(config_path, flags);
      const oqsym::RealVector ev = oqsym::spectrum(cfg);
      std::ostringstream out;
      if (cfg.format == "machine") {
        out << "[";
        for (Eigen::Index i = 0; i < ev.size(); ++i)
          out << (i ? "," : "") << ev(i);
        out << "]\n";
      } else {
        for (Eigen::Index i = 0; i < ev.size(); ++i) {
          char buf[40];
          std::snprintf(buf, sizeof(buf), "%.12g\n", ev(i));
          out << buf;
        }
      }
      write_output(out.str(), cfg.out_path);
      return 0;
    }
    if (paper->parsed()) {
      oqsym::RegressionSummary summary = oqsym::run_paper_examples();
      write_output(oqsym::format_regression_table(summary), flags.out);
      return summary.all_matched ? 0 : 1;
    }
  } catch (const oqsym::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const oqsym::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
