#include "loccon/cli.hpp"

#include "loccon/batch.hpp"
#include "loccon/config.hpp"
#include "loccon/gamma.hpp"
#include "loccon/parity.hpp"
#include "loccon/report_json.hpp"

#include <CLI11.hpp>

#include <ostream>

namespace loccon {

namespace {

struct Flags {
  std::string format = "json";
  bool strict = false;
  bool quiet = false;
};

bool report_config_errors(const std::vector<ConfigError>& errors, std::ostream& err) {
  for (const auto& e : errors) err << e.to_string() << "\n";
  return !errors.empty();
}

Json violations_json(const std::vector<Violation>& vs, const ConfigResult* cfg) {
  Json a = Json::array();
  for (const auto& v : vs) {
    Json j{{"rule", to_string(v.rule)}, {"message", v.message}, {"citation", v.citation}};
    if (cfg) j["line"] = violation_line(*cfg, v);
    a.push_back(j);
  }
  return a;
}

void print_violations(const std::vector<Violation>& vs, const ConfigResult* cfg, const std::string& source,
                      std::ostream& err) {
  for (const auto& v : vs) {
    err << source;
    if (cfg && violation_line(*cfg, v) > 0) err << ":" << violation_line(*cfg, v);
    err << ": " << to_string(v.rule) << ": " << v.message << "\n  (" << v.citation << ")\n";
  }
}

int outcome(bool failure, bool undetermined, const Flags& f) {
  if (failure) return kExitFailure;
  if (f.strict && undetermined) return kExitUndetermined;
  return kExitOk;
}

int cmd_analyze(const std::string& path, const Flags& f, std::ostream& out, std::ostream& err) {
  const ConfigResult cfg = load_config(path);
  if (report_config_errors(cfg.errors, err)) return kExitInvalid;
  const auto& c = *cfg.config;
  const auto vs = validate_tower(c.tower, c.curve);
  if (!vs.empty()) {
    print_violations(vs, &cfg, path, err);
    return kExitInvalid;
  }
  const ParityReport r = analyze(c.curve, c.tower, c.dim_selmer_K, c.label);
  if (!f.quiet) {
    if (f.format == "text") out << render_text(r);
    else out << to_json(r).dump(2) << "\n";
  }
  if (r.has_failure()) err << path << ": FAILURE: an audited row is a Mismatch\n";
  return outcome(r.has_failure(), r.has_undetermined(), f);
}

int cmd_validate(const std::string& path, const Flags& f, std::ostream& out, std::ostream& err) {
  const ConfigResult cfg = load_config(path);
  if (report_config_errors(cfg.errors, err)) return kExitInvalid;
  const auto& c = *cfg.config;
  const auto vs = validate_tower(c.tower, c.curve);
  if (!f.quiet) {
    if (f.format == "text") {
      if (vs.empty()) out << path << ": valid\n";
    } else {
      out << Json{{"valid", vs.empty()}, {"violations", violations_json(vs, &cfg)}}.dump(2) << "\n";
    }
  }
  print_violations(vs, &cfg, path, err);
  return vs.empty() ? kExitOk : kExitInvalid;
}

int cmd_batch(const std::string& curves_path, const std::string& tower_path, unsigned jobs, const Flags& f,
              std::ostream& out, std::ostream& err) {
  const CurveFile curves = load_curve_csv(curves_path);
  const ConfigResult cfg = load_config(tower_path, ConfigMode::TowerOnly);
  const bool bad_curves = report_config_errors(curves.errors, err);
  if (report_config_errors(cfg.errors, err) || bad_curves) return kExitInvalid;
  const auto& c = *cfg.config;
  const auto vs = validate_tower(c.tower);
  if (!vs.empty()) {
    print_violations(vs, &cfg, tower_path, err);
    return kExitInvalid;
  }
  const BatchResult b = run_batch(curves.entries, c.tower, c.dim_selmer_K, jobs);
  if (!f.quiet) {
    if (f.format == "text") out << render_text(b);
    else out << to_json(b).dump(2) << "\n";
  }
  for (const auto& e : b.entries)
    if (e.error) err << *e.error << "\n";
  return outcome(b.summary.failures > 0, b.summary.undetermined > 0, f);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local root-number and Selmer-parity comparison for dihedral towers"};
  app.require_subcommand(1);
  Flags f;
  app.add_option("--format", f.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--strict", f.strict, "Exit 4 when any row is Undetermined");
  app.add_flag("--quiet", f.quiet, "Suppress the report on stdout");

  std::string config_path, curves_path, tower_path;
  unsigned jobs = 1;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyse one curve and tower");
  analyze_cmd->add_option("config", config_path, "JSON config")->required();
  auto* validate_cmd = app.add_subcommand("validate", "Check a config against the standing hypotheses");
  validate_cmd->add_option("config", config_path, "JSON config")->required();
  auto* batch_cmd = app.add_subcommand("batch", "Analyse every curve of a CSV file against one tower");
  batch_cmd->add_option("curves", curves_path, "CSV with header label,a1,a2,a3,a4,a6")->required();
  batch_cmd->add_option("tower", tower_path, "JSON tower config")->required();
  batch_cmd->add_option("-j,--jobs", jobs, "Worker threads (0 = all cores)");
  // flags are accepted before or after the subcommand
  for (auto* sub : {analyze_cmd, validate_cmd, batch_cmd}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << ex.what() << "\n";
    return kExitInvalid;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(config_path, f, out, err);
    if (*validate_cmd) return cmd_validate(config_path, f, out, err);
    return cmd_batch(curves_path, tower_path, jobs, f, out, err);
  } catch (const InvalidTowerError& ex) {
    err << ex.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& ex) {
    err << "internal error: " << ex.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace loccon
