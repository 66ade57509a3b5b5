#pragma once

#include "loccon/curve.hpp"
#include "loccon/tower.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace loccon {

struct AnalysisConfig {
  std::string label;
  WeierstrassCurve curve;
  TowerSpec tower;
  std::optional<long> dim_selmer_K;
};

/// path is a JSON pointer ("/ramified_sites/1/l") or a CSV column name; line is 1-based, 0 if unknown.
struct ConfigError {
  std::string source;
  std::string path;
  int line = 0;
  std::string message;
  std::string to_string() const;
};

struct ConfigResult {
  std::optional<AnalysisConfig> config;
  std::vector<ConfigError> errors;
  /// Line of each value in the source, keyed by JSON pointer.
  std::map<std::string, int> lines;
  int line_of(const std::string& pointer) const;
};

enum class ConfigMode {
  Analysis,  // curve required
  TowerOnly  // batch tower config; curve fields are ignored
};

/// base_dir resolves a relative "curves_file".
ConfigResult parse_config(const std::string& text, const std::filesystem::path& base_dir,
                          ConfigMode mode = ConfigMode::Analysis, const std::string& source = "<config>");
ConfigResult load_config(const std::filesystem::path& file, ConfigMode mode = ConfigMode::Analysis);

/// One data row of a `label,a1,a2,a3,a4,a6` file; exactly one of curve and error is set.
struct CurveEntry {
  int line = 0;
  std::string label;
  std::optional<WeierstrassCurve> curve;
  std::optional<ConfigError> error;
};

struct CurveFile {
  std::vector<CurveEntry> entries;
  /// Problems with the file as a whole (missing or wrong header).
  std::vector<ConfigError> errors;
};

CurveFile parse_curve_csv(const std::string& text, const std::string& source = "<curves>");
CurveFile load_curve_csv(const std::filesystem::path& file);

/// Line anchor for a tower violation, using the config's value lines.
int violation_line(const ConfigResult& cfg, const Violation& v);

}  // namespace loccon
