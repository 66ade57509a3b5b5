#pragma once

#include "loccon/config.hpp"
#include "loccon/parity.hpp"
#include "loccon/report_json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace loccon {

struct BatchEntry {
  int line = 0;
  std::string label;
  std::optional<ParityReport> report;
  std::optional<std::string> error;
};

struct BatchSummary {
  long curves = 0;
  long reports = 0;
  long errors = 0;
  long match = 0;
  long mismatch = 0;
  long undetermined = 0;
  long failures = 0;
  /// Reports containing at least one Undetermined row.
  long undetermined_reports = 0;
  bool operator==(const BatchSummary&) const = default;
};

struct BatchResult {
  std::vector<BatchEntry> entries;
  BatchSummary summary;
};

/// Entries come back in input order for any jobs value; jobs = 0 means hardware concurrency.
BatchResult run_batch(const std::vector<CurveEntry>& curves, const TowerSpec& tower, std::optional<long> dim_selmer_K,
                      unsigned jobs = 1);

Json to_json(const BatchResult& b);
std::string render_text(const BatchResult& b);

}  // namespace loccon
