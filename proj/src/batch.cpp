#include "loccon/batch.hpp"

#include "loccon/gamma.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace loccon {

namespace {

BatchEntry process(const CurveEntry& c, const TowerSpec& tower, std::optional<long> dim) {
  BatchEntry out;
  out.line = c.line;
  out.label = c.label;
  if (c.error) {
    out.error = c.error->to_string();
    return out;
  }
  try {
    out.report = analyze(*c.curve, tower, dim, c.label);
  } catch (const InvalidTowerError& ex) {
    std::string msg;
    for (const auto& v : ex.violations()) msg += (msg.empty() ? "" : "; ") + v.message;
    out.error = "line " + std::to_string(c.line) + ": " + msg;
  } catch (const std::exception& ex) {
    out.error = "line " + std::to_string(c.line) + ": " + ex.what();
  }
  return out;
}

}  // namespace

BatchResult run_batch(const std::vector<CurveEntry>& curves, const TowerSpec& tower, std::optional<long> dim_selmer_K,
                      unsigned jobs) {
  BatchResult out;
  out.entries.resize(curves.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, std::max<size_t>(1, curves.size()));

  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next++) < curves.size();) out.entries[i] = process(curves[i], tower, dim_selmer_K);
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  auto& s = out.summary;
  for (const auto& e : out.entries) {
    ++s.curves;
    if (!e.report) {
      ++s.errors;
      continue;
    }
    ++s.reports;
    for (const auto& row : e.report->rows) {
      if (row.status == RowStatus::Match) ++s.match;
      else if (row.status == RowStatus::Mismatch) ++s.mismatch;
      else ++s.undetermined;
      if (row.failure) ++s.failures;
    }
    if (e.report->has_undetermined()) ++s.undetermined_reports;
  }
  return out;
}

Json to_json(const BatchResult& b) {
  Json entries = Json::array();
  for (const auto& e : b.entries) {
    Json j{{"line", e.line}, {"label", e.label}};
    if (e.report) j["report"] = to_json(*e.report);
    else j["error"] = *e.error;
    entries.push_back(j);
  }
  const auto& s = b.summary;
  return Json{{"schema_version", kReportSchemaVersion},
              {"entries", entries},
              {"summary",
               {{"curves", s.curves},
                {"reports", s.reports},
                {"errors", s.errors},
                {"match", s.match},
                {"mismatch", s.mismatch},
                {"undetermined", s.undetermined},
                {"failures", s.failures},
                {"undetermined_reports", s.undetermined_reports}}}};
}

std::string render_text(const BatchResult& b) {
  std::ostringstream out;
  for (const auto& e : b.entries) {
    out << "== line " << e.line << " " << e.label << "\n";
    if (e.report) out << render_text(*e.report);
    else out << "error: " << *e.error << "\n";
    out << "\n";
  }
  const auto& s = b.summary;
  out << "summary: " << s.curves << " curves, " << s.reports << " reports, " << s.errors << " errors; rows "
      << s.match << " Match, " << s.mismatch << " Mismatch, " << s.undetermined << " Undetermined, " << s.failures
      << " FAILURE\n";
  return out.str();
}

}  // namespace loccon
