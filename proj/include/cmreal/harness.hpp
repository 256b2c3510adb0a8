#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cmreal/io.hpp"

namespace cmreal {

struct HarnessConfig {
  std::uint64_t seed = 7;
  int threads = 0;  ///< 0: CMREAL_THREADS, else hardware concurrency
  bool timing = false;
};

/// One tested instance. `failed` marks a falsification event, a mismatch
/// or an unexpected exception.
struct InstanceRecord {
  int id = 0;
  int n = 0;
  bool hypothesis = false;
  bool conclusion = false;
  bool failed = false;
  double residual = 0.0;
  std::string note;
  double wall_ms = 0.0;
};

struct SuiteReport {
  int criterion = 0;
  std::string name;
  std::vector<InstanceRecord> records;
  double seconds = 0.0;
  double time_limit = 0.0;  ///< seconds; 0 means unbounded
  std::string detail;

  int failures() const;
  bool within_time() const { return time_limit <= 0.0 || seconds <= time_limit; }
  bool passed() const { return !records.empty() && failures() == 0 && within_time(); }
};

constexpr int kHarnessCriteria = 13;

int resolve_threads(int requested);

/// Criteria 1..13; each instance draws from instance_rng(seed, criterion, id).
SuiteReport run_criterion(int criterion, const HarnessConfig& cfg);
std::vector<SuiteReport> run_all(const HarnessConfig& cfg);

/// Criterion 14: rerun every suite and compare the rendered CSV with `first_csv`.
SuiteReport determinism_check(const std::string& first_csv, const HarnessConfig& cfg);

/// Rows in criterion then instance order; wall time only with cfg.timing.
std::string render_csv(const std::vector<SuiteReport>& reports, bool timing);
Json render_summary(const std::vector<SuiteReport>& reports, const HarnessConfig& cfg);

}  // namespace cmreal
