#pragma once

// Batch verification grids, reports and fast-vs-naive timing.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qgs/integrals.hpp"
#include "qgs/verify.hpp"

namespace qgs {

struct IntRange {
  std::int64_t lo = 1;
  std::int64_t hi = 1;
  std::int64_t step = 1;
  std::vector<std::int64_t> values() const;
};

enum class ReportFormat { JsonLines, Csv };

struct GridConfig {
  /// Entry ids, base ids ("B1"), group letters ("A") or "all".
  std::vector<std::string> ids;
  IntRange k{1, 10, 1};
  IntRange p{1, 1, 1};
  IntRange j{1, 1, 1};
  IntRange m{0, 0, 1};
  Precision precision = 128;
  double tolerance = 1e-30;
  int workers = 0;  // 0: QGS_WORKERS or the OpenMP default
  bool evaluate_negatives = true;
  bool include_timing = false;
  ReportFormat format = ReportFormat::JsonLines;
  std::string output;  // empty: caller decides (stdout)

  /// Throws Config on empty ranges, non-positive tolerance or unknown ids.
  void validate() const;
};

GridConfig grid_config_from_json(const nlohmann::json& j);
/// Reads a JSON config file; throws Io or Config.
GridConfig load_grid_config(const std::string& path);

/// Expands ids, base ids, group letters and "all" into catalog entries, in catalog order.
std::vector<const IdentityEntry*> resolve_ids(const std::vector<std::string>& ids);

/// Worker count from QGS_WORKERS, else 0 (OpenMP default).
int default_workers();

struct Summary {
  std::int64_t pass = 0;
  std::int64_t exact_pass = 0;
  std::int64_t fail = 0;
  std::int64_t out_of_domain = 0;
  std::int64_t expected_negative = 0;  // FAILs flagged as expected
  std::int64_t unexpected = 0;
  double max_gap = 0;  // over evaluated, non-negative records
  double total_ms = 0;
  std::int64_t records() const { return pass + exact_pass + fail + out_of_domain; }
};

struct Report {
  std::vector<VerificationRecord> records;
  Summary summary;
};

Summary summarize(const std::vector<VerificationRecord>& records);
Report run_grid(const GridConfig& cfg);

void write_report(std::ostream& os, const Report& report, ReportFormat format, bool include_timing);
nlohmann::json to_json(const Summary& s, bool include_timing);

/// 0 when every failure is an expected negative, 1 otherwise.
int exit_code(const Report& report);

struct BenchCase {
  std::int64_t j = 1;
  std::int64_t k = 1;
  std::int64_t m = 0;
};

struct BenchRow {
  BenchCase c;
  double fast_ms = 0;
  std::optional<double> naive_ms;  // empty when skipped
  std::optional<double> speedup;
  std::optional<double> gap;  // |fast - naive|
  int depth = 0;
};

inline constexpr std::int64_t kBenchNaiveCap = 20'000'000;

/// Median wall times of gauss_fast and quad_exp_naive over `reps` runs.
/// The naive column is skipped above naive_cap terms.
std::vector<BenchRow> bench(const std::vector<BenchCase>& cases, int reps, Precision prec = 128,
                            std::int64_t naive_cap = kBenchNaiveCap);
void write_bench(std::ostream& os, const std::vector<BenchRow>& rows, ReportFormat format);

/// Five parameter points per integral, all inside the preconditions.
std::vector<IntegralSpec> default_integral_points();

}  // namespace qgs
