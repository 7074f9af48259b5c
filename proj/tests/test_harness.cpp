#include <doctest.h>

#include <sstream>

#include "qgs/error.hpp"
#include "qgs/harness.hpp"

using namespace qgs;

namespace {

std::string render(const Report& r, ReportFormat f = ReportFormat::JsonLines) {
  std::ostringstream os;
  write_report(os, r, f, false);
  return os.str();
}

}  // namespace

TEST_CASE("id resolution") {
  CHECK(resolve_ids({"B1"}).size() == 2);
  CHECK(resolve_ids({"A"}).size() == 16);
  CHECK(resolve_ids({"all"}).size() == catalog_entries().size());
  CHECK(resolve_ids({"A1", "A1"}).size() == 1);
  CHECK_THROWS_AS(resolve_ids({"Z9"}), Error);
}

TEST_CASE("empty id list gives an empty report") {
  GridConfig cfg;
  const Report r = run_grid(cfg);
  CHECK(r.records.empty());
  CHECK(r.summary.records() == 0);
  CHECK(exit_code(r) == 0);
}

TEST_CASE("Group A grid passes") {
  GridConfig cfg;
  cfg.ids = {"A"};
  cfg.k = {1, 12, 1};
  const Report r = run_grid(cfg);
  CHECK(r.summary.fail == 0);
  CHECK(r.summary.records() == 16 * 12);
  CHECK(r.summary.exact_pass > 0);
  CHECK(exit_code(r) == 0);
}

TEST_CASE("F5 at even k: every record an expected negative") {
  GridConfig cfg;
  cfg.ids = {"F5"};
  cfg.k = {2, 20, 2};
  const Report r = run_grid(cfg);
  CHECK(r.summary.fail == 10);
  CHECK(r.summary.expected_negative == 10);
  CHECK(r.summary.unexpected == 0);
  CHECK(exit_code(r) == 0);
}

TEST_CASE("reports are byte-identical across worker counts") {
  GridConfig cfg;
  cfg.ids = {"B", "F2", "F9"};
  cfg.k = {1, 9, 1};
  cfg.p = {1, 2, 1};
  cfg.j = {1, 3, 1};
  cfg.m = {-1, 1, 1};
  cfg.workers = 1;
  const std::string one = render(run_grid(cfg));
  cfg.workers = 3;
  const std::string three = render(run_grid(cfg));
  CHECK(one == three);
  CHECK(render(run_grid(cfg)) == three);
  CHECK(render(run_grid(cfg), ReportFormat::Csv) == render(run_grid(cfg), ReportFormat::Csv));
}

TEST_CASE("summary counts equal record counts") {
  GridConfig cfg;
  cfg.ids = {"C", "F8"};
  cfg.k = {1, 10, 1};
  const Report r = run_grid(cfg);
  CHECK(r.summary.records() == static_cast<std::int64_t>(r.records.size()));
  std::istringstream lines(render(r));
  std::string line;
  std::int64_t n = 0;
  while (std::getline(lines, line)) ++n;
  CHECK(n == r.summary.records() + 1);
}

TEST_CASE("records are sorted by catalog position and parameters") {
  GridConfig cfg;
  cfg.ids = {"D2", "A3"};
  cfg.k = {1, 3, 1};
  cfg.p = {1, 2, 1};
  const Report r = run_grid(cfg);
  REQUIRE(r.records.size() == 3 + 6);
  CHECK(r.records.front().id == "A3");
  CHECK(r.records[3].id == "D2");
  CHECK(r.records[3].params.p == 1);
  CHECK(r.records[4].params.p == 2);
}

TEST_CASE("config validation") {
  GridConfig cfg;
  cfg.ids = {"A1"};
  cfg.k = {5, 1, 1};
  CHECK_THROWS_AS(run_grid(cfg), Error);
  cfg.k = {1, 2, 1};
  cfg.tolerance = 0;
  CHECK_THROWS_AS(run_grid(cfg), Error);
  const GridConfig parsed = grid_config_from_json(
      nlohmann::json::parse(R"({"ids": ["A1"], "k": [1, 5], "p": 2, "format": "csv", "tolerance": 1e-20})"));
  CHECK(parsed.k.hi == 5);
  CHECK(parsed.p.lo == 2);
  CHECK(parsed.format == ReportFormat::Csv);
  CHECK_THROWS_AS(grid_config_from_json(nlohmann::json::parse(R"({"k": "x"})")), Error);
  CHECK_THROWS_AS(load_grid_config("/nonexistent/qgs.json"), Error);
}

TEST_CASE("CSV output") {
  GridConfig cfg;
  cfg.ids = {"A12"};
  cfg.k = {1, 2, 1};
  const std::string csv = render(run_grid(cfg), ReportFormat::Csv);
  CHECK(csv.rfind("id,params,status", 0) == 0);
  CHECK(csv.find("A12,k=1,EXACT_PASS") != std::string::npos);
}

TEST_CASE("bench skips the naive column above the cap") {
  const auto rows = bench({{1, 1000, 0}, {3, 1000000007, 1}}, 1, 128, 100000);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].naive_ms.has_value());
  CHECK(*rows[0].gap <= 1e-30);
  CHECK_FALSE(rows[1].naive_ms.has_value());
}

TEST_CASE("default integral points") {
  const auto pts = default_integral_points();
  CHECK(pts.size() == 25);
  for (const auto& p : pts) CHECK_NOTHROW(check_preconditions(p));
}
