#include "qgs/harness.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "qgs/error.hpp"
#include "qgs/gauss.hpp"

namespace qgs {

std::vector<std::int64_t> IntRange::values() const {
  std::vector<std::int64_t> out;
  if (step <= 0) return out;
  for (std::int64_t v = lo; v <= hi; v += step) out.push_back(v);
  return out;
}

void GridConfig::validate() const {
  auto check = [](const IntRange& r, const char* name) {
    if (r.step <= 0 || r.hi < r.lo) throw Error(ErrorKind::Config, std::string("empty range for ") + name);
  };
  check(k, "k");
  check(p, "p");
  check(j, "j");
  check(m, "m");
  if (!(tolerance > 0)) throw Error(ErrorKind::Config, "tolerance must be positive");
  if (precision < 64) throw Error(ErrorKind::Config, "precision must be at least 64 bits");
  if (workers < 0) throw Error(ErrorKind::Config, "worker count must be non-negative");
  resolve_ids(ids);
}

namespace {

IntRange range_from_json(const nlohmann::json& j) {
  IntRange r;
  if (j.is_array() && (j.size() == 2 || j.size() == 3)) {
    r.lo = j[0].get<std::int64_t>();
    r.hi = j[1].get<std::int64_t>();
    if (j.size() == 3) r.step = j[2].get<std::int64_t>();
  } else if (j.is_number_integer()) {
    r.lo = r.hi = j.get<std::int64_t>();
  } else {
    throw Error(ErrorKind::Config, "range must be an integer or [lo, hi(, step)]");
  }
  return r;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string params_text(const nlohmann::json& p) {
  std::string out;
  for (auto it = p.begin(); it != p.end(); ++it) {
    if (!out.empty()) out += ' ';
    out += it.key() + "=" + it.value().dump();
  }
  return out;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

GridConfig grid_config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Config, "config must be a JSON object");
  GridConfig c;
  try {
    if (j.contains("ids")) {
      if (j["ids"].is_string())
        c.ids = {j["ids"].get<std::string>()};
      else
        c.ids = j["ids"].get<std::vector<std::string>>();
    }
    if (j.contains("k")) c.k = range_from_json(j["k"]);
    if (j.contains("p")) c.p = range_from_json(j["p"]);
    if (j.contains("j")) c.j = range_from_json(j["j"]);
    if (j.contains("m")) c.m = range_from_json(j["m"]);
    if (j.contains("precision")) c.precision = j["precision"].get<int>();
    if (j.contains("tolerance")) c.tolerance = j["tolerance"].get<double>();
    if (j.contains("workers")) c.workers = j["workers"].get<int>();
    if (j.contains("evaluate_negatives")) c.evaluate_negatives = j["evaluate_negatives"].get<bool>();
    if (j.contains("timing")) c.include_timing = j["timing"].get<bool>();
    if (j.contains("format")) {
      const auto f = j["format"].get<std::string>();
      if (f == "json")
        c.format = ReportFormat::JsonLines;
      else if (f == "csv")
        c.format = ReportFormat::Csv;
      else
        throw Error(ErrorKind::Config, "format must be json or csv");
    }
    if (j.contains("output")) c.output = j["output"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Config, e.what());
  }
  return c;
}

GridConfig load_grid_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open config '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Config, std::string("bad config JSON: ") + e.what());
  }
  return grid_config_from_json(j);
}

std::vector<const IdentityEntry*> resolve_ids(const std::vector<std::string>& ids) {
  const auto& all = catalog_entries();
  std::vector<bool> take(all.size(), false);
  for (const auto& id : ids) {
    bool matched = false;
    for (std::size_t i = 0; i < all.size(); ++i) {
      const auto& e = all[i];
      if (id == "all" || e.id == id || e.base_id == id || (id.size() == 1 && id[0] == e.group)) {
        take[i] = true;
        matched = true;
      }
    }
    if (!matched) throw Error(ErrorKind::Config, "unknown identity '" + id + "'");
  }
  std::vector<const IdentityEntry*> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (take[i]) out.push_back(&all[i]);
  return out;
}

int default_workers() {
  if (const char* env = std::getenv("QGS_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return 0;
}

Summary summarize(const std::vector<VerificationRecord>& records) {
  Summary s;
  for (const auto& r : records) {
    switch (r.status) {
      case Status::Pass: ++s.pass; break;
      case Status::ExactPass: ++s.exact_pass; break;
      case Status::Fail: ++s.fail; break;
      case Status::OutOfDomain: ++s.out_of_domain; break;
    }
    if (r.expected_negative && r.status == Status::Fail) ++s.expected_negative;
    if (r.unexpected()) ++s.unexpected;
    if (!r.expected_negative && r.lhs_value) s.max_gap = std::max(s.max_gap, r.gap);
    s.total_ms += std::chrono::duration<double, std::milli>(r.elapsed).count();
  }
  return s;
}

Report run_grid(const GridConfig& cfg) {
  cfg.validate();
  struct Point {
    const IdentityEntry* entry;
    std::size_t order;
    Params params;
  };
  std::vector<Point> points;
  const auto entries = resolve_ids(cfg.ids);
  const std::vector<std::int64_t> one{0};
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const IdentityEntry* entry = entries[e];
    const auto ks = entry->uses(Param::K) ? cfg.k.values() : one;
    const auto ps = entry->uses(Param::P) ? cfg.p.values() : one;
    const auto js = entry->uses(Param::J) ? cfg.j.values() : one;
    const auto ms = entry->uses(Param::M) ? cfg.m.values() : one;
    for (auto k : ks)
      for (auto p : ps)
        for (auto j : js)
          for (auto m : ms) {
            Params x;
            if (entry->uses(Param::K)) x.k = k;
            if (entry->uses(Param::P)) x.p = p;
            if (entry->uses(Param::J)) x.j = j;
            if (entry->uses(Param::M)) x.m = m;
            points.push_back({entry, e, x});
          }
  }

  VerifyOptions opt;
  opt.precision = cfg.precision;
  opt.tolerance = cfg.tolerance;
  opt.evaluate_negatives = cfg.evaluate_negatives;

  Report report;
  report.records.resize(points.size());
  const int workers = cfg.workers > 0 ? cfg.workers : default_workers();
  const int threads = workers > 0 ? workers : omp_get_max_threads();
  const auto n = static_cast<std::int64_t>(points.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t i = 0; i < n; ++i) {
    const Point& pt = points[static_cast<std::size_t>(i)];
    try {
      report.records[static_cast<std::size_t>(i)] = verify(*pt.entry, pt.params, opt);
    } catch (const std::exception& ex) {
      VerificationRecord r;
      r.id = pt.entry->id;
      r.params = pt.params;
      r.params_json = params_json(*pt.entry, pt.params);
      r.status = Status::Fail;
      r.note = ex.what();
      report.records[static_cast<std::size_t>(i)] = std::move(r);
    }
  }

  // Sort key: catalog position of the id, then (k, p, j, m).
  std::vector<std::size_t> idx(points.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = points[a];
    const auto& y = points[b];
    return std::tie(x.order, x.params.k, x.params.p, x.params.j, x.params.m) <
           std::tie(y.order, y.params.k, y.params.p, y.params.j, y.params.m);
  });
  std::vector<VerificationRecord> sorted;
  sorted.reserve(idx.size());
  for (auto i : idx) sorted.push_back(std::move(report.records[i]));
  report.records = std::move(sorted);
  report.summary = summarize(report.records);
  return report;
}

nlohmann::json to_json(const Summary& s, bool include_timing) {
  nlohmann::json j{{"records", s.records()},       {"PASS", s.pass},
                   {"EXACT_PASS", s.exact_pass},   {"FAIL", s.fail},
                   {"OUT_OF_DOMAIN", s.out_of_domain}, {"expected_negative", s.expected_negative},
                   {"unexpected", s.unexpected},   {"max_gap", s.max_gap}};
  if (include_timing) j["total_ms"] = s.total_ms;
  return j;
}

void write_report(std::ostream& os, const Report& report, ReportFormat format, bool include_timing) {
  if (format == ReportFormat::JsonLines) {
    for (const auto& r : report.records) os << to_json(r, include_timing).dump() << '\n';
    os << nlohmann::json{{"summary", to_json(report.summary, include_timing)}}.dump() << '\n';
    return;
  }
  os << "id,params,status,expected_negative,gap,bound,lhs_re,lhs_im,rhs_re,rhs_im";
  if (include_timing) os << ",elapsed_ms";
  os << '\n';
  for (const auto& r : report.records) {
    os << csv_escape(r.id) << ',' << csv_escape(params_text(r.params_json)) << ',' << to_string(r.status) << ','
       << (r.expected_negative ? "true" : "false") << ',';
    if (r.lhs_value) {
      std::ostringstream g;
      g.precision(6);
      g << r.gap << ',' << r.bound;
      os << g.str() << ',' << r.lhs_value->re.to_string(36) << ',' << r.lhs_value->im.to_string(36) << ','
         << r.rhs_value->re.to_string(36) << ',' << r.rhs_value->im.to_string(36);
    } else {
      os << ",,,,,";
    }
    if (include_timing) os << ',' << std::chrono::duration<double, std::milli>(r.elapsed).count();
    os << '\n';
  }
}

int exit_code(const Report& report) { return report.summary.unexpected > 0 ? 1 : 0; }

std::vector<BenchRow> bench(const std::vector<BenchCase>& cases, int reps, Precision prec, std::int64_t naive_cap) {
  if (reps < 1) reps = 1;
  auto median = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
  };
  std::vector<BenchRow> rows;
  for (const auto& c : cases) {
    BenchRow row;
    row.c = c;
    const QuadExpSum q{c.j, c.k, c.m};
    std::vector<double> fast;
    std::optional<HighPrecComplex> fast_value;
    for (int r = 0; r < reps; ++r) {
      FastTrace trace;
      const auto t0 = std::chrono::steady_clock::now();
      HighPrecComplex v = gauss_fast(q, prec, &trace);
      fast.push_back(ms_since(t0));
      row.depth = trace.depth;
      fast_value = std::move(v);
    }
    row.fast_ms = median(fast);
    if (c.k <= naive_cap) {
      std::vector<double> naive;
      std::optional<HighPrecComplex> naive_value;
      for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        HighPrecComplex v = quad_exp_naive(q, prec);
        naive.push_back(ms_since(t0));
        naive_value = std::move(v);
      }
      row.naive_ms = median(naive);
      row.speedup = *row.naive_ms / std::max(row.fast_ms, 1e-6);
      row.gap = hp_distance_upper(*fast_value, *naive_value);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_bench(std::ostream& os, const std::vector<BenchRow>& rows, ReportFormat format) {
  if (format == ReportFormat::JsonLines) {
    for (const auto& r : rows) {
      nlohmann::json j{{"j", r.c.j}, {"k", r.c.k}, {"m", r.c.m}, {"fast_ms", r.fast_ms}, {"depth", r.depth}};
      j["naive_ms"] = r.naive_ms ? nlohmann::json(*r.naive_ms) : nlohmann::json("skipped");
      if (r.speedup) j["speedup"] = *r.speedup;
      if (r.gap) j["gap"] = *r.gap;
      os << j.dump() << '\n';
    }
    return;
  }
  os << "j,k,m,fast_ms,naive_ms,speedup,gap,depth\n";
  for (const auto& r : rows) {
    os << r.c.j << ',' << r.c.k << ',' << r.c.m << ',' << r.fast_ms << ',';
    if (r.naive_ms)
      os << *r.naive_ms << ',' << *r.speedup << ',' << *r.gap;
    else
      os << "skipped,,";
    os << ',' << r.depth << '\n';
  }
}

std::vector<IntegralSpec> default_integral_points() {
  constexpr long double pi = std::numbers::pi_v<long double>;
  using I = IntegralId;
  return {
      {I::X6A, 1.0L, 2, 0.0L, 0}, {I::X6A, 2.0L, 2, 1.0L, 0}, {I::X6A, 3.0L, 3, 0.5L, 0},
      {I::X6A, 2.0L, 2, 2.0L, 0}, {I::X6A, 3 * pi / 8, 2, 0.0L, 0},
      {I::A1R1, 1.0L, 1, 0, 0},   {I::A1R1, 1.0L, 2, 0, 0},   {I::A1R1, 0.5L, 4, 0, 0},
      {I::A1R1, 0.5L, 1, 0, 0},   {I::A1R1, 2.0L, 3, 0, 0},
      {I::XY6B, 1.0L, 1, 0, 0},   {I::XY6B, 2.0L, 2, 0, 0},   {I::XY6B, 9.0L, 2, 0, 0},
      {I::XY6B, 0.5L, 3, 0, 0},   {I::XY6B, 3.0L, 1, 0, 0},
      {I::C10b, 1.0L, 1, 0, 0},   {I::C10b, 3.0L, 2, 0, 0},   {I::C10b, 12.0L, 2, 0, 0},
      {I::C10b, 0.5L, 1, 0, 0},   {I::C10b, 5.0L, 3, 0, 0},
      {I::C7A2, 1.0L, 1, 0, 0.0L}, {I::C7A2, 2.0L, 2, 0, 0.3L}, {I::C7A2, 3.0L, 2, 0, 1.0L},
      {I::C7A2, 1.0L, 1, 0, 0.5L}, {I::C7A2, 4.0L, 3, 0, 0.2L},
  };
}

}  // namespace qgs
