#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qgs/catalog.hpp"
#include "qgs/direct_sum.hpp"
#include "qgs/error.hpp"
#include "qgs/gauss.hpp"
#include "qgs/harness.hpp"
#include "qgs/integrals.hpp"
#include "qgs/verify.hpp"

using namespace qgs;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

IntRange parse_range(const std::string& text) {
  IntRange r;
  std::vector<std::int64_t> parts;
  std::stringstream ss(text);
  std::string item;
  try {
    while (std::getline(ss, item, ':')) parts.push_back(std::stoll(item));
  } catch (const std::exception&) {
    throw Error(ErrorKind::Config, "bad range '" + text + "' (expected lo:hi[:step] or a single integer)");
  }
  if (parts.size() == 1) {
    r.lo = r.hi = parts[0];
  } else if (parts.size() == 2 || parts.size() == 3) {
    r.lo = parts[0];
    r.hi = parts[1];
    if (parts.size() == 3) r.step = parts[2];
  } else {
    throw Error(ErrorKind::Config, "bad range '" + text + "'");
  }
  return r;
}

ReportFormat parse_format(const std::string& f) {
  if (f == "json") return ReportFormat::JsonLines;
  if (f == "csv") return ReportFormat::Csv;
  throw Error(ErrorKind::Config, "format must be json or csv");
}

nlohmann::json read_json_arg(const std::string& arg) {
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw Error(ErrorKind::Io, "cannot open '" + arg.substr(1) + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

void print_value(const std::string& label, const HighPrecComplex& v, double ms) {
  std::cout << label << "\n  value: " << format_complex(v, 40) << "\n  error radius: " << v.err << "\n  wall time: " << ms
            << " ms\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratic Gauss sum verification toolkit"};
  app.require_subcommand(1);

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate a sum (SumSpec JSON, catalog id, or S(j,k,m))");
  std::string eval_spec, eval_id;
  Params eval_params;
  std::int64_t ej = 1, ek = 1, em = 0;
  bool eval_fast = false, eval_naive = false;
  int eval_prec = 128;
  eval->add_option("--spec", eval_spec, "SumSpec as JSON text or @file");
  eval->add_option("--id", eval_id, "Catalog id: evaluates both sides");
  eval->add_option("--j", ej, "j of S(j,k,m)");
  eval->add_option("--k", ek, "k");
  eval->add_option("--m", em, "m of S(j,k,m)");
  eval->add_option("--p", eval_params.p, "p (catalog entries)");
  auto* f_fast = eval->add_flag("--fast", eval_fast, "Reciprocity evaluator");
  eval->add_flag("--naive", eval_naive, "Direct summation")->excludes(f_fast);
  eval->add_option("--prec", eval_prec, "Precision in bits")->check(CLI::Range(64, 1 << 20));

  // verify
  auto* ver = app.add_subcommand("verify", "Verify one catalog entry at one parameter point");
  std::string ver_id;
  Params ver_params;
  int ver_prec = 128;
  double ver_tol = 1e-30;
  bool ver_negative = false;
  ver->add_option("--id", ver_id, "Catalog id")->required();
  ver->add_option("--k", ver_params.k, "k");
  ver->add_option("--p", ver_params.p, "p");
  ver->add_option("--j", ver_params.j, "j");
  ver->add_option("--m", ver_params.m, "m");
  ver->add_option("--prec", ver_prec, "Precision in bits")->check(CLI::Range(64, 1 << 20));
  ver->add_option("--tol", ver_tol, "Tolerance");
  ver->add_flag("--evaluate-negatives", ver_negative, "Evaluate points outside the validity predicate");

  // grid
  auto* grid = app.add_subcommand("grid", "Verify a grid of catalog points");
  std::string grid_config, grid_k, grid_p, grid_j, grid_m, grid_format, grid_output;
  std::vector<std::string> grid_ids;
  int grid_prec = 0, grid_workers = -1;
  double grid_tol = 0;
  bool grid_timing = false, grid_no_neg = false;
  grid->add_option("--config", grid_config, "JSON config file");
  grid->add_option("--ids", grid_ids, "Ids, base ids, group letters or 'all'");
  grid->add_option("--k", grid_k, "k range lo:hi[:step]");
  grid->add_option("--p", grid_p, "p range");
  grid->add_option("--j", grid_j, "j range");
  grid->add_option("--m", grid_m, "m range");
  grid->add_option("--prec", grid_prec, "Precision in bits");
  grid->add_option("--tol", grid_tol, "Tolerance");
  grid->add_option("--workers", grid_workers, "Worker threads (default: QGS_WORKERS or all cores)");
  grid->add_option("--format", grid_format, "json|csv");
  grid->add_option("--output", grid_output, "Output path (default stdout)");
  grid->add_flag("--timing", grid_timing, "Include wall times (reports are no longer byte-identical)");
  grid->add_flag("--no-negatives", grid_no_neg, "Report points outside validity as OUT_OF_DOMAIN");

  // bench
  auto* bch = app.add_subcommand("bench", "Time gauss_fast against direct summation");
  std::vector<std::int64_t> bench_k{10, 1000, 1000000};
  std::int64_t bench_j = 1, bench_cap = kBenchNaiveCap;
  int bench_reps = 3, bench_prec = 128;
  std::string bench_format = "csv";
  bch->add_option("--k", bench_k, "k values (comma separated)")->delimiter(',');
  bch->add_option("--j", bench_j, "j");
  bch->add_option("--reps", bench_reps, "Repetitions (median reported)");
  bch->add_option("--naive-cap", bench_cap, "Skip the naive column above this k");
  bch->add_option("--prec", bench_prec, "Precision in bits");
  bch->add_option("--format", bench_format, "json|csv");

  // integrals
  auto* integ = app.add_subcommand("integrals", "Check an integral against its finite sum");
  std::string int_id;
  double int_a = 1, int_s = 0, int_b = 0, int_tol = 1e-10;
  std::int64_t int_k = 1;
  bool int_all = false;
  integ->add_option("--id", int_id, "X6A|A1R1|XY6B|C10b|C7A2");
  integ->add_option("--a", int_a, "a > 0");
  integ->add_option("--k", int_k, "k >= 1");
  integ->add_option("--s", int_s, "s (X6A)");
  integ->add_option("--b", int_b, "b (C7A2)");
  integ->add_option("--tol", int_tol, "Tolerance (>= 1e-12)");
  integ->add_flag("--all", int_all, "Run the built-in five points per integral");

  // catalog
  auto* cat = app.add_subcommand("catalog", "Print the catalog as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    if (*eval) {
      const auto t0 = std::chrono::steady_clock::now();
      if (!eval_spec.empty()) {
        const SumSpec s = sum_spec_from_json(read_json_arg(eval_spec));
        const HighPrecComplex v = direct_sum(s, eval_prec);
        print_value(describe(s), v, ms_since(t0));
      } else if (!eval_id.empty()) {
        const IdentityEntry* e = find_entry(eval_id);
        if (!e) throw Error(ErrorKind::Config, "unknown identity '" + eval_id + "'");
        Params x = eval_params;
        x.k = ek;
        x.j = ej;
        x.m = em;
        if (!e->in_domain(x)) throw Error(ErrorKind::OutOfDomain, eval_id + ": parameters outside the domain");
        const HighPrecComplex l = evaluate_lhs(e->lhs(x), eval_prec);
        print_value(e->id + " lhs: " + e->lhs_text, l, ms_since(t0));
        const auto t1 = std::chrono::steady_clock::now();
        const HighPrecComplex r = evaluate_rhs(e->rhs(x), eval_prec);
        print_value(e->id + " rhs: " + e->rhs_text, r, ms_since(t1));
      } else {
        const QuadExpSum q{ej, ek, em};
        if (eval_naive) {
          const HighPrecComplex v = quad_exp_naive(q, eval_prec);
          print_value("S(j,k,m) naive", v, ms_since(t0));
        } else {
          FastTrace trace;
          const HighPrecComplex v = gauss_fast(q, eval_prec, &trace);
          print_value("S(j,k,m) fast, depth " + std::to_string(trace.depth), v, ms_since(t0));
        }
      }
      return 0;
    }
    if (*ver) {
      VerifyOptions opt;
      opt.precision = ver_prec;
      opt.tolerance = ver_tol;
      opt.evaluate_negatives = ver_negative;
      const VerificationRecord r = verify(ver_id, ver_params, opt);
      std::cout << to_json(r, true).dump(2) << '\n';
      return r.unexpected() ? kExitFail : 0;
    }
    if (*grid) {
      GridConfig cfg = grid_config.empty() ? GridConfig{} : load_grid_config(grid_config);
      if (grid_config.empty()) cfg.ids.clear();
      if (!grid_ids.empty()) cfg.ids = grid_ids;
      if (!grid_k.empty()) cfg.k = parse_range(grid_k);
      if (!grid_p.empty()) cfg.p = parse_range(grid_p);
      if (!grid_j.empty()) cfg.j = parse_range(grid_j);
      if (!grid_m.empty()) cfg.m = parse_range(grid_m);
      if (grid_prec > 0) cfg.precision = grid_prec;
      if (grid_tol > 0) cfg.tolerance = grid_tol;
      if (grid_workers >= 0) cfg.workers = grid_workers;
      if (!grid_format.empty()) cfg.format = parse_format(grid_format);
      if (!grid_output.empty()) cfg.output = grid_output;
      if (grid_timing) cfg.include_timing = true;
      if (grid_no_neg) cfg.evaluate_negatives = false;
      const Report report = run_grid(cfg);
      if (cfg.output.empty()) {
        write_report(std::cout, report, cfg.format, cfg.include_timing);
      } else {
        std::ofstream out(cfg.output);
        if (!out) throw Error(ErrorKind::Io, "cannot write '" + cfg.output + "'");
        write_report(out, report, cfg.format, cfg.include_timing);
        std::cerr << to_json(report.summary, cfg.include_timing).dump() << '\n';
      }
      return exit_code(report);
    }
    if (*bch) {
      std::vector<BenchCase> cases;
      for (auto k : bench_k) cases.push_back({bench_j, k, (bench_j * k) % 2});
      write_bench(std::cout, bench(cases, bench_reps, bench_prec, bench_cap), parse_format(bench_format));
      return 0;
    }
    if (*integ) {
      std::vector<IntegralSpec> specs;
      if (int_all) {
        specs = default_integral_points();
      } else {
        if (int_id.empty()) throw Error(ErrorKind::Config, "--id or --all is required");
        specs.push_back({integral_id_from_string(int_id), int_a, int_k, int_s, int_b});
      }
      bool all_pass = true;
      for (const auto& s : specs) {
        const VerificationRecord r = check_integral(s, int_tol);
        std::cout << r.id << ' ' << r.params_json.dump() << "\n  LHS: " << format_complex(*r.lhs_value, 20)
                  << "\n  RHS: " << format_complex(*r.rhs_value, 20) << "\n  gap: " << r.gap << " (bound " << r.bound
                  << ")\n  " << to_string(r.status) << '\n';
        all_pass = all_pass && r.status == Status::Pass;
      }
      return all_pass ? 0 : kExitFail;
    }
    if (*cat) {
      std::cout << catalog_json().dump(2) << '\n';
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    const bool config = e.kind() == ErrorKind::Config || e.kind() == ErrorKind::Parse ||
                        e.kind() == ErrorKind::PreconditionViolation || e.kind() == ErrorKind::OutOfDomain;
    return config ? kExitConfig : kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return 0;
}
