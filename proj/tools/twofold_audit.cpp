// twofold-audit: accuracy audit, benchmark, table generation and demo.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <vector>

#include <CLI11.hpp>

#include "twofold/audit.hpp"
#include "twofold/backend.hpp"
#include "twofold/table_gen.hpp"

using namespace twofold;

namespace {

std::vector<Fn> select_fns(const std::string& name) {
  if (name == "all") return {all_fns().begin(), all_fns().end()};
  const auto fn = parse_fn(name);
  if (!fn) throw CLI::ValidationError("--fn", "unknown function " + name);
  return {*fn};
}

std::vector<Width> select_widths(int bits) {
  if (bits == 0) return {Width::binary64, Width::binary32};
  const auto w = parse_width(bits);
  if (!w) throw CLI::ValidationError("--width", "expected 32 or 64");
  return {*w};
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(path, std::ios::binary);
  f << text << "\n";
  if (!f) throw std::runtime_error("cannot write " + path);
}

int cmd_audit(const std::string& fn_arg, int width, std::uint64_t samples,
              std::uint64_t seed, const std::string& backend_arg,
              const std::string& etalon_arg, const std::string& out) {
  const auto backend = parse_backend(backend_arg);
  if (!backend) throw CLI::ValidationError("--backend", "expected fma or dv");
  const auto etalon = audit::parse_etalon(etalon_arg);
  if (!etalon) throw CLI::ValidationError("--etalon", "expected oracle or lib");

  bool ok = true;
  std::string json = "[";
  for (Width w : select_widths(width)) {
    for (Fn fn : select_fns(fn_arg)) {
      audit::SampleSpec spec{{fn, w}, samples, seed, *backend, *etalon};
      if (w == Width::binary64) spec.etalon = audit::Etalon::oracle;
      const auto r = audit::run_accuracy(spec);
      std::printf("%-8s binary%d  l1 2^%.1f  l0 2^%.1f  warnings %llu/%llu  "
                  "excluded %llu  %s\n",
                  std::string(fn_name(fn)).c_str(), width_bits(w),
                  std::log2(r.l1_rel), std::log2(r.l0_rel),
                  (unsigned long long)r.warnings,
                  (unsigned long long)r.thresholds.warn_budget,
                  (unsigned long long)r.subnormals_excluded,
                  r.pass ? "PASS" : "FAIL");
      std::fflush(stdout);
      ok = ok && r.pass;
      if (json.size() > 1) json += ",\n";
      json += audit::to_json(r);
    }
  }
  json += "]";
  if (!out.empty()) write_out(out, json);
  return ok ? 0 : 1;
}

int cmd_bench(const std::string& fn_arg, int width, std::uint64_t iters,
              const std::string& backend_arg, const std::string& out) {
  const auto backend = parse_backend(backend_arg);
  if (!backend) throw CLI::ValidationError("--backend", "expected fma or dv");
  std::string json = "[";
  for (Width w : select_widths(width)) {
    for (Fn fn : select_fns(fn_arg)) {
      const auto r = audit::run_bench({fn, w}, iters, *backend);
      std::printf("%-8s binary%d  %8.2f MOPS  oracle %7.3f MOPS  x%.1f%s  "
                  "[%016llx]\n",
                  std::string(fn_name(fn)).c_str(), width_bits(w), r.mops,
                  r.baseline_mops,
                  r.baseline_mops > 0 ? r.mops / r.baseline_mops : 0.0,
                  r.unreliable ? "  unreliable" : "",
                  (unsigned long long)r.checksum);
      std::fflush(stdout);
      if (json.size() > 1) json += ",\n";
      json += audit::to_json(r);
    }
  }
  json += "]";
  if (!out.empty()) write_out(out, json);
  return 0;
}

int cmd_tables(const std::string& path, int width) {
  const auto w = parse_width(width);
  if (!w) throw CLI::ValidationError("--width", "expected 32 or 64");
  const std::string text = *w == Width::binary64
                               ? dump_tables(gen_tables<double>()).to_text()
                               : dump_tables(gen_tables<float>()).to_text();
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) throw std::runtime_error("cannot write " + path);
  return 0;
}

int cmd_demo(bool verbose) {
  const auto r = audit::run_demo();
  for (const auto& c : r.checks) {
    if (verbose || !c.pass) {
      std::printf("%s  %s  %s\n", c.pass ? "ok  " : "FAIL", c.name.c_str(),
                  c.detail.c_str());
    }
  }
  std::printf("demo: %zu checks, %s\n", r.checks.size(),
              r.pass ? "PASS" : "FAIL");
  return r.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twofold exp/log audit tool"};
  app.require_subcommand(1);

  std::string fn = "all";
  int width = 0;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 42;
  std::uint64_t iters = 1000000;
  std::string backend(backend_name(kDefaultBackend));
  std::string etalon = "oracle";
  std::string out;
  std::string emit;
  bool verbose = false;

  auto* audit_cmd = app.add_subcommand("audit", "accuracy against the etalon");
  audit_cmd->add_option("--fn", fn, "function name or 'all'");
  audit_cmd->add_option("--width", width, "32 or 64 (default: both)");
  audit_cmd->add_option("--samples", samples);
  audit_cmd->add_option("--seed", seed);
  audit_cmd->add_option("--backend", backend, "fma or dv");
  audit_cmd->add_option("--etalon", etalon, "oracle or lib (binary32 only)");
  audit_cmd->add_option("--out", out, "JSON report path");

  auto* bench_cmd = app.add_subcommand("bench", "throughput in MOPS");
  bench_cmd->add_option("--fn", fn);
  bench_cmd->add_option("--width", width);
  bench_cmd->add_option("--iters", iters);
  bench_cmd->add_option("--backend", backend);
  bench_cmd->add_option("--out", out);

  auto* tables_cmd = app.add_subcommand("tables", "generate a table dump");
  tables_cmd->add_option("--emit", emit, "output path")->required();
  int table_width = 64;
  tables_cmd->add_option("--width", table_width, "32 or 64");

  auto* demo_cmd = app.add_subcommand("demo", "corner-case checks");
  demo_cmd->add_flag("-v,--verbose", verbose);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*audit_cmd) {
      return cmd_audit(fn, width, samples, seed, backend, etalon, out);
    }
    if (*bench_cmd) return cmd_bench(fn, width, iters, backend, out);
    if (*tables_cmd) return cmd_tables(emit, table_width);
    if (*demo_cmd) return cmd_demo(verbose);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "twofold-audit: %s\n", e.what());
    return 2;
  }
  return 0;
}
