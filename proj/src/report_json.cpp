#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "twofold/audit.hpp"
#include "twofold/backend.hpp"

namespace twofold::audit {

namespace {

using nlohmann::json;

// JSON has no infinities; non-finite reals travel as strings.
json real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

double real_from(const json& j) {
  if (j.is_number()) return j.get<double>();
  const auto s = j.get<std::string>();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  throw std::invalid_argument("bad real '" + s + "'");
}

json fn_json(FnId fn) {
  return {{"name", std::string(fn_name(fn.fn))}, {"width", width_bits(fn.width)}};
}

FnId fn_from(const json& j) {
  const auto fn = parse_fn(j.at("name").get<std::string>());
  const auto w = parse_width(j.at("width").get<int>());
  if (!fn || !w) throw std::invalid_argument("bad fn in report");
  return {*fn, *w};
}

}  // namespace

std::string to_json(const AccuracyReport& r, int indent) {
  json j = {
      {"fn", fn_json(r.fn)},
      {"samples", r.samples},
      {"l1_rel", real(r.l1_rel)},
      {"l0_rel", real(r.l0_rel)},
      {"l1_rel_log2", real(std::log2(r.l1_rel))},
      {"l0_rel_log2", real(std::log2(r.l0_rel))},
      {"warnings", r.warnings},
      {"thresholds",
       {{"l1", real(r.thresholds.l1)},
        {"l0", real(r.thresholds.l0)},
        {"warn_budget", r.thresholds.warn_budget}}},
      {"subnormals_excluded", r.subnormals_excluded},
      {"seed", r.seed},
      {"backend", std::string(backend_name(r.backend))},
      {"etalon", std::string(etalon_name(r.etalon))},
      {"pass", r.pass},
  };
  return j.dump(indent);
}

AccuracyReport accuracy_from_json(const std::string& text) {
  const json j = json::parse(text);
  AccuracyReport r;
  r.fn = fn_from(j.at("fn"));
  r.samples = j.at("samples").get<std::uint64_t>();
  r.l1_rel = real_from(j.at("l1_rel"));
  r.l0_rel = real_from(j.at("l0_rel"));
  r.warnings = j.at("warnings").get<std::uint64_t>();
  const auto& t = j.at("thresholds");
  r.thresholds.l1 = real_from(t.at("l1"));
  r.thresholds.l0 = real_from(t.at("l0"));
  r.thresholds.warn_budget = t.at("warn_budget").get<std::uint64_t>();
  r.subnormals_excluded = j.at("subnormals_excluded").get<std::uint64_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  const auto b = parse_backend(j.at("backend").get<std::string>());
  const auto e = parse_etalon(j.at("etalon").get<std::string>());
  if (!b || !e) throw std::invalid_argument("bad backend or etalon in report");
  r.backend = *b;
  r.etalon = *e;
  r.pass = j.at("pass").get<bool>();
  return r;
}

std::string to_json(const BenchReport& r, int indent) {
  json j = {
      {"fn", fn_json(r.fn)},
      {"iterations", r.iterations},
      {"elapsed_seconds", real(r.elapsed_seconds)},
      {"mops", real(r.mops)},
      {"baseline_iterations", r.baseline_iterations},
      {"baseline_seconds", real(r.baseline_seconds)},
      {"baseline_mops", real(r.baseline_mops)},
      {"checksum", r.checksum},
      {"unreliable", r.unreliable},
  };
  return j.dump(indent);
}

BenchReport bench_from_json(const std::string& text) {
  const json j = json::parse(text);
  BenchReport r;
  r.fn = fn_from(j.at("fn"));
  r.iterations = j.at("iterations").get<std::uint64_t>();
  r.elapsed_seconds = real_from(j.at("elapsed_seconds"));
  r.mops = real_from(j.at("mops"));
  r.baseline_iterations = j.at("baseline_iterations").get<std::uint64_t>();
  r.baseline_seconds = real_from(j.at("baseline_seconds"));
  r.baseline_mops = real_from(j.at("baseline_mops"));
  r.checksum = j.at("checksum").get<std::uint64_t>();
  r.unreliable = j.at("unreliable").get<bool>();
  return r;
}

std::string to_json(const DemoReport& r, int indent) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return json{{"pass", r.pass}, {"checks", checks}}.dump(indent);
}

}  // namespace twofold::audit
