#pragma once

// Accuracy audit, throughput benchmark and corner-case demo.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "twofold/explog.hpp"
#include "twofold/twofold.hpp"

namespace twofold::audit {

enum class Etalon { oracle, library };

std::string_view etalon_name(Etalon e) noexcept;
std::optional<Etalon> parse_etalon(std::string_view s) noexcept;

// Identical specs produce identical sample streams. The value part of each
// sample is drawn per function family:
//   exp, expm1  sign uniform, magnitude 2^u, u uniform in
//               [-p, log2 |bound|] for the bound of that sign
//   log         2^u, u uniform in [emin, emax]
//   log1p       positive: 2^u, u in [-p, emax]; negative: -2^u, u in [-p, 0)
// and the error part is value * v * 2^-p with v uniform in [-1, 1].
// Coupled-argument functions get renormalized samples.
struct SampleSpec {
  FnId fn;
  std::uint64_t count = 100000;
  std::uint64_t seed = 42;
  Backend backend = kDefaultBackend;
  Etalon etalon = Etalon::oracle;
};

std::string domain_description(FnId fn);

// Samples are generated in fixed-size chunks, each with its own engine
// seeded from (seed, chunk index); any chunk can be produced alone.
inline constexpr std::uint64_t kChunkSize = 4096;

template <Dotted T>
std::vector<Twofold<T>> gen_samples(const SampleSpec& spec,
                                    std::uint64_t first = 0,
                                    std::uint64_t count = UINT64_MAX);

struct Thresholds {
  double l1 = 0;
  double l0 = 0;
  std::uint64_t warn_budget = 0;

  friend bool operator==(const Thresholds&, const Thresholds&) = default;
};

Thresholds thresholds_for(FnId fn, std::uint64_t samples);

struct AccuracyReport {
  FnId fn;
  std::uint64_t samples = 0;
  double l1_rel = 0;
  double l0_rel = 0;
  std::uint64_t warnings = 0;
  Thresholds thresholds;
  std::uint64_t subnormals_excluded = 0;
  std::uint64_t seed = 0;
  Backend backend = kDefaultBackend;
  Etalon etalon = Etalon::oracle;
  bool pass = false;

  // The pass flag as implied by the other fields.
  bool recompute_pass() const;

  friend bool operator==(const AccuracyReport&, const AccuracyReport&) =
      default;
};

template <Dotted T>
using Evaluator = std::function<Twofold<T>(Twofold<T>)>;

// Measures spec.fn (or `eval` in its place) against the etalon. Results
// whose exact value is below 2^(emin+p) in magnitude, where the error part
// would be subnormal, or beyond the largest finite number are excluded and
// counted in subnormals_excluded. threads == 0 uses the hardware
// concurrency; the report does not depend on it.
AccuracyReport run_accuracy(const SampleSpec& spec, unsigned threads = 0);

template <Dotted T>
AccuracyReport run_accuracy_with(const SampleSpec& spec, Evaluator<T> eval,
                                 unsigned threads = 0);

struct BenchReport {
  FnId fn;
  std::uint64_t iterations = 0;
  double elapsed_seconds = 0;
  double mops = 0;
  std::uint64_t baseline_iterations = 0;
  double baseline_seconds = 0;
  double baseline_mops = 0;  // 192-bit oracle, same family
  std::uint64_t checksum = 0;
  bool unreliable = false;

  friend bool operator==(const BenchReport&, const BenchReport&) = default;
};

BenchReport run_bench(FnId fn, std::uint64_t iterations,
                      Backend backend = kDefaultBackend);

struct DemoCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct DemoReport {
  std::vector<DemoCheck> checks;
  bool pass = false;
};

DemoReport run_demo();

std::string to_json(const AccuracyReport& r, int indent = 2);
std::string to_json(const BenchReport& r, int indent = 2);
std::string to_json(const DemoReport& r, int indent = 2);
AccuracyReport accuracy_from_json(const std::string& text);
BenchReport bench_from_json(const std::string& text);

}  // namespace twofold::audit
