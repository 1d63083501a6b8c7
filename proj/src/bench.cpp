#include <algorithm>
#include <bit>
#include <chrono>

#include "twofold/audit.hpp"
#include "twofold/backend.hpp"
#include "twofold/oracle.hpp"

namespace twofold::audit {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kBenchInputs = 4096;
constexpr std::uint64_t kBenchSeed = 20240229;

std::uint64_t bits_of(double x) { return std::bit_cast<std::uint64_t>(x); }
std::uint64_t bits_of(float x) { return std::bit_cast<std::uint32_t>(x); }

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <Dotted T>
BenchReport bench_impl(FnId fn, std::uint64_t iterations) {
  SampleSpec spec{fn, kBenchInputs, kBenchSeed};
  const auto xs = gen_samples<T>(spec);
  const FnPointer<T> f = fn_pointer<T>(fn.fn);

  BenchReport rep;
  rep.fn = fn;
  rep.iterations = iterations;

  std::uint64_t sink = 0;
  for (const auto& x : xs) {
    const auto r = f(x);
    sink = std::rotl(sink, 1) ^ bits_of(r.value) ^ (bits_of(r.error) << 1);
  }

  const auto t0 = Clock::now();
  for (std::uint64_t i = 0; i < iterations; ++i) {
    const auto r = f(xs[i % kBenchInputs]);
    sink = std::rotl(sink, 1) ^ bits_of(r.value) ^ (bits_of(r.error) << 1);
  }
  rep.elapsed_seconds = seconds_since(t0);
  rep.checksum = sink;

  // The 192-bit oracle on the same inputs, fewer calls.
  const Family family = fn_family(fn.fn);
  const bool dotted = fn_arg_kind(fn.fn) == ArgKind::dotted;
  rep.baseline_iterations = std::max<std::uint64_t>(1000, iterations / 100);
  std::vector<oracle::HPValue> args;
  args.reserve(kBenchInputs);
  for (const auto& x : xs) {
    oracle::HPValue a(x.value, 320);
    if (!dotted) a = a + oracle::HPValue(x.error, 320);
    args.push_back(a);
  }
  oracle::HPValue out;
  const auto t1 = Clock::now();
  for (std::uint64_t i = 0; i < rep.baseline_iterations; ++i) {
    const auto& a = args[i % kBenchInputs].get();
    switch (family) {
      case Family::exp: mpfr_exp(out.get(), a, MPFR_RNDN); break;
      case Family::expm1: mpfr_expm1(out.get(), a, MPFR_RNDN); break;
      case Family::log: mpfr_log(out.get(), a, MPFR_RNDN); break;
      case Family::log1p: mpfr_log1p(out.get(), a, MPFR_RNDN); break;
    }
    rep.checksum = std::rotl(rep.checksum, 1) ^ bits_of(out.to_double());
  }
  rep.baseline_seconds = seconds_since(t1);

  rep.mops = rep.elapsed_seconds > 0
                 ? double(iterations) / rep.elapsed_seconds / 1e6
                 : 0;
  rep.baseline_mops =
      rep.baseline_seconds > 0
          ? double(rep.baseline_iterations) / rep.baseline_seconds / 1e6
          : 0;
  const double tick =
      double(Clock::period::num) / double(Clock::period::den);
  rep.unreliable = !(tick < 0.01 * rep.elapsed_seconds) ||
                   !(tick < 0.01 * rep.baseline_seconds);
  return rep;
}

}  // namespace

BenchReport run_bench(FnId fn, std::uint64_t iterations, Backend backend) {
  const Backend saved = active_backend();
  set_backend(backend);
  BenchReport rep = fn.width == Width::binary64
                        ? bench_impl<double>(fn, iterations)
                        : bench_impl<float>(fn, iterations);
  set_backend(saved);
  return rep;
}

}  // namespace twofold::audit
