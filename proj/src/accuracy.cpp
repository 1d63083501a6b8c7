#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "twofold/audit.hpp"
#include "twofold/backend.hpp"
#include "twofold/exp_params.hpp"
#include "twofold/oracle.hpp"
#include "twofold/platform.hpp"

namespace twofold::audit {

namespace {

using oracle::HPValue;

// Wide enough to hold value + error of any generated sample exactly.
constexpr int kArgPrecision = 320;

struct ChunkStats {
  double sum = 0;
  double max = 0;
  std::uint64_t evaluated = 0;
  std::uint64_t warnings = 0;
  std::uint64_t excluded = 0;
};

HPValue oracle_value(Family family, const HPValue& x) {
  switch (family) {
    case Family::exp: return oracle::hp_exp(x);
    case Family::expm1: return oracle::hp_expm1(x);
    case Family::log: return oracle::hp_log(x);
    case Family::log1p: return oracle::hp_log1p(x);
  }
  throw oracle::OracleError("unknown family");
}

double library_double(Family family, double x) {
  switch (family) {
    case Family::exp: return platform::exp(x);
    case Family::expm1: return platform::expm1(x);
    case Family::log: return platform::log(x);
    case Family::log1p: return platform::log1p(x);
  }
  return x;
}

template <Dotted T>
HPValue reference(const SampleSpec& spec, Twofold<T> x) {
  const Family family = fn_family(spec.fn.fn);
  const bool dotted = fn_arg_kind(spec.fn.fn) == ArgKind::dotted;
  if (spec.etalon == Etalon::library) {
    // Two floats sum exactly in double whenever their exponents are close,
    // which holds for every generated sample.
    const double arg = dotted ? double(x.value)
                              : double(x.value) + double(x.error);
    return HPValue(library_double(family, arg));
  }
  HPValue arg(x.value, kArgPrecision);
  if (!dotted) arg = arg + HPValue(x.error, kArgPrecision);
  return oracle_value(family, arg);
}

template <Dotted T>
ChunkStats run_chunk(const SampleSpec& spec, const Evaluator<T>& eval,
                     double l0, std::uint64_t chunk) {
  using P = ExpParams<T>;
  const HPValue tiny(P::full_precision_min);
  const HPValue huge(std::numeric_limits<T>::max());
  ChunkStats st;
  const auto xs = gen_samples<T>(spec, chunk * kChunkSize, kChunkSize);
  for (const auto& x : xs) {
    const HPValue ref = reference(spec, x);
    const HPValue mag = ref.abs();
    if ((mag < tiny && !ref.is_zero()) || huge < mag) {
      ++st.excluded;
      continue;
    }
    const Twofold<T> r = eval(x);
    double e = oracle::rel_error(r, ref).value;
    if (std::isnan(e)) e = std::numeric_limits<double>::infinity();
    st.sum += e;
    st.max = std::max(st.max, e);
    ++st.evaluated;
    if (e > l0) ++st.warnings;
  }
  return st;
}

template <Dotted T>
AccuracyReport run_impl(const SampleSpec& spec, const Evaluator<T>& eval,
                        unsigned threads) {
  if (spec.etalon == Etalon::library && spec.fn.width == Width::binary64) {
    throw std::invalid_argument(
        "the library etalon is only meaningful for binary32");
  }
  AccuracyReport rep;
  rep.fn = spec.fn;
  rep.samples = spec.count;
  rep.seed = spec.seed;
  rep.backend = spec.backend;
  rep.etalon = spec.etalon;
  rep.thresholds = thresholds_for(spec.fn, spec.count);

  const Backend saved = active_backend();
  set_backend(spec.backend);

  const std::uint64_t chunks = (spec.count + kChunkSize - 1) / kChunkSize;
  std::vector<ChunkStats> stats(chunks);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (!mpfr_buildopt_tls_p()) threads = 1;
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, std::max<std::uint64_t>(chunks, 1)));

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    try {
      for (std::uint64_t c = next++; c < chunks && !failed; c = next++) {
        stats[c] = run_chunk<T>(spec, eval, rep.thresholds.l0, c);
      }
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  set_backend(saved);
  if (failure) std::rethrow_exception(failure);

  // Merge in chunk order so the sum does not depend on scheduling.
  double sum = 0;
  std::uint64_t evaluated = 0;
  for (const auto& st : stats) {
    sum += st.sum;
    rep.l0_rel = std::max(rep.l0_rel, st.max);
    evaluated += st.evaluated;
    rep.warnings += st.warnings;
    rep.subnormals_excluded += st.excluded;
  }
  rep.l1_rel = evaluated ? sum / static_cast<double>(evaluated) : 0;
  rep.pass = rep.recompute_pass();
  return rep;
}

}  // namespace

bool AccuracyReport::recompute_pass() const {
  return l1_rel <= thresholds.l1 && warnings <= thresholds.warn_budget;
}

AccuracyReport run_accuracy(const SampleSpec& spec, unsigned threads) {
  if (spec.fn.width == Width::binary64) {
    return run_impl<double>(spec, fn_pointer<double>(spec.fn.fn), threads);
  }
  return run_impl<float>(spec, fn_pointer<float>(spec.fn.fn), threads);
}

template <Dotted T>
AccuracyReport run_accuracy_with(const SampleSpec& spec, Evaluator<T> eval,
                                 unsigned threads) {
  const bool match = (spec.fn.width == Width::binary64) ==
                     std::is_same_v<T, double>;
  if (!match) throw std::invalid_argument("evaluator width mismatch");
  return run_impl<T>(spec, eval, threads);
}

template AccuracyReport run_accuracy_with(const SampleSpec&, Evaluator<float>,
                                          unsigned);
template AccuracyReport run_accuracy_with(const SampleSpec&, Evaluator<double>,
                                          unsigned);

}  // namespace twofold::audit
