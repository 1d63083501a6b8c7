#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "twofold/audit.hpp"
#include "twofold/eft.hpp"
#include "twofold/exp_params.hpp"

namespace twofold::audit {

std::string_view etalon_name(Etalon e) noexcept {
  return e == Etalon::oracle ? "oracle" : "lib";
}

std::optional<Etalon> parse_etalon(std::string_view s) noexcept {
  if (s == "oracle") return Etalon::oracle;
  if (s == "lib" || s == "library") return Etalon::library;
  return std::nullopt;
}

namespace {

template <Dotted T>
std::string describe(Family family) {
  using P = ExpParams<T>;
  using L = std::numeric_limits<T>;
  const std::string p = std::to_string(P::p);
  switch (family) {
    case Family::exp:
    case Family::expm1:
      return "+-2^u, u uniform in [-" + p + ", log2|bound|], bounds [" +
             std::to_string(P::lo_bound) + ", " + std::to_string(P::hi_bound) +
             "]";
    case Family::log:
      return "2^u, u uniform in [" + std::to_string(L::min_exponent - 1) +
             ", " + std::to_string(L::max_exponent) + ")";
    case Family::log1p:
      return "2^u, u uniform in [-" + p + ", " +
             std::to_string(L::max_exponent) + "), or -2^u, u in [-" + p +
             ", 0)";
  }
  return {};
}

template <Dotted T>
T draw_value(Family family, std::mt19937_64& rng) {
  using P = ExpParams<T>;
  using L = std::numeric_limits<T>;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const bool negative = unit(rng) < 0.5;
  const double p = P::p;
  auto uniform = [&](double a, double b) { return a + (b - a) * unit(rng); };

  switch (family) {
    case Family::exp:
    case Family::expm1: {
      const double bound = negative ? -double(P::lo_bound) : double(P::hi_bound);
      const double u = uniform(-p, std::log2(bound));
      const T v = static_cast<T>(negative ? -std::exp2(u) : std::exp2(u));
      return std::clamp(v, P::lo_bound, P::hi_bound);
    }
    case Family::log: {
      const double u = uniform(L::min_exponent - 1, L::max_exponent);
      return std::min(static_cast<T>(std::exp2(u)), L::max());
    }
    case Family::log1p: {
      if (negative) {
        const T v = static_cast<T>(-std::exp2(uniform(-p, 0)));
        return std::max(v, std::nextafter(T(-1), T(0)));
      }
      const T v = static_cast<T>(std::exp2(uniform(-p, L::max_exponent)));
      return std::min(v, L::max());
    }
  }
  return 0;
}

std::mt19937_64 chunk_engine(std::uint64_t seed, std::uint64_t chunk) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk),
                    static_cast<std::uint32_t>(chunk >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

std::string domain_description(FnId fn) {
  return fn.width == Width::binary64 ? describe<double>(fn_family(fn.fn))
                                     : describe<float>(fn_family(fn.fn));
}

template <Dotted T>
std::vector<Twofold<T>> gen_samples(const SampleSpec& spec,
                                    std::uint64_t first, std::uint64_t count) {
  const std::uint64_t end =
      first >= spec.count ? first : first + std::min(count, spec.count - first);
  const Family family = fn_family(spec.fn.fn);
  const bool coupled = fn_arg_kind(spec.fn.fn) == ArgKind::coupled;
  const T scale = detail::pow2<T>(-ExpParams<T>::p);

  std::vector<Twofold<T>> out;
  out.reserve(end > first ? end - first : 0);
  std::uint64_t i = first - first % kChunkSize;
  while (i < end) {
    const std::uint64_t chunk = i / kChunkSize;
    auto rng = chunk_engine(spec.seed, chunk);
    std::uniform_real_distribution<double> sym(-1.0, 1.0);
    const std::uint64_t chunk_end = std::min(end, (chunk + 1) * kChunkSize);
    for (; i < chunk_end; ++i) {
      const T v = draw_value<T>(family, rng);
      const T e = v * (static_cast<T>(sym(rng)) * scale);
      if (i < first) continue;
      Twofold<T> x{v, e};
      if (coupled) x = renorm(x);
      out.push_back(x);
    }
  }
  return out;
}

template std::vector<Twofold<float>> gen_samples(const SampleSpec&,
                                                 std::uint64_t, std::uint64_t);
template std::vector<Twofold<double>> gen_samples(const SampleSpec&,
                                                  std::uint64_t, std::uint64_t);

Thresholds thresholds_for(FnId fn, std::uint64_t samples) {
  const bool log_family = fn_family(fn.fn) == Family::log ||
                          fn_family(fn.fn) == Family::log1p;
  Thresholds t;
  if (fn.width == Width::binary64) {
    t.l1 = log_family ? 0x1p-98 : 0x1p-100;
    t.l0 = log_family ? 0x1p-93 : 0x1p-95;
  } else {
    t.l1 = 0x1p-42;
    t.l0 = log_family ? 0x1p-36 : 0x1p-38;
  }
  t.warn_budget = (2 * samples + 999999) / 1000000;
  return t;
}

}  // namespace twofold::audit
