#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <limits>
#include <random>

#include "twofold/audit.hpp"
#include "twofold/backend.hpp"
#include "twofold/eft.hpp"
#include "twofold/explog.hpp"
#include "twofold/oracle.hpp"
#include "twofold/platform.hpp"

namespace {

using namespace twofold;
using oracle::HPValue;

const double k2m60 = std::ldexp(1.0, -60);
const double kInf = std::numeric_limits<double>::infinity();

template <Dotted T>
double rel(Twofold<T> t, const HPValue& ref) {
  return oracle::rel_error(t, ref).value;
}

template <Dotted T>
double rel(Coupled<T> c, const HPValue& ref) {
  return rel(Twofold<T>(c), ref);
}

HPValue sum_of(double a, double b) {
  return HPValue(a, 300) + HPValue(b, 300);
}

template <Dotted T>
bool bit_equal(T a, T b) {
  return std::memcmp(&a, &b, sizeof a) == 0;
}

TEST(Exp, Examples) {
  EXPECT_EQ(texp0(0.0), (Twofold<double>{1.0, 0.0}));
  EXPECT_TRUE(bit_equal(texp0(1.0).value, platform::exp(1.0)));
  EXPECT_LE(rel(texp0(1.0), oracle::hp_exp(HPValue(1.0))), 0x1p-95);
  EXPECT_EQ(texp(Twofold<double>{0, 0}), (Twofold<double>{1.0, 0.0}));
  EXPECT_LE(rel(texp(Twofold<double>{1, k2m60}),
                oracle::hp_exp(sum_of(1, k2m60))),
            0x1p-95);
  const auto big = texp(Twofold<double>{710, 0});
  EXPECT_EQ(big.value, kInf);
  EXPECT_FALSE(std::isnan(big.error));
  EXPECT_EQ(pexp(Coupled<double>{0, 0}), (Coupled<double>{1, 0}));
}

TEST(Expm1, Examples) {
  EXPECT_TRUE(bit_equal(texpm10(1.0).value, platform::expm1(1.0)));
  EXPECT_EQ(texpm10(0.0), (Twofold<double>{0.0, 0.0}));
  EXPECT_EQ(texpm1(Twofold<double>{0, 0}), (Twofold<double>{0.0, 0.0}));
  EXPECT_LE(rel(texpm1(Twofold<double>{-0.5, k2m60}),
                oracle::hp_expm1(sum_of(-0.5, k2m60))),
            0x1p-95);
  const auto sat = texpm1(Twofold<double>{-800, 0});
  EXPECT_EQ(sat.value, platform::expm1(-800.0));
  EXPECT_EQ(sat.value, -1.0);
  EXPECT_TRUE(std::isfinite(sat.error));
  EXPECT_LE(rel(sat, oracle::hp_expm1(HPValue(-800.0))), 0x1p-95);
}

TEST(Log, Examples) {
  EXPECT_EQ(plog0(1.0), (Coupled<double>{0, 0}));
  EXPECT_LE(rel(plog0(2.0), oracle::hp_log(HPValue(2.0))), 0x1p-93);
  EXPECT_LE(rel(plog0(1e300), oracle::hp_log(HPValue(1e300))), 0x1p-93);
  EXPECT_TRUE(bit_equal(tlog0(2.0).value, platform::log(2.0)));
  EXPECT_EQ(tlog0(1.0), (Twofold<double>{0, 0}));
  EXPECT_EQ(plog(Coupled<double>{1, 0}), (Coupled<double>{0, 0}));
  const auto near1 = plog(Coupled<double>{1, k2m60});
  EXPECT_LE(rel(near1, oracle::hp_log(sum_of(1, k2m60))), 0x1p-93);
  EXPECT_TRUE(bit_equal(tlogp(Coupled<double>{2, 0}).value, platform::log(2.0)));
  EXPECT_EQ(tlog(Twofold<double>{1, 0}), (Twofold<double>{0, 0}));
}

TEST(Log, UncoupledArgument) {
  // (4, -2) stands for 2: the value part follows log(4), the error part
  // carries ln 2 - log(4) and the residual.
  const auto r = tlog(Twofold<double>{4, -2});
  EXPECT_TRUE(bit_equal(r.value, platform::log(4.0)));
  // A lone error part this large holds only p bits of the answer.
  const HPValue want = oracle::hp_log(HPValue(2.0)) - HPValue(r.value, 256);
  EXPECT_LE((HPValue(r.error, 256) - want).abs().to_double(),
            0x1p-53 * std::fabs(r.error));
}

TEST(Log, ValueFiniteErrorNan) {
  const auto r = tlog(Twofold<double>{1, -1});
  EXPECT_EQ(r.value, 0.0);
  EXPECT_TRUE(std::isnan(r.error));
}

TEST(Log1p, Examples) {
  EXPECT_EQ(plog1p0(0.0), (Coupled<double>{0, 0}));
  const double t = std::ldexp(1.0, -40);
  EXPECT_LE(rel(plog1p0(t), oracle::hp_log1p(HPValue(t))), 0x1p-93);
  EXPECT_LE(rel(plog1p0(10.0), oracle::hp_log1p(HPValue(10.0))), 0x1p-93);
  EXPECT_LE(rel(plog1p(Coupled<double>{-0.25, k2m60}),
                oracle::hp_log1p(sum_of(-0.25, k2m60))),
            0x1p-93);
  EXPECT_EQ(tlog1pp(Coupled<double>{0, 0}), (Twofold<double>{0, 0}));
  EXPECT_TRUE(bit_equal(tlog1p0(1.0).value, platform::log1p(1.0)));
}

TEST(Log, RandomLogUniform) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-300, 300);
  double worst = 0;
  for (int i = 0; i < 20000; ++i) {
    const double y = std::exp2(u(rng));
    const auto r = tlog0(y);
    ASSERT_TRUE(bit_equal(r.value, platform::log(y)));
    worst = std::max(worst, rel(r, oracle::hp_log(HPValue(y))));
  }
  EXPECT_LE(worst, 0x1p-93);
}

TEST(Log, CoupledArgumentsNearOne) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> k(-64, 64);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 20000; ++i) {
    const double v = 1 + k(rng) * 0x1p-52;
    const Coupled<double> y = renorm(Twofold<double>{v, u(rng) * 0x1p-54});
    if (y.value == 1 && y.error == 0) continue;
    ASSERT_LE(rel(plog(y), oracle::hp_log(sum_of(y.value, y.error))), 0x1p-93)
        << y.value << " " << y.error;
    const Coupled<double> z{y.value - 1, y.error};
    ASSERT_LE(rel(plog1p(renorm(Twofold<double>(z))),
                  oracle::hp_log1p(sum_of(z.value, z.error))),
              0x1p-93);
  }
}

// Library value of the value part alone against the exact function of the
// whole argument; the twofold answer may not be worse beyond one ulp.
template <Dotted T>
void not_worse(Fn fn, std::uint64_t seed) {
  const FnId id{fn, std::is_same_v<T, double> ? Width::binary64
                                              : Width::binary32};
  audit::SampleSpec spec{id, 4000, seed};
  const auto xs = audit::gen_samples<T>(spec);
  for (const auto& x : xs) {
    const bool dotted = fn_arg_kind(fn) == ArgKind::dotted;
    HPValue arg(x.value, 300);
    if (!dotted) arg = arg + HPValue(x.error, 300);
    HPValue ref(256);
    switch (fn_family(fn)) {
      case Family::exp: ref = oracle::hp_exp(arg, 256); break;
      case Family::expm1: ref = oracle::hp_expm1(arg, 256); break;
      case Family::log: ref = oracle::hp_log(arg, 256); break;
      case Family::log1p: ref = oracle::hp_log1p(arg, 256); break;
    }
    const T lib = library_value(fn, x.value);
    const auto r = evaluate(fn, x);
    if (!std::isfinite(lib)) continue;
    const T ulp = std::nextafter(std::fabs(lib), std::numeric_limits<T>::infinity()) -
                  std::fabs(lib);
    const HPValue ours =
        (HPValue(r.value, 400) + HPValue(r.error, 400) - ref).abs();
    const HPValue theirs = (HPValue(lib, 400) - ref).abs();
    ASSERT_TRUE(ours <= theirs + HPValue(ulp, 400))
        << fn_name(fn) << " x=" << x.value << "," << x.error;
  }
}

TEST(Properties, NotWorseThanStandard) {
  for (Fn fn : all_fns()) {
    not_worse<double>(fn, 32);
    not_worse<float>(fn, 33);
  }
}

TEST(Properties, PexpRoundTripThroughPlog) {
  std::mt19937_64 rng(34);
  std::uniform_real_distribution<double> u(-100, 100);
  for (int i = 0; i < 10000; ++i) {
    const double v = u(rng);
    const Coupled<double> x =
        renorm(Twofold<double>{v, v * u(rng) * 0x1p-60});
    const auto back = plog(pexp(x));
    // Relative to x, measured exactly.
    const HPValue want = sum_of(x.value, x.error);
    ASSERT_LE(rel(Twofold<double>(back), want), 0x1p-92) << v;
  }
}

template <Dotted T>
void coupled_outputs(std::uint64_t seed) {
  const Width w = std::is_same_v<T, double> ? Width::binary64 : Width::binary32;
  for (Fn fn : {Fn::pexp0, Fn::pexp, Fn::pexpm10, Fn::pexpm1, Fn::plog0,
                Fn::plog, Fn::plog1p0, Fn::plog1p}) {
    const auto xs = audit::gen_samples<T>({{fn, w}, 4000, seed});
    for (const auto& x : xs) {
      const auto r = evaluate(fn, x);
      if (!std::isfinite(r.value)) continue;
      const HPValue s = HPValue(r.value, 400) + HPValue(r.error, 400);
      ASSERT_EQ(oracle::round_nearest<T>(s), r.value) << fn_name(fn);
    }
  }
}

TEST(Properties, PFunctionsReturnCoupled) {
  coupled_outputs<double>(35);
  coupled_outputs<float>(36);
}

TEST(Properties, DerivedPFunctionsRenormalizeTheirT) {
  const auto xs = audit::gen_samples<double>({{Fn::pexp, Width::binary64}, 2000, 37});
  for (const auto& x : xs) {
    const Coupled<double> c{x.value, x.error};
    ASSERT_EQ(pexp(c), renorm_fast(texpp(c)));
    ASSERT_EQ(pexpm1(c), renorm_fast(texpm1p(c)));
  }
}

template <Dotted T>
void bitwise(std::uint64_t seed) {
  const Width w = std::is_same_v<T, double> ? Width::binary64 : Width::binary32;
  for (Fn fn : all_fns()) {
    if (!fn_reproduces_library(fn)) continue;
    const auto xs = audit::gen_samples<T>({{fn, w}, 20000, seed});
    for (const auto& x : xs) {
      ASSERT_TRUE(bit_equal(evaluate(fn, x).value, library_value(fn, x.value)))
          << fn_name(fn) << " " << x.value;
    }
  }
}

TEST(Properties, BitwiseReproduction) {
  bitwise<double>(38);
  bitwise<float>(39);
}

TEST(Properties, BackendsAgree) {
  if constexpr (!kFmaCompiled) GTEST_SKIP() << "no FMA backend compiled";
  const Backend saved = active_backend();
  for (Fn fn : all_fns()) {
    const auto xs = audit::gen_samples<double>({{fn, Width::binary64}, 2000, 40});
    for (const auto& x : xs) {
      set_backend(Backend::fma);
      const auto a = evaluate(fn, x);
      set_backend(Backend::dekker_veltkamp);
      const auto b = evaluate(fn, x);
      ASSERT_TRUE(bit_equal(a.value, b.value) && bit_equal(a.error, b.error))
          << fn_name(fn) << " " << x.value;
    }
  }
  set_backend(saved);
}

TEST(Properties, StandardSpellings) {
  const Twofold<double> x{0.75, k2m60};
  EXPECT_EQ(twofold::exp(x), texp(x));
  EXPECT_EQ(twofold::expm1(x), texpm1(x));
  EXPECT_EQ(twofold::log(x), tlog(x));
  EXPECT_EQ(twofold::log1p(x), tlog1p(x));
}

TEST(FnIds, NamesRoundTrip) {
  EXPECT_EQ(all_fns().size(), 20u);
  for (Fn fn : all_fns()) EXPECT_EQ(parse_fn(fn_name(fn)), fn);
  EXPECT_FALSE(parse_fn("texp2").has_value());
  EXPECT_EQ(fn_family(Fn::tlog1pp), Family::log1p);
  EXPECT_EQ(fn_arg_kind(Fn::texpm10), ArgKind::dotted);
  EXPECT_EQ(fn_arg_kind(Fn::tlogp), ArgKind::coupled);
  EXPECT_EQ(fn_arg_kind(Fn::tlog1p), ArgKind::twofold);
}

}  // namespace
