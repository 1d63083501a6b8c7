#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "twofold/oracle.hpp"

namespace {

using namespace twofold;
using namespace twofold::oracle;

TEST(Oracle, Examples) {
  EXPECT_TRUE(hp_exp(HPValue(0.0)) == HPValue::from_int(1));
  const HPValue tiny = HPValue::from_string("0x1p-200");
  const HPValue e = hp_expm1(tiny);
  EXPECT_LT(((e - tiny) / tiny).abs().to_double(), 0x1p-190);
}

TEST(Oracle, DomainErrorsThrow) {
  EXPECT_THROW(hp_log(HPValue(0.0)), OracleError);
  EXPECT_THROW(hp_log(HPValue(-1.0)), OracleError);
  EXPECT_THROW(hp_log1p(HPValue(-1.0)), OracleError);
  EXPECT_THROW(hp_exp(HPValue(std::nan(""))), OracleError);
  EXPECT_NO_THROW(hp_log1p(HPValue(-0.5)));
}

TEST(Oracle, LogInvertsExp) {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> u(-700, 700);
  for (int i = 0; i < 1000; ++i) {
    const HPValue x(u(rng));
    const HPValue back = hp_log(hp_exp(x));
    const HPValue d = (back - x).abs();
    // Two units of the oracle precision, relative to max(|x|, 1).
    const double scale = std::max(std::fabs(x.to_double()), 1.0);
    ASSERT_LE(d.to_double(), scale * 0x1p-190) << x.to_double();
  }
}

TEST(Oracle, PrecisionEscalation) {
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> u(-20, 20);
  for (int i = 0; i < 1000; ++i) {
    const HPValue x(u(rng));
    for (auto f : {hp_exp, hp_expm1}) {
      const HPValue a = f(x, 192), b = f(x, 256);
      ASSERT_LE(((a - b) / b).abs().to_double(), 0x1p-190);
    }
    const HPValue y(std::exp2(u(rng)));
    for (auto f : {hp_log, hp_log1p}) {
      const HPValue a = f(y, 192), b = f(y, 256);
      if (b.is_zero()) continue;
      ASSERT_LE(((a - b) / b).abs().to_double(), 0x1p-190);
    }
  }
}

TEST(RelError, Examples) {
  const HPValue one = HPValue::from_int(1);
  EXPECT_EQ(rel_error(Twofold<double>{1, 0}, one).value, 0.0);
  EXPECT_EQ(rel_error(Twofold<double>{1, 0x1p-60}, one).value, 0x1p-60);
  const auto z = rel_error(Twofold<double>{0x1p-70, 0}, HPValue(0.0));
  EXPECT_TRUE(z.absolute);
  EXPECT_EQ(z.value, 0x1p-70);
  EXPECT_TRUE(std::isinf(
      rel_error(Twofold<double>{INFINITY, 0}, one).value));
}

TEST(ExactChecks, Examples) {
  EXPECT_TRUE(check_exact_sum(1.0, 0x1p-60, Twofold<double>{1, 0x1p-60}));
  EXPECT_FALSE(check_exact_sum(1.0, 0x1p-60, Twofold<double>{1, 0}));
  const double a = 0x1p27 + 1;
  EXPECT_TRUE(check_exact_prod(a, a, Twofold<double>{0x1p54 + 0x1p28, 1}));
  EXPECT_FALSE(check_exact_prod(a, a, Twofold<double>{0x1p54 + 0x1p28, 0}));
  // Widest possible exponent gap.
  const double big = 0x1p1023, small = 0x1p-1074;
  EXPECT_TRUE(check_exact_sum(big, small, Twofold<double>{big, small}));
}

TEST(RoundNearest, TiesAndSubnormals) {
  // 1 + 2^-53 is a tie: even neighbour 1.
  EXPECT_EQ(round_nearest<double>(HPValue::from_string("0x1.00000000000008p0")),
            1.0);
  EXPECT_EQ(round_nearest<double>(HPValue::from_string("0x1.00000000000018p0")),
            1.0 + 0x1p-51);
  // Halfway between 0 and the smallest subnormal rounds to 0, beyond it up.
  EXPECT_EQ(round_nearest<double>(HPValue::from_string("0x1p-1075")), 0.0);
  EXPECT_EQ(round_nearest<double>(HPValue::from_string("0x1.1p-1075")),
            0x1p-1074);
  // 3/2 of the smallest subnormal ties to 2.
  EXPECT_EQ(round_nearest<double>(HPValue::from_string("0x3p-1075")),
            0x1p-1073);
  EXPECT_EQ(round_nearest<float>(HPValue::from_string("0x1.1p-150")),
            0x1p-149f);
  EXPECT_EQ(round_nearest<float>(HPValue::from_string("0x1p-150")), 0.0f);
  EXPECT_TRUE(std::isinf(round_nearest<double>(HPValue::from_string("0x1p1024"))));
}

TEST(RoundNearest, AgreesWithHardwareOnSums) {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 100000; ++i) {
    const double a = std::ldexp(u(rng), int(rng() % 200) - 100);
    const double b = std::ldexp(u(rng), int(rng() % 200) - 100);
    ASSERT_EQ(round_nearest<double>(HPValue(a, 2200) + HPValue(b, 2200)), a + b);
    const float fa = float(a), fb = float(b);
    ASSERT_EQ(round_nearest<float>(HPValue(fa, 400) + HPValue(fb, 400)), fa + fb);
  }
}

TEST(RoundCoupled, ValueIsNearestOfSum) {
  const HPValue third = HPValue::from_int(1) / HPValue::from_int(3);
  const auto c = round_coupled<double>(third);
  EXPECT_EQ(c.value, 1.0 / 3);
  const HPValue rest = third - HPValue(c.value, 400);
  EXPECT_EQ(c.error, round_nearest<double>(rest.with_precision(400)));
  EXPECT_EQ(round_nearest<double>(HPValue(c.value, 400) + HPValue(c.error, 400)),
            c.value);
}

}  // namespace
