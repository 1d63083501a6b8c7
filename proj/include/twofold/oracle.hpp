#pragma once

// High-precision reference arithmetic on top of MPFR. Used as the etalon in
// accuracy audits, to generate the constant tables, and to verify
// error-free transformations exactly.

#include <mpfr.h>

#include <stdexcept>
#include <string>

#include "twofold/twofold.hpp"

namespace twofold::oracle {

inline constexpr int kDefaultPrecision = 192;

// Enough bits to hold the exact sum of any two binary64 numbers
// (2^1023 down to 2^-1074).
inline constexpr int kExactPrecision = 2200;

class OracleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// RAII wrapper around an mpfr_t with its own precision. Arithmetic rounds
// to nearest at the precision of the left operand unless stated otherwise.
class HPValue {
 public:
  explicit HPValue(int precision = kDefaultPrecision);
  // Exact whenever precision >= the mantissa width of x.
  explicit HPValue(double x, int precision = kDefaultPrecision);
  explicit HPValue(float x, int precision = kDefaultPrecision);
  static HPValue from_int(long x, int precision = kDefaultPrecision);
  // Parses a decimal or hexadecimal string, rounding to nearest.
  static HPValue from_string(const std::string& s,
                             int precision = kDefaultPrecision);

  HPValue(const HPValue& other);
  HPValue(HPValue&& other) noexcept;
  HPValue& operator=(const HPValue& other);
  HPValue& operator=(HPValue&& other) noexcept;
  ~HPValue();

  int precision() const { return static_cast<int>(mpfr_get_prec(v_)); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // Value with `digits` significant decimal digits.
  std::string to_string(int digits = 40) const;

  HPValue abs() const;
  HPValue with_precision(int precision) const;

  friend HPValue operator+(const HPValue& a, const HPValue& b);
  friend HPValue operator-(const HPValue& a, const HPValue& b);
  friend HPValue operator*(const HPValue& a, const HPValue& b);
  friend HPValue operator/(const HPValue& a, const HPValue& b);
  friend HPValue operator-(const HPValue& a);
  friend bool operator==(const HPValue& a, const HPValue& b);
  friend bool operator<(const HPValue& a, const HPValue& b);
  friend bool operator<=(const HPValue& a, const HPValue& b);

 private:
  mpfr_t v_;
};

// Correctly rounded to `precision` bits. Throw OracleError outside the
// mathematical domain (including NaN arguments).
HPValue hp_exp(const HPValue& x, int precision = kDefaultPrecision);
HPValue hp_expm1(const HPValue& x, int precision = kDefaultPrecision);
HPValue hp_log(const HPValue& x, int precision = kDefaultPrecision);
HPValue hp_log1p(const HPValue& x, int precision = kDefaultPrecision);
HPValue hp_ln2(int precision = kDefaultPrecision);

// value + error, exactly.
template <Dotted T>
HPValue exact(Twofold<T> t);

struct RelError {
  double value = 0;   // relative, or absolute when `absolute` is set
  bool absolute = false;
};

// |(t.value + t.error) - ref| / |ref|, evaluated at the reference's
// precision. A zero reference yields the absolute error, flagged. A
// non-finite twofold against a finite reference is an infinite error.
template <Dotted T>
RelError rel_error(Twofold<T> t, const HPValue& ref);

// a + b == t.value + t.error in exact arithmetic (finite inputs only).
template <Dotted T>
bool check_exact_sum(T a, T b, Twofold<T> t);
template <Dotted T>
bool check_exact_diff(T a, T b, Twofold<T> t);
template <Dotted T>
bool check_exact_prod(T a, T b, Twofold<T> t);

// Nearest-even rounding to T, subnormals included.
template <Dotted T>
T round_nearest(const HPValue& x);

// Nearest value and nearest remainder: the coupled rounding of x. A
// remainder in the subnormal range that would break the coupling is moved
// one unit toward zero.
template <Dotted T>
Coupled<T> round_coupled(const HPValue& x);

}  // namespace twofold::oracle
