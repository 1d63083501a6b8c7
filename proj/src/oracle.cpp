#include "twofold/oracle.hpp"

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

namespace twofold::oracle {

HPValue::HPValue(int precision) {
  mpfr_init2(v_, precision);
  mpfr_set_zero(v_, 1);
}

HPValue::HPValue(double x, int precision) {
  mpfr_init2(v_, precision);
  mpfr_set_d(v_, x, MPFR_RNDN);
}

HPValue::HPValue(float x, int precision) {
  mpfr_init2(v_, precision);
  mpfr_set_flt(v_, x, MPFR_RNDN);
}

HPValue HPValue::from_int(long x, int precision) {
  HPValue r(precision);
  mpfr_set_si(r.v_, x, MPFR_RNDN);
  return r;
}

HPValue HPValue::from_string(const std::string& s, int precision) {
  HPValue r(precision);
  if (mpfr_set_str(r.v_, s.c_str(), 0, MPFR_RNDN) != 0) {
    throw OracleError("unparsable number '" + s + "'");
  }
  return r;
}

HPValue::HPValue(const HPValue& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

HPValue::HPValue(HPValue&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

HPValue& HPValue::operator=(const HPValue& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

HPValue& HPValue::operator=(HPValue&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

HPValue::~HPValue() { mpfr_clear(v_); }

std::string HPValue::to_string(int digits) const {
  std::vector<char> buf(static_cast<std::size_t>(digits) + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
  return buf.data();
}

HPValue HPValue::abs() const {
  HPValue r(precision());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

HPValue HPValue::with_precision(int precision) const {
  HPValue r(precision);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

HPValue operator+(const HPValue& a, const HPValue& b) {
  HPValue r(a.precision());
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

HPValue operator-(const HPValue& a, const HPValue& b) {
  HPValue r(a.precision());
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

HPValue operator*(const HPValue& a, const HPValue& b) {
  HPValue r(a.precision());
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

HPValue operator/(const HPValue& a, const HPValue& b) {
  HPValue r(a.precision());
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

HPValue operator-(const HPValue& a) {
  HPValue r(a.precision());
  mpfr_neg(r.v_, a.v_, MPFR_RNDN);
  return r;
}

bool operator==(const HPValue& a, const HPValue& b) {
  return mpfr_equal_p(a.v_, b.v_) != 0;
}

bool operator<(const HPValue& a, const HPValue& b) {
  return mpfr_less_p(a.v_, b.v_) != 0;
}

bool operator<=(const HPValue& a, const HPValue& b) {
  return mpfr_lessequal_p(a.v_, b.v_) != 0;
}

// ---------------------------------------------------------------------------

namespace {

void require_number(const HPValue& x, const char* fn) {
  if (x.is_nan()) throw OracleError(std::string(fn) + ": NaN argument");
}

}  // namespace

HPValue hp_exp(const HPValue& x, int precision) {
  require_number(x, "hp_exp");
  HPValue r(precision);
  mpfr_exp(r.get(), x.get(), MPFR_RNDN);
  return r;
}

HPValue hp_expm1(const HPValue& x, int precision) {
  require_number(x, "hp_expm1");
  HPValue r(precision);
  mpfr_expm1(r.get(), x.get(), MPFR_RNDN);
  return r;
}

HPValue hp_log(const HPValue& x, int precision) {
  require_number(x, "hp_log");
  if (x.sign() <= 0) throw OracleError("hp_log: argument not positive");
  HPValue r(precision);
  mpfr_log(r.get(), x.get(), MPFR_RNDN);
  return r;
}

HPValue hp_log1p(const HPValue& x, int precision) {
  require_number(x, "hp_log1p");
  if (HPValue::from_int(-1, 64) < x) {
    HPValue r(precision);
    mpfr_log1p(r.get(), x.get(), MPFR_RNDN);
    return r;
  }
  throw OracleError("hp_log1p: argument not above -1");
}

HPValue hp_ln2(int precision) {
  HPValue r(precision);
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

template <Dotted T>
HPValue exact(Twofold<T> t) {
  HPValue a(t.value, kExactPrecision);
  return a + HPValue(t.error, kExactPrecision);
}

template <Dotted T>
RelError rel_error(Twofold<T> t, const HPValue& ref) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (!std::isfinite(t.value) || !std::isfinite(t.error)) {
    return {inf, ref.is_zero()};
  }
  const int prec = ref.precision() + 64;
  HPValue diff = HPValue(t.value, prec) + HPValue(t.error, prec);
  diff = (diff - ref).abs();
  if (ref.is_zero()) return {diff.to_double(), true};
  return {(diff / ref.abs()).to_double(), false};
}

template <Dotted T>
bool check_exact_sum(T a, T b, Twofold<T> t) {
  const HPValue lhs = HPValue(a, kExactPrecision) + HPValue(b, kExactPrecision);
  return lhs == exact(t);
}

template <Dotted T>
bool check_exact_diff(T a, T b, Twofold<T> t) {
  const HPValue lhs = HPValue(a, kExactPrecision) - HPValue(b, kExactPrecision);
  return lhs == exact(t);
}

template <Dotted T>
bool check_exact_prod(T a, T b, Twofold<T> t) {
  const HPValue lhs = HPValue(a, kExactPrecision) * HPValue(b, kExactPrecision);
  return lhs == exact(t);
}

template <>
double round_nearest<double>(const HPValue& x) {
  // Round to 53 bits inside the binary64 exponent range so that subnormal
  // results are rounded once, at their true precision.
  const mpfr_exp_t emin = mpfr_get_emin();
  const mpfr_exp_t emax = mpfr_get_emax();
  mpfr_set_emin(-1073);
  mpfr_set_emax(1024);
  mpfr_t r;
  mpfr_init2(r, 53);
  int inex = mpfr_set(r, x.get(), MPFR_RNDN);
  inex = mpfr_check_range(r, inex, MPFR_RNDN);
  mpfr_subnormalize(r, inex, MPFR_RNDN);
  const double d = mpfr_get_d(r, MPFR_RNDN);
  mpfr_clear(r);
  mpfr_set_emin(emin);
  mpfr_set_emax(emax);
  return d;
}

template <>
float round_nearest<float>(const HPValue& x) {
  const mpfr_exp_t emin = mpfr_get_emin();
  const mpfr_exp_t emax = mpfr_get_emax();
  mpfr_set_emin(-148);
  mpfr_set_emax(128);
  mpfr_t r;
  mpfr_init2(r, 24);
  int inex = mpfr_set(r, x.get(), MPFR_RNDN);
  inex = mpfr_check_range(r, inex, MPFR_RNDN);
  mpfr_subnormalize(r, inex, MPFR_RNDN);
  const float f = mpfr_get_flt(r, MPFR_RNDN);
  mpfr_clear(r);
  mpfr_set_emin(emin);
  mpfr_set_emax(emax);
  return f;
}

template <Dotted T>
Coupled<T> round_coupled(const HPValue& x) {
  const T value = round_nearest<T>(x);
  if (!std::isfinite(value)) return {value, value};
  const HPValue rest = x.with_precision(x.precision() + kExactPrecision) -
                       HPValue(value, kExactPrecision);
  T error = round_nearest<T>(rest);
  // A subnormal remainder can round up to exactly half an ulp of an odd
  // value; step back so the pair stays coupled.
  if (value + error != value) error = std::nextafter(error, T(0));
  return {value, error};
}

template HPValue exact(Twofold<float>);
template HPValue exact(Twofold<double>);
template RelError rel_error(Twofold<float>, const HPValue&);
template RelError rel_error(Twofold<double>, const HPValue&);
template bool check_exact_sum(float, float, Twofold<float>);
template bool check_exact_sum(double, double, Twofold<double>);
template bool check_exact_diff(float, float, Twofold<float>);
template bool check_exact_diff(double, double, Twofold<double>);
template bool check_exact_prod(float, float, Twofold<float>);
template bool check_exact_prod(double, double, Twofold<double>);
template Coupled<float> round_coupled(const HPValue&);
template Coupled<double> round_coupled(const HPValue&);

}  // namespace twofold::oracle
