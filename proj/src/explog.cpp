#include "twofold/explog.hpp"

#include <cmath>
#include <limits>

#include "twofold/backend.hpp"
#include "twofold/eft.hpp"
#include "twofold/exp_engine.hpp"
#include "twofold/platform.hpp"

namespace twofold {

namespace {

template <typename F>
auto dispatch(F&& f) {
  if constexpr (kFmaCompiled) {
    if (active_backend() == Backend::fma) {
      return f.template operator()<Backend::fma>();
    }
  }
  return f.template operator()<Backend::dekker_veltkamp>();
}

// z1 = (v0 - z0) + v1, except when both value parts are the same infinity,
// where the error saturates to that infinity instead of NaN.
template <Dotted T>
T correction(Twofold<T> v, T z0) {
  if (std::isinf(z0) && v.value == z0) return z0;
  return v.error + (v.value - z0);
}

// ---------------------------------------------------------------------------
// exp / expm1

template <Backend B, Dotted T>
Twofold<T> texp0_impl(T x0) {
  const auto v = engine::pexp0<B>(x0);
  const T z0 = platform::exp(x0);
  return {z0, correction<T>(v, z0)};
}

template <Backend B, Dotted T>
Twofold<T> texpm10_impl(T x0) {
  const auto w = engine::pexpm10<B>(x0);
  const T z0 = platform::expm1(x0);
  return {z0, correction<T>(w, z0)};
}

// e^(x0+x1) - z0 = z0 expm1(x1) + (e^x0 - z0) + O(ulp * x1)
template <Backend B, Dotted T>
Twofold<T> texp_impl(Twofold<T> x) {
  const auto v = engine::pexp0<B>(x.value);
  const T z0 = platform::exp(x.value);
  if (std::isinf(z0) && v.value == z0) return {z0, z0};
  const T t1 = platform::expm1(x.error);
  return {z0, z0 * t1 + (v.error + (v.value - z0))};
}

template <Backend B, Dotted T>
Twofold<T> texpm1_impl(Twofold<T> x) {
  const auto w = engine::pexpm10<B>(x.value);
  const T z0 = platform::expm1(x.value);
  if (std::isinf(z0) && w.value == z0) return {z0, z0};
  const T t1 = platform::expm1(x.error);
  return {z0, (z0 + 1) * t1 + (w.error + (w.value - z0))};
}

// ---------------------------------------------------------------------------
// log / log1p by one Newton step on the exponent.

constexpr int kNewtonMaxSteps = 2;

// Newton correction for ln z from the guess r0:
//   r1 = z e^-r0 - 1 = z s + (z - 1),  s = e^-r0 - 1.
// A second step runs only when the library guess was grossly off.
template <Backend B, Dotted T>
Twofold<T> log_newton(Twofold<T> z, T r0) {
  constexpr T gross = T(0x1p-20);
  T r1 = 0;
  for (int step = 0; step < kNewtonMaxSteps; ++step) {
    const Twofold<T> s = engine::pexpm10<B>(-r0);
    // z - 1 is exact in the value part for z in [1/2, 2].
    const auto u = t_add(t_mul<B>(s, z), two_sum(z.value - T(1), z.error));
    r1 = u.value + u.error;
    if (!(std::fabs(r1) > gross * (std::fabs(r0) + 1))) break;
    if (step + 1 < kNewtonMaxSteps) r0 += r1;
  }
  return {r0, r1};
}

// Newton correction for ln(1 + y) from the guess x0:
//   x1 = (1 + y) e^-x0 - 1 = y s + (y + s),  s = e^-x0 - 1.
template <Backend B, Dotted T>
Twofold<T> log1p_newton(Twofold<T> y, T x0) {
  constexpr T gross = T(0x1p-20);
  T x1 = 0;
  for (int step = 0; step < kNewtonMaxSteps; ++step) {
    const Twofold<T> s = engine::pexpm10<B>(-x0);
    const auto u = t_add(t_mul<B>(s, y), t_add(y, s));
    x1 = u.value + u.error;
    if (!(std::fabs(x1) > gross * (std::fabs(x0) + 1))) break;
    if (step + 1 < kNewtonMaxSteps) x0 += x1;
  }
  return {x0, x1};
}

// (r0 + r1) + n ln 2, n exact.
template <Backend B, Dotted T>
Twofold<T> add_n_ln2(Twofold<T> r, int n) {
  if (n == 0) return r;
  const Twofold<T> ln2 = exp_tables<T>().ln2;
  return t_add(t_mul_d<B>(ln2, static_cast<T>(n)), r);
}

// Out-of-domain, zero, infinite and NaN arguments of ln.
template <Dotted T>
bool log_special(T y0) {
  return !(y0 > 0) || std::isinf(y0);
}

template <Backend B, Dotted T>
Twofold<T> plog0_raw(T y0) {
  if (log_special(y0)) {
    const T r = platform::log(y0);
    return {r, r};
  }
  int n = 0;
  T z = y0;
  if (y0 < T(0.5) || y0 > T(2)) z = std::frexp(y0, &n);
  const T r0 = platform::log(z);
  return add_n_ln2<B>(log_newton<B>(Twofold<T>{z, 0}, r0), n);
}

template <Backend B, Dotted T>
Twofold<T> plog_raw(Coupled<T> y) {
  if (log_special(y.value)) {
    const T r = platform::log(y.value);
    return {r, r};
  }
  int n = 0;
  Twofold<T> z = y;
  if (y.value < T(0.5) || y.value > T(2)) {
    z.value = std::frexp(y.value, &n);
    z.error = std::ldexp(y.error, -n);
  }
  const T r0 = platform::log1p((z.value - 1) + z.error);
  return add_n_ln2<B>(log_newton<B>(z, r0), n);
}

template <Backend B, Dotted T>
Twofold<T> plog1p0_raw(T y0) {
  if (std::isnan(y0)) return {y0, y0};
  if (y0 < T(-0.5) || y0 > T(1)) {
    return plog_raw<B>(renorm(two_sum(T(1), y0)));
  }
  return log1p_newton<B>(Twofold<T>{y0, 0}, platform::log1p(y0));
}

template <Backend B, Dotted T>
Twofold<T> plog1p_raw(Coupled<T> y) {
  if (std::isnan(y.value)) return {y.value, y.value};
  if (y.value < T(-0.5) || y.value > T(1)) {
    return plog_raw<B>(renorm(t_add_d(Twofold<T>(y), T(1))));
  }
  return log1p_newton<B>(Twofold<T>(y), platform::log1p(y.value));
}

template <Backend B, Dotted T>
Twofold<T> tlog_impl(Twofold<T> y) {
  const auto v = renorm(y);
  const auto u = plog_raw<B>(v);
  const T x0 = platform::log(y.value);
  // The value part is representable but the exact result is not.
  if (std::isfinite(x0) && !(v.value > 0)) {
    return {x0, std::numeric_limits<T>::quiet_NaN()};
  }
  return {x0, correction<T>(u, x0)};
}

template <Backend B, Dotted T>
Twofold<T> tlog1p_impl(Twofold<T> y) {
  const auto v = renorm(y);
  const auto u = plog1p_raw<B>(v);
  const T x0 = platform::log1p(y.value);
  if (std::isfinite(x0) && !(v.value > -1)) {
    return {x0, std::numeric_limits<T>::quiet_NaN()};
  }
  return {x0, correction<T>(u, x0)};
}

}  // namespace

// ---------------------------------------------------------------------------

template <Dotted T>
Coupled<T> pexp0(T x) {
  return dispatch([&]<Backend B>() { return engine::pexp0<B>(x); });
}

template <Dotted T>
Twofold<T> texp0(T x) {
  return dispatch([&]<Backend B>() { return texp0_impl<B>(x); });
}

template <Dotted T>
Twofold<T> texp(Twofold<T> x) {
  return dispatch([&]<Backend B>() { return texp_impl<B>(x); });
}

template <Dotted T>
Twofold<T> texpp(Coupled<T> x) {
  return texp(Twofold<T>(x));
}

template <Dotted T>
Coupled<T> pexp(Coupled<T> x) {
  return renorm_fast(texpp(x));
}

template <Dotted T>
Coupled<T> pexpm10(T x) {
  return dispatch([&]<Backend B>() { return engine::pexpm10<B>(x); });
}

template <Dotted T>
Twofold<T> texpm10(T x) {
  return dispatch([&]<Backend B>() { return texpm10_impl<B>(x); });
}

template <Dotted T>
Twofold<T> texpm1(Twofold<T> x) {
  return dispatch([&]<Backend B>() { return texpm1_impl<B>(x); });
}

template <Dotted T>
Twofold<T> texpm1p(Coupled<T> x) {
  return texpm1(Twofold<T>(x));
}

template <Dotted T>
Coupled<T> pexpm1(Coupled<T> x) {
  return renorm_fast(texpm1p(x));
}

template <Dotted T>
Coupled<T> plog0(T y) {
  return dispatch([&]<Backend B>() { return renorm_fast(plog0_raw<B>(y)); });
}

template <Dotted T>
Twofold<T> tlog0(T y) {
  return dispatch([&]<Backend B>() {
    const auto x = plog0_raw<B>(y);
    const T u0 = platform::log(y);
    return Twofold<T>{u0, correction<T>(x, u0)};
  });
}

template <Dotted T>
Coupled<T> plog(Coupled<T> y) {
  return dispatch([&]<Backend B>() { return renorm_fast(plog_raw<B>(y)); });
}

template <Dotted T>
Twofold<T> tlogp(Coupled<T> y) {
  return dispatch([&]<Backend B>() {
    const auto x = plog_raw<B>(y);
    const T u0 = platform::log(y.value);
    return Twofold<T>{u0, correction<T>(x, u0)};
  });
}

template <Dotted T>
Twofold<T> tlog(Twofold<T> y) {
  return dispatch([&]<Backend B>() { return tlog_impl<B>(y); });
}

template <Dotted T>
Coupled<T> plog1p0(T y) {
  return dispatch([&]<Backend B>() { return renorm_fast(plog1p0_raw<B>(y)); });
}

template <Dotted T>
Twofold<T> tlog1p0(T y) {
  return dispatch([&]<Backend B>() {
    const auto x = plog1p0_raw<B>(y);
    const T u0 = platform::log1p(y);
    return Twofold<T>{u0, correction<T>(x, u0)};
  });
}

template <Dotted T>
Coupled<T> plog1p(Coupled<T> y) {
  return dispatch([&]<Backend B>() { return renorm_fast(plog1p_raw<B>(y)); });
}

template <Dotted T>
Twofold<T> tlog1pp(Coupled<T> y) {
  return dispatch([&]<Backend B>() {
    const auto x = plog1p_raw<B>(y);
    const T u0 = platform::log1p(y.value);
    return Twofold<T>{u0, correction<T>(x, u0)};
  });
}

template <Dotted T>
Twofold<T> tlog1p(Twofold<T> y) {
  return dispatch([&]<Backend B>() { return tlog1p_impl<B>(y); });
}

#define TWOFOLD_INSTANTIATE(T)             \
  template Coupled<T> pexp0(T);            \
  template Twofold<T> texp0(T);            \
  template Twofold<T> texp(Twofold<T>);    \
  template Twofold<T> texpp(Coupled<T>);   \
  template Coupled<T> pexp(Coupled<T>);    \
  template Coupled<T> pexpm10(T);          \
  template Twofold<T> texpm10(T);          \
  template Twofold<T> texpm1(Twofold<T>);  \
  template Twofold<T> texpm1p(Coupled<T>); \
  template Coupled<T> pexpm1(Coupled<T>);  \
  template Coupled<T> plog0(T);            \
  template Twofold<T> tlog0(T);            \
  template Twofold<T> tlogp(Coupled<T>);   \
  template Twofold<T> tlog(Twofold<T>);    \
  template Coupled<T> plog(Coupled<T>);    \
  template Coupled<T> plog1p0(T);          \
  template Twofold<T> tlog1p0(T);          \
  template Twofold<T> tlog1pp(Coupled<T>); \
  template Twofold<T> tlog1p(Twofold<T>);  \
  template Coupled<T> plog1p(Coupled<T>);

TWOFOLD_INSTANTIATE(float)
TWOFOLD_INSTANTIATE(double)
#undef TWOFOLD_INSTANTIATE

}  // namespace twofold
