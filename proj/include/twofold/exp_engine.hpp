#pragma once

// Coupled-precision exponent cores.
//
// pexp0(x) evaluates e^x as E[m] * (C[n] * T(y)) where
//   x = 2^L m + 2^-K n + y     (exact decomposition),
//   E[m] ~ e^(2^L m), C[n] ~ e^(n 2^-K) / N!, T(y) ~ N! e^y.
// T is a Taylor polynomial whose coefficients N!/k! are integers exact in
// the working format, so Horner steps multiply and add twofolds by dotted
// numbers only.
//
// pexpm10(x) for |x| <= ln 2 uses x = 2^-K n + y and
//   e^x - 1 = C T + (C + T),  C = e^(n 2^-K) - 1,  T = e^y - 1.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>

#include "twofold/eft.hpp"
#include "twofold/exp_params.hpp"
#include "twofold/tables.hpp"

namespace twofold::engine {

// x == 2^L m + 2^-K n + y exactly, |y| <= 2^(-K-1), m and n signed like x.
template <Dotted T>
struct ExpDecomposition {
  std::int64_t m = 0;
  std::int64_t n = 0;
  T y = 0;
};

// Requires lo_bound <= x <= hi_bound.
template <Dotted T>
inline ExpDecomposition<T> decompose_exp(T x) {
  using P = ExpParams<T>;
  constexpr T scale = detail::pow2<T>(P::K_exp);
  constexpr std::int64_t shift = P::L + P::K_exp;
  constexpr std::int64_t mask = (std::int64_t{1} << shift) - 1;
  const T big_m = std::nearbyint(x * scale);
  const T y = x - big_m / scale;  // exact
  const auto mm = static_cast<std::int64_t>(big_m);
  const std::int64_t a = mm < 0 ? -mm : mm;
  const std::int64_t sign = mm < 0 ? -1 : 1;
  return {sign * (a >> shift), sign * (a & mask), y};
}

// Requires |x| <= ln 2.
template <Dotted T>
inline ExpDecomposition<T> decompose_expm1(T x) {
  using P = ExpParams<T>;
  constexpr T scale = detail::pow2<T>(P::K_m1);
  const T n = std::nearbyint(x * scale);
  return {0, static_cast<std::int64_t>(n), x - n / scale};
}

// Twofold approximation of N! e^y. The first `dotted_steps` Horner steps
// run in plain arithmetic; their rounding is scaled by high powers of the
// small y. Coefficients dominate every partial product, so each twofold
// step adds its coefficient with a fast two-sum.
template <Backend B = kDefaultBackend, Dotted T>
inline Twofold<T> taylor_exp(T y, int degree,
                             int dotted_steps = ExpParams<T>::dotted_steps) {
  // Coefficient of y^k is N!/k!; walk k = N-1 .. 0.
  T coef = static_cast<T>(degree);
  int k = degree - 1;
  Twofold<T> acc = fast_two_sum(coef, y);
  if (dotted_steps > 0) {
    T h = acc.value;
    for (int step = 1; k > 0 && step < dotted_steps; ++step) {
      coef *= static_cast<T>(k);
      --k;
      h = h * y + coef;
    }
    acc = {h, 0};
  }
  while (k > 0) {
    coef *= static_cast<T>(k);
    --k;
    const auto prod = t_mul_d<B>(acc, y);
    const auto s = fast_two_sum(coef, prod.value);
    acc = {s.value, s.error + prod.error};
  }
  return acc;
}

// Twofold approximation of e^y - 1: the Horner scheme of taylor_exp without
// its constant term, times y, scaled by the coupled 1/N!.
template <Backend B = kDefaultBackend, Dotted T>
inline Twofold<T> taylor_expm1(T y, int degree, Coupled<T> inv_factorial,
                               int dotted_steps = ExpParams<T>::dotted_steps) {
  T coef = static_cast<T>(degree);
  int k = degree - 1;
  Twofold<T> acc = fast_two_sum(coef, y);
  if (dotted_steps > 0) {
    T h = acc.value;
    for (int step = 1; k > 1 && step < dotted_steps; ++step) {
      coef *= static_cast<T>(k);
      --k;
      h = h * y + coef;
    }
    acc = {h, 0};
  }
  while (k > 1) {
    coef *= static_cast<T>(k);
    --k;
    const auto prod = t_mul_d<B>(acc, y);
    const auto s = fast_two_sum(coef, prod.value);
    acc = {s.value, s.error + prod.error};
  }
  return t_mul<B>(t_mul_d<B>(acc, y), Twofold<T>(inv_factorial));
}

// Coupled 1/n! computed from an exact remainder: q = fl(1/f), r = 1 - q f
// exactly, error = fl(r / f).
template <Backend B = kDefaultBackend, Dotted T>
inline Coupled<T> inverse_factorial(int n) {
  const T f = static_cast<T>(factorial(n));
  const T q = T(1) / f;
  const T r = fused_residual<B>(-q, f, T(1));
  return {q, r / f};
}

// Coupled e^x for a dotted argument: (0,0) below lo_bound, (+inf,+inf)
// above hi_bound.
template <Backend B = kDefaultBackend, Dotted T>
inline Coupled<T> pexp0(T x) {
  using P = ExpParams<T>;
  if (std::isnan(x)) return {x, x};
  if (x == 0) return {T(1), T(0)};
  if (x < P::lo_bound) return {T(0), T(0)};
  if (x > P::hi_bound) {
    constexpr T inf = std::numeric_limits<T>::infinity();
    return {inf, inf};
  }
  const auto& tables = exp_tables<T>();
  const auto r = decompose_exp(x);
  const Twofold<T> e = tables.E[static_cast<int>(r.m)];
  const Twofold<T> c = tables.C[static_cast<int>(r.n)];
  const auto t = taylor_exp<B>(r.y, P::N_exp);
  return renorm_fast(t_mul<B>(e, t_mul<B>(c, t)));
}

// Coupled e^x - 1 for a dotted argument. Outside [-ln 2, ln 2] this is
// pexp0(x) - 1 in twofold arithmetic, renormalized.
template <Backend B = kDefaultBackend, Dotted T>
inline Coupled<T> pexpm10(T x) {
  using P = ExpParams<T>;
  if (std::isnan(x)) return {x, x};
  if (!(std::fabs(x) <= P::ln2)) {
    return renorm(t_add_d(Twofold<T>(pexp0<B>(x)), T(-1)));
  }
  const auto& tables = exp_tables<T>();
  const auto r = decompose_expm1(x);
  const Twofold<T> c = tables.C_m1[static_cast<int>(r.n)];
  const auto t =
      taylor_expm1<B>(r.y, P::N_m1, tables.inv_factorial_m1);
  return renorm_fast(t_add(t_mul<B>(c, t), t_add(c, t)));
}

}  // namespace twofold::engine
