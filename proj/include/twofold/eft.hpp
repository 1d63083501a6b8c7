#pragma once

// Error-free transformations and twofold arithmetic.
//
// All routines assume round-to-nearest-even and no contraction of a*b+c into
// fused operations by the compiler (build with -ffp-contract=off). When the
// rounded result of an EFT is not finite, the error part mirrors it instead
// of being computed from infinities.

#include <cassert>
#include <cmath>

#include "twofold/twofold.hpp"

namespace twofold {

namespace detail {

template <Dotted T>
constexpr T pow2(int e) {
  T r = 1;
  for (; e > 0; --e) r *= 2;
  for (; e < 0; ++e) r /= 2;
  return r;
}

}  // namespace detail

// Requires |a| >= |b| or a == 0. Three operations.
template <Dotted T>
inline Twofold<T> fast_two_sum(T a, T b) {
  const T s = a + b;
  if (!std::isfinite(s)) return {s, s};
  const T z = s - a;
  return {s, b - z};
}

// Branch-free six-operation sum for arbitrary a and b.
template <Dotted T>
inline Twofold<T> two_sum(T a, T b) {
  const T s = a + b;
  if (!std::isfinite(s)) return {s, s};
  const T bb = s - a;
  const T aa = s - bb;
  const T db = b - bb;
  const T da = a - aa;
  return {s, da + db};
}

// a - b -> d + t, the corrected subtraction sequence (b# = b + b').
template <Dotted T>
inline Twofold<T> two_diff(T a, T b) {
  const T d = a - b;
  if (!std::isfinite(d)) return {d, d};
  const T b1 = d - a;
  const T a1 = d - b1;
  const T bs = b + b1;
  const T as = a - a1;
  return {d, as - bs};
}

// Dekker split with s = ceil(p/2). Inputs large enough for (2^s+1)*x to
// overflow are scaled down by 2^-(s+1) first and the parts scaled back.
template <Dotted T>
inline SplitPair<T> split(T x) {
  constexpr int s = (kMantissaBits<T> + 1) / 2;
  constexpr T factor = detail::pow2<T>(s) + 1;
  constexpr T limit =
      detail::pow2<T>(std::numeric_limits<T>::max_exponent - 1 - s);
  if (std::fabs(x) > limit) {
    constexpr int k = s + 1;
    // Near the top of the range the high part may round up past the
    // largest finite value; take the next shorter value below instead.
    constexpr int top = std::numeric_limits<T>::max_exponent - k;
    constexpr T ceiling = detail::pow2<T>(top);
    constexpr T step = detail::pow2<T>(top - (kMantissaBits<T> - s));
    const T xs = x * detail::pow2<T>(-k);
    const T a = factor * xs;
    const T b = a - xs;
    T h = a - b;
    if (std::fabs(h) == ceiling) h = std::copysign(ceiling - step, h);
    return {h * detail::pow2<T>(k), (xs - h) * detail::pow2<T>(k)};
  }
  const T a = factor * x;
  const T b = a - x;
  const T h = a - b;
  return {h, x - h};
}

// Requires a single-rounding hardware fma.
template <Dotted T>
inline Twofold<T> two_prod_fma(T x, T y) {
  const T p = x * y;
  if (!std::isfinite(p)) return {p, p};
  return {p, std::fma(x, y, -p)};
}

// Veltkamp product by halves, seven steps.
template <Dotted T>
inline Twofold<T> two_prod_dv(T x, T y) {
  const T z0 = x * y;
  if (!std::isfinite(z0)) return {z0, z0};
  const auto [x0, x1] = split(x);
  const auto [y0, y1] = split(y);
  const T e0 = z0 - x0 * y0;
  const T e1 = e0 - x0 * y1;
  const T e2 = e1 - x1 * y0;
  // + 0 turns a -0 residual into the +0 that fma(x, y, -p) gives.
  return {z0, (x1 * y1 - e2) + T(0)};
}

template <Backend B, Dotted T>
inline Twofold<T> two_prod(T x, T y) {
  if constexpr (B == Backend::fma) {
    return two_prod_fma(x, y);
  } else {
    return two_prod_dv(x, y);
  }
}

// fl(x*y + z) with a single rounding, valid only when x*y and z have
// opposite signs and |z|/2 <= |x*y| <= 2|z|, so that z + p is exact.
template <Dotted T>
inline T fma_sim(T x, T y, T z) {
  const auto [p, t] = two_prod_dv(x, y);
  assert(!std::isfinite(p) || (p == 0 && z == 0) ||
         (std::signbit(p) != std::signbit(z) && std::fabs(z) / 2 <= std::fabs(p) &&
          std::fabs(p) <= 2 * std::fabs(z)));
  return (z + p) + t;
}

// Exact remainder idiom fma(x, y, z) for z ~ -x*y.
template <Backend B, Dotted T>
inline T fused_residual(T x, T y, T z) {
  if constexpr (B == Backend::fma) {
    return std::fma(x, y, z);
  } else {
    return fma_sim(x, y, z);
  }
}

// Requires |x.value| >= |x.error| or x.value == 0.
template <Dotted T>
inline Coupled<T> renorm_fast(Twofold<T> x) {
  const auto r = fast_two_sum(x.value, x.error);
  return {r.value, r.error};
}

template <Dotted T>
inline Coupled<T> renorm(Twofold<T> x) {
  const auto s = two_sum(x.value, x.error);
  const auto r = fast_two_sum(s.value, s.error);
  return {r.value, r.error};
}

// ---------------------------------------------------------------------------
// Twofold arithmetic. The value part is always the plain operation on the
// value parts; the error part assesses its deviation from the exact result.

template <Dotted T>
inline Twofold<T> t_add(Twofold<T> x, Twofold<T> y) {
  const auto s = two_sum(x.value, y.value);
  if (!std::isfinite(s.value)) return s;
  return {s.value, s.error + (x.error + y.error)};
}

template <Dotted T>
inline Twofold<T> t_add_d(Twofold<T> x, T b) {
  const auto s = two_sum(x.value, b);
  if (!std::isfinite(s.value)) return s;
  return {s.value, s.error + x.error};
}

template <Dotted T>
inline Twofold<T> t_sub(Twofold<T> x, Twofold<T> y) {
  const auto d = two_diff(x.value, y.value);
  if (!std::isfinite(d.value)) return d;
  return {d.value, d.error + (x.error - y.error)};
}

template <Dotted T>
inline Twofold<T> t_sub_d(Twofold<T> x, T b) {
  const auto d = two_diff(x.value, b);
  if (!std::isfinite(d.value)) return d;
  return {d.value, d.error + x.error};
}

template <Backend B = kDefaultBackend, Dotted T>
inline Twofold<T> t_mul(Twofold<T> x, Twofold<T> y) {
  const auto p = two_prod<B>(x.value, y.value);
  if (!std::isfinite(p.value)) return p;
  return {p.value, p.error + (x.value * y.error + x.error * y.value)};
}

template <Backend B = kDefaultBackend, Dotted T>
inline Twofold<T> t_mul_d(Twofold<T> x, T b) {
  const auto p = two_prod<B>(x.value, b);
  if (!std::isfinite(p.value)) return p;
  return {p.value, p.error + x.error * b};
}

template <Backend B = kDefaultBackend, Dotted T>
inline Twofold<T> t_div(Twofold<T> x, Twofold<T> y) {
  const T q = x.value / y.value;
  if (!std::isfinite(q)) return {q, q};
  const T r = fused_residual<B>(-q, y.value, x.value);
  return {q, ((r + x.error) - q * y.error) / y.value};
}

template <Backend B = kDefaultBackend, Dotted T>
inline Twofold<T> t_sqrt(Twofold<T> x) {
  if (x.value == 0) {
    if (x.error == 0) return {x.value, T(0)};
    return {x.value, std::sqrt(x.error)};
  }
  const T s = std::sqrt(x.value);
  if (!std::isfinite(s)) return {s, s};
  const T r = fused_residual<B>(-s, s, x.value);
  return {s, (r + x.error) / (2 * s)};
}

}  // namespace twofold
