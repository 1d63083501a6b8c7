#pragma once

// Twofold exponent and logarithm.
//
// Naming: p-prefixed functions return a coupled result; t-prefixed ones
// return a twofold whose value part is bitwise the host math library's
// answer for the value part of the argument, and whose error part assesses
// the deviation from the exact result for the whole argument. A trailing 0
// means a dotted argument, a trailing p a coupled one.
//
// All functions are total. Domain errors surface as NaN; results that
// overflow saturate to (+inf, +inf); log(0) is (-inf, -inf).
//
// The exact-product backend is chosen per call from active_backend().

#include <optional>
#include <span>
#include <string_view>

#include "twofold/twofold.hpp"

namespace twofold {

// e^x
template <Dotted T> Coupled<T> pexp0(T x);
template <Dotted T> Twofold<T> texp0(T x);
template <Dotted T> Twofold<T> texp(Twofold<T> x);
template <Dotted T> Twofold<T> texpp(Coupled<T> x);
template <Dotted T> Coupled<T> pexp(Coupled<T> x);

// e^x - 1
template <Dotted T> Coupled<T> pexpm10(T x);
template <Dotted T> Twofold<T> texpm10(T x);
template <Dotted T> Twofold<T> texpm1(Twofold<T> x);
template <Dotted T> Twofold<T> texpm1p(Coupled<T> x);
template <Dotted T> Coupled<T> pexpm1(Coupled<T> x);

// ln y
template <Dotted T> Coupled<T> plog0(T y);
template <Dotted T> Twofold<T> tlog0(T y);
template <Dotted T> Twofold<T> tlogp(Coupled<T> y);
template <Dotted T> Twofold<T> tlog(Twofold<T> y);
template <Dotted T> Coupled<T> plog(Coupled<T> y);

// ln(1 + y)
template <Dotted T> Coupled<T> plog1p0(T y);
template <Dotted T> Twofold<T> tlog1p0(T y);
template <Dotted T> Twofold<T> tlog1pp(Coupled<T> y);
template <Dotted T> Twofold<T> tlog1p(Twofold<T> y);
template <Dotted T> Coupled<T> plog1p(Coupled<T> y);

// Standard-like spellings for twofold arguments.
template <Dotted T> Twofold<T> exp(Twofold<T> x) { return texp(x); }
template <Dotted T> Twofold<T> expm1(Twofold<T> x) { return texpm1(x); }
template <Dotted T> Twofold<T> log(Twofold<T> y) { return tlog(y); }
template <Dotted T> Twofold<T> log1p(Twofold<T> y) { return tlog1p(y); }

#define TWOFOLD_DECLARE_EXTERN(T)                 \
  extern template Coupled<T> pexp0(T);            \
  extern template Twofold<T> texp0(T);            \
  extern template Twofold<T> texp(Twofold<T>);    \
  extern template Twofold<T> texpp(Coupled<T>);   \
  extern template Coupled<T> pexp(Coupled<T>);    \
  extern template Coupled<T> pexpm10(T);          \
  extern template Twofold<T> texpm10(T);          \
  extern template Twofold<T> texpm1(Twofold<T>);  \
  extern template Twofold<T> texpm1p(Coupled<T>); \
  extern template Coupled<T> pexpm1(Coupled<T>);  \
  extern template Coupled<T> plog0(T);            \
  extern template Twofold<T> tlog0(T);            \
  extern template Twofold<T> tlogp(Coupled<T>);   \
  extern template Twofold<T> tlog(Twofold<T>);    \
  extern template Coupled<T> plog(Coupled<T>);    \
  extern template Coupled<T> plog1p0(T);          \
  extern template Twofold<T> tlog1p0(T);          \
  extern template Twofold<T> tlog1pp(Coupled<T>); \
  extern template Twofold<T> tlog1p(Twofold<T>);  \
  extern template Coupled<T> plog1p(Coupled<T>);

TWOFOLD_DECLARE_EXTERN(float)
TWOFOLD_DECLARE_EXTERN(double)
#undef TWOFOLD_DECLARE_EXTERN

// ---------------------------------------------------------------------------
// Function identifiers, used by the audit harness and the CLI.

enum class Fn {
  pexp0, texp0, texp, texpp, pexp,
  pexpm10, texpm10, texpm1, texpm1p, pexpm1,
  plog0, tlog0, tlogp, tlog, plog,
  plog1p0, tlog1p0, tlog1pp, tlog1p, plog1p,
};

enum class Width { binary32, binary64 };

enum class Family { exp, expm1, log, log1p };

// What the function reads from its argument.
enum class ArgKind { dotted, coupled, twofold };

struct FnId {
  Fn fn = Fn::texp;
  Width width = Width::binary64;

  friend bool operator==(const FnId&, const FnId&) = default;
};

std::span<const Fn> all_fns() noexcept;
std::string_view fn_name(Fn fn) noexcept;
std::optional<Fn> parse_fn(std::string_view name) noexcept;
Family fn_family(Fn fn) noexcept;
ArgKind fn_arg_kind(Fn fn) noexcept;
// True for t-prefixed functions, whose value part is the library's.
bool fn_reproduces_library(Fn fn) noexcept;
int width_bits(Width w) noexcept;
std::optional<Width> parse_width(int bits) noexcept;

// Calls fn on x. Dotted-argument functions read x.value only; the
// coupled-argument ones expect x to be coupled already.
template <Dotted T>
Twofold<T> evaluate(Fn fn, Twofold<T> x);

template <Dotted T>
using FnPointer = Twofold<T> (*)(Twofold<T>);

// evaluate(fn, .) bound once, for tight loops.
template <Dotted T>
FnPointer<T> fn_pointer(Fn fn) noexcept;

// The host library function of fn's family applied to a dotted argument.
template <Dotted T>
T library_value(Fn fn, T x);

extern template Twofold<float> evaluate(Fn, Twofold<float>);
extern template Twofold<double> evaluate(Fn, Twofold<double>);
extern template FnPointer<float> fn_pointer(Fn) noexcept;
extern template FnPointer<double> fn_pointer(Fn) noexcept;
extern template float library_value(Fn, float);
extern template double library_value(Fn, double);

}  // namespace twofold
