#include <array>

#include "twofold/explog.hpp"
#include "twofold/platform.hpp"

namespace twofold {

namespace {

constexpr std::array kFns = {
    Fn::pexp0,   Fn::texp0,   Fn::texp,    Fn::texpp,   Fn::pexp,
    Fn::pexpm10, Fn::texpm10, Fn::texpm1,  Fn::texpm1p, Fn::pexpm1,
    Fn::plog0,   Fn::tlog0,   Fn::tlogp,   Fn::tlog,    Fn::plog,
    Fn::plog1p0, Fn::tlog1p0, Fn::tlog1pp, Fn::tlog1p,  Fn::plog1p,
};

constexpr std::array<std::string_view, kFns.size()> kNames = {
    "pexp0",   "texp0",   "texp",    "texpp",   "pexp",
    "pexpm10", "texpm10", "texpm1",  "texpm1p", "pexpm1",
    "plog0",   "tlog0",   "tlogp",   "tlog",    "plog",
    "plog1p0", "tlog1p0", "tlog1pp", "tlog1p",  "plog1p",
};

}  // namespace

std::span<const Fn> all_fns() noexcept { return kFns; }

std::string_view fn_name(Fn fn) noexcept {
  return kNames[static_cast<std::size_t>(fn)];
}

std::optional<Fn> parse_fn(std::string_view name) noexcept {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return kFns[i];
  }
  return std::nullopt;
}

Family fn_family(Fn fn) noexcept {
  return static_cast<Family>(static_cast<int>(fn) / 5);
}

ArgKind fn_arg_kind(Fn fn) noexcept {
  switch (fn) {
    case Fn::pexp0: case Fn::texp0: case Fn::pexpm10: case Fn::texpm10:
    case Fn::plog0: case Fn::tlog0: case Fn::plog1p0: case Fn::tlog1p0:
      return ArgKind::dotted;
    case Fn::texp: case Fn::texpm1: case Fn::tlog: case Fn::tlog1p:
      return ArgKind::twofold;
    default:
      return ArgKind::coupled;
  }
}

bool fn_reproduces_library(Fn fn) noexcept {
  return fn_name(fn).front() == 't';
}

int width_bits(Width w) noexcept { return w == Width::binary32 ? 32 : 64; }

std::optional<Width> parse_width(int bits) noexcept {
  if (bits == 32) return Width::binary32;
  if (bits == 64) return Width::binary64;
  return std::nullopt;
}

template <Dotted T>
Twofold<T> evaluate(Fn fn, Twofold<T> x) {
  const Coupled<T> c{x.value, x.error};
  switch (fn) {
    case Fn::pexp0: return pexp0(x.value);
    case Fn::texp0: return texp0(x.value);
    case Fn::texp: return texp(x);
    case Fn::texpp: return texpp(c);
    case Fn::pexp: return pexp(c);
    case Fn::pexpm10: return pexpm10(x.value);
    case Fn::texpm10: return texpm10(x.value);
    case Fn::texpm1: return texpm1(x);
    case Fn::texpm1p: return texpm1p(c);
    case Fn::pexpm1: return pexpm1(c);
    case Fn::plog0: return plog0(x.value);
    case Fn::tlog0: return tlog0(x.value);
    case Fn::tlogp: return tlogp(c);
    case Fn::tlog: return tlog(x);
    case Fn::plog: return plog(c);
    case Fn::plog1p0: return plog1p0(x.value);
    case Fn::tlog1p0: return tlog1p0(x.value);
    case Fn::tlog1pp: return tlog1pp(c);
    case Fn::tlog1p: return tlog1p(x);
    case Fn::plog1p: return plog1p(c);
  }
  return {};
}

// Captureless adapters by argument kind.
#define TF_DOTTED(f) \
  [](Twofold<T> x) -> Twofold<T> { return f(x.value); }
#define TF_COUPLED(f) \
  [](Twofold<T> x) -> Twofold<T> { return f(Coupled<T>{x.value, x.error}); }
#define TF_TWOFOLD(f) [](Twofold<T> x) -> Twofold<T> { return f(x); }

template <Dotted T>
FnPointer<T> fn_pointer(Fn fn) noexcept {
  switch (fn) {
    case Fn::pexp0: return TF_DOTTED(pexp0);
    case Fn::texp0: return TF_DOTTED(texp0);
    case Fn::texp: return TF_TWOFOLD(texp);
    case Fn::texpp: return TF_COUPLED(texpp);
    case Fn::pexp: return TF_COUPLED(pexp);
    case Fn::pexpm10: return TF_DOTTED(pexpm10);
    case Fn::texpm10: return TF_DOTTED(texpm10);
    case Fn::texpm1: return TF_TWOFOLD(texpm1);
    case Fn::texpm1p: return TF_COUPLED(texpm1p);
    case Fn::pexpm1: return TF_COUPLED(pexpm1);
    case Fn::plog0: return TF_DOTTED(plog0);
    case Fn::tlog0: return TF_DOTTED(tlog0);
    case Fn::tlogp: return TF_COUPLED(tlogp);
    case Fn::tlog: return TF_TWOFOLD(tlog);
    case Fn::plog: return TF_COUPLED(plog);
    case Fn::plog1p0: return TF_DOTTED(plog1p0);
    case Fn::tlog1p0: return TF_DOTTED(tlog1p0);
    case Fn::tlog1pp: return TF_COUPLED(tlog1pp);
    case Fn::tlog1p: return TF_TWOFOLD(tlog1p);
    case Fn::plog1p: return TF_COUPLED(plog1p);
  }
  return nullptr;
}

#undef TF_DOTTED
#undef TF_COUPLED
#undef TF_TWOFOLD

template <Dotted T>
T library_value(Fn fn, T x) {
  switch (fn_family(fn)) {
    case Family::exp: return platform::exp(x);
    case Family::expm1: return platform::expm1(x);
    case Family::log: return platform::log(x);
    case Family::log1p: return platform::log1p(x);
  }
  return x;
}

template Twofold<float> evaluate(Fn, Twofold<float>);
template Twofold<double> evaluate(Fn, Twofold<double>);
template FnPointer<float> fn_pointer(Fn) noexcept;
template FnPointer<double> fn_pointer(Fn) noexcept;
template float library_value(Fn, float);
template double library_value(Fn, double);

}  // namespace twofold
