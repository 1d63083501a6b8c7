#pragma once

#include <concepts>
#include <limits>

namespace twofold {

// A "dotted" number is a plain float or double.
template <typename T>
concept Dotted = std::same_as<T, float> || std::same_as<T, double>;

// Pair value+error representing the real number value+error. No magnitude
// ordering between the parts is implied; a NaN value marks a domain error
// whatever the error part holds.
template <Dotted T>
struct Twofold {
  T value{};
  T error{};

  friend bool operator==(const Twofold&, const Twofold&) = default;
};

// Renormalized twofold: rounding value+error to nearest-even in T gives
// exactly value, hence |error| <= ulp(value)/2.
template <Dotted T>
struct Coupled {
  T value{};
  T error{};

  constexpr operator Twofold<T>() const { return {value, error}; }

  friend bool operator==(const Coupled&, const Coupled&) = default;
};

// Dekker split: hi+lo equals the input exactly, each part holding at most
// ceil(p/2) significant bits.
template <Dotted T>
struct SplitPair {
  T hi{};
  T lo{};
};

template <Dotted T>
inline constexpr int kMantissaBits = std::numeric_limits<T>::digits;

// Exact-product strategy used by every twofold multiply, divide and square
// root. The Dekker-Veltkamp backend never calls a platform fma routine.
enum class Backend { fma, dekker_veltkamp };

#ifdef TWOFOLD_HAVE_FMA
inline constexpr bool kFmaCompiled = true;
#else
inline constexpr bool kFmaCompiled = false;
#endif

inline constexpr Backend kDefaultBackend =
    kFmaCompiled ? Backend::fma : Backend::dekker_veltkamp;

}  // namespace twofold
