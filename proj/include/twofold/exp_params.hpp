#pragma once

#include <cstdint>

#include "twofold/twofold.hpp"

namespace twofold {

// Method constants for the coupled exponent cores.
//
//   x = 2^L m + 2^-K n + y,  |y| <= 2^(-K-1)        (exp)
//   x = 2^-K n + y,          |y| <= 2^(-K-1)        (expm1, |x| <= ln 2)
//
// Table index ranges follow from the domain [lo_bound, hi_bound]: m spans
// the coarse exponents, n the fine grid, and the expm1 grid covers
// [-ln 2, ln 2] with one entry past each end.
template <Dotted T>
struct ExpParams;

template <>
struct ExpParams<double> {
  static constexpr int p = 53;
  static constexpr int L = 2;
  static constexpr int K_exp = 5;
  static constexpr int N_exp = 12;
  static constexpr int K_m1 = 7;
  static constexpr int N_m1 = 10;
  // Horner steps evaluated in plain double before switching to twofold.
  static constexpr int dotted_steps = 3;

  // Nearest double below ln 2^-1074 and above ln 2^1024.
  static constexpr double lo_bound = -0x1.74385446d71c4p+9;
  static constexpr double hi_bound = 0x1.62e42fefa39f0p+9;
  // Nearest double to ln 2; threshold of the expm1 table path.
  static constexpr double ln2 = 0x1.62e42fefa39efp-1;

  static constexpr int m_min = -186;
  static constexpr int m_max = 177;
  static constexpr int n_min = -128;
  static constexpr int n_max = 128;
  static constexpr int m1_min = -89;
  static constexpr int m1_max = 89;

  // Smallest magnitude whose error part is still a normal number.
  static constexpr double full_precision_min = 0x1p-969;
};

template <>
struct ExpParams<float> {
  static constexpr int p = 24;
  static constexpr int L = 1;
  static constexpr int K_exp = 5;
  static constexpr int N_exp = 6;
  static constexpr int K_m1 = 7;
  static constexpr int N_m1 = 5;
  static constexpr int dotted_steps = 2;

  static constexpr float lo_bound = -0x1.9d1da0p+6f;
  static constexpr float hi_bound = 0x1.62e430p+6f;
  static constexpr float ln2 = 0x1.62e430p-1f;

  static constexpr int m_min = -51;
  static constexpr int m_max = 44;
  static constexpr int n_min = -64;
  static constexpr int n_max = 64;
  static constexpr int m1_min = -89;
  static constexpr int m1_max = 89;

  static constexpr float full_precision_min = 0x1p-102f;
};

template <Dotted T>
constexpr int exp_table_size() {
  return ExpParams<T>::m_max - ExpParams<T>::m_min + 1;
}

template <Dotted T>
constexpr int c_table_size() {
  return ExpParams<T>::n_max - ExpParams<T>::n_min + 1;
}

template <Dotted T>
constexpr int cm1_table_size() {
  return ExpParams<T>::m1_max - ExpParams<T>::m1_min + 1;
}

static_assert(exp_table_size<double>() == 364);
static_assert(c_table_size<double>() == 257);
static_assert(cm1_table_size<double>() == 179);
static_assert(exp_table_size<float>() == 96);
static_assert(c_table_size<float>() == 129);
static_assert(cm1_table_size<float>() == 179);

// N! must be exact in T for the normalized Taylor coefficients.
constexpr std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

static_assert(factorial(ExpParams<double>::N_exp) < (std::int64_t{1} << 53));
static_assert(factorial(ExpParams<float>::N_exp) < (std::int64_t{1} << 24));

}  // namespace twofold
