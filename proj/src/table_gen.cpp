#include "twofold/table_gen.hpp"

#include <stdexcept>
#include <string>

namespace twofold {

namespace {

using oracle::HPValue;

// n / 2^k in the oracle's precision, exact.
HPValue grid_point(long n, int k, int precision) {
  HPValue x = HPValue::from_int(n, precision);
  mpfr_div_2si(x.get(), x.get(), k, MPFR_RNDN);
  return x;
}

template <Dotted T>
Coupled<T> checked(const HPValue& x, const char* table, int index) {
  if (!x.is_finite()) {
    throw oracle::OracleError(std::string("non-finite oracle value for ") +
                              table + "[" + std::to_string(index) + "]");
  }
  return oracle::round_coupled<T>(x);
}

}  // namespace

template <Dotted T>
ExpTables<T> gen_tables(int oracle_precision) {
  using P = ExpParams<T>;
  if (oracle_precision < 2 * P::p + 60) {
    throw std::invalid_argument("oracle precision below 2p + 60 bits");
  }
  const int prec = oracle_precision;
  ExpTables<T> t;

  t.E.first = P::m_min;
  for (int m = P::m_min; m <= P::m_max; ++m) {
    const auto e = oracle::hp_exp(grid_point(m, -P::L, prec), prec);
    t.E.entries.push_back(checked<T>(e, "E", m));
  }

  const HPValue nfact = HPValue::from_int(factorial(P::N_exp), prec);
  t.C.first = P::n_min;
  for (int n = P::n_min; n <= P::n_max; ++n) {
    const auto e = oracle::hp_exp(grid_point(n, P::K_exp, prec), prec);
    t.C.entries.push_back(checked<T>(e / nfact, "C", n));
  }

  t.C_m1.first = P::m1_min;
  for (int n = P::m1_min; n <= P::m1_max; ++n) {
    const auto e = oracle::hp_expm1(grid_point(n, P::K_m1, prec), prec);
    t.C_m1.entries.push_back(checked<T>(e, "CM1", n));
  }

  t.ln2 = checked<T>(oracle::hp_ln2(prec), "LN2", 0);
  const HPValue one = HPValue::from_int(1, prec);
  t.inv_factorial_m1 = checked<T>(
      one / HPValue::from_int(factorial(P::N_m1), prec), "INVFACT", P::N_m1);
  return t;
}

template ExpTables<float> gen_tables(int);
template ExpTables<double> gen_tables(int);

}  // namespace twofold
