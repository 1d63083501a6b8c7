#pragma once

// Oracle-driven generation of the exponent tables.

#include "twofold/oracle.hpp"
#include "twofold/tables.hpp"

namespace twofold {

// Every entry is the nearest T to the oracle value together with the
// nearest T to the remainder. Throws std::invalid_argument when
// oracle_precision < 2p + 60 and oracle::OracleError if an evaluation fails.
template <Dotted T>
ExpTables<T> gen_tables(int oracle_precision = oracle::kDefaultPrecision);

extern template ExpTables<float> gen_tables(int);
extern template ExpTables<double> gen_tables(int);

}  // namespace twofold
