#include <string_view>

#include "twofold/backend.hpp"
#include "twofold/tables.hpp"

namespace twofold {

namespace detail {
extern const std::string_view kEmbeddedTables64;
extern const std::string_view kEmbeddedTables32;
}  // namespace detail

namespace {

template <Dotted T>
ExpTables<T> load_embedded() {
  ensure_round_to_nearest();
  const auto text = std::is_same_v<T, double> ? detail::kEmbeddedTables64
                                              : detail::kEmbeddedTables32;
  return load_tables<T>(TableDump::parse(text));
}

}  // namespace

template <>
const ExpTables<double>& exp_tables<double>() {
  static const ExpTables<double> tables = load_embedded<double>();
  return tables;
}

template <>
const ExpTables<float>& exp_tables<float>() {
  static const ExpTables<float> tables = load_embedded<float>();
  return tables;
}

}  // namespace twofold
