#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "twofold/exp_params.hpp"
#include "twofold/twofold.hpp"

namespace twofold {

// Coupled entries addressed by a signed index in [first, first + size).
template <Dotted T>
struct CoupledTable {
  int first = 0;
  std::vector<Coupled<T>> entries;

  int last() const { return first + static_cast<int>(entries.size()) - 1; }
  const Coupled<T>& operator[](int i) const { return entries[i - first]; }
  Coupled<T>& operator[](int i) { return entries[i - first]; }

  friend bool operator==(const CoupledTable&, const CoupledTable&) = default;
};

// E[m] ~ e^(2^L m), C[n] ~ e^(n/2^K)/N!, C_m1[n] ~ e^(n/2^K_m1) - 1, plus
// the coupled constants ln 2 and 1/N_m1!.
template <Dotted T>
struct ExpTables {
  CoupledTable<T> E;
  CoupledTable<T> C;
  CoupledTable<T> C_m1;
  Coupled<T> ln2;
  Coupled<T> inv_factorial_m1;

  friend bool operator==(const ExpTables&, const ExpTables&) = default;
};

// Text form of the tables: a header line, then one line per entry,
//   TABLE INDEX VALUE_HEX ERROR_HEX
// with C99 hexadecimal floating-point literals in canonical "%a" form.
struct TableDump {
  struct Entry {
    std::string table;
    int index = 0;
    std::string value_hex;
    std::string error_hex;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  int version = 1;
  std::string width;   // "binary32" or "binary64"
  std::string params;  // "p=53 L=2 K_exp=5 N_exp=12 K_m1=7 N_m1=10"
  std::vector<Entry> entries;

  std::string to_text() const;
  static TableDump parse(std::string_view text);

  friend bool operator==(const TableDump&, const TableDump&) = default;
};

// Raised for malformed dumps. line is 1-based (0 when not line specific);
// table/index name the offending entry when there is one.
class TableError : public std::runtime_error {
 public:
  TableError(const std::string& what, int line, std::string table = {},
             int index = 0)
      : std::runtime_error(what), line_(line), table_(std::move(table)),
        index_(index) {}

  int line() const noexcept { return line_; }
  const std::string& table() const noexcept { return table_; }
  int index() const noexcept { return index_; }

 private:
  int line_;
  std::string table_;
  int index_;
};

template <Dotted T>
std::string_view width_tag();

template <Dotted T>
std::string params_tag();

// Canonical hexadecimal literal of x (glibc "%a" of x widened to double).
template <Dotted T>
std::string to_hex(T x);

// True when fl(value + error) == value and |error| <= ulp(value)/2.
template <Dotted T>
bool is_coupled(T value, T error);

template <Dotted T>
TableDump dump_tables(const ExpTables<T>& tables);

// Validates header, per-table counts and index order, literal syntax and
// the coupled invariant of every entry.
template <Dotted T>
ExpTables<T> load_tables(const TableDump& dump);

// Tables parsed from the dumps compiled into the library, loaded once.
template <Dotted T>
const ExpTables<T>& exp_tables();

}  // namespace twofold
