#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "twofold/eft.hpp"
#include "twofold/tables.hpp"

namespace twofold {

namespace {

constexpr std::string_view kMagic = "twofold-tables";

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view s, int line) {
  std::string buf(s);
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(buf.c_str(), &end, 10);
  if (buf.empty() || *end != '\0' || errno != 0) {
    throw TableError("bad integer '" + buf + "'", line);
  }
  return static_cast<int>(v);
}

template <Dotted T>
T parse_hex(const std::string& s, int line, const std::string& table,
            int index) {
  const bool neg = !s.empty() && s[0] == '-';
  const std::string_view body = std::string_view(s).substr(neg ? 1 : 0);
  if (body.size() < 3 || body.substr(0, 2) != "0x") {
    throw TableError("malformed hex literal '" + s + "'", line, table, index);
  }
  char* end = nullptr;
  errno = 0;
  T v;
  if constexpr (std::is_same_v<T, double>) {
    v = std::strtod(s.c_str(), &end);
  } else {
    v = std::strtof(s.c_str(), &end);
  }
  if (*end != '\0' || !std::isfinite(v) || to_hex(v) != s) {
    throw TableError("malformed hex literal '" + s + "'", line, table, index);
  }
  return v;
}

struct TableSpec {
  const char* name;
  int first;
  int last;
};

template <Dotted T>
std::vector<TableSpec> table_specs() {
  using P = ExpParams<T>;
  return {{"E", P::m_min, P::m_max},
          {"C", P::n_min, P::n_max},
          {"CM1", P::m1_min, P::m1_max},
          {"LN2", 0, 0},
          {"INVFACT", P::N_m1, P::N_m1}};
}

}  // namespace

template <Dotted T>
std::string_view width_tag() {
  return std::is_same_v<T, double> ? "binary64" : "binary32";
}

template <Dotted T>
std::string params_tag() {
  using P = ExpParams<T>;
  std::ostringstream os;
  os << "p=" << P::p << " L=" << P::L << " K_exp=" << P::K_exp
     << " N_exp=" << P::N_exp << " K_m1=" << P::K_m1 << " N_m1=" << P::N_m1;
  return os.str();
}

template <Dotted T>
std::string to_hex(T x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", static_cast<double>(x));
  return buf;
}

template <Dotted T>
bool is_coupled(T value, T error) {
  if (!std::isfinite(value) || !std::isfinite(error)) return false;
  if (value == 0) return error == 0;
  if (value + error != value) return false;
  const T a = std::fabs(value);
  const T ulp = std::nextafter(a, std::numeric_limits<T>::infinity()) - a;
  return std::fabs(error) <= ulp / 2;
}

std::string TableDump::to_text() const {
  std::string out;
  out += std::string(kMagic) + " v" + std::to_string(version) + " " + width +
         " " + params + "\n";
  for (const auto& e : entries) {
    out += e.table + " " + std::to_string(e.index) + " " + e.value_hex + " " +
           e.error_hex + "\n";
  }
  return out;
}

TableDump TableDump::parse(std::string_view text) {
  TableDump dump;
  int line_no = 0;
  bool have_header = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line.empty()) continue;
    const auto tok = split_ws(line);
    if (!have_header) {
      if (tok.size() < 3 || tok[0] != kMagic || tok[1].size() < 2 ||
          tok[1][0] != 'v') {
        throw TableError("missing or malformed header", line_no);
      }
      dump.version = parse_int(tok[1].substr(1), line_no);
      dump.width = std::string(tok[2]);
      for (std::size_t i = 3; i < tok.size(); ++i) {
        if (i > 3) dump.params += ' ';
        dump.params += std::string(tok[i]);
      }
      have_header = true;
      continue;
    }
    if (tok.size() != 4) {
      throw TableError("expected 'TABLE INDEX VALUE ERROR'", line_no);
    }
    dump.entries.push_back({std::string(tok[0]), parse_int(tok[1], line_no),
                            std::string(tok[2]), std::string(tok[3])});
  }
  if (!have_header) throw TableError("empty table dump", 0);
  return dump;
}

template <Dotted T>
TableDump dump_tables(const ExpTables<T>& tables) {
  TableDump dump;
  dump.width = std::string(width_tag<T>());
  dump.params = params_tag<T>();
  auto emit = [&](const char* name, int index, Coupled<T> c) {
    dump.entries.push_back({name, index, to_hex(c.value), to_hex(c.error)});
  };
  auto emit_table = [&](const char* name, const CoupledTable<T>& t) {
    for (int i = t.first; i <= t.last(); ++i) emit(name, i, t[i]);
  };
  emit_table("E", tables.E);
  emit_table("C", tables.C);
  emit_table("CM1", tables.C_m1);
  emit("LN2", 0, tables.ln2);
  emit("INVFACT", ExpParams<T>::N_m1, tables.inv_factorial_m1);
  return dump;
}

template <Dotted T>
ExpTables<T> load_tables(const TableDump& dump) {
  if (dump.version != 1) {
    throw TableError("unsupported dump version " + std::to_string(dump.version), 1);
  }
  if (dump.width != width_tag<T>()) {
    throw TableError("width mismatch: dump is " + dump.width, 1);
  }
  if (dump.params != params_tag<T>()) {
    throw TableError("parameter mismatch: " + dump.params, 1);
  }

  ExpTables<T> out;
  std::vector<Coupled<T>> values;
  std::size_t k = 0;
  for (const auto& spec : table_specs<T>()) {
    values.clear();
    for (int index = spec.first; index <= spec.last; ++index, ++k) {
      const int line = static_cast<int>(k) + 2;
      if (k >= dump.entries.size()) {
        throw TableError("count mismatch: table " + std::string(spec.name) +
                             " ends early",
                         line, spec.name, index);
      }
      const auto& e = dump.entries[k];
      if (e.table != spec.name || e.index != index) {
        throw TableError("expected " + std::string(spec.name) + " " +
                             std::to_string(index) + ", got " + e.table + " " +
                             std::to_string(e.index),
                         line, e.table, e.index);
      }
      const T v = parse_hex<T>(e.value_hex, line, e.table, e.index);
      const T err = parse_hex<T>(e.error_hex, line, e.table, e.index);
      if (!is_coupled(v, err)) {
        throw TableError("entry " + e.table + " " + std::to_string(e.index) +
                             " is not coupled",
                         line, e.table, e.index);
      }
      values.push_back({v, err});
    }
    const std::string_view name = spec.name;
    if (name == "E") out.E = {spec.first, values};
    if (name == "C") out.C = {spec.first, values};
    if (name == "CM1") out.C_m1 = {spec.first, values};
    if (name == "LN2") out.ln2 = values.front();
    if (name == "INVFACT") out.inv_factorial_m1 = values.front();
  }
  if (k != dump.entries.size()) {
    const auto& e = dump.entries[k];
    throw TableError("count mismatch: unexpected trailing entry",
                     static_cast<int>(k) + 2, e.table, e.index);
  }
  return out;
}

template std::string_view width_tag<float>();
template std::string_view width_tag<double>();
template std::string params_tag<float>();
template std::string params_tag<double>();
template std::string to_hex(float);
template std::string to_hex(double);
template bool is_coupled(float, float);
template bool is_coupled(double, double);
template TableDump dump_tables(const ExpTables<float>&);
template TableDump dump_tables(const ExpTables<double>&);
template ExpTables<float> load_tables<float>(const TableDump&);
template ExpTables<double> load_tables<double>(const TableDump&);

}  // namespace twofold
