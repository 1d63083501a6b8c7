#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "twofold/table_gen.hpp"
#include "twofold/tables.hpp"

namespace {

using namespace twofold;

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

const std::string kData = TWOFOLD_DATA_DIR;

template <Dotted T>
std::string dump_path() {
  return kData + (std::is_same_v<T, double> ? "/tables_binary64.txt"
                                            : "/tables_binary32.txt");
}

template <Dotted T>
class TablesTest : public ::testing::Test {};

using Widths = ::testing::Types<double, float>;
TYPED_TEST_SUITE(TablesTest, Widths);

TYPED_TEST(TablesTest, SizesMatchParams) {
  using T = TypeParam;
  const auto& t = exp_tables<T>();
  EXPECT_EQ(t.E.entries.size(), std::size_t(exp_table_size<T>()));
  EXPECT_EQ(t.C.entries.size(), std::size_t(c_table_size<T>()));
  EXPECT_EQ(t.C_m1.entries.size(), std::size_t(cm1_table_size<T>()));
  EXPECT_EQ(t.E[0], (Coupled<T>{1, 0}));
  EXPECT_EQ(t.C_m1[0], (Coupled<T>{0, 0}));
}

TYPED_TEST(TablesTest, RegenerationIsDeterministic) {
  using T = TypeParam;
  const std::string a = dump_tables(gen_tables<T>()).to_text();
  const std::string b = dump_tables(gen_tables<T>()).to_text();
  EXPECT_EQ(a, b);
  // A wider oracle rounds to the same entries.
  EXPECT_EQ(dump_tables(gen_tables<T>(400)).to_text(), a);
}

TYPED_TEST(TablesTest, CheckedInDumpMatchesRegeneration) {
  using T = TypeParam;
  const std::string disk = read_file(dump_path<T>());
  ASSERT_FALSE(disk.empty());
  EXPECT_EQ(dump_tables(gen_tables<T>()).to_text(), disk);
}

TYPED_TEST(TablesTest, EmbeddedTablesMatchGenerated) {
  using T = TypeParam;
  EXPECT_EQ(exp_tables<T>(), gen_tables<T>());
}

TYPED_TEST(TablesTest, DumpParseRoundTrip) {
  using T = TypeParam;
  const TableDump d = dump_tables(exp_tables<T>());
  const std::string text = d.to_text();
  const TableDump back = TableDump::parse(text);
  EXPECT_EQ(back, d);
  EXPECT_EQ(back.to_text(), text);
  EXPECT_EQ(dump_tables(load_tables<T>(back)).to_text(), text);
}

TYPED_TEST(TablesTest, EveryEntryIsCoupled) {
  using T = TypeParam;
  const auto& t = exp_tables<T>();
  for (const auto* table : {&t.E, &t.C, &t.C_m1}) {
    for (int i = table->first; i <= table->last(); ++i) {
      ASSERT_TRUE(is_coupled((*table)[i].value, (*table)[i].error)) << i;
    }
  }
}

TEST(Tables, SpotCheckC32) {
  // C[32] * 12! ~ e
  const auto& c = exp_tables<double>().C[32];
  using oracle::HPValue;
  const HPValue f = HPValue::from_int(479001600, 300);
  const HPValue got = (HPValue(c.value, 300) + HPValue(c.error, 300)) * f;
  const HPValue e = oracle::hp_exp(HPValue::from_int(1, 300), 300);
  EXPECT_LE(((got - e) / e).abs().to_double(), 0x1p-104);
}

TEST(Tables, CorruptErrorFieldNamesIndex) {
  TableDump d = dump_tables(exp_tables<double>());
  auto it = std::find_if(d.entries.begin(), d.entries.end(), [](const auto& e) {
    return e.table == "C" && e.index == 17;
  });
  ASSERT_NE(it, d.entries.end());
  it->error_hex = it->value_hex;  // |error| == |value|: not coupled
  try {
    load_tables<double>(TableDump::parse(d.to_text()));
    FAIL() << "corrupt dump accepted";
  } catch (const TableError& e) {
    EXPECT_EQ(e.table(), "C");
    EXPECT_EQ(e.index(), 17);
    EXPECT_NE(std::string(e.what()).find("C 17"), std::string::npos);
  }
}

TEST(Tables, MalformedInputsRejected) {
  const std::string good = dump_tables(exp_tables<float>()).to_text();
  auto expect_reject = [](const std::string& text) {
    EXPECT_THROW(load_tables<float>(TableDump::parse(text)), TableError)
        << text.substr(0, 80);
  };
  // Non-canonical literal.
  std::string s = good;
  s.replace(s.find("E 0 0x1p+0"), 10, "E 0 0x2p-1");
  expect_reject(s);
  // Missing entry.
  s = good;
  const auto pos = s.find("\nC 3 ");
  s.erase(pos, s.find('\n', pos + 1) - pos);
  expect_reject(s);
  // Wrong width.
  expect_reject(dump_tables(exp_tables<double>()).to_text());
  // Empty.
  EXPECT_THROW(TableDump::parse(""), TableError);
}

TEST(Tables, GenerationRejectsLowPrecision) {
  EXPECT_THROW(gen_tables<double>(160), std::invalid_argument);
  EXPECT_NO_THROW(gen_tables<float>(108));
}

}  // namespace
