#include <gtest/gtest.h>

#include <sstream>

#include "hydrorad/errors.hpp"
#include "hydrorad/report/datasets.hpp"
#include "hydrorad/report/format.hpp"
#include "hydrorad/report/records.hpp"
#include "hydrorad/report/spectroscopic.hpp"
#include "json.hpp"

using namespace hydrorad;
using namespace hydrorad::report;

TEST(Labels, RoundTripUpToTwenty) {
  for (int l = 0; l <= kMaxLabelledL; ++l) {
    const int n = l + 1 + l % 3;
    const auto text = format_label(n, l);
    EXPECT_EQ(parse_label(text), (SpectroscopicLabel{n, l})) << text;
  }
  for (char c = 'a'; c <= 'z'; ++c) {
    try {
      EXPECT_EQ(orbital_letter(orbital_from_letter(c)), c);
    } catch (const ParseError&) {
    }
  }
}

TEST(Labels, SkipsJ) {
  EXPECT_EQ(parse_label("8k"), (SpectroscopicLabel{8, 7}));
  EXPECT_EQ(parse_label("7i"), (SpectroscopicLabel{7, 6}));
  EXPECT_EQ(parse_label("12l"), (SpectroscopicLabel{12, 8}));
  EXPECT_EQ(format_label(9, 5), "9h");
  EXPECT_THROW(parse_label("3j"), ParseError);
}

TEST(Labels, Malformed) {
  for (const char* bad : {"", "d", "3", "0s", "-1s", "3D", "3dd", " 3d", "+3d", "x3"}) {
    EXPECT_THROW(parse_label(bad), ParseError) << bad;
  }
  EXPECT_THROW(orbital_letter(21), ParseError);
}

TEST(Format, TableStyle) {
  EXPECT_EQ(format_table_value(594.09), "594.");
  EXPECT_EQ(format_table_value(61.83), "61.8");
  EXPECT_EQ(format_table_value(1.0004), "1.00");
  EXPECT_EQ(format_table_value(0.5741), "0.574");
  EXPECT_EQ(format_table_value(0.04712), "0.047");
  EXPECT_EQ(format_table_value(0.0998), "0.10");
  EXPECT_EQ(format_table_value(5.527e-5), "5.5(-5)");
  EXPECT_EQ(format_table_value(0.0052), "5.2(-3)");
  EXPECT_EQ(format_table_value(0.00996), "0.010");
  EXPECT_EQ(format_compact_value(0.0214), "2.1(-2)");
  EXPECT_EQ(format_compact_value(3.05), "3.05");
}

TEST(Format, MachineStyle) {
  EXPECT_EQ(format_sig10(594.0912345678), "594.0912346");
  EXPECT_EQ(format_sig10(5.527123456789e-5), "5.527123457e-05");
  EXPECT_EQ(round_sig10(1.23456789012345), 1.23456789);
}

TEST(Records, CsvAndJson) {
  RecordTable t{{"a", "b", "c"}, {{std::string("x,y"), 3L, 0.1}, {std::string("z"), -1L, 1.0 / 3.0}}};
  std::ostringstream csv;
  write_csv(csv, t);
  EXPECT_EQ(csv.str(), "a,b,c\n\"x,y\",3,0.1\nz,-1,0.3333333333\n");
  std::ostringstream js;
  write_json(js, t, {"codata2018", "test"});
  const auto doc = nlohmann::json::parse(js.str());
  EXPECT_EQ(doc["metadata"]["constants"], "codata2018");
  EXPECT_EQ(doc["metadata"]["version"], library_version());
  ASSERT_EQ(doc["records"].size(), 2u);
  EXPECT_EQ(doc["records"][1]["b"], -1);
  EXPECT_DOUBLE_EQ(doc["records"][1]["c"].get<double>(), 0.3333333333);
  // field order mirrors the columns
  EXPECT_LT(js.str().find("\"a\""), js.str().find("\"c\""));
}

TEST(Datasets, TableOneShape) {
  const auto rows = table1_rows();
  ASSERT_EQ(rows.size(), 24u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int expected_dl = i < 8 ? -2 : i < 16 ? 0 : 2;
    EXPECT_EQ(rows[i].transition.delta_l(), expected_dl);
    EXPECT_GT(rows[i].rate_qm, 0.0);
    EXPECT_GT(rows[i].rate_scl, 0.0);
  }
  const auto text = table1_text(rows);
  EXPECT_NE(text.find("6d -> 1s"), std::string::npos);
  EXPECT_NE(text.find("112."), std::string::npos);
  EXPECT_NE(text.find("107."), std::string::npos);
  EXPECT_NE(text.find("2.0(-4)"), std::string::npos);
  EXPECT_NE(text.find("9.5(-4)"), std::string::npos);
  EXPECT_NE(text.find("2.1(-2)"), std::string::npos);
  const auto rec = table1_records(rows);
  EXPECT_EQ(rec.columns, (std::vector<std::string>{"label_i", "label_f", "delta_l", "rate_qm", "rate_scl"}));
}

TEST(Datasets, TransitionRatesSelectionErrors) {
  EXPECT_THROW(transition_rates(Level(1, 3, 2), Level(1, 2, 1), RateMethod::both), SelectionRuleError);
  EXPECT_THROW(transition_rates(Level(1, 3, 0), Level(1, 1, 0), RateMethod::qm), SelectionRuleError);
  EXPECT_THROW(transition_rates(Level(1, 3, 2), Level(1, 3, 0), RateMethod::qm), DomainError);
  const auto r = transition_rates(Level(1, 5, 3), Level(1, 4, 3), RateMethod::both);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(r[0].rate, 0.153, 0.001);
  EXPECT_NEAR(r[1].rate, 0.150, 0.001);
}

TEST(Datasets, BranchingPanelsNormalized) {
  const auto pts = branching_dataset(Level(1, 10, 4));
  for (const char* s : {"quantum", "fourier", "rescaled"}) {
    double total = 0.0, split = 0.0;
    for (const auto& p : pts) {
      if (p.series != s) continue;
      (p.panel == "total" ? total : split) += p.branching_percent;
    }
    EXPECT_NEAR(total, 100.0, 1e-6) << s;
    EXPECT_NEAR(split, 100.0, 1e-6) << s;
  }
}
