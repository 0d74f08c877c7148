#include "acadpop/tables.hpp"

#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace acadpop {
namespace {

TEST(Tables, NumberFormatting) {
  EXPECT_EQ(format_number(1.0), "1");
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(2.0 / 3), "0.6666666666666666");
  EXPECT_EQ(format_number(std::optional<double>{}), "NA");
  EXPECT_EQ(std::stod(format_number(1.0 / 7)), 1.0 / 7);
}

TEST(Tables, CsvLayoutAndQuoting) {
  std::ostringstream out;
  CsvWriter csv(out, {{"window", "2000:2009"}}, {"a", "b"});
  csv.cell("x,y").cell("say \"hi\"").end_row();
  csv.cell(1).cell(std::optional<double>{}).end_row();
  EXPECT_EQ(out.str(), "# window: 2000:2009\na,b\n\"x,y\",\"say \"\"hi\"\"\"\n1,NA\n");
}

TEST(Tables, MuMatrixLayout) {
  const auto c = testing::hand_fixture();
  std::ostringstream out;
  write_mu_matrix_csv(out, {}, p_zero_surface(c));
  std::istringstream lines(out.str());
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  EXPECT_EQ(header.rfind("s\\t,", 0), 0u);
  EXPECT_EQ(first.rfind("2000,", 0), 0u);
}

TEST(Tables, ImrTableRows) {
  std::ostringstream out;
  write_imr_csv(out, {}, imr_by_year(testing::hand_fixture()));
  EXPECT_NE(out.str().find("\n2001,0.3333333333333333,3,1,0\n"), std::string::npos);
  EXPECT_NE(out.str().find("\n2005,1,1,1,1\n"), std::string::npos);
}

}  // namespace
}  // namespace acadpop
