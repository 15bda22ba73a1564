#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "table.hpp"

using namespace subfox::cli;

TEST(CsvTable, RoundTripsExactly) {
  std::mt19937_64 g(7);
  std::uniform_real_distribution<double> u(-300.0, 300.0);
  std::vector<Row> rows;
  for (int i = 0; i < 500; ++i) rows.push_back({std::pow(10.0, u(g) / 10.0), std::exp(u(g)), "auto"});
  rows.push_back({1.0, 0.0, "hfun"});
  rows.push_back({0.1, 5e-324, "mwright"});
  rows.push_back({2.0, 1.7976931348623157e308, "levy"});
  std::stringstream ss;
  write_csv(ss, rows);
  EXPECT_EQ(read_csv(ss), rows);
}

TEST(CsvTable, SkipsCommentsAndRejectsJunk) {
  std::stringstream ok("x,value,method\n1,2,hfun\n# integral,1\n");
  auto rows = read_csv(ok);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].value, 2.0);
  std::stringstream bad_header("a,b,c\n");
  EXPECT_THROW(read_csv(bad_header), std::runtime_error);
  std::stringstream bad_row("x,value,method\n1;2\n");
  EXPECT_THROW(read_csv(bad_row), std::runtime_error);
}

TEST(CsvTable, SeventeenDigits) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(1.0), "1");
}

TEST(Grid, Shapes) {
  EXPECT_EQ(make_grid(2.0, 5.0, 1, false), std::vector<double>{2.0});
  auto lin = make_grid(0.0, 1.0, 5, false);
  EXPECT_EQ(lin, (std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0}));
  auto lg = make_grid(0.01, 100.0, 5, true);
  EXPECT_EQ(lg.front(), 0.01);
  EXPECT_EQ(lg.back(), 100.0);
  EXPECT_NEAR(lg[2], 1.0, 1e-15);
  EXPECT_THROW(make_grid(1.0, 0.5, 3, false), std::invalid_argument);
  EXPECT_THROW(make_grid(0.0, 1.0, 3, true), std::invalid_argument);
  EXPECT_THROW(make_grid(0.0, 1.0, 0, false), std::invalid_argument);
}
