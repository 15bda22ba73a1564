#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subfox::cli {

struct Row {
  double x = 0.0;
  double value = 0.0;
  std::string method;

  bool operator==(const Row&) const = default;
};

// Header "x,value,method"; numbers carry 17 significant digits so a parse
// of the output reproduces every double exactly.
void write_csv(std::ostream& out, const std::vector<Row>& rows);

// Lines starting with '#' are skipped. Throws std::runtime_error on a
// malformed header or row.
std::vector<Row> read_csv(std::istream& in);

std::string format_double(double v);

// Evenly spaced (or log-spaced) grid of n points on [lo, hi]; n = 1 gives {lo}.
std::vector<double> make_grid(double lo, double hi, int n, bool log_spaced);

}  // namespace subfox::cli
