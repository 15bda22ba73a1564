#include "table.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace subfox::cli {

std::string format_double(double v) {
  char buf[32];
  auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, r.ptr);
}

void write_csv(std::ostream& out, const std::vector<Row>& rows) {
  out << "x,value,method\n";
  for (const Row& r : rows) out << format_double(r.x) << ',' << format_double(r.value) << ',' << r.method << '\n';
}

namespace {

double parse_double(const std::string& s, int line) {
  double v = 0.0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size()) {
    // from_chars rejects "inf"/"nan" spellings in some libstdc++ builds.
    if (s == "inf") return HUGE_VAL;
    if (s == "-inf") return -HUGE_VAL;
    if (s == "nan" || s == "-nan") return NAN;
    throw std::runtime_error("csv line " + std::to_string(line) + ": bad number '" + s + "'");
  }
  return v;
}

}  // namespace

std::vector<Row> read_csv(std::istream& in) {
  std::string line;
  int n = 0;
  bool header = false;
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      if (line != "x,value,method") throw std::runtime_error("csv: unexpected header '" + line + "'");
      header = true;
      continue;
    }
    auto a = line.find(',');
    auto b = a == std::string::npos ? a : line.find(',', a + 1);
    if (b == std::string::npos) throw std::runtime_error("csv line " + std::to_string(n) + ": expected 3 fields");
    rows.push_back({parse_double(line.substr(0, a), n), parse_double(line.substr(a + 1, b - a - 1), n),
                    line.substr(b + 1)});
  }
  if (!header) throw std::runtime_error("csv: missing header");
  return rows;
}

std::vector<double> make_grid(double lo, double hi, int n, bool log_spaced) {
  if (n < 1) throw std::invalid_argument("grid: need at least one point");
  if (n == 1) return {lo};
  if (!(hi > lo)) throw std::invalid_argument("grid: upper end must exceed lower end");
  if (log_spaced && !(lo > 0.0)) throw std::invalid_argument("grid: log spacing needs a positive lower end");
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double u = static_cast<double>(i) / (n - 1);
    xs[static_cast<std::size_t>(i)] = log_spaced ? std::exp(std::log(lo) + u * (std::log(hi) - std::log(lo)))
                                                 : lo + u * (hi - lo);
  }
  xs.front() = lo;
  xs.back() = hi;
  return xs;
}

}  // namespace subfox::cli
