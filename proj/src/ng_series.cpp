#include "kunz/ng_series.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kunz {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

Count parse_count(std::string_view field, unsigned line_no, const char* what) {
  field = trim(field);
  Count value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw std::invalid_argument("ng series line " + std::to_string(line_no) + ": bad " +
                                what + " field '" + std::string(field) + "'");
  return value;
}

}  // namespace

NgSeries parse_ng_series(std::istream& in) {
  NgSeries series;
  std::string line;
  unsigned line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;

    const std::size_t comma = text.find(',');
    if (comma == std::string_view::npos)
      throw std::invalid_argument("ng series line " + std::to_string(line_no) +
                                  ": expected 'g,n' but found '" + std::string(text) + "'");
    std::string_view rest = text.substr(comma + 1);
    const std::size_t next_comma = rest.find(',');
    if (next_comma != std::string_view::npos) rest = rest.substr(0, next_comma);

    const Count genus = parse_count(text.substr(0, comma), line_no, "genus");
    const Count value = parse_count(rest, line_no, "count");

    if (genus != series.values.size())
      throw std::invalid_argument("ng series line " + std::to_string(line_no) +
                                  ": genus must be contiguous from 0, expected " +
                                  std::to_string(series.values.size()) + " but found " +
                                  std::to_string(genus));
    if (value == 0)
      throw std::invalid_argument("ng series line " + std::to_string(line_no) +
                                  ": totals must be positive");
    series.values.push_back(value);
  }
  if (series.values.empty())
    throw std::invalid_argument("ng series: no records found");
  if (series.values[0] != 1)
    throw std::invalid_argument("ng series: n_0 must be 1");
  return series;
}

NgSeries load_ng_series(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("ng series: cannot open '" + path + "'");
  return parse_ng_series(in);
}

}  // namespace kunz
