#include "kunz/table.hpp"

#include <cstdio>
#include <stdexcept>

namespace kunz {

namespace {

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

std::string csv_cell(const OutputTable::Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(Count v) const { return std::to_string(v); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_real(v); }
    std::string operator()(const std::string& v) const { return v; }
  };
  return std::visit(Visitor{}, cell);
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string json_cell(const OutputTable::Cell& cell) {
  struct Visitor {
    std::string operator()(std::monostate) const { return "null"; }
    std::string operator()(Count v) const { return std::to_string(v); }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_real(v); }
    std::string operator()(const std::string& v) const { return '"' + json_escape(v) + '"'; }
  };
  return std::visit(Visitor{}, cell);
}

}  // namespace

std::string OutputTable::to_csv() const {
  std::string out = "# ";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ',';
    out += columns[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    if (row.size() != columns.size())
      throw std::logic_error("OutputTable: ragged row");
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += csv_cell(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string OutputTable::to_json() const {
  std::string out = "{\"name\":\"" + json_escape(name) + "\",\"columns\":[";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ',';
    out += '"' + json_escape(columns[i]) + '"';
  }
  out += "],\"rows\":[";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != columns.size())
      throw std::logic_error("OutputTable: ragged row");
    if (r) out += ',';
    out += '[';
    for (std::size_t i = 0; i < rows[r].size(); ++i) {
      if (i) out += ',';
      out += json_cell(rows[r][i]);
    }
    out += ']';
  }
  out += "]}";
  return out;
}

std::string render_tables(const std::vector<OutputTable>& tables, const std::string& format) {
  if (format == "csv") {
    std::string out;
    for (std::size_t i = 0; i < tables.size(); ++i) {
      if (i) out += '\n';
      out += tables[i].to_csv();
    }
    return out;
  }
  if (format == "json") {
    if (tables.size() == 1) return tables[0].to_json() + "\n";
    std::string out = "[";
    for (std::size_t i = 0; i < tables.size(); ++i) {
      if (i) out += ',';
      out += tables[i].to_json();
    }
    out += "]\n";
    return out;
  }
  throw std::invalid_argument("unknown output format '" + format + "'");
}

}  // namespace kunz
