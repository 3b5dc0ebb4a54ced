#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "kunz/checked.hpp"

namespace kunz {

/// A rectangular result table. Rendering is fixed so reruns are
/// byte-identical: integers in plain decimal, reals with six decimals,
/// empty cells as nothing (CSV) or null (JSON).
struct OutputTable {
  using Cell = std::variant<std::monostate, Count, std::int64_t, double, std::string>;

  std::string name;  // used when several tables share one JSON document
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  /// '#'-prefixed header line, then one comma-separated line per row.
  std::string to_csv() const;

  /// {"name":...,"columns":[...],"rows":[[...],...]}
  std::string to_json() const;
};

/// Renders one or more tables; CSV tables are separated by a blank line,
/// several JSON tables form an array.
std::string render_tables(const std::vector<OutputTable>& tables, const std::string& format);

}  // namespace kunz
