#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kunz/checked.hpp"

namespace kunz {

/// Externally supplied totals n_g for a contiguous genus range starting at 0
/// (in practice OEIS A007323).
struct NgSeries {
  std::vector<Count> values;  // index = genus

  unsigned max_genus() const { return static_cast<unsigned>(values.size()) - 1; }
};

/// Parses `g,n` records, one per line, genus contiguous from 0; lines
/// starting with '#' and blank lines are skipped, and columns after the
/// first two are ignored so emitted CSV tables can be fed straight back in.
/// Malformed input throws std::invalid_argument naming the offending line.
NgSeries parse_ng_series(std::istream& in);

NgSeries load_ng_series(const std::string& path);

}  // namespace kunz
