#pragma once

#include <functional>
#include <map>
#include <vector>

#include "kunz/checked.hpp"
#include "kunz/word.hpp"

namespace kunz {

/// Exact counters for one genus, produced by the exhaustive oracle.
struct CensusRow {
  unsigned genus = 0;
  Count total = 0;    // n_g
  Count shallow = 0;  // depth <= 3 (t_g)
  Count deep = 0;     // depth >= 4 (n-hat_g)
  std::map<unsigned, Count> depth_histogram;
  std::map<int, Count> f_minus_2m_histogram;
};

struct CensusOptions {
  /// Refuse genus beyond this unless raised explicitly; the enumeration is
  /// exponential and an accidental large run should fail fast instead.
  unsigned genus_cap = 22;
  unsigned threads = 1;
};

/// Streams every numerical semigroup of the given genus exactly once, as its
/// Kunz word, grouped by multiplicity 1..g+1 and lexicographic within each
/// multiplicity.
void enumerate_genus(unsigned genus, const std::function<void(const Word&)>& sink,
                     const CensusOptions& options = {});

/// enumerate_genus collected into a vector, for tests and small runs.
std::vector<Word> collect_genus(unsigned genus, const CensusOptions& options = {});

/// Rows for genus 0..max_genus with every histogram filled. Partitioned by
/// multiplicity when options.threads > 1; totals are independent of thread
/// count and scheduling.
std::vector<CensusRow> census(unsigned max_genus, const CensusOptions& options = {});

}  // namespace kunz
