#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "kunz/checked.hpp"

namespace kunz {

/// (length, genus) -> exact count.
using LengthGenusCounts = std::map<std::pair<unsigned, unsigned>, Count>;

/// Output of the ones-set search at a fixed word length: for each signature
/// (ones = |A|, free = |S|), how many valid ones-sets carry it. Expanding a
/// signature over placements of threes yields stressed-word counts by genus.
struct StressedClassAggregate {
  unsigned length = 0;
  std::map<std::pair<unsigned, unsigned>, Count> classes;  // (ones, free) -> count
};

/// Stressed-word counts, total per genus and split by (length, genus).
struct StressedCountTable {
  std::vector<Count> by_genus;  // index = genus, sized max_genus + 1
  LengthGenusCounts by_length_and_genus;
};

struct StressedOptions {
  unsigned threads = 1;
};

/// Smallest genus a stressed word of the given length can have
/// (largest ones-set, no threes before the final letter).
unsigned min_stressed_genus(unsigned length);

/// Runs the ones-set search for one length, visiting every set A that takes
/// at most one element from each pair {i, length-i} and pruning branches
/// whose reachable genus range misses [min_genus, max_genus]. The pruning is
/// sound: identical class counts restricted to the window either way.
StressedClassAggregate stressed_classes(unsigned length, unsigned min_genus,
                                        unsigned max_genus);

/// Expands an aggregate over placements of threes: a class (a, s) of
/// multiplicity c contributes c * C(s, k) words of genus 2l+1-a+k for every
/// 0 <= k <= s.
std::map<unsigned, Count> expand_to_genus(const StressedClassAggregate& aggregate);

/// Counts all stressed words of genus <= max_genus, complete for every genus
/// unless max_length cuts the sum short. Deterministic for any thread count.
StressedCountTable count_stressed(unsigned max_genus,
                                  std::optional<unsigned> max_length = std::nullopt,
                                  const StressedOptions& options = {});

}  // namespace kunz
