#pragma once

#include <cstdint>

namespace kunz::detail {

/// Bitmask over word positions 1..126 (bit 0 unused). Wide enough for every
/// length the stressed search accepts (l <= 127).
using Mask = unsigned __int128;

inline int popcount(Mask m) {
  return __builtin_popcountll(static_cast<std::uint64_t>(m)) +
         __builtin_popcountll(static_cast<std::uint64_t>(m >> 64));
}

inline Mask bit(unsigned pos) { return Mask(1) << pos; }

/// Bits 1..n set; 0 when n is 0.
inline Mask positions_upto(unsigned n) {
  return n == 0 ? Mask(0) : (bit(n + 1) - 2);
}

/// The ones-position set A of a stressed-word prefix together with the
/// running pairwise-sum set A+A (sums of possibly equal elements). Inserting
/// a position keeps both masks current with two shifts and an or, which is
/// the word-parallel version of the O(l) incremental update.
struct OnesState {
  Mask ones = 0;
  Mask pair_sums = 0;
  unsigned ones_count = 0;

  void insert(unsigned pos) {
    ones |= bit(pos);
    pair_sums |= ones << pos;  // pos + a for every a in A, including pos itself
    ++ones_count;
  }

  /// Positions in 1..length-1 available for a three: not a one and not a
  /// pairwise sum of ones.
  Mask free_positions(unsigned length) const {
    return positions_upto(length - 1) & ~(ones | pair_sums);
  }
};

}  // namespace kunz::detail
