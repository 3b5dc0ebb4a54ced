#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kunz {

/// One letter of a Kunz word: the gap count of a residue class. 255 is far
/// beyond anything the enumerations here can reach.
using Letter = std::uint8_t;

/// A Kunz word w_1 w_2 ... w_l. The empty word stands for the semigroup of
/// all nonnegative integers. The struct is plain data; whether it actually
/// satisfies the Kunz inequalities is decided by is_kunz().
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  std::size_t length() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

/// Reads a word from decimal digits, e.g. "31221". Only letters 1..9 are
/// representable this way; meant for tests and CLI input.
Word parse_word(std::string_view digits);

std::string to_string(const Word& word);

/// Derived semigroup data of a Kunz word.
struct Properties {
  unsigned multiplicity = 1;
  unsigned genus = 0;
  unsigned depth = 0;
  std::int64_t frobenius = -1;
  std::int64_t conductor = 0;  // frobenius + 1
};

/// The finite set of gaps of a numerical semigroup, sorted ascending.
/// Gaps are positive: 0 always belongs to the semigroup.
struct GapSet {
  std::vector<std::uint32_t> gaps;

  GapSet() = default;
  explicit GapSet(std::vector<std::uint32_t> gs) : gaps(std::move(gs)) {}

  friend bool operator==(const GapSet&, const GapSet&) = default;
};

/// True iff both Kunz inequality families hold for every defined index pair.
/// Throws std::invalid_argument if any letter is zero.
bool is_kunz(const Word& word);

/// is_kunz and no letter exceeds depth_cap.
bool is_q_kunz(const Word& word, unsigned depth_cap);

/// Multiplicity, genus, depth, Frobenius number, conductor.
/// Requires a Kunz word; anything else is rejected.
Properties properties(const Word& word);

/// The gap set of the semigroup encoded by a Kunz word.
GapSet word_to_gaps(const Word& word);

/// Inverse of word_to_gaps. Rejects gap sets whose complement is not closed
/// under addition, with a diagnostic naming a violating pair.
Word gaps_to_word(const GapSet& gaps);

/// True iff the word is nonempty, 3-Kunz, and ends in a 3.
bool is_stressed(const Word& word);

/// Splits a word of depth at most 3 into its stressed prefix (empty when the
/// depth is at most 2) and its 2-Kunz suffix. Concatenation of the two parts
/// restores the input. Words of depth 4 or more are rejected.
std::pair<Word, Word> prefix_decompose(const Word& word);

}  // namespace kunz
