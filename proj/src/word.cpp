#include "kunz/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace kunz {

namespace {

void require_positive_letters(const Word& word) {
  for (Letter v : word.letters)
    if (v == 0) throw std::invalid_argument("Kunz letters must be positive");
}

}  // namespace

Word parse_word(std::string_view digits) {
  std::vector<Letter> letters;
  letters.reserve(digits.size());
  for (char c : digits) {
    if (c < '1' || c > '9')
      throw std::invalid_argument("word digits must be in 1..9");
    letters.push_back(static_cast<Letter>(c - '0'));
  }
  return Word(std::move(letters));
}

std::string to_string(const Word& word) {
  std::string out;
  out.reserve(word.length());
  for (Letter v : word.letters) {
    if (v > 9) {
      out += '(';
      out += std::to_string(unsigned(v));
      out += ')';
    } else {
      out += static_cast<char>('0' + v);
    }
  }
  return out;
}

bool is_kunz(const Word& word) {
  require_positive_letters(word);
  const auto& w = word.letters;
  const int len = static_cast<int>(w.size());
  for (int i = 1; i <= len; ++i) {
    for (int j = i; j <= len; ++j) {
      const int sum = int(w[i - 1]) + int(w[j - 1]);
      if (i + j <= len && sum < w[i + j - 1]) return false;
      if (i + j >= len + 2 && sum + 1 < w[i + j - len - 2]) return false;
    }
  }
  return true;
}

bool is_q_kunz(const Word& word, unsigned depth_cap) {
  if (!is_kunz(word)) return false;
  return std::all_of(word.letters.begin(), word.letters.end(),
                     [depth_cap](Letter v) { return v <= depth_cap; });
}

Properties properties(const Word& word) {
  if (!is_kunz(word)) throw std::invalid_argument("properties: not a Kunz word");
  Properties p;
  const auto& w = word.letters;
  p.multiplicity = static_cast<unsigned>(w.size()) + 1;
  unsigned genus = 0, depth = 0, last_max = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    genus += w[i];
    if (w[i] >= depth) {
      depth = w[i];
      last_max = static_cast<unsigned>(i) + 1;
    }
  }
  p.genus = genus;
  p.depth = depth;
  p.frobenius = (std::int64_t(depth) - 1) * p.multiplicity + last_max;
  p.conductor = p.frobenius + 1;
  return p;
}

GapSet word_to_gaps(const Word& word) {
  if (!is_kunz(word)) throw std::invalid_argument("word_to_gaps: not a Kunz word");
  const auto& w = word.letters;
  const std::uint32_t m = static_cast<std::uint32_t>(w.size()) + 1;
  std::vector<std::uint32_t> gaps;
  for (std::uint32_t i = 1; i <= w.size(); ++i)
    for (std::uint32_t r = 0; r < w[i - 1]; ++r) gaps.push_back(r * m + i);
  std::sort(gaps.begin(), gaps.end());
  return GapSet(std::move(gaps));
}

Word gaps_to_word(const GapSet& gap_set) {
  std::vector<std::uint32_t> gaps = gap_set.gaps;
  std::sort(gaps.begin(), gaps.end());
  gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
  if (gaps.empty()) return Word{};
  if (gaps.front() == 0)
    throw std::invalid_argument("gaps_to_word: 0 can never be a gap");

  const std::uint32_t frobenius = gaps.back();
  std::vector<char> member(frobenius + 1, 1);
  for (std::uint32_t g : gaps) member[g] = 0;

  // Closure only needs checking below the conductor: sums that land beyond
  // the largest gap are members no matter what.
  for (std::uint32_t a = 1; a <= frobenius; ++a) {
    if (!member[a]) continue;
    for (std::uint32_t b = a; a + b <= frobenius; ++b) {
      if (member[b] && !member[a + b])
        throw std::invalid_argument(
            "gaps_to_word: complement not additively closed: " + std::to_string(a) +
            " + " + std::to_string(b) + " = " + std::to_string(a + b) + " is a gap");
    }
  }

  std::uint32_t multiplicity = 1;
  while (multiplicity <= frobenius && !member[multiplicity]) ++multiplicity;

  std::vector<Letter> letters(multiplicity - 1, 0);
  for (std::uint32_t g : gaps) {
    const std::uint32_t residue = g % multiplicity;
    // closure rules out gaps divisible by the multiplicity
    ++letters[residue - 1];
  }
  return Word(std::move(letters));
}

bool is_stressed(const Word& word) {
  if (word.empty()) return false;
  return word.letters.back() == 3 && is_q_kunz(word, 3);
}

std::pair<Word, Word> prefix_decompose(const Word& word) {
  if (!is_kunz(word)) throw std::invalid_argument("prefix_decompose: not a Kunz word");
  const auto& w = word.letters;
  unsigned depth = 0;
  std::size_t split = 0;  // index one past the last 3
  for (std::size_t i = 0; i < w.size(); ++i) {
    depth = std::max<unsigned>(depth, w[i]);
    if (w[i] == 3) split = i + 1;
  }
  if (depth > 3)
    throw std::invalid_argument("prefix_decompose: depth exceeds 3; the prefix is only defined for 3-Kunz words");
  if (depth <= 2) return {Word{}, word};
  Word prefix(std::vector<Letter>(w.begin(), w.begin() + split));
  Word suffix(std::vector<Letter>(w.begin() + split, w.end()));
  return {std::move(prefix), std::move(suffix)};
}

}  // namespace kunz
