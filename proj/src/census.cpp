#include "kunz/census.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>

namespace kunz {

namespace {

// Depth-first enumeration of all Kunz words with exactly `length` letters
// and genus in [genus_lo, genus_hi]. Validity is maintained incrementally:
// placing w_p checks every inequality whose largest index is p, so finished
// paths are Kunz words and nothing is revalidated afterwards.
//
// For position p the first family gives an upper bound
//   w_p <= min { w_i + w_j : i + j = p },
// and the wrap-around family gives lower bounds
//   w_p >= w_t - w_i - 1   (t = i + p - length - 1, i < p)
//   w_p >= w_t / 2         (t = 2p - length - 1, the i = p case),
// everything else being a budget constraint on the genus.
template <typename Visit>
class WordWalker {
 public:
  WordWalker(unsigned length, unsigned genus_lo, unsigned genus_hi, Visit& visit)
      : len_(length), lo_(genus_lo), hi_(genus_hi), visit_(visit) {
    letters_.assign(length, 0);
  }

  void run() { place(1, 0); }

 private:
  void place(unsigned p, unsigned sum) {
    if (p > len_) {
      if (sum >= lo_) visit_(letters_, sum);
      return;
    }
    const unsigned remaining = len_ - p;  // positions after p
    if (sum + remaining + 1 > hi_) return;
    unsigned ub = hi_ - sum - remaining;

    for (unsigned i = 1; 2 * i <= p && i < p; ++i)
      ub = std::min(ub, unsigned(letters_[i - 1]) + unsigned(letters_[p - i - 1]));

    unsigned lb = 1;
    for (unsigned i = (len_ + 2 > p ? len_ + 2 - p : 1); i < p; ++i) {
      const unsigned t = i + p - len_ - 1;
      const unsigned need = letters_[t - 1];
      if (need > unsigned(letters_[i - 1]) + 1)
        lb = std::max(lb, need - letters_[i - 1] - 1);
    }
    if (2 * p >= len_ + 2) {
      const unsigned t = 2 * p - len_ - 1;
      lb = std::max(lb, unsigned(letters_[t - 1]) / 2);
    }

    for (unsigned v = lb; v <= ub; ++v) {
      letters_[p - 1] = static_cast<Letter>(v);
      place(p + 1, sum + v);
    }
  }

  unsigned len_, lo_, hi_;
  std::vector<Letter> letters_;
  Visit& visit_;
};

template <typename Visit>
void walk_words(unsigned length, unsigned genus_lo, unsigned genus_hi, Visit&& visit) {
  WordWalker<Visit> walker(length, genus_lo, genus_hi, visit);
  walker.run();
}

void check_cap(unsigned genus, const CensusOptions& options) {
  if (genus > options.genus_cap)
    throw std::invalid_argument(
        "census: genus " + std::to_string(genus) + " exceeds the oracle cap " +
        std::to_string(options.genus_cap) +
        "; raise CensusOptions::genus_cap explicitly to run larger enumerations");
  if (genus > 255)
    throw std::invalid_argument("census: letters are 8-bit; genus beyond 255 is not representable");
}

struct RowAccumulator {
  Count total = 0;
  Count shallow = 0;
  Count deep = 0;
  std::map<unsigned, Count> depth_histogram;
  std::map<int, Count> f_minus_2m_histogram;
};

// Tallies one finished word of a given multiplicity without rebuilding it.
void tally(const std::vector<Letter>& letters, unsigned genus, RowAccumulator& row) {
  unsigned depth = 0, last_max = 0;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] >= depth) {
      depth = letters[i];
      last_max = static_cast<unsigned>(i) + 1;
    }
  }
  const unsigned m = static_cast<unsigned>(letters.size()) + 1;
  const std::int64_t frobenius = (std::int64_t(depth) - 1) * m + last_max;
  const int excess = static_cast<int>(frobenius - 2 * std::int64_t(m));

  row.total = checked_add(row.total, 1);
  if (depth <= 3)
    row.shallow = checked_add(row.shallow, 1);
  else
    row.deep = checked_add(row.deep, 1);
  row.depth_histogram[depth] = checked_add(row.depth_histogram[depth], 1);
  row.f_minus_2m_histogram[excess] = checked_add(row.f_minus_2m_histogram[excess], 1);
  (void)genus;
}

}  // namespace

void enumerate_genus(unsigned genus, const std::function<void(const Word&)>& sink,
                     const CensusOptions& options) {
  check_cap(genus, options);
  for (unsigned m = 1; m <= genus + 1; ++m) {
    auto visit = [&](const std::vector<Letter>& letters, unsigned g) {
      if (g == genus) sink(Word(letters));
    };
    walk_words(m - 1, genus, genus, visit);
  }
}

std::vector<Word> collect_genus(unsigned genus, const CensusOptions& options) {
  std::vector<Word> words;
  enumerate_genus(genus, [&](const Word& w) { words.push_back(w); }, options);
  return words;
}

std::vector<CensusRow> census(unsigned max_genus, const CensusOptions& options) {
  check_cap(max_genus, options);

  const unsigned worker_count = std::max(1u, options.threads);
  std::vector<std::vector<RowAccumulator>> shards(
      worker_count, std::vector<RowAccumulator>(max_genus + 1));

  // One task per multiplicity; any scheduling yields the same sums.
  std::atomic<unsigned> next_multiplicity{1};
  auto work = [&](unsigned shard_index) {
    auto& rows = shards[shard_index];
    for (;;) {
      const unsigned m = next_multiplicity.fetch_add(1);
      if (m > max_genus + 1) break;
      auto visit = [&](const std::vector<Letter>& letters, unsigned genus) {
        tally(letters, genus, rows[genus]);
      };
      walk_words(m - 1, 0, max_genus, visit);
    }
  };

  if (worker_count == 1) {
    work(0);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    for (unsigned i = 0; i < worker_count; ++i) workers.emplace_back(work, i);
    for (auto& t : workers) t.join();
  }

  std::vector<CensusRow> result(max_genus + 1);
  for (unsigned g = 0; g <= max_genus; ++g) {
    CensusRow& row = result[g];
    row.genus = g;
    for (const auto& shard : shards) {
      const RowAccumulator& acc = shard[g];
      row.total = checked_add(row.total, acc.total);
      row.shallow = checked_add(row.shallow, acc.shallow);
      row.deep = checked_add(row.deep, acc.deep);
      for (const auto& [depth, count] : acc.depth_histogram)
        row.depth_histogram[depth] = checked_add(row.depth_histogram[depth], count);
      for (const auto& [excess, count] : acc.f_minus_2m_histogram)
        row.f_minus_2m_histogram[excess] =
            checked_add(row.f_minus_2m_histogram[excess], count);
    }
  }
  return result;
}

}  // namespace kunz
