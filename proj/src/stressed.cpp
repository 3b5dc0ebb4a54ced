#include "kunz/stressed.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>

#include "kunz/detail/position_masks.hpp"

namespace kunz {

namespace {

using detail::Mask;
using detail::OnesState;

constexpr unsigned kMaxLength = 127;  // mask width limit

struct PairSplit {
  unsigned small = 0;
  unsigned large = 0;
};

// The ones-set pairs {i, length - i} for 1 <= i <= ceil(length/2) - 1. Both
// members of a pair in A, or length/2 in A, would put `length` into A+A,
// so a valid A takes at most one element per pair and never length/2.
std::vector<PairSplit> pair_list(unsigned length) {
  std::vector<PairSplit> pairs;
  const unsigned count = (length + 1) / 2 - 1;
  pairs.reserve(count);
  for (unsigned i = 1; i <= count; ++i) pairs.push_back({i, length - i});
  return pairs;
}

struct GenusWindow {
  unsigned lo = 0;
  unsigned hi = 0;
};

// Walks the ones-set forest for one length. Branch order per pair is
// (skip, take smaller, take larger), giving one fixed traversal.
//
// Pruning: with `remaining` undecided pairs, the smallest finishing genus is
// 2l+1 - (|A| + remaining) and the largest is 2l+1 - |A| + |S with A as is|;
// a branch is cut only when the whole reachable range misses the window.
// The |S| popcount is skipped while lo == 0 because the upper prune can
// never fire there, which also keeps the lo == 0 leaf fast path honest.
template <typename Leaf>
class OnesSearch {
 public:
  OnesSearch(unsigned length, GenusWindow window, Leaf& leaf)
      : len_(length), base_(2 * length + 1), window_(window), leaf_(leaf),
        pairs_(pair_list(length)) {}

  void run() { descend(0, OnesState{}); }

  // Runs the top `depth` pair levels only, handing each surviving subtree
  // root to `sink` in traversal order.
  template <typename Sink>
  void collect_prefixes(unsigned depth, Sink&& sink) {
    collect(0, depth, OnesState{}, sink);
  }

  // Resumes a subtree that collect_prefixes produced.
  void resume(unsigned pair_index, const OnesState& state) { descend(pair_index, state); }

  std::size_t pair_count() const { return pairs_.size(); }

 private:
  bool pruned(unsigned pair_index, const OnesState& state) const {
    const unsigned remaining = static_cast<unsigned>(pairs_.size()) - pair_index;
    if (base_ - state.ones_count - remaining > window_.hi) return true;
    if (window_.lo > 0) {
      const unsigned free_now = detail::popcount(state.free_positions(len_));
      if (base_ - state.ones_count + free_now < window_.lo) return true;
    }
    return false;
  }

  void descend(unsigned pair_index, const OnesState& state) {
    if (pruned(pair_index, state)) return;
    if (pair_index == pairs_.size()) {
      leaf_(state);
      return;
    }
    descend(pair_index + 1, state);
    OnesState take_small = state;
    take_small.insert(pairs_[pair_index].small);
    descend(pair_index + 1, take_small);
    OnesState take_large = state;
    take_large.insert(pairs_[pair_index].large);
    descend(pair_index + 1, take_large);
  }

  template <typename Sink>
  void collect(unsigned pair_index, unsigned depth, const OnesState& state, Sink& sink) {
    if (pruned(pair_index, state)) return;
    if (pair_index == depth || pair_index == pairs_.size()) {
      sink(pair_index, state);
      return;
    }
    collect(pair_index + 1, depth, state, sink);
    OnesState take_small = state;
    take_small.insert(pairs_[pair_index].small);
    collect(pair_index + 1, depth, take_small, sink);
    OnesState take_large = state;
    take_large.insert(pairs_[pair_index].large);
    collect(pair_index + 1, depth, take_large, sink);
  }

  unsigned len_;
  unsigned base_;  // 2l + 1, the genus of the all-twos stressed word
  GenusWindow window_;
  Leaf& leaf_;
  std::vector<PairSplit> pairs_;
};

void check_length(unsigned length) {
  if (length == 0) throw std::invalid_argument("stressed words have length >= 1");
  if (length > kMaxLength)
    throw std::invalid_argument("stressed search supports lengths up to " +
                                std::to_string(kMaxLength));
}

unsigned ceil_log3(unsigned n) {
  unsigned d = 0;
  unsigned long long reach = 1;
  while (reach < n) {
    reach *= 3;
    ++d;
  }
  return d;
}

}  // namespace

unsigned min_stressed_genus(unsigned length) {
  check_length(length);
  const unsigned max_ones = (length + 1) / 2 - 1;
  return 2 * length + 1 - max_ones;
}

StressedClassAggregate stressed_classes(unsigned length, unsigned min_genus,
                                        unsigned max_genus) {
  check_length(length);
  if (min_genus > max_genus)
    throw std::invalid_argument("stressed_classes: empty genus window");

  StressedClassAggregate aggregate;
  aggregate.length = length;
  auto leaf = [&](const OnesState& state) {
    const unsigned free_count = detail::popcount(state.free_positions(length));
    auto key = std::make_pair(state.ones_count, free_count);
    aggregate.classes[key] = checked_add(aggregate.classes[key], 1);
  };
  OnesSearch search(length, GenusWindow{min_genus, max_genus}, leaf);
  search.run();
  return aggregate;
}

std::map<unsigned, Count> expand_to_genus(const StressedClassAggregate& aggregate) {
  unsigned max_free = 0;
  for (const auto& [key, count] : aggregate.classes)
    max_free = std::max(max_free, key.second);
  BinomialTable binomial(max_free);

  std::map<unsigned, Count> by_genus;
  const unsigned base = 2 * aggregate.length + 1;
  for (const auto& [key, count] : aggregate.classes) {
    const auto [ones, free_count] = key;
    for (unsigned k = 0; k <= free_count; ++k) {
      const unsigned genus = base - ones + k;
      const Count contribution = checked_mul(count, binomial.choose(free_count, k));
      by_genus[genus] = checked_add(by_genus[genus], contribution);
    }
  }
  return by_genus;
}

StressedCountTable count_stressed(unsigned max_genus, std::optional<unsigned> max_length,
                                  const StressedOptions& options) {
  std::vector<unsigned> lengths;
  for (unsigned len = 1;; ++len) {
    if (max_length && len > *max_length) break;
    const unsigned floor_genus = 2 * len + 1 - ((len + 1) / 2 - 1);
    if (floor_genus > max_genus) break;
    if (len > kMaxLength)
      throw std::invalid_argument(
          "count_stressed: genus bound needs lengths beyond the supported maximum of " +
          std::to_string(kMaxLength));
    lengths.push_back(len);
  }

  StressedCountTable table;
  table.by_genus.assign(max_genus + 1, 0);
  if (lengths.empty()) return table;

  BinomialTable binomial(lengths.back() - 1);
  const unsigned worker_count = std::max(1u, options.threads);

  for (unsigned length : lengths) {
    const unsigned base = 2 * length + 1;
    // Per-genus accumulation for this length. A leaf with a ones and s free
    // positions contributes C(s, k) at genus 2l+1-a+k; when the window
    // allows only k = 0 the free count is never taken.
    auto make_leaf = [&binomial, max_genus](std::vector<Count>& genus_counts, unsigned base,
                                            unsigned length) {
      return [&genus_counts, &binomial, max_genus, base, length](const OnesState& state) {
        const unsigned first_genus = base - state.ones_count;
        const unsigned k_limit = max_genus - first_genus;  // >= 0: search pruned otherwise
        genus_counts[first_genus] = checked_add(genus_counts[first_genus], 1);
        if (k_limit == 0) return;
        const unsigned free_count = detail::popcount(state.free_positions(length));
        for (unsigned k = 1; k <= std::min(free_count, k_limit); ++k)
          genus_counts[first_genus + k] =
              checked_add(genus_counts[first_genus + k], binomial.choose(free_count, k));
      };
    };

    std::vector<Count> merged(max_genus + 1, 0);
    auto merged_leaf = make_leaf(merged, base, length);
    OnesSearch search(length, GenusWindow{0, max_genus}, merged_leaf);

    const unsigned split_depth =
        std::min<unsigned>(ceil_log3(worker_count), static_cast<unsigned>(search.pair_count()));
    if (worker_count == 1 || split_depth == 0) {
      search.run();
    } else {
      struct Prefix {
        unsigned pair_index;
        OnesState state;
      };
      std::vector<Prefix> prefixes;
      search.collect_prefixes(split_depth,
                              [&](unsigned idx, const OnesState& s) { prefixes.push_back({idx, s}); });

      std::vector<std::vector<Count>> shards(worker_count,
                                             std::vector<Count>(max_genus + 1, 0));
      std::atomic<std::size_t> next{0};
      auto work = [&](unsigned shard_index) {
        auto leaf = make_leaf(shards[shard_index], base, length);
        OnesSearch worker_search(length, GenusWindow{0, max_genus}, leaf);
        for (;;) {
          const std::size_t i = next.fetch_add(1);
          if (i >= prefixes.size()) break;
          worker_search.resume(prefixes[i].pair_index, prefixes[i].state);
        }
      };
      std::vector<std::thread> workers;
      workers.reserve(worker_count);
      for (unsigned i = 0; i < worker_count; ++i) workers.emplace_back(work, i);
      for (auto& t : workers) t.join();
      for (const auto& shard : shards)
        for (unsigned g = 0; g <= max_genus; ++g)
          merged[g] = checked_add(merged[g], shard[g]);
    }

    for (unsigned g = 0; g <= max_genus; ++g) {
      if (merged[g] == 0) continue;
      table.by_genus[g] = checked_add(table.by_genus[g], merged[g]);
      table.by_length_and_genus[{length, g}] = merged[g];
    }
  }
  return table;
}

}  // namespace kunz
