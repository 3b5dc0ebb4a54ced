#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "kunz/analytics.hpp"
#include "kunz/census.hpp"
#include "kunz/word.hpp"
#include "reference_data.hpp"

using namespace kunz;

TEST_CASE("enumerate_genus base cases") {
  CHECK(collect_genus(0) == std::vector<Word>{Word{}});
  CHECK(collect_genus(4).size() == 7);
  CHECK(collect_genus(10).size() == 204);
}

TEST_CASE("enumerated words are distinct, valid, and grouped by multiplicity") {
  for (unsigned g : {5u, 9u}) {
    std::set<Word> seen;
    unsigned last_multiplicity = 1;
    enumerate_genus(g, [&](const Word& w) {
      CHECK(is_kunz(w));
      const Properties p = properties(w);
      CHECK(p.genus == g);
      CHECK(p.multiplicity >= last_multiplicity);
      last_multiplicity = p.multiplicity;
      CHECK(seen.insert(w).second);
    });
    CHECK(seen.size() == collect_genus(g).size());
  }
}

TEST_CASE("genus cap refuses accidental large runs") {
  CensusOptions opts;
  opts.genus_cap = 5;
  CHECK_THROWS_WITH_AS(census(6, opts), doctest::Contains("cap"), std::invalid_argument);
  CHECK_THROWS_AS(collect_genus(6, opts), std::invalid_argument);
  CHECK_NOTHROW(collect_genus(5, opts));
}

TEST_CASE("census rows carry consistent counters") {
  const auto rows = census(14);
  for (const auto& row : rows) {
    Count by_depth = 0;
    for (const auto& [depth, count] : row.depth_histogram) {
      by_depth += count;
      (void)depth;
    }
    CHECK(row.total == by_depth);
    CHECK(row.total == row.shallow + row.deep);

    Count by_excess = 0;
    for (const auto& [excess, count] : row.f_minus_2m_histogram) by_excess += count;
    CHECK(row.total == by_excess);
    if (row.genus >= 1) {
      const auto zero = row.f_minus_2m_histogram.find(0);
      CHECK(zero == row.f_minus_2m_histogram.end());
    }
  }
  // published counts
  for (const auto& row : rows) {
    const auto& ref = refdata::kGenusCounts[row.genus];
    CHECK(row.shallow == ref.shallow);
    CHECK(row.deep == ref.deep);
    CHECK(row.total == ref.shallow + ref.deep);
  }
  // s_9 = t_9 - t_8 - t_7
  CHECK(rows[9].shallow - rows[8].shallow - rows[7].shallow == 9);
}

TEST_CASE("oracle totals satisfy the Fibonacci sandwich and the deep-count bound") {
  const auto rows = census(14);
  for (unsigned g = 3; g <= 14; ++g) {
    CHECK(rows[g].shallow >= rows[g - 1].shallow + rows[g - 2].shallow);
    CHECK(rows[g].shallow <= rows[g - 1].shallow + rows[g - 2].shallow + rows[g - 3].shallow);
  }
  for (unsigned g = 7; g <= 14; ++g) {
    const Count s_g = rows[g].shallow - rows[g - 1].shallow - rows[g - 2].shallow;
    CHECK(s_g <= 2 * rows[g - 2].deep + 3 * rows[g - 3].deep + 2 * rows[g - 4].deep +
                     rows[g - 5].deep);
  }
}

TEST_CASE("depth <= 2 count is the Fibonacci number F_{g+1}") {
  const auto rows = census(14);
  for (const auto& row : rows) {
    Count shallow2 = 0;
    for (const auto& [depth, count] : row.depth_histogram)
      if (depth <= 2) shallow2 += count;
    CHECK(shallow2 == fibonacci(row.genus + 1));
  }
}

TEST_CASE("census is independent of thread count") {
  CensusOptions one;
  one.threads = 1;
  CensusOptions four;
  four.threads = 4;
  const auto a = census(13, one);
  const auto b = census(13, four);
  REQUIRE(a.size() == b.size());
  for (std::size_t g = 0; g < a.size(); ++g) {
    CHECK(a[g].total == b[g].total);
    CHECK(a[g].shallow == b[g].shallow);
    CHECK(a[g].deep == b[g].deep);
    CHECK(a[g].depth_histogram == b[g].depth_histogram);
    CHECK(a[g].f_minus_2m_histogram == b[g].f_minus_2m_histogram);
  }
}

namespace {

// Independent cross-oracle: every additively closed complement is found by
// filtering size-g subsets of {1..2g}, encoded as bitmasks.
std::set<std::vector<std::uint32_t>> gap_sets_by_subset_filter(unsigned g) {
  std::set<std::vector<std::uint32_t>> found;
  if (g == 0) {
    found.insert(std::vector<std::uint32_t>{});
    return found;
  }
  const unsigned universe = 2 * g;  // no gap can exceed 2g - 1, checked below
  const std::uint64_t limit = 1ull << universe;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (static_cast<unsigned>(__builtin_popcountll(mask)) != g) continue;
    // mask bit i set  <=>  i + 1 is a gap
    const std::uint64_t gap_bits = mask << 1;
    std::uint32_t frobenius = 0;
    for (std::uint32_t v = universe; v >= 1; --v)
      if (gap_bits & (1ull << v)) {
        frobenius = v;
        break;
      }
    bool closed = true;
    for (std::uint32_t a = 1; a <= frobenius && closed; ++a) {
      if (gap_bits & (1ull << a)) continue;
      for (std::uint32_t b = a; a + b <= frobenius; ++b) {
        if (gap_bits & (1ull << b)) continue;
        if (gap_bits & (1ull << (a + b))) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    std::vector<std::uint32_t> gaps;
    for (std::uint32_t v = 1; v <= universe; ++v)
      if (gap_bits & (1ull << v)) gaps.push_back(v);
    found.insert(std::move(gaps));
  }
  return found;
}

}  // namespace

TEST_CASE("bijection exhaustiveness against the subset filter" * doctest::timeout(300)) {
  for (unsigned g = 0; g <= 12; ++g) {
    const auto expected = gap_sets_by_subset_filter(g);
    std::set<std::vector<std::uint32_t>> produced;
    enumerate_genus(g, [&](const Word& w) {
      CHECK(produced.insert(word_to_gaps(w).gaps).second);
    });
    CHECK(produced == expected);
  }
}

TEST_CASE("empirical f - 2m distribution at moderate genus") {
  const auto rows = census(12);
  const auto& hist = rows[12].f_minus_2m_histogram;
  CHECK(hist.find(0) == hist.end());
  REQUIRE(hist.count(-1));
  REQUIRE(hist.count(-2));
  CHECK(hist.at(-1) > hist.at(-2));
}
