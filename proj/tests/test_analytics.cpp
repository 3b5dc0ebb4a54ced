#include <doctest.h>

#include <cmath>
#include <sstream>

#include "kunz/analytics.hpp"
#include "kunz/census.hpp"
#include "kunz/ng_series.hpp"
#include "kunz/stressed.hpp"
#include "reference_data.hpp"

using namespace kunz;

namespace {

NgSeries reference_totals(unsigned max_genus) {
  NgSeries series;
  for (unsigned g = 0; g <= max_genus; ++g)
    series.values.push_back(refdata::kGenusCounts[g].shallow + refdata::kGenusCounts[g].deep);
  return series;
}

std::vector<Count> reference_stressed(unsigned max_genus) {
  std::vector<Count> s;
  for (unsigned g = 0; g <= max_genus; ++g) s.push_back(refdata::kGenusCounts[g].stressed);
  return s;
}

}  // namespace

TEST_CASE("fibonacci") {
  CHECK(fibonacci(0) == 0);
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(10) == 55);
  CHECK(fibonacci(19) == 4181);
  CHECK(fibonacci(93) == 12200160415121876738ull);
  CHECK_THROWS_AS(fibonacci(94), std::overflow_error);
}

TEST_CASE("checked arithmetic") {
  CHECK(checked_add(2, 3) == 5);
  CHECK_THROWS_AS(checked_add(~0ull, 1), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(1ull << 40, 1ull << 40), std::overflow_error);
  BinomialTable binomial(80);
  CHECK(binomial.choose(6, 3) == 20);
  CHECK(binomial.choose(52, 5) == 2598960);
  CHECK(binomial.choose(5, 9) == 0);
  CHECK_THROWS_AS(binomial.choose(80, 40), std::overflow_error);  // ~1e23
}

TEST_CASE("shallow counts from the stressed convolution") {
  const auto shallow = shallow_from_stressed(reference_stressed(45), 45);
  CHECK(shallow[3] == 4);
  CHECK(shallow[10] == 168);
  CHECK(shallow[43] == 3037078893ull);
  CHECK(shallow[45] == 8105674930ull);
  for (unsigned g = 0; g <= 45; ++g) CHECK(shallow[g] == refdata::kGenusCounts[g].shallow);
  // Fibonacci sandwich
  for (unsigned g = 3; g <= 45; ++g) {
    CHECK(shallow[g] >= shallow[g - 1] + shallow[g - 2]);
    CHECK(shallow[g] <= shallow[g - 1] + shallow[g - 2] + shallow[g - 3]);
  }
}

TEST_CASE("convolution agrees with the oracle on oracle-derived stressed counts") {
  const auto rows = census(14);
  std::vector<Count> oracle_stressed(15, 0);
  for (unsigned g = 2; g <= 14; ++g)
    oracle_stressed[g] = rows[g].shallow - rows[g - 1].shallow - rows[g - 2].shallow;
  const auto shallow = shallow_from_stressed(oracle_stressed, 14);
  for (unsigned g = 0; g <= 14; ++g) CHECK(shallow[g] == rows[g].shallow);
}

TEST_CASE("deep counts") {
  const auto shallow = shallow_from_stressed(reference_stressed(20), 20);
  const auto deep = deep_counts(reference_totals(20), shallow);
  CHECK(deep[0] == 0);
  CHECK(deep[4] == 1);
  CHECK(deep[20] == 6354);

  NgSeries bogus = reference_totals(20);
  bogus.values[10] = 1;  // below t_10
  CHECK_THROWS_WITH_AS(deep_counts(bogus, shallow), doctest::Contains("inconsistent"),
                       std::invalid_argument);
}

TEST_CASE("lower bound series") {
  const auto series = lower_bound_series(45);
  CHECK(series[3] == 1);
  CHECK(series[5] == 0);
  CHECK(series[7] == 2);

  // direct power-series expansion of x^3 / (1 - x^3(x+1)(x^2+x+1))
  std::vector<Count> direct(31, 0);
  std::vector<Count> term(31, 0);  // x^3 * (x^3+2x^4+2x^5+x^6)^j, truncated
  term[3] = 1;
  const unsigned factor[] = {0, 0, 0, 1, 2, 2, 1};
  for (;;) {
    bool live = false;
    for (unsigned g = 0; g <= 30; ++g)
      if (term[g]) {
        direct[g] += term[g];
        live = true;
      }
    if (!live) break;
    std::vector<Count> next(31, 0);
    for (unsigned g = 0; g <= 30; ++g)
      if (term[g])
        for (unsigned d = 3; d <= 6; ++d)
          if (g + d <= 30) next[g + d] += term[g] * factor[d];
    term = std::move(next);
  }
  for (unsigned g = 0; g <= 30; ++g) CHECK(series[g] == direct[g]);

  // the bound is genuine: s'_g <= s_g, with equality at genus 7
  const auto stressed = reference_stressed(45);
  for (unsigned g = 0; g <= 45; ++g) CHECK(series[g] <= stressed[g]);
  CHECK(series[7] == 2);
  CHECK(stressed[7] == 2);
}

TEST_CASE("weight partial sums match the tabulated values") {
  const auto table = count_stressed(60, 20);
  const auto partial = weight_partial_sums(20, table.by_length_and_genus);
  for (unsigned l = 1; l <= 20; ++l)
    CHECK(std::abs(partial.at(l) - refdata::kWeightPartialSums[l - 1]) < 1e-6);

  // truncated coverage must be detected: length 12 needs genus up to 36
  const auto short_table = count_stressed(30, 12);
  CHECK_THROWS_WITH_AS(weight_partial_sums(12, short_table.by_length_and_genus),
                       doctest::Contains("incomplete"), std::invalid_argument);
}

TEST_CASE("s constant bound") {
  const double phi = golden_ratio();
  CHECK(std::abs(s_constant_bound(0.0) - phi / std::sqrt(5.0)) < 1e-12);
  CHECK(std::abs(s_constant_bound(0.236068) - 0.894427) < 1e-5);
  // the published length-50 truncation gives the 3.8073 bound
  CHECK(s_constant_bound(4.261649) > 3.8073 - 5e-5);
  CHECK(s_constant_bound(4.261649) < 3.8074);
}

TEST_CASE("solve_constants") {
  const auto constants = solve_constants(1e-6);
  CHECK(std::abs(constants.lower_rate - 1.51519) < 1e-5);
  CHECK(std::abs(constants.upper_rate - 1.54930) < 1e-5);
  CHECK(std::abs(constants.golden - 0.5 * (1 + std::sqrt(5.0))) < 1e-15);
  CHECK(std::abs(constants.ratio_reference - 10.465) < 1e-3);

  // the roots really are zeros of both forms
  const double r = constants.lower_rate;
  const double direct = std::pow(r, 6) - std::pow(r, 3) - 2 * r * r - 2 * r - 1;
  CHECK(std::abs(direct) < 1e-9);
  const double y = 1 / r;
  CHECK(std::abs(std::pow(y, 3) * (y + 1) * (y * y + y + 1) - 1) < 1e-9);

  CHECK_THROWS_AS(solve_constants(0.0), std::invalid_argument);
}

TEST_CASE("fm2m limit law") {
  const auto table = count_stressed(60, 20);
  const auto& by_length = table.by_length_and_genus;
  const double s_published = 3.8073;

  CHECK(fm2m_limit(0, by_length, s_published) == 0.0);
  CHECK(std::abs(fm2m_limit(-1, by_length, s_published) - 0.0726) < 1e-4);
  CHECK(std::abs(fm2m_limit(1, by_length, s_published) - 0.0449) < 1e-4);
  CHECK_THROWS_AS(fm2m_limit(21, by_length, s_published), std::invalid_argument);
  CHECK_THROWS_AS(fm2m_limit(-1, by_length, 0.0), std::invalid_argument);

  // partial masses grow with the window and stay within the estimate slack
  const auto partial = weight_partial_sums(20, by_length);
  const double s_self = s_constant_bound(partial.at(20));
  double previous = 0.0;
  for (int window = 1; window <= 20; ++window) {
    double mass = 0.0;
    for (int k = -window; k <= window; ++k) mass += fm2m_limit(k, by_length, s_self);
    CHECK(mass >= previous);
    CHECK(mass <= 1.0 + 1e-9);
    previous = mass;
  }
  CHECK(previous > 0.9);
  CHECK(previous < 1.0);  // a truncation of a unit-mass distribution
}

TEST_CASE("ratio diagnostics") {
  const auto stressed = reference_stressed(45);
  const auto shallow = shallow_from_stressed(stressed, 45);
  const auto deep = deep_counts(reference_totals(45), shallow);
  const auto rows = ratio_diagnostics(stressed, deep);

  REQUIRE(rows.size() == 45);
  const auto& g10 = rows[9];
  REQUIRE(g10.genus == 10);
  CHECK(g10.deep_over_stressed.has_value());
  CHECK(*g10.deep_over_stressed == doctest::Approx(3.0));

  const auto& g4 = rows[3];
  REQUIRE(g4.genus == 4);
  CHECK_FALSE(g4.stressed_ratio.has_value());      // s_4 = 0: no meaningful growth ratio
  const auto& g5 = rows[4];
  CHECK_FALSE(g5.stressed_ratio.has_value());      // s_5 / s_4 divides by zero
  CHECK_FALSE(g4.deep_over_stressed.has_value());  // n_hat_4 / s_4 divides by zero
  CHECK(rows[2].deep_over_stressed.has_value());   // n_hat_3 / s_3 = 0 / 1 is fine
  CHECK(*rows[2].deep_over_stressed == doctest::Approx(0.0));

  const auto& g45 = rows[44];
  REQUIRE(g45.genus == 45);
  CHECK(*g45.stressed_ratio == doctest::Approx(105857661.0 / 67908811.0).epsilon(1e-12));
}
