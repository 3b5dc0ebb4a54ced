#pragma once

#include <map>
#include <optional>
#include <vector>

#include "kunz/checked.hpp"
#include "kunz/ng_series.hpp"
#include "kunz/stressed.hpp"

namespace kunz {

/// F_0 = 0, F_1 = 1, exact; throws on 64-bit overflow (n >= 94).
Count fibonacci(unsigned n);

/// Depth <= 3 totals from stressed counts:
/// t_g = F_{g+1} + sum_{i=1..g} s_i F_{g+1-i}.
std::vector<Count> shallow_from_stressed(const std::vector<Count>& stressed_by_genus,
                                         unsigned max_genus);

/// n-hat_g = n_g - t_g over the common range of both inputs. A negative
/// difference means the inputs are inconsistent and is a hard error.
std::vector<Count> deep_counts(const NgSeries& totals, const std::vector<Count>& shallow);

/// Coefficients of x^3 / (1 - x^3(x+1)(x^2+x+1)): a lower bound for the
/// stressed count at every genus.
std::vector<Count> lower_bound_series(unsigned max_genus);

double golden_ratio();

/// Cumulative sums over lengths 1..max_length of
/// sum_g count(l, g) * phi^-g. Requires by_length to be complete for every
/// length involved (genus coverage up to 3l).
std::map<unsigned, double> weight_partial_sums(unsigned max_length,
                                               const LengthGenusCounts& by_length);

/// (phi / sqrt 5) * (1 + partial_sum): a rigorous lower bound for the
/// leading constant of the semigroup count.
double s_constant_bound(double partial_sum);

struct GrowthConstants {
  double lower_rate = 0;       // ~1.51519, stressed-count growth lower bound
  double upper_rate = 0;       // ~1.54930, deep-count growth upper bound
  double golden = 0;           // (1 + sqrt 5) / 2
  double ratio_reference = 0;  // 1 / (1/r + 1/r^2 - 1) at r = lower_rate, ~10.465
};

/// Bisection roots of both polynomial forms of each rate constant; the forms
/// must agree within the tolerance or this throws.
GrowthConstants solve_constants(double tolerance);

/// Limit probability that the Frobenius number exceeds twice the
/// multiplicity by exactly k, using s_estimate for the leading constant.
/// k > 0 needs complete stressed data for length k in by_length.
double fm2m_limit(int k, const LengthGenusCounts& by_length, double s_estimate);

/// One diagnostics row. A missing growth ratio marks a zero count on either
/// side of it; a missing deep_over_stressed marks a zero denominator.
struct RatioRow {
  unsigned genus = 0;
  std::optional<double> deep_ratio;          // nhat_g / nhat_{g-1}
  std::optional<double> stressed_ratio;      // s_g / s_{g-1}
  std::optional<double> deep_over_stressed;  // nhat_g / s_g
};

std::vector<RatioRow> ratio_diagnostics(const std::vector<Count>& stressed,
                                        const std::vector<Count>& deep);

}  // namespace kunz
