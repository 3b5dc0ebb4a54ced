#include "kunz/analytics.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace kunz {

namespace {

std::vector<Count> fibonacci_upto(unsigned max_n) {
  std::vector<Count> fib(max_n + 1, 0);
  if (max_n >= 1) fib[1] = 1;
  for (unsigned n = 2; n <= max_n; ++n) fib[n] = checked_add(fib[n - 1], fib[n - 2]);
  return fib;
}

double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if ((flo < 0) == (fhi < 0))
    throw std::runtime_error("bisect: interval does not bracket a root");
  for (int iter = 0; iter < 60; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if ((fmid < 0) == (flo < 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void require_complete_length(const LengthGenusCounts& by_length, unsigned length,
                             const char* who) {
  // The all-threes word of genus 3l always exists; a missing entry there
  // means the table was truncated before this length was fully counted.
  if (!by_length.count({length, 3 * length}))
    throw std::invalid_argument(std::string(who) + ": stressed counts for length " +
                                std::to_string(length) + " are incomplete");
}

}  // namespace

Count fibonacci(unsigned n) {
  if (n > 93) throw std::overflow_error("fibonacci: F_n exceeds 64 bits for n > 93");
  if (n == 0) return 0;
  Count a = 0, b = 1;
  for (unsigned i = 1; i < n; ++i) {
    const Count next = checked_add(a, b);
    a = b;
    b = next;
  }
  return b;
}

std::vector<Count> shallow_from_stressed(const std::vector<Count>& stressed_by_genus,
                                         unsigned max_genus) {
  if (stressed_by_genus.size() <= max_genus)
    throw std::invalid_argument("shallow_from_stressed: stressed table too short");
  const auto fib = fibonacci_upto(max_genus + 1);
  std::vector<Count> shallow(max_genus + 1, 0);
  for (unsigned g = 0; g <= max_genus; ++g) {
    Count t = fib[g + 1];
    for (unsigned i = 1; i <= g; ++i)
      t = checked_add(t, checked_mul(stressed_by_genus[i], fib[g + 1 - i]));
    shallow[g] = t;
  }
  return shallow;
}

std::vector<Count> deep_counts(const NgSeries& totals, const std::vector<Count>& shallow) {
  const std::size_t upto = std::min(totals.values.size(), shallow.size());
  std::vector<Count> deep(upto, 0);
  for (std::size_t g = 0; g < upto; ++g) {
    if (totals.values[g] < shallow[g])
      throw std::invalid_argument(
          "deep_counts: n_" + std::to_string(g) + " = " + std::to_string(totals.values[g]) +
          " is below the depth<=3 count " + std::to_string(shallow[g]) +
          "; inputs are inconsistent");
    deep[g] = totals.values[g] - shallow[g];
  }
  return deep;
}

std::vector<Count> lower_bound_series(unsigned max_genus) {
  // x^3 / (1 - (x^3 + 2x^4 + 2x^5 + x^6)), so
  // c_g = c_{g-3} + 2c_{g-4} + 2c_{g-5} + c_{g-6} once past the seed at g = 3.
  std::vector<Count> c(max_genus + 1, 0);
  if (max_genus >= 3) c[3] = 1;
  auto at = [&](int g) -> Count { return g >= 0 ? c[g] : 0; };
  for (int g = 4; g <= static_cast<int>(max_genus); ++g) {
    Count value = at(g - 3);
    value = checked_add(value, checked_mul(2, at(g - 4)));
    value = checked_add(value, checked_mul(2, at(g - 5)));
    value = checked_add(value, at(g - 6));
    c[g] = value;
  }
  return c;
}

double golden_ratio() { return 0.5 * (1.0 + std::sqrt(5.0)); }

std::map<unsigned, double> weight_partial_sums(unsigned max_length,
                                               const LengthGenusCounts& by_length) {
  if (max_length == 0) throw std::invalid_argument("weight_partial_sums: max_length >= 1");
  const double inv_phi = 1.0 / golden_ratio();
  std::map<unsigned, double> partial;
  double running = 0.0;
  for (unsigned length = 1; length <= max_length; ++length) {
    require_complete_length(by_length, length, "weight_partial_sums");
    double length_sum = 0.0;
    for (auto it = by_length.lower_bound({length, 0});
         it != by_length.end() && it->first.first == length; ++it) {
      const unsigned genus = it->first.second;
      length_sum += static_cast<double>(it->second) * std::pow(inv_phi, genus);
    }
    running += length_sum;
    partial[length] = running;
  }
  return partial;
}

double s_constant_bound(double partial_sum) {
  return golden_ratio() / std::sqrt(5.0) * (1.0 + partial_sum);
}

GrowthConstants solve_constants(double tolerance) {
  if (tolerance <= 0) throw std::invalid_argument("solve_constants: tolerance must be positive");

  // Each rate has two equivalent polynomial descriptions: a direct one and
  // one in the reciprocal. Solving both and demanding agreement guards the
  // transcription of either form.
  auto direct6 = [](double x) {
    const double x2 = x * x, x3 = x2 * x;
    return x3 * x3 - x3 - 2 * x2 - 2 * x - 1;
  };
  auto reciprocal6 = [](double x) {
    const double y = 1.0 / x;
    return y * y * y * (y + 1) * (y * y + y + 1) - 1;
  };
  auto direct10 = [](double x) {
    const double x2 = x * x, x3 = x2 * x, x4 = x2 * x2, x5 = x4 * x, x6 = x3 * x3;
    return x4 * x6 - x6 - 2 * x5 - 2 * x4 - 4 * x3 - 6 * x2 - 4 * x - 1;
  };
  auto reciprocal10 = [](double x) {
    const double y = 1.0 / x, y2 = y * y, y3 = y2 * y, y4 = y2 * y2;
    return y4 * (y + 1) * (y + 1) * (y4 + 2 * y3 + y2 + 1) - 1;
  };

  const double r151_a = bisect(direct6, 1.0, 2.0);
  const double r151_b = bisect(reciprocal6, 1.0, 2.0);
  const double r154_a = bisect(direct10, 1.0, 2.0);
  const double r154_b = bisect(reciprocal10, 1.0, 2.0);
  if (std::abs(r151_a - r151_b) > tolerance || std::abs(r154_a - r154_b) > tolerance)
    throw std::runtime_error("solve_constants: polynomial forms disagree beyond tolerance");

  GrowthConstants constants;
  constants.lower_rate = r151_a;
  constants.upper_rate = r154_a;
  constants.golden = golden_ratio();
  const double r = constants.lower_rate;
  constants.ratio_reference = 1.0 / (1.0 / r + 1.0 / (r * r) - 1.0);
  return constants;
}

double fm2m_limit(int k, const LengthGenusCounts& by_length, double s_estimate) {
  if (s_estimate <= 0) throw std::invalid_argument("fm2m_limit: S estimate must be positive");
  if (k == 0) return 0.0;
  const double phi = golden_ratio();
  const double denom = std::sqrt(5.0) * s_estimate;
  if (k < 0) return std::pow(phi, k) / denom;

  const unsigned length = static_cast<unsigned>(k);
  require_complete_length(by_length, length, "fm2m_limit");
  double sum = 0.0;
  for (auto it = by_length.lower_bound({length, 0});
       it != by_length.end() && it->first.first == length; ++it)
    sum += static_cast<double>(it->second) * std::pow(phi, 1.0 - double(it->first.second));
  return sum / denom;
}

std::vector<RatioRow> ratio_diagnostics(const std::vector<Count>& stressed,
                                        const std::vector<Count>& deep) {
  const std::size_t upto = std::min(stressed.size(), deep.size());
  std::vector<RatioRow> rows;
  for (std::size_t g = 1; g < upto; ++g) {
    RatioRow row;
    row.genus = static_cast<unsigned>(g);
    // A growth ratio touching a zero count is junk for the plots either
    // way round, so it is flagged, not emitted as 0 or infinity.
    if (deep[g - 1] > 0 && deep[g] > 0)
      row.deep_ratio = static_cast<double>(deep[g]) / static_cast<double>(deep[g - 1]);
    if (stressed[g - 1] > 0 && stressed[g] > 0)
      row.stressed_ratio =
          static_cast<double>(stressed[g]) / static_cast<double>(stressed[g - 1]);
    if (stressed[g] > 0)
      row.deep_over_stressed =
          static_cast<double>(deep[g]) / static_cast<double>(stressed[g]);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace kunz
