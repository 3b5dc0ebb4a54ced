#include "kunz/checked.hpp"

namespace kunz {

BinomialTable::BinomialTable(unsigned max_n) : max_n_(max_n) {
  const std::size_t entries = static_cast<std::size_t>(max_n + 1) * (max_n + 2) / 2;
  value_.assign(entries, 0);
  fits_.assign(entries, 1);
  for (unsigned n = 0; n <= max_n; ++n) {
    value_[index(n, 0)] = 1;
    for (unsigned k = 1; k <= n; ++k) {
      const std::size_t left = index(n - 1, k - 1);
      const std::size_t right = k <= n - 1 ? index(n - 1, k) : 0;
      const Count b = k <= n - 1 ? value_[right] : 0;
      const bool parents_fit = fits_[left] && (k > n - 1 || fits_[right]);
      Count sum = 0;
      const bool wrapped = __builtin_add_overflow(value_[left], b, &sum);
      value_[index(n, k)] = sum;
      fits_[index(n, k)] = parents_fit && !wrapped;
    }
  }
}

Count BinomialTable::choose(unsigned n, unsigned k) const {
  if (n > max_n_) throw std::out_of_range("BinomialTable: n beyond table");
  if (k > n) return 0;
  if (!fits_[index(n, k)])
    throw std::overflow_error("binomial coefficient exceeds 64 bits");
  return value_[index(n, k)];
}

}  // namespace kunz
