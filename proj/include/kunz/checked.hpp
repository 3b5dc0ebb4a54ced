#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace kunz {

/// Exact counter type. All table entries this library produces must fit in
/// 64 bits; anything that would not is a hard error, never a silent wrap.
using Count = std::uint64_t;

inline Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("64-bit counter overflow in addition");
  return r;
}

inline Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("64-bit counter overflow in multiplication");
  return r;
}

/// Pascal-triangle table of exact binomial coefficients C(n, k) for
/// n <= max_n. Entries beyond 64 bits are poisoned; reading one throws.
class BinomialTable {
 public:
  explicit BinomialTable(unsigned max_n);

  Count choose(unsigned n, unsigned k) const;

  unsigned max_n() const { return max_n_; }

 private:
  std::size_t index(unsigned n, unsigned k) const {
    return static_cast<std::size_t>(n) * (n + 1) / 2 + k;
  }

  unsigned max_n_;
  std::vector<Count> value_;
  std::vector<char> fits_;
};

}  // namespace kunz
