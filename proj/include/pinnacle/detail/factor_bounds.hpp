#ifndef PINNACLE_DETAIL_FACTOR_BOUNDS_HPP
#define PINNACLE_DETAIL_FACTOR_BOUNDS_HPP

#include <algorithm>
#include <cstddef>
#include <span>

#include "pinnacle/permutation.hpp"

namespace pinnacle::detail {

// Index bounds of an x-factorization: w2 = [left, pos), w4 = (pos, right].
struct FactorBounds {
  std::size_t left;
  std::size_t pos;
  std::size_t right;
};

// `flank(letter, x)` decides membership in w2/w4: `letter < x` for the dual
// map, `letter > x` for the classical one.
template <typename Flank>
FactorBounds factor_bounds(std::span<const Value> word, std::size_t pos, Flank flank) {
  const Value x = word[pos];
  std::size_t left = pos;
  while (left > 0 && flank(word[left - 1], x)) {
    --left;
  }
  std::size_t right = pos;
  while (right + 1 < word.size() && flank(word[right + 1], x)) {
    ++right;
  }
  return {left, pos, right};
}

inline constexpr std::size_t kSmallWord = 64;

// Rewrites w2 x w4 as w4 x w2 in place.
template <typename Flank>
void swap_flanks(std::span<Value> word, std::size_t pos, Flank flank) {
  const FactorBounds b = factor_bounds(std::span<const Value>(word), pos, flank);
  if (b.left == b.pos && b.right == b.pos) {
    return;
  }
  const std::size_t len = b.right + 1 - b.left;
  if (len <= kSmallWord) {
    Value tmp[kSmallWord];
    std::size_t k = 0;
    for (std::size_t i = b.pos + 1; i <= b.right; ++i) {
      tmp[k++] = word[i];
    }
    tmp[k++] = word[b.pos];
    for (std::size_t i = b.left; i < b.pos; ++i) {
      tmp[k++] = word[i];
    }
    std::copy(tmp, tmp + len, word.begin() + static_cast<std::ptrdiff_t>(b.left));
    return;
  }
  auto first = word.begin() + static_cast<std::ptrdiff_t>(b.left);
  auto middle = word.begin() + static_cast<std::ptrdiff_t>(b.pos);
  auto last = word.begin() + static_cast<std::ptrdiff_t>(b.right + 1);
  // [w2][x w4] -> [x w4][w2] -> [w4 x][w2]
  std::rotate(first, middle, last);
  const auto w4_len = static_cast<std::ptrdiff_t>(b.right - b.pos);
  std::rotate(first, first + 1, first + 1 + w4_len);
}

inline std::size_t position_of(std::span<const Value> word, Value x) {
  return static_cast<std::size_t>(std::find(word.begin(), word.end(), x) - word.begin());
}

} // namespace pinnacle::detail

#endif // PINNACLE_DETAIL_FACTOR_BOUNDS_HPP
