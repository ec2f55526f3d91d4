#include "pinnacle/counting.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "pinnacle/admissibility.hpp"
#include "pinnacle/fs_action.hpp"
#include "pinnacle/fs_minimal.hpp"

namespace pinnacle {

namespace {

constexpr Value kInf = std::numeric_limits<Value>::max();

void require_admissible(const ValueSet &pinnacles, const ValueSet &vales) {
  const auto n = static_cast<std::size_t>(
      std::max(pinnacles.empty() ? 0 : pinnacles.back(), vales.empty() ? 0 : vales.back()));
  if (!is_admissible_pair(pinnacles, vales, n)) {
    throw std::domain_error("pinnacle/vale pair is not admissible");
  }
}

// Recursion on the smallest pinnacle; does not need 1 in V.
std::vector<Word> arrange(std::span<const Value> pinnacles, const ValueSet &vales) {
  if (pinnacles.empty()) {
    if (vales.size() != 1) {
      return {};
    }
    return {Word{vales.front()}};
  }
  const Value smallest = pinnacles.front();
  const auto below_end =
      std::lower_bound(vales.begin(), vales.end(), smallest) - vales.begin();
  std::vector<Word> out;
  for (std::ptrdiff_t i = 0; i < below_end; ++i) {
    for (std::ptrdiff_t j = i + 1; j < below_end; ++j) {
      const Value left = vales[static_cast<std::size_t>(i)];
      const Value right = vales[static_cast<std::size_t>(j)];
      ValueSet reduced;
      for (Value v : vales) {
        if (v != left && v != right) {
          reduced.push_back(v);
        }
      }
      reduced.insert(std::upper_bound(reduced.begin(), reduced.end(), smallest), smallest);
      for (Word w : arrange(pinnacles.subspan(1), reduced)) {
        const auto at = std::find(w.begin(), w.end(), smallest);
        const auto idx = at - w.begin();
        w.insert(w.begin() + idx + 1, right);
        w.insert(w.begin() + idx, left);
        out.push_back(std::move(w));
      }
    }
  }
  return out;
}

// Emits every FS-minimal permutation over a canonical arrangement `w`.
void fill_slopes(const Word &w, std::size_t n, const PermutationSink &sink);

// Gray-code walk over an orbit. Keeps a letter -> position index so each
// step costs only the size of the flipped segment.
class OrbitWalker {
public:
  explicit OrbitWalker(std::size_t n) : word_(n), position_(n + 1), scratch_(n) {}

  void run(std::span<const Value> rep, const ValueSet &free_letters, const PermutationSink &sink) {
    std::copy(rep.begin(), rep.end(), word_.begin());
    for (std::size_t i = 0; i < word_.size(); ++i) {
      position_[static_cast<std::size_t>(word_[i])] = i;
    }
    sink(word_);
    const std::uint64_t total = std::uint64_t{1} << free_letters.size();
    for (std::uint64_t k = 1; k < total; ++k) {
      flip(free_letters[static_cast<std::size_t>(std::countr_zero(k))]);
      sink(word_);
    }
  }

private:
  void flip(Value x) {
    const std::size_t pos = position_[static_cast<std::size_t>(x)];
    const std::size_t n = word_.size();
    std::size_t left = pos;
    while (left > 0 && word_[left - 1] < x) {
      --left;
    }
    std::size_t right = pos;
    while (right + 1 < n && word_[right + 1] < x) {
      ++right;
    }
    if (left == pos && right == pos) {
      return;
    }
    // w2 x w4 -> w4 x w2, rewritten in place through a copy of w2
    const std::size_t w2_len = pos - left;
    std::copy(word_.begin() + static_cast<std::ptrdiff_t>(left),
              word_.begin() + static_cast<std::ptrdiff_t>(pos), scratch_.begin());
    std::size_t out = left;
    for (std::size_t i = pos + 1; i <= right; ++i, ++out) {
      word_[out] = word_[i];
      position_[static_cast<std::size_t>(word_[out])] = out;
    }
    word_[out] = x;
    position_[static_cast<std::size_t>(x)] = out;
    for (std::size_t i = 0; i < w2_len; ++i) {
      ++out;
      word_[out] = scratch_[i];
      position_[static_cast<std::size_t>(scratch_[i])] = out;
    }
  }

  std::vector<Value> word_;
  std::vector<std::size_t> position_;
  std::vector<Value> scratch_;
};

std::uint64_t value_mask(const ValueSet &s) {
  std::uint64_t m = 0;
  for (Value v : s) {
    m |= std::uint64_t{1} << v;
  }
  return m;
}

} // namespace

ValueSet PVArrangement::pinnacles() const {
  ValueSet out;
  for (std::size_t i = 1; i < word.size(); i += 2) {
    out.push_back(word[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ValueSet PVArrangement::vales() const {
  ValueSet out;
  for (std::size_t i = 0; i < word.size(); i += 2) {
    out.push_back(word[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_pv_arrangement(const PVArrangement &a) {
  const auto &w = a.word;
  if (w.empty() || w.size() % 2 == 0) {
    return false;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Value left = i == 0 ? kInf : w[i - 1];
    const Value right = i + 1 == w.size() ? kInf : w[i + 1];
    const bool is_vale_slot = i % 2 == 0;
    if (is_vale_slot ? !(left > w[i] && w[i] < right) : !(left < w[i] && w[i] > right)) {
      return false;
    }
  }
  ValueSet all(w.begin(), w.end());
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end() && all.front() >= 1;
}

bool is_canonical(const PVArrangement &a) {
  return is_pv_arrangement(a) && satisfies_canonical_condition(a.word, a.pinnacles());
}

std::vector<PVArrangement> canonical_arrangements(const ValueSet &pinnacles,
                                                  const ValueSet &vales) {
  require_admissible(pinnacles, vales);
  std::vector<PVArrangement> out;
  for (Word &w : arrange(pinnacles, vales)) {
    out.push_back({std::move(w)});
  }
  return out;
}

BigInt count_canonical(const ValueSet &pinnacles, const ValueSet &vales) {
  require_admissible(pinnacles, vales);
  BigInt product = 1;
  for (Value p : pinnacles) {
    product *= binomial(static_cast<std::size_t>(npv(pinnacles, vales, p)), 2);
  }
  return product;
}

void for_each_fs_minimal(const PVArrangement &a, std::size_t n, const PermutationSink &sink) {
  if (!is_canonical(a)) {
    throw std::domain_error("arrangement " + format_word(a.word) + " is not canonical");
  }
  const auto &w = a.word;
  if (static_cast<std::size_t>(*std::max_element(w.begin(), w.end())) > n) {
    throw std::domain_error("arrangement uses letters above n");
  }
  fill_slopes(w, n, sink);
}

namespace {

void fill_slopes(const Word &w, std::size_t n, const PermutationSink &sink) {
  const std::size_t slots = w.size() / 2 + 1;
  std::vector<bool> marked(n + 1, false);
  for (Value v : w) {
    marked[static_cast<std::size_t>(v)] = true;
  }
  // Candidate slopes per filler, left to right.
  std::vector<Value> fillers;
  std::vector<std::vector<std::size_t>> options;
  for (Value r = 1; r <= static_cast<Value>(n); ++r) {
    if (marked[static_cast<std::size_t>(r)]) {
      continue;
    }
    std::vector<std::size_t> fits;
    for (std::size_t s = 0; s < slots; ++s) {
      const Value low = w[2 * s];
      const Value high = 2 * s + 1 < w.size() ? w[2 * s + 1] : kInf;
      if (low < r && r < high) {
        fits.push_back(s);
      }
    }
    if (fits.empty()) {
      return;
    }
    fillers.push_back(r);
    options.push_back(std::move(fits));
  }

  std::vector<std::size_t> digit(fillers.size(), 0);
  std::vector<std::vector<Value>> slope(slots);
  std::vector<Value> out;
  out.reserve(n);
  while (true) {
    for (auto &s : slope) {
      s.clear();
    }
    for (std::size_t f = 0; f < fillers.size(); ++f) {
      slope[options[f][digit[f]]].push_back(fillers[f]);
    }
    out.clear();
    for (std::size_t s = 0; s < slots; ++s) {
      out.push_back(w[2 * s]);
      out.insert(out.end(), slope[s].begin(), slope[s].end());
      if (2 * s + 1 < w.size()) {
        out.push_back(w[2 * s + 1]);
      }
    }
    sink(out);

    std::size_t f = fillers.size();
    while (f > 0) {
      --f;
      if (++digit[f] < options[f].size()) {
        break;
      }
      digit[f] = 0;
      if (f == 0) {
        return;
      }
    }
    if (fillers.empty()) {
      return;
    }
  }
}

} // namespace

std::vector<Permutation> fs_minimal_from_arrangement(const PVArrangement &a, std::size_t n) {
  std::vector<Permutation> out;
  for_each_fs_minimal(a, n, [&](std::span<const Value> w) {
    out.push_back(adopt_unchecked(std::vector<Value>(w.begin(), w.end())));
  });
  return out;
}

void for_each_fs_minimal(const ValueSet &pinnacles, std::size_t n, const PermutationSink &sink) {
  for_each_vale_set(pinnacles, n, [&](const ValueSet &vales) {
    for (const Word &a : arrange(pinnacles, vales)) {
      fill_slopes(a, n, sink);
    }
  });
}

BigInt count_O_PV(const ValueSet &pinnacles, const ValueSet &vales, std::size_t n) {
  BigInt product = 1;
  int below = 0; // running npv
  for (Value r = 1; r <= static_cast<Value>(n); ++r) {
    const bool is_vale = std::binary_search(vales.begin(), vales.end(), r);
    const bool is_pin = std::binary_search(pinnacles.begin(), pinnacles.end(), r);
    if (!is_vale && !is_pin) {
      if (below <= 0) {
        return 0;
      }
      product *= below;
    }
    if (is_pin) {
      product *= binomial(static_cast<std::size_t>(std::max(below, 0)), 2);
    }
    below += is_vale ? 1 : 0;
    below -= is_pin ? 1 : 0;
  }
  return product;
}

BigInt count_O_P(const ValueSet &pinnacles, std::size_t n) {
  BigInt total = 0;
  for_each_vale_set(pinnacles, n, [&](const ValueSet &vales) {
    total += count_O_PV(pinnacles, vales, n);
  });
  return total;
}

BigInt count_pin(const ValueSet &pinnacles, std::size_t n) {
  const BigInt orbits = count_O_P(pinnacles, n);
  if (orbits == 0) {
    return 0;
  }
  return orbits << static_cast<unsigned>(n - pinnacles.size() - 1);
}

PinBounds pin_bounds(const ValueSet &pinnacles, std::size_t n) {
  if (!is_admissible_pinnacle_set(pinnacles, n)) {
    throw std::domain_error("pinnacle set " + format_word(pinnacles) + " is not admissible for n = " +
                            std::to_string(n));
  }
  const std::size_t k = pinnacles.size();
  BigInt factorial = 1;
  for (std::size_t i = 2; i <= k; ++i) {
    factorial *= i;
  }
  PinBounds b;
  b.lower = BigInt(1) << static_cast<unsigned>(n - k - 1);
  b.upper = factorial * (BigInt(1) << static_cast<unsigned>(n - 2 * k - 1)) * stirling2(n - k, k + 1);
  return b;
}

BigInt stirling2(std::size_t r, std::size_t s) {
  if (s > r) {
    return 0;
  }
  // row[j] = S(i, j)
  std::vector<BigInt> row(s + 1, 0);
  row[0] = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    for (std::size_t j = std::min(i, s); j >= 1; --j) {
      row[j] = BigInt(j) * row[j] + row[j - 1];
    }
    row[0] = 0;
  }
  return row[s];
}

BigInt binomial(std::size_t a, std::size_t b) {
  if (b > a) {
    return 0;
  }
  b = std::min(b, a - b);
  BigInt result = 1;
  for (std::size_t i = 1; i <= b; ++i) {
    result = result * (a - b + i) / i;
  }
  return result;
}

void for_each_naive(const ValueSet &pinnacles, std::size_t n, const PermutationSink &sink,
                    std::size_t limit) {
  require_exhaustive(n, limit);
  if (n == 0 || n >= 64) {
    return;
  }
  if (std::any_of(pinnacles.begin(), pinnacles.end(),
                  [n](Value p) { return p < 1 || static_cast<std::size_t>(p) > n; })) {
    return;
  }
  const std::uint64_t target = value_mask(pinnacles);
  std::vector<Value> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    std::uint64_t mask = 0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (w[i - 1] < w[i] && w[i] > w[i + 1]) {
        mask |= std::uint64_t{1} << w[i];
      }
    }
    if (mask == target) {
      sink(w);
    }
  } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<Permutation> generate_naive(const ValueSet &pinnacles, std::size_t n,
                                        std::size_t limit) {
  std::vector<Permutation> out;
  for_each_naive(
      pinnacles, n,
      [&](std::span<const Value> w) {
        out.push_back(adopt_unchecked(std::vector<Value>(w.begin(), w.end())));
      },
      limit);
  return out;
}

void for_each_constructive(const ValueSet &pinnacles, std::size_t n, const PermutationSink &sink) {
  if (n >= 64) {
    throw std::length_error("n too large to enumerate");
  }
  OrbitWalker walker(n);
  for_each_vale_set(pinnacles, n, [&](const ValueSet &vales) {
    ValueSet free_letters;
    for (Value x = 1; x <= static_cast<Value>(n); ++x) {
      if (!std::binary_search(vales.begin(), vales.end(), x)) {
        free_letters.push_back(x);
      }
    }
    const PermutationSink expand = [&](std::span<const Value> rep) {
      walker.run(rep, free_letters, sink);
    };
    for (const Word &a : arrange(pinnacles, vales)) {
      fill_slopes(a, n, expand);
    }
  });
}

std::vector<Permutation> generate_constructive(const ValueSet &pinnacles, std::size_t n) {
  std::vector<Permutation> out;
  for_each_constructive(pinnacles, n, [&](std::span<const Value> w) {
    out.push_back(adopt_unchecked(std::vector<Value>(w.begin(), w.end())));
  });
  std::sort(out.begin(), out.end());
#ifndef NDEBUG
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw std::logic_error("constructive generation produced overlapping orbits");
  }
#endif
  return out;
}

} // namespace pinnacle
