// Test-only reference implementations. These are written straight from the
// definitions and do not call into the library's action or counting code.
#ifndef PINNACLE_TESTS_ORACLES_HPP
#define PINNACLE_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Word = std::vector<int>;
using Set = std::vector<int>;

inline std::vector<Word> all_permutations(std::size_t n) {
  std::vector<Word> out;
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// Letter at 0-based i with infinite sentinels on both ends.
inline long long at(const Word &w, long long i) {
  if (i < 0 || i >= static_cast<long long>(w.size())) {
    return 1LL << 40;
  }
  return w[static_cast<std::size_t>(i)];
}

inline Set pinnacles(const Word &w) {
  Set out;
  for (long long i = 0; i < static_cast<long long>(w.size()); ++i) {
    if (at(w, i - 1) < at(w, i) && at(w, i) > at(w, i + 1)) {
      out.push_back(w[static_cast<std::size_t>(i)]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Set vales(const Word &w) {
  Set out;
  for (long long i = 0; i < static_cast<long long>(w.size()); ++i) {
    if (at(w, i - 1) > at(w, i) && at(w, i) < at(w, i + 1)) {
      out.push_back(w[static_cast<std::size_t>(i)]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// x-factorization by explicit segment collection; `smaller` selects the dual
// (letters < x) or classical (letters > x) flanks. Returns w1 w4 x w2 w5.
inline Word swap_flanks(const Word &w, int x, bool smaller) {
  const auto flank = [&](int a) { return smaller ? a < x : a > x; };
  std::size_t pos = 0;
  while (w[pos] != x) {
    ++pos;
  }
  std::vector<int> w2;
  std::size_t i = pos;
  while (i > 0 && flank(w[i - 1])) {
    w2.insert(w2.begin(), w[i - 1]);
    --i;
  }
  const Word w1(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
  std::vector<int> w4;
  std::size_t j = pos + 1;
  while (j < w.size() && flank(w[j])) {
    w4.push_back(w[j]);
    ++j;
  }
  const Word w5(w.begin() + static_cast<std::ptrdiff_t>(j), w.end());
  Word out = w1;
  out.insert(out.end(), w4.begin(), w4.end());
  out.push_back(x);
  out.insert(out.end(), w2.begin(), w2.end());
  out.insert(out.end(), w5.begin(), w5.end());
  return out;
}

inline Word dual(const Word &w, int x) { return swap_flanks(w, x, true); }
inline Word classical(const Word &w, int x) { return swap_flanks(w, x, false); }

// Orbit by closure over all subsets S of [n] applied letter by letter.
inline std::set<Word> orbit_by_subsets(const Word &w) {
  const std::size_t n = w.size();
  std::set<Word> out;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    Word cur = w;
    for (std::size_t b = 0; b < n; ++b) {
      if (mask >> b & 1U) {
        cur = dual(cur, static_cast<int>(b + 1));
      }
    }
    out.insert(cur);
  }
  return out;
}

// Connected components of S_n under single-letter dual moves.
inline std::size_t orbit_count(std::size_t n) {
  const auto perms = all_permutations(n);
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    index[perms[i]] = i;
  }
  std::vector<std::size_t> parent(perms.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) {
      a = parent[a] = parent[parent[a]];
    }
    return a;
  };
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (int x = 1; x <= static_cast<int>(n); ++x) {
      const std::size_t j = index.at(dual(perms[i], x));
      parent[find(i)] = find(j);
    }
  }
  std::size_t roots = 0;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    roots += find(i) == i ? 1 : 0;
  }
  return roots;
}

// |Pin(P; n)| for every P, by scanning S_n once.
inline std::map<Set, std::uint64_t> pinnacle_histogram(std::size_t n) {
  std::map<Set, std::uint64_t> out;
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    ++out[pinnacles(w)];
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

// All (pinnacle set, vale set) pairs realized in S_n.
inline std::set<std::pair<Set, Set>> realized_pairs(std::size_t n) {
  std::set<std::pair<Set, Set>> out;
  Word w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    out.emplace(pinnacles(w), vales(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline std::uint64_t catalan(std::size_t k) {
  // C_{m+1} = sum C_i C_{m-i}
  std::vector<std::uint64_t> c(k + 1, 0);
  c[0] = 1;
  for (std::size_t m = 1; m <= k; ++m) {
    for (std::size_t i = 0; i < m; ++i) {
      c[m] += c[i] * c[m - 1 - i];
    }
  }
  return c[k];
}

inline std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    f *= i;
  }
  return f;
}

} // namespace oracle

#endif // PINNACLE_TESTS_ORACLES_HPP
