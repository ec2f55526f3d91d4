#include "pinnacle/fs_minimal.hpp"

#include <algorithm>
#include <iterator>
#include <limits>

#include "pinnacle/fs_action.hpp"

namespace pinnacle {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

ValueSet set_union(const ValueSet &a, const ValueSet &b) {
  ValueSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Index of a letter that is neither a pinnacle nor a vale and sits strictly
// inside a descending run (the left end counts as infinity), or kNone.
std::size_t find_descending_filler(std::span<const Value> w) {
  constexpr Value kInf = std::numeric_limits<Value>::max();
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const Value left = i == 0 ? kInf : w[i - 1];
    if (left > w[i] && w[i] > w[i + 1]) {
      return i;
    }
  }
  return kNone;
}

} // namespace

bool satisfies_canonical_condition(std::span<const Value> word, const ValueSet &pinnacles) {
  for (Value q : pinnacles) {
    const XFactorization f = x_factorization(word, q);
    if (!(max_or_zero(f.w2) < max_or_zero(f.w4))) {
      return false;
    }
  }
  return true;
}

bool is_fs_minimal(const Permutation &p) {
  // pi_0 = infinity, so an opening descent counts as a double descent.
  if (find_descending_filler(p.values()) != kNone) {
    return false;
  }
  const ValueSet pins = pinnacle_set(p);
  const Word restricted = restrict_to(p, set_union(pins, vale_set(p)));
  return satisfies_canonical_condition(restricted, pins);
}

Permutation to_fs_minimal(const Permutation &p) {
  const ValueSet pins = pinnacle_set(p);
  const ValueSet marked = set_union(pins, vale_set(p));

  std::vector<Value> w(p.begin(), p.end());
  // rho: the action preserves pinnacles and vales, so the descending fillers
  // are exactly the middles of double descents (or a leading descent).
  for (auto i = find_descending_filler(w); i != kNone;
       i = find_descending_filler(w)) {
    apply_dual_fs(w, w[i]);
  }

  // tau
  const Word restricted = restrict_to(w, marked);
  ValueSet flips;
  for (Value q : pins) {
    const XFactorization f = x_factorization(restricted, q);
    if (max_or_zero(f.w2) > max_or_zero(f.w4)) {
      flips.push_back(q);
    }
  }
  for (Value q : flips) {
    apply_dual_fs(w, q);
  }
  return adopt_unchecked(std::move(w));
}

std::map<ValueSet, std::uint64_t> fs_minimal_count_all(std::size_t n, std::size_t limit) {
  require_exhaustive(n, limit);
  std::map<ValueSet, std::uint64_t> counts;
  std::vector<Value> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = static_cast<Value>(i + 1);
  }
  do {
    const Permutation p = adopt_unchecked(w);
    if (is_fs_minimal(p)) {
      ++counts[pinnacle_set(p)];
    }
  } while (std::next_permutation(w.begin(), w.end()));
  return counts;
}

} // namespace pinnacle
