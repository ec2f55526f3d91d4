#include "pinnacle/fs_action.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "pinnacle/detail/factor_bounds.hpp"

namespace pinnacle {

namespace {

constexpr auto kSmaller = [](Value a, Value x) { return a < x; };
constexpr auto kGreater = [](Value a, Value x) { return a > x; };

void check_letter(const Permutation &p, Value x) {
  if (x < 1 || static_cast<std::size_t>(x) > p.size()) {
    throw std::domain_error("letter " + std::to_string(x) + " is outside [1, " +
                            std::to_string(p.size()) + "]");
  }
}

struct WordHash {
  std::size_t operator()(const std::vector<Value> &w) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Value v : w) {
      h = (h ^ static_cast<std::uint64_t>(v)) * 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

} // namespace

void apply_dual_fs(std::span<Value> word, Value x) {
  const auto pos = detail::position_of(word, x);
  if (pos == word.size()) {
    throw std::domain_error("letter " + std::to_string(x) + " does not occur in the word");
  }
  detail::swap_flanks(word, pos, kSmaller);
}

Permutation dual_fs(const Permutation &p, Value x) {
  check_letter(p, x);
  std::vector<Value> w(p.begin(), p.end());
  apply_dual_fs(w, x);
  return adopt_unchecked(std::move(w));
}

Word dual_fs(std::span<const Value> word, Value x) {
  Word w(word.begin(), word.end());
  apply_dual_fs(w, x);
  return w;
}

Permutation classical_fs(const Permutation &p, Value x) {
  check_letter(p, x);
  std::vector<Value> w(p.begin(), p.end());
  detail::swap_flanks(std::span<Value>(w), detail::position_of(w, x), kGreater);
  return adopt_unchecked(std::move(w));
}

Permutation dual_fs_set(const Permutation &p, const ValueSet &s) {
  std::vector<Value> w(p.begin(), p.end());
  ValueSet letters = s;
  std::sort(letters.begin(), letters.end());
  for (Value x : letters) {
    check_letter(p, x);
    apply_dual_fs(w, x);
  }
  return adopt_unchecked(std::move(w));
}

std::vector<Permutation> dual_orbit(const Permutation &p) {
  using Key = std::vector<Value>;
  std::unordered_set<Key, WordHash> seen;
  std::deque<Key> frontier;
  Key start(p.begin(), p.end());
  seen.insert(start);
  frontier.push_back(std::move(start));
  const auto n = static_cast<Value>(p.size());
  while (!frontier.empty()) {
    Key current = std::move(frontier.front());
    frontier.pop_front();
    for (Value x = 1; x <= n; ++x) {
      Key next = current;
      apply_dual_fs(next, x);
      if (seen.insert(next).second) {
        frontier.push_back(std::move(next));
      }
    }
  }
  std::vector<Permutation> out;
  out.reserve(seen.size());
  for (const auto &w : seen) {
    out.push_back(adopt_unchecked(w));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_in_orbit(const Permutation &rep, const PermutationSink &sink) {
  const ValueSet vales = vale_set(rep);
  ValueSet free_letters;
  for (Value x = 1; x <= static_cast<Value>(rep.size()); ++x) {
    if (!std::binary_search(vales.begin(), vales.end(), x)) {
      free_letters.push_back(x);
    }
  }
  if (free_letters.size() >= 63) {
    throw std::length_error("orbit too large to enumerate");
  }
  std::vector<Value> w(rep.begin(), rep.end());
  sink(w);
  const std::uint64_t total = std::uint64_t{1} << free_letters.size();
  // Gray code: step k flips the letter indexed by the lowest set bit of k.
  for (std::uint64_t k = 1; k < total; ++k) {
    apply_dual_fs(w, free_letters[static_cast<std::size_t>(std::countr_zero(k))]);
    sink(w);
  }
}

std::vector<Permutation> orbit_expand(const Permutation &rep) {
  std::vector<Permutation> out;
  for_each_in_orbit(rep, [&](std::span<const Value> w) {
    out.push_back(adopt_unchecked(std::vector<Value>(w.begin(), w.end())));
  });
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace pinnacle
