#ifndef PINNACLE_PERMUTATION_HPP
#define PINNACLE_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pinnacle {

/// A letter of a permutation. Values are 1-based.
using Value = int;

/// A sequence of letters, e.g. a subword or a restriction of a permutation.
using Word = std::vector<Value>;

/// A set of values (or 1-based positions), always kept sorted ascending.
using ValueSet = std::vector<Value>;

/**
 * A permutation of [n] in one-line notation.
 *
 * Positions 0 and n+1 are treated as sentinels larger than every letter
 * when detecting peaks and valleys.
 */
class Permutation {
public:
  /// Throws std::invalid_argument unless `values` is a rearrangement of 1..n, n >= 1.
  explicit Permutation(std::vector<Value> values);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const Value> values() const noexcept { return values_; }

  /// 1-based position access.
  Value at(std::size_t position) const { return values_.at(position - 1); }

  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  struct Unchecked {};
  Permutation(std::vector<Value> values, Unchecked) : values_(std::move(values)) {}
  friend Permutation adopt_unchecked(std::vector<Value> values);

  std::vector<Value> values_;
};

/// Wraps `values` without validation. Only for callers that already
/// guarantee a rearrangement of 1..n (e.g. the action maps).
Permutation adopt_unchecked(std::vector<Value> values);

/// The five-part split w1 w2 x w4 w5 of a word around the letter x.
/// w2 and w4 are the maximal runs of letters smaller than x adjacent to x.
struct XFactorization {
  Word w1;
  Word w2;
  Value x = 0;
  Word w4;
  Word w5;

  Word concatenated() const;
  friend bool operator==(const XFactorization &, const XFactorization &) = default;
};

// Statistics. Sets are sorted ascending; positions are 1-based.
ValueSet pinnacle_set(const Permutation &p);
ValueSet peak_set(const Permutation &p);
ValueSet vale_set(const Permutation &p);
ValueSet valley_set(const Permutation &p);

/// Number of i in [n-1] with p_i > p_{i+1}. Sentinels are not counted.
std::size_t descent_count(const Permutation &p);

bool has_double_descent(std::span<const Value> word);
inline bool has_double_descent(const Permutation &p) {
  return has_double_descent(p.values());
}

/// Throws std::domain_error if x is not in [1, n].
XFactorization x_factorization(const Permutation &p, Value x);

/// Factorization of an arbitrary word of distinct letters (for example a
/// restriction). Throws std::domain_error if x does not occur in `word`.
XFactorization x_factorization(std::span<const Value> word, Value x);

/// The subsequence of `p` made of the letters in `s`, in order of appearance.
Word restrict_to(std::span<const Value> word, const ValueSet &s);
inline Word restrict_to(const Permutation &p, const ValueSet &s) {
  return restrict_to(p.values(), s);
}

/// Relabels every value v as n - v + 1.
Permutation w0_conjugate(const Permutation &p);

/// Largest letter of `word`, or 0 when the word is empty.
Value max_or_zero(std::span<const Value> word) noexcept;

/// Parses "1,5,2,6" or, for n <= 9, the compact form "1526".
/// Throws std::invalid_argument on malformed text.
Permutation parse_permutation(std::string_view text);

/// Parses a sorted set such as "4,8,11". "" and "none" denote the empty set.
/// Throws std::invalid_argument on malformed text or repeated values.
ValueSet parse_value_set(std::string_view text);

/// Comma separated decimal values.
std::string format_word(std::span<const Value> word, char separator = ',');
inline std::string format(const Permutation &p) { return format_word(p.values()); }

std::ostream &operator<<(std::ostream &os, const Permutation &p);

/// Receives generated permutations in one-line notation. The span is only
/// valid for the duration of the call.
using PermutationSink = std::function<void(std::span<const Value>)>;

} // namespace pinnacle

#endif // PINNACLE_PERMUTATION_HPP
