#include "pinnacle/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "pinnacle/detail/factor_bounds.hpp"

namespace pinnacle {

namespace {

constexpr Value kInfinity = std::numeric_limits<Value>::max();

Value left_of(std::span<const Value> w, std::size_t i) { return i == 0 ? kInfinity : w[i - 1]; }
Value right_of(std::span<const Value> w, std::size_t i) {
  return i + 1 == w.size() ? kInfinity : w[i + 1];
}

bool is_peak_at(std::span<const Value> w, std::size_t i) {
  return left_of(w, i) < w[i] && w[i] > right_of(w, i);
}

bool is_valley_at(std::span<const Value> w, std::size_t i) {
  return left_of(w, i) > w[i] && w[i] < right_of(w, i);
}

template <typename Pred>
ValueSet collect_positions(std::span<const Value> w, Pred pred) {
  ValueSet out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (pred(w, i)) {
      out.push_back(static_cast<Value>(i + 1));
    }
  }
  return out;
}

template <typename Pred>
ValueSet collect_values(std::span<const Value> w, Pred pred) {
  ValueSet out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (pred(w, i)) {
      out.push_back(w[i]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Value parse_int(std::string_view token) {
  Value v = 0;
  const auto *first = token.data();
  const auto *last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || token.empty()) {
    throw std::invalid_argument("not an integer: '" + std::string(token) + "'");
  }
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<Value> split_values(std::string_view text) {
  std::vector<Value> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_int(trim(text.substr(0, comma))));
    if (comma == std::string_view::npos) {
      break;
    }
    text.remove_prefix(comma + 1);
  }
  return out;
}

} // namespace

Permutation::Permutation(std::vector<Value> values) : values_(std::move(values)) {
  const auto n = values_.size();
  if (n == 0) {
    throw std::invalid_argument("permutation must have at least one letter");
  }
  std::vector<bool> seen(n + 1, false);
  for (Value v : values_) {
    if (v < 1 || static_cast<std::size_t>(v) > n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Value> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = static_cast<Value>(i + 1);
  }
  return Permutation(std::move(v));
}

Permutation adopt_unchecked(std::vector<Value> values) {
  return Permutation(std::move(values), Permutation::Unchecked{});
}

Word XFactorization::concatenated() const {
  Word out;
  out.reserve(w1.size() + w2.size() + 1 + w4.size() + w5.size());
  out.insert(out.end(), w1.begin(), w1.end());
  out.insert(out.end(), w2.begin(), w2.end());
  out.push_back(x);
  out.insert(out.end(), w4.begin(), w4.end());
  out.insert(out.end(), w5.begin(), w5.end());
  return out;
}

ValueSet pinnacle_set(const Permutation &p) { return collect_values(p.values(), is_peak_at); }
ValueSet peak_set(const Permutation &p) { return collect_positions(p.values(), is_peak_at); }
ValueSet vale_set(const Permutation &p) { return collect_values(p.values(), is_valley_at); }
ValueSet valley_set(const Permutation &p) { return collect_positions(p.values(), is_valley_at); }

std::size_t descent_count(const Permutation &p) {
  const auto w = p.values();
  std::size_t count = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) {
      ++count;
    }
  }
  return count;
}

bool has_double_descent(std::span<const Value> word) {
  for (std::size_t i = 0; i + 2 < word.size(); ++i) {
    if (word[i] > word[i + 1] && word[i + 1] > word[i + 2]) {
      return true;
    }
  }
  return false;
}

XFactorization x_factorization(const Permutation &p, Value x) {
  if (x < 1 || static_cast<std::size_t>(x) > p.size()) {
    throw std::domain_error("letter " + std::to_string(x) + " is outside [1, " +
                            std::to_string(p.size()) + "]");
  }
  return x_factorization(p.values(), x);
}

XFactorization x_factorization(std::span<const Value> word, Value x) {
  const auto pos = detail::position_of(word, x);
  if (pos == word.size()) {
    throw std::domain_error("letter " + std::to_string(x) + " does not occur in the word");
  }
  const auto b = detail::factor_bounds(word, pos, [](Value a, Value y) { return a < y; });
  const auto it = [&](std::size_t i) { return word.begin() + static_cast<std::ptrdiff_t>(i); };
  XFactorization f;
  f.w1.assign(it(0), it(b.left));
  f.w2.assign(it(b.left), it(b.pos));
  f.x = x;
  f.w4.assign(it(b.pos + 1), it(b.right + 1));
  f.w5.assign(it(b.right + 1), word.end());
  return f;
}

Word restrict_to(std::span<const Value> word, const ValueSet &s) {
  Word out;
  for (Value v : word) {
    if (std::binary_search(s.begin(), s.end(), v)) {
      out.push_back(v);
    }
  }
  return out;
}

Permutation w0_conjugate(const Permutation &p) {
  const auto n = static_cast<Value>(p.size());
  std::vector<Value> out(p.begin(), p.end());
  for (auto &v : out) {
    v = n - v + 1;
  }
  return adopt_unchecked(std::move(out));
}

Value max_or_zero(std::span<const Value> word) noexcept {
  Value m = 0;
  for (Value v : word) {
    m = std::max(m, v);
  }
  return m;
}

Permutation parse_permutation(std::string_view text) {
  text = trim(text);
  if (text.empty()) {
    throw std::invalid_argument("empty permutation");
  }
  if (text.find(',') == std::string_view::npos && text.size() > 1) {
    // compact single-digit form
    if (text.size() > 9) {
      throw std::invalid_argument("compact permutation form only allowed for n <= 9");
    }
    std::vector<Value> values;
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw std::invalid_argument("bad digit in compact permutation '" + std::string(text) + "'");
      }
      values.push_back(c - '0');
    }
    return Permutation(std::move(values));
  }
  return Permutation(split_values(text));
}

ValueSet parse_value_set(std::string_view text) {
  text = trim(text);
  if (text.empty() || text == "none") {
    return {};
  }
  ValueSet out = split_values(text);
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw std::invalid_argument("repeated value in set '" + std::string(text) + "'");
  }
  return out;
}

std::string format_word(std::span<const Value> word, char separator) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) {
      out.push_back(separator);
    }
    out += std::to_string(word[i]);
  }
  return out;
}

std::ostream &operator<<(std::ostream &os, const Permutation &p) { return os << format(p); }

} // namespace pinnacle
