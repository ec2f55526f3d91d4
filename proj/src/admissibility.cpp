#include "pinnacle/admissibility.hpp"

#include <algorithm>
#include <stdexcept>

namespace pinnacle {

namespace {

bool is_strictly_increasing(const ValueSet &s) {
  return std::adjacent_find(s.begin(), s.end(), std::greater_equal<>()) == s.end();
}

bool in_range(const ValueSet &s, std::size_t n) {
  return s.empty() || (s.front() >= 1 && static_cast<std::size_t>(s.back()) <= n);
}

void compositions_from(std::size_t length, std::size_t index, int remaining, int prefix,
                       std::vector<int> &parts, std::vector<WeakComposition> &out) {
  if (index == length) {
    if (remaining == 0) {
      out.push_back({parts});
    }
    return;
  }
  const int needed = static_cast<int>(index) + 1;
  for (int t = 0; t <= remaining; ++t) {
    if (prefix + t < needed) {
      continue;
    }
    parts[index] = t;
    compositions_from(length, index + 1, remaining - t, prefix + t, parts, out);
  }
}

// k-subsets of `pool` in colexicographic order.
void colex_subsets(const ValueSet &pool, std::size_t k, std::size_t bound, ValueSet &chosen,
                   const std::function<void()> &visit) {
  if (k == 0) {
    visit();
    return;
  }
  for (std::size_t last = k - 1; last < bound; ++last) {
    chosen.push_back(pool[last]);
    // chosen is built largest-first; the caller sorts
    colex_subsets(pool, k - 1, last, chosen, visit);
    chosen.pop_back();
  }
}

void choose_per_gap(const GapDecomposition &gaps, const WeakComposition &t, std::size_t gap,
                    ValueSet &chosen, const std::function<void(const ValueSet &)> &sink) {
  if (gap == gaps.gaps.size()) {
    ValueSet v = chosen;
    v.push_back(1);
    std::sort(v.begin(), v.end());
    sink(v);
    return;
  }
  const ValueSet &pool = gaps.gaps[gap];
  const auto k = static_cast<std::size_t>(t.parts[gap]);
  if (k > pool.size()) {
    return;
  }
  colex_subsets(pool, k, pool.size(), chosen,
                [&] { choose_per_gap(gaps, t, gap + 1, chosen, sink); });
}

} // namespace

std::vector<std::size_t> GapDecomposition::sizes() const {
  std::vector<std::size_t> out;
  out.reserve(gaps.size());
  for (const auto &g : gaps) {
    out.push_back(g.size());
  }
  return out;
}

int npv(const ValueSet &pinnacles, const ValueSet &vales, Value k) {
  const auto below = [k](const ValueSet &s) {
    return static_cast<int>(std::count_if(s.begin(), s.end(), [k](Value v) { return v < k; }));
  };
  return below(vales) - below(pinnacles);
}

bool is_admissible_pair(const ValueSet &pinnacles, const ValueSet &vales, std::size_t n) {
  if (!is_strictly_increasing(pinnacles) || !is_strictly_increasing(vales) ||
      !in_range(pinnacles, n) || !in_range(vales, n)) {
    return false;
  }
  for (Value p : pinnacles) {
    if (std::binary_search(vales.begin(), vales.end(), p)) {
      return false;
    }
  }
  if (vales.empty() || vales.front() != 1) {
    return false;
  }
  if (vales.size() != pinnacles.size() + 1) {
    return false;
  }
  return std::all_of(pinnacles.begin(), pinnacles.end(),
                     [&](Value p) { return npv(pinnacles, vales, p) >= 2; });
}

std::vector<WeakComposition> compositions_C(std::size_t length) {
  std::vector<WeakComposition> out;
  std::vector<int> parts(length, 0);
  compositions_from(length, 0, static_cast<int>(length), 0, parts, out);
  return out;
}

GapDecomposition gap_sets(const ValueSet &pinnacles, std::size_t n) {
  GapDecomposition d;
  Value previous = 1;
  for (Value p : pinnacles) {
    ValueSet gap;
    for (Value j = previous + 1; j < p; ++j) {
      if (static_cast<std::size_t>(j) <= n) {
        gap.push_back(j);
      }
    }
    d.gaps.push_back(std::move(gap));
    previous = p;
  }
  return d;
}

void for_each_vale_set(const ValueSet &pinnacles, std::size_t n,
                       const std::function<void(const ValueSet &)> &sink) {
  if (n == 0 || !is_strictly_increasing(pinnacles) || !in_range(pinnacles, n)) {
    return;
  }
  const GapDecomposition gaps = gap_sets(pinnacles, n);
  ValueSet chosen;
  for (const auto &t : compositions_C(pinnacles.size())) {
    choose_per_gap(gaps, t, 0, chosen, sink);
  }
}

std::vector<ValueSet> vale_sets(const ValueSet &pinnacles, std::size_t n) {
  std::vector<ValueSet> out;
  for_each_vale_set(pinnacles, n, [&](const ValueSet &v) { out.push_back(v); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_admissible_pinnacle_set(const ValueSet &pinnacles, std::size_t n) {
  if (n == 0 || !is_strictly_increasing(pinnacles) || !in_range(pinnacles, n)) {
    return false;
  }
  // Some composition must fit inside the gaps; that composition yields a vale set.
  const auto sizes = gap_sets(pinnacles, n).sizes();
  const auto fits = [&](const WeakComposition &t) {
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      if (static_cast<std::size_t>(t.parts[i]) > sizes[i]) {
        return false;
      }
    }
    return true;
  };
  const auto all = compositions_C(pinnacles.size());
  return std::any_of(all.begin(), all.end(), fits);
}

bool satisfies_pinnacle_bound(const ValueSet &pinnacles, std::size_t n) {
  if (n == 0 || !is_strictly_increasing(pinnacles) || !in_range(pinnacles, n)) {
    return false;
  }
  for (std::size_t i = 0; i < pinnacles.size(); ++i) {
    if (pinnacles[i] <= 2 * static_cast<Value>(i + 1)) {
      return false;
    }
  }
  return true;
}

Permutation witness_permutation(const ValueSet &pinnacles, const ValueSet &vales, std::size_t n) {
  if (!is_admissible_pair(pinnacles, vales, n)) {
    throw std::domain_error("pinnacle/vale pair is not admissible");
  }
  std::vector<bool> marked(n + 1, false);
  for (Value v : pinnacles) {
    marked[static_cast<std::size_t>(v)] = true;
  }
  for (Value v : vales) {
    marked[static_cast<std::size_t>(v)] = true;
  }
  std::vector<Value> out;
  out.reserve(n);
  for (std::size_t i = 0; i < vales.size(); ++i) {
    out.push_back(vales[i]);
    const Value upper = i + 1 < vales.size() ? vales[i + 1] : static_cast<Value>(n + 1);
    for (Value r = vales[i] + 1; r < upper; ++r) {
      if (!marked[static_cast<std::size_t>(r)]) {
        out.push_back(r);
      }
    }
    if (i < pinnacles.size()) {
      out.push_back(pinnacles[i]);
    }
  }
  return Permutation(std::move(out));
}

std::string composition_to_dyck(const WeakComposition &t) {
  std::string out;
  for (int part : t.parts) {
    out.append(static_cast<std::size_t>(part), 'U');
    out.push_back('R');
  }
  return out;
}

} // namespace pinnacle
