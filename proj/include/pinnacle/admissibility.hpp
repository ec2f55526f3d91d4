#ifndef PINNACLE_ADMISSIBILITY_HPP
#define PINNACLE_ADMISSIBILITY_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "pinnacle/permutation.hpp"

namespace pinnacle {

/// A weak composition (t_1, ..., t_l) of l whose k-th prefix sum is at
/// least k for every k. These index the admissible vale sets.
struct WeakComposition {
  std::vector<int> parts;

  friend bool operator==(const WeakComposition &, const WeakComposition &) = default;
  friend auto operator<=>(const WeakComposition &, const WeakComposition &) = default;
};

/// Gap sets G_i = { j not in P : p_{i-1} < j < p_i } with p_0 = 1.
struct GapDecomposition {
  std::vector<ValueSet> gaps;

  std::vector<std::size_t> sizes() const;
};

/// Vales below k minus pinnacles below k.
int npv(const ValueSet &pinnacles, const ValueSet &vales, Value k);

/// Whether some permutation of [n] has exactly these pinnacles and vales:
/// 1 is a vale, there is one more vale than pinnacles, and every pinnacle
/// p has npv(p) >= 2. Unsorted, repeated or out-of-range input gives false.
bool is_admissible_pair(const ValueSet &pinnacles, const ValueSet &vales, std::size_t n);

/// All members of C(l), sorted lexicographically. C(0) holds the empty tuple.
std::vector<WeakComposition> compositions_C(std::size_t length);

GapDecomposition gap_sets(const ValueSet &pinnacles, std::size_t n);

/// Streams every admissible vale set for `pinnacles` in [n]: compositions in
/// lexicographic order, then per-gap subsets in colexicographic order.
void for_each_vale_set(const ValueSet &pinnacles, std::size_t n,
                       const std::function<void(const ValueSet &)> &sink);

/// Every vale set V with (P, V) admissible in [n], sorted lexicographically.
/// Empty iff P is not an admissible pinnacle set for n.
std::vector<ValueSet> vale_sets(const ValueSet &pinnacles, std::size_t n);

bool is_admissible_pinnacle_set(const ValueSet &pinnacles, std::size_t n);

/// Closed-form check p_i > 2i (1-based i) and max(P) <= n. Agrees with
/// is_admissible_pinnacle_set; kept as a fast path.
bool satisfies_pinnacle_bound(const ValueSet &pinnacles, std::size_t n);

/// v_1 a_1 p_1 v_2 a_2 p_2 ... p_l v_{l+1} a_{l+1}, with vales and
/// pinnacles sorted and each a_i the ascending run of the remaining letters
/// between v_i and v_{i+1} (a_{l+1}: everything above v_{l+1}).
/// Throws std::domain_error for an inadmissible pair.
Permutation witness_permutation(const ValueSet &pinnacles, const ValueSet &vales, std::size_t n);

/// U^{t_1} R U^{t_2} R ... U^{t_l} R.
std::string composition_to_dyck(const WeakComposition &t);

} // namespace pinnacle

#endif // PINNACLE_ADMISSIBILITY_HPP
