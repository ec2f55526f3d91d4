#ifndef PINNACLE_FS_MINIMAL_HPP
#define PINNACLE_FS_MINIMAL_HPP

#include <cstddef>
#include <cstdint>
#include <map>

#include "pinnacle/limits.hpp"
#include "pinnacle/permutation.hpp"

namespace pinnacle {

/// True iff max(w2) < max(w4) in the q-factorization of `word` for every
/// q in `pinnacles`. The max of an empty subword is 0.
bool satisfies_canonical_condition(std::span<const Value> word, const ValueSet &pinnacles);

/**
 * FS-minimal test: no double descents (counting the left sentinel, so
 * p(1) > p(2) is one), and for every pinnacle q the
 * q-factorization of the restriction to pinnacles and vales has
 * max(w2) < max(w4).
 */
bool is_fs_minimal(const Permutation &p);

/// The unique FS-minimal element of p's dual orbit.
///
/// First every letter sitting strictly inside a descending run (before the
/// first vale, or between a pinnacle and the next vale) is moved onto the
/// following ascent; this leaves only the descents right after pinnacles.
/// Then each pinnacle whose restricted factorization has max(w2) > max(w4)
/// is flipped.
Permutation to_fs_minimal(const Permutation &p);

/// Number of FS-minimal permutations of [n] per pinnacle set, by exhaustive
/// scan. Throws ResourceError when n > limit.
std::map<ValueSet, std::uint64_t> fs_minimal_count_all(std::size_t n,
                                                       std::size_t limit = max_naive_n());

} // namespace pinnacle

#endif // PINNACLE_FS_MINIMAL_HPP
