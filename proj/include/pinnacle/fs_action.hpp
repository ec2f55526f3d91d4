#ifndef PINNACLE_FS_ACTION_HPP
#define PINNACLE_FS_ACTION_HPP

#include <span>
#include <vector>

#include "pinnacle/permutation.hpp"

namespace pinnacle {

/// Dual Foata-Strehl map: swaps the smaller-than-x flanks w2 and w4 of the
/// x-factorization. An involution; fixes p whenever x is a vale.
/// Throws std::domain_error if x is not in [1, n].
Permutation dual_fs(const Permutation &p, Value x);

/// Classical Foata-Strehl map: same swap, but with flanks made of letters
/// greater than x.
Permutation classical_fs(const Permutation &p, Value x);

/// Dual map on an arbitrary word of distinct letters (e.g. a restriction).
Word dual_fs(std::span<const Value> word, Value x);

/// Composite dual map over `s`, applied in ascending letter order.
/// The maps pairwise commute, so any order gives the same result.
Permutation dual_fs_set(const Permutation &p, const ValueSet &s);

/// Applies the dual map in place; `x` must occur in `word`.
void apply_dual_fs(std::span<Value> word, Value x);

/// Orbit of p under the dual action, computed by breadth-first search over
/// single-letter moves. Sorted lexicographically.
std::vector<Permutation> dual_orbit(const Permutation &p);

/// Streams dual_fs_set(rep, S) for every S over the non-vale letters of
/// `rep`, in Gray-code order. Emits exactly 2^(n - #vales) distinct
/// permutations, `rep` first.
void for_each_in_orbit(const Permutation &rep, const PermutationSink &sink);

/// Same orbit as dual_orbit(rep), built with for_each_in_orbit and sorted.
std::vector<Permutation> orbit_expand(const Permutation &rep);

} // namespace pinnacle

#endif // PINNACLE_FS_ACTION_HPP
