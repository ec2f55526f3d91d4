#ifndef PINNACLE_COUNTING_HPP
#define PINNACLE_COUNTING_HPP

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pinnacle/limits.hpp"
#include "pinnacle/permutation.hpp"

namespace pinnacle {

using BigInt = boost::multiprecision::cpp_int;

/**
 * An alternating word v_1 p_1 v_2 p_2 ... p_l v_{l+1} on P u V (letters in
 * order of appearance). Even indices hold vales, odd indices pinnacles.
 */
struct PVArrangement {
  Word word;

  ValueSet pinnacles() const;
  ValueSet vales() const;

  friend bool operator==(const PVArrangement &, const PVArrangement &) = default;
  friend auto operator<=>(const PVArrangement &, const PVArrangement &) = default;
};

/// The word alternates vale/pinnacle, starts and ends with a vale, and its
/// own pinnacle and vale sets are exactly the odd and even positions.
bool is_pv_arrangement(const PVArrangement &a);

/// A PV-arrangement in which every pinnacle's factorization has max(w2) < max(w4).
bool is_canonical(const PVArrangement &a);

/// All canonical arrangements of an admissible pair, built by recursively
/// placing the smallest pinnacle between two smaller vales.
/// Throws std::domain_error if (P, V) is not admissible.
std::vector<PVArrangement> canonical_arrangements(const ValueSet &pinnacles, const ValueSet &vales);

/// Product over p in P of C(npv(p), 2). Throws std::domain_error if (P, V)
/// is not admissible.
BigInt count_canonical(const ValueSet &pinnacles, const ValueSet &vales);

/// Streams every FS-minimal permutation of [n] whose restriction to P u V is
/// `a`. Each remaining letter r goes on an ascending slope v_i ... p_i with
/// v_i < r < p_i (the slope after the last vale is unbounded above); the
/// choices are iterated odometer style, the largest letter varying fastest.
/// Throws std::domain_error if `a` is not canonical or n < max(a).
void for_each_fs_minimal(const PVArrangement &a, std::size_t n, const PermutationSink &sink);

std::vector<Permutation> fs_minimal_from_arrangement(const PVArrangement &a, std::size_t n);

/// Every FS-minimal permutation of [n] with pinnacle set P, streamed in
/// vale-set, arrangement, slot-choice order.
void for_each_fs_minimal(const ValueSet &pinnacles, std::size_t n, const PermutationSink &sink);

/// Number of FS-minimal permutations with pinnacle set P and vale set V:
/// prod over p of binom(npv(p), 2) times prod over the other letters r of npv(r).
BigInt count_O_PV(const ValueSet &pinnacles, const ValueSet &vales, std::size_t n);

/// Number of dual orbits (equivalently FS-minimal permutations) with pinnacle set P.
BigInt count_O_P(const ValueSet &pinnacles, std::size_t n);

/// |{ pi in S_n : Pin(pi) = P }| = 2^(n - |P| - 1) * O_P; 0 if P is inadmissible.
BigInt count_pin(const ValueSet &pinnacles, std::size_t n);

struct PinBounds {
  BigInt lower;
  BigInt upper;
};

/// lower = 2^(n-|P|-1), upper = |P|! 2^(n-2|P|-1) S(n-|P|, |P|+1).
/// Throws std::domain_error if P is not admissible for n.
PinBounds pin_bounds(const ValueSet &pinnacles, std::size_t n);

/// Stirling numbers of the second kind.
BigInt stirling2(std::size_t r, std::size_t s);

/// C(a, b), zero when b > a.
BigInt binomial(std::size_t a, std::size_t b);

/// Brute-force scan of S_n in lexicographic order. Throws ResourceError when n > limit.
void for_each_naive(const ValueSet &pinnacles, std::size_t n, const PermutationSink &sink,
                    std::size_t limit = max_naive_n());
std::vector<Permutation> generate_naive(const ValueSet &pinnacles, std::size_t n,
                                        std::size_t limit = max_naive_n());

/// vale sets -> canonical arrangements -> FS-minimal permutations -> orbits.
/// Each permutation is emitted once; order is not lexicographic.
void for_each_constructive(const ValueSet &pinnacles, std::size_t n, const PermutationSink &sink);
std::vector<Permutation> generate_constructive(const ValueSet &pinnacles, std::size_t n);

} // namespace pinnacle

#endif // PINNACLE_COUNTING_HPP
