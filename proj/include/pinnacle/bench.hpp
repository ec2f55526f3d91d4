#ifndef PINNACLE_BENCH_HPP
#define PINNACLE_BENCH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pinnacle/counting.hpp"

namespace pinnacle {

/// One timing row: brute-force scan versus orbit construction for a fixed P.
struct BenchRow {
  std::size_t n = 0;
  ValueSet pinnacles;
  BigInt count;                   // size of the constructed family
  std::optional<double> naive_ms; // empty when n is above the exhaustive cap
  double construct_ms = 0.0;
  bool counts_agree = true;       // naive size (when run) and formula match `count`

  std::optional<double> speedup() const;
};

/// Every admissible pinnacle set for n, ordered by size then lexicographically.
std::vector<ValueSet> admissible_pinnacle_sets(std::size_t n);

/// Times both generators for (P, n) on a monotonic clock. One untimed warm-up
/// run precedes `runs` timed runs; each leg reports the median.
BenchRow bench_pinnacle_set(const ValueSet &pinnacles, std::size_t n, std::size_t runs,
                            std::size_t naive_limit = max_naive_n());

inline constexpr const char *kBenchCsvHeader = "n,pinnacles,count,naive_ms,construct_ms,speedup";

/// CSV row matching kBenchCsvHeader; pinnacles are ';'-joined, skipped legs
/// read "skipped".
std::string bench_csv_row(const BenchRow &row);

} // namespace pinnacle

#endif // PINNACLE_BENCH_HPP
