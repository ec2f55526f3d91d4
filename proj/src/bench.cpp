#include "pinnacle/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>

#include "pinnacle/admissibility.hpp"

namespace pinnacle {

namespace {

// Runs `leg` once untimed, then `runs` times; returns the median in ms and
// the number of permutations the last run produced.
template <typename Leg>
std::pair<double, std::size_t> time_leg(Leg leg, std::size_t runs) {
  std::vector<Value> buffer;
  std::size_t produced = 0;
  const PermutationSink sink = [&](std::span<const Value> w) {
    buffer.insert(buffer.end(), w.begin(), w.end());
    ++produced;
  };
  leg(sink);

  std::vector<double> samples;
  for (std::size_t i = 0; i < std::max<std::size_t>(runs, 1); ++i) {
    buffer.clear();
    produced = 0;
    const auto start = std::chrono::steady_clock::now();
    leg(sink);
    const auto stop = std::chrono::steady_clock::now();
    samples.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
  }
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  const double median =
      samples.size() % 2 == 1 ? samples[mid] : 0.5 * (samples[mid - 1] + samples[mid]);
  return {median, produced};
}

std::string format_ms(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", ms);
  return buf;
}

} // namespace

std::optional<double> BenchRow::speedup() const {
  if (!naive_ms || construct_ms <= 0.0) {
    return std::nullopt;
  }
  return *naive_ms / construct_ms;
}

std::vector<ValueSet> admissible_pinnacle_sets(std::size_t n) {
  std::vector<ValueSet> out;
  if (n < 3) {
    out.push_back({});
    return out;
  }
  const std::size_t candidates = n - 2; // letters 3..n
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << candidates); ++mask) {
    ValueSet p;
    for (std::size_t b = 0; b < candidates; ++b) {
      if (mask >> b & 1U) {
        p.push_back(static_cast<Value>(b + 3));
      }
    }
    if (is_admissible_pinnacle_set(p, n)) {
      out.push_back(std::move(p));
    }
  }
  std::sort(out.begin(), out.end(), [](const ValueSet &a, const ValueSet &b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

BenchRow bench_pinnacle_set(const ValueSet &pinnacles, std::size_t n, std::size_t runs,
                            std::size_t naive_limit) {
  BenchRow row;
  row.n = n;
  row.pinnacles = pinnacles;

  const auto [construct_ms, constructed] = time_leg(
      [&](const PermutationSink &sink) { for_each_constructive(pinnacles, n, sink); }, runs);
  row.construct_ms = construct_ms;
  row.count = constructed;
  row.counts_agree = count_pin(pinnacles, n) == row.count;

  if (n <= naive_limit) {
    const auto [naive_ms, scanned] = time_leg(
        [&](const PermutationSink &sink) { for_each_naive(pinnacles, n, sink, naive_limit); },
        runs);
    row.naive_ms = naive_ms;
    row.counts_agree = row.counts_agree && BigInt(scanned) == row.count;
  }
  return row;
}

std::string bench_csv_row(const BenchRow &row) {
  std::string out = std::to_string(row.n) + ',' + format_word(row.pinnacles, ';') + ',' +
                    row.count.str() + ',';
  out += row.naive_ms ? format_ms(*row.naive_ms) : "skipped";
  out += ',' + format_ms(row.construct_ms) + ',';
  const auto ratio = row.speedup();
  out += ratio ? format_ms(*ratio) : "skipped";
  return out;
}

} // namespace pinnacle
