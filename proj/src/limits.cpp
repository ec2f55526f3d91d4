#include "pinnacle/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

namespace pinnacle {

std::size_t max_naive_n() {
  const char *raw = std::getenv("PINNACLE_MAX_NAIVE_N");
  if (raw == nullptr) {
    return kDefaultMaxNaiveN;
  }
  std::string_view text(raw);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    return kDefaultMaxNaiveN;
  }
  return value;
}

void require_exhaustive(std::size_t n, std::size_t limit) {
  if (n > limit) {
    throw ResourceError("n = " + std::to_string(n) + " exceeds the exhaustive-enumeration limit " +
                        std::to_string(limit) + " (set PINNACLE_MAX_NAIVE_N to raise it)");
  }
}

} // namespace pinnacle
