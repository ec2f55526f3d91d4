#ifndef PINNACLE_LIMITS_HPP
#define PINNACLE_LIMITS_HPP

#include <cstddef>
#include <stdexcept>

namespace pinnacle {

/// Raised when a request would run an exhaustive scan above the configured cap.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultMaxNaiveN = 10;

/// Cap on n for exhaustive scans over S_n. Read from PINNACLE_MAX_NAIVE_N,
/// defaulting to 10.
std::size_t max_naive_n();

/// Throws ResourceError if n > limit.
void require_exhaustive(std::size_t n, std::size_t limit);

} // namespace pinnacle

#endif // PINNACLE_LIMITS_HPP
