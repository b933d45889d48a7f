#include "medtri/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace medtri {

std::vector<std::pair<std::int64_t, std::int64_t>> partition_side_ranges(std::int64_t max_side,
                                                                         int workers) {
  if (max_side < 1) throw std::invalid_argument("max_side must be >= 1");
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  const auto chunks = static_cast<std::int64_t>(std::min<std::int64_t>(workers, max_side));
  std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
  if (chunks == 1) {
    ranges.emplace_back(1, max_side);
    return ranges;
  }
  // ~c^2 triangles share the same largest side c, so split the cube
  const Wide total = Wide(max_side) * max_side * max_side;
  std::int64_t lo = 1;
  for (std::int64_t i = 1; i <= chunks && lo <= max_side; ++i) {
    std::int64_t hi;
    if (i == chunks) {
      hi = max_side;
    } else {
      // smallest hi with hi^3 >= total * i / chunks, by binary search
      const Wide target = total * i / chunks;
      std::int64_t s_lo = lo, s_hi = max_side;
      while (s_lo < s_hi) {
        const std::int64_t mid = s_lo + (s_hi - s_lo) / 2;
        if (Wide(mid) * mid * mid < target) s_lo = mid + 1;
        else s_hi = mid;
      }
      hi = s_lo;
    }
    hi = std::max(hi, lo);
    ranges.emplace_back(lo, hi);
    lo = hi + 1;
  }
  return ranges;
}

}  // namespace medtri
