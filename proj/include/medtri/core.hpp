#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace medtri {

// 128-bit scratch space: every formula in this library is evaluated at
// twice the width of the side-length type before anything is narrowed.
using Wide = __int128;
using UWide = unsigned __int128;

// Hard cap on accepted side lengths.  With sides at most 10^9 every
// quantity the library forms (median quad values, family side formulas,
// the shifted squares in the decomposition checks) stays well inside a
// signed 128-bit magnitude, so no overflow checks are needed downstream.
inline constexpr std::int64_t kMaxSide = 1'000'000'000;

// 2^e * odd <= kMaxSide forces e <= 29; 30 leaves room for the pure
// Diophantine paths that never build a triangle.
inline constexpr int kMaxExponent = 30;

// floor(sqrt(n)).  Post-condition: r*r <= n < (r+1)*(r+1).
std::uint64_t isqrt(UWide n);

bool is_perfect_square(UWide n);

// n = 2^valuation * odd_part with odd_part odd.
struct TwoAdic {
  int valuation = 0;
  std::int64_t odd_part = 1;

  bool operator==(const TwoAdic&) const = default;
};

// Requires n >= 1.
TwoAdic two_adic(std::int64_t n);

// Integer-sided triangle.  Construction enforces positivity, the side
// cap, and the strict triangle inequality; degenerate triples never
// exist as Triangle values.
class Triangle {
 public:
  Triangle(std::int64_t a, std::int64_t b, std::int64_t c);

  std::int64_t a() const { return sides_[0]; }
  std::int64_t b() const { return sides_[1]; }
  std::int64_t c() const { return sides_[2]; }
  std::int64_t side(int i) const { return sides_[static_cast<std::size_t>(i)]; }
  const std::array<std::int64_t, 3>& sides() const { return sides_; }

  bool operator==(const Triangle&) const = default;
  auto operator<=>(const Triangle&) const = default;

 private:
  std::array<std::int64_t, 3> sides_;
};

enum class MedianKind { Integral, HalfInteger, Irrational };

// Exact status of one median length mu.  The median of a triangle with
// integer sides is either an integer, half an odd integer, or
// irrational -- 4*mu^2 is an integer, so mu is rational only when
// 4*mu^2 is a perfect square, and then 2*mu is its root.
struct MedianStatus {
  MedianKind kind = MedianKind::Irrational;
  std::int64_t value = 0;  // mu when Integral, 2*mu when HalfInteger

  static MedianStatus integral(std::int64_t mu) { return {MedianKind::Integral, mu}; }
  static MedianStatus half_integer(std::int64_t twice_mu) {
    return {MedianKind::HalfInteger, twice_mu};
  }
  static MedianStatus irrational() { return {MedianKind::Irrational, 0}; }

  bool is_integral() const { return kind == MedianKind::Integral; }
  bool is_rational() const { return kind != MedianKind::Irrational; }

  // 2*mu; only meaningful for the two rational kinds.
  std::int64_t twice_mu() const;

  bool operator==(const MedianStatus&) const = default;
};

struct MedianAnalysis {
  std::array<std::int64_t, 3> quad{};  // 4*mu^2 for the median to each side
  std::array<MedianStatus, 3> status{};

  bool operator==(const MedianAnalysis&) const = default;
};

// 4*mu^2 for the median to each side: the median to side a satisfies
// 4*mu_a^2 = 2(b^2 + c^2) - a^2, and cyclically.  Strictly positive for
// every valid triangle.
std::array<std::int64_t, 3> median_quad_squares(const Triangle& t);

// Status of a median from its quad value 4*mu^2.
MedianStatus classify_quad(std::int64_t quad);

MedianAnalysis analyze_medians(const Triangle& t);

int integral_median_count(const Triangle& t);

// Ascending side order plus the permutation that got there: canonical
// side i is input side source_index[i].  Ties keep input order, so the
// result is deterministic.
struct Canonical {
  Triangle triangle;
  std::array<int, 3> source_index;
};

Canonical canonicalize(const Triangle& t);

}  // namespace medtri
