#include "medtri/core.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace medtri {

namespace {

int bit_width_u128(UWide n) {
  const auto hi = static_cast<std::uint64_t>(n >> 64);
  if (hi != 0) return 64 + std::bit_width(hi);
  return std::bit_width(static_cast<std::uint64_t>(n));
}

std::string triple_str(std::int64_t a, std::int64_t b, std::int64_t c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

}  // namespace

std::uint64_t isqrt(UWide n) {
  if (n == 0) return 0;
  if (n < (UWide(1) << 52)) {
    // doubles hold these exactly; one correction pass absorbs rounding
    const auto v = static_cast<std::uint64_t>(n);
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
    while (r != 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
  }
  // Newton from a power-of-two overestimate: the iterate strictly
  // decreases until it lands on floor(sqrt(n)).
  UWide x = UWide(1) << ((bit_width_u128(n) + 1) / 2);
  for (;;) {
    const UWide y = (x + n / x) >> 1;
    if (y >= x) break;
    x = y;
  }
  while (x * x > n) --x;
  return static_cast<std::uint64_t>(x);
}

bool is_perfect_square(UWide n) {
  // squares mod 16 land in {0, 1, 4, 9}
  switch (static_cast<unsigned>(n & 15)) {
    case 0: case 1: case 4: case 9: break;
    default: return false;
  }
  const UWide r = isqrt(n);
  return r * r == n;
}

TwoAdic two_adic(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("two_adic: argument must be a positive integer");
  const int e = std::countr_zero(static_cast<std::uint64_t>(n));
  return TwoAdic{e, n >> e};
}

Triangle::Triangle(std::int64_t a, std::int64_t b, std::int64_t c) : sides_{a, b, c} {
  for (const auto s : sides_) {
    if (s < 1)
      throw std::invalid_argument("triangle side must be a positive integer, got " +
                                  std::to_string(s));
    if (s > kMaxSide)
      throw std::invalid_argument("triangle side " + std::to_string(s) + " exceeds the cap of " +
                                  std::to_string(kMaxSide));
  }
  if (a + b <= c || b + c <= a || c + a <= b)
    throw std::invalid_argument("sides " + triple_str(a, b, c) +
                                " violate the strict triangle inequality");
}

std::int64_t MedianStatus::twice_mu() const {
  switch (kind) {
    case MedianKind::Integral: return 2 * value;
    case MedianKind::HalfInteger: return value;
    case MedianKind::Irrational: break;
  }
  throw std::logic_error("twice_mu is undefined for an irrational median");
}

std::array<std::int64_t, 3> median_quad_squares(const Triangle& t) {
  const Wide a = t.a(), b = t.b(), c = t.c();
  const Wide qa = 2 * (b * b + c * c) - a * a;
  const Wide qb = 2 * (a * a + c * c) - b * b;
  const Wide qc = 2 * (a * a + b * b) - c * c;
  // the strict triangle inequality keeps all three positive, and the
  // side cap keeps them under 4 * kMaxSide^2, so int64 holds them
  return {static_cast<std::int64_t>(qa), static_cast<std::int64_t>(qb),
          static_cast<std::int64_t>(qc)};
}

MedianStatus classify_quad(std::int64_t quad) {
  if (quad <= 0) throw std::invalid_argument("median quad value must be positive");
  const auto q = static_cast<UWide>(quad);
  const std::uint64_t r = isqrt(q);
  if (static_cast<UWide>(r) * r != q) return MedianStatus::irrational();
  if (r % 2 == 0) return MedianStatus::integral(static_cast<std::int64_t>(r / 2));
  return MedianStatus::half_integer(static_cast<std::int64_t>(r));
}

MedianAnalysis analyze_medians(const Triangle& t) {
  MedianAnalysis out;
  out.quad = median_quad_squares(t);
  for (int i = 0; i < 3; ++i) out.status[static_cast<std::size_t>(i)] = classify_quad(out.quad[static_cast<std::size_t>(i)]);
  return out;
}

int integral_median_count(const Triangle& t) {
  const auto analysis = analyze_medians(t);
  int n = 0;
  for (const auto& st : analysis.status) n += st.is_integral() ? 1 : 0;
  return n;
}

Canonical canonicalize(const Triangle& t) {
  std::array<int, 3> idx{0, 1, 2};
  std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) { return t.side(i) < t.side(j); });
  return Canonical{Triangle(t.side(idx[0]), t.side(idx[1]), t.side(idx[2])), idx};
}

}  // namespace medtri
