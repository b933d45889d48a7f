#include "medtri/families.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace medtri {

namespace {

std::string triple_str(Wide a, Wide b, Wide c) {
  return "(" + std::to_string(static_cast<long long>(a)) + ", " +
         std::to_string(static_cast<long long>(b)) + ", " +
         std::to_string(static_cast<long long>(c)) + ")";
}

void validate_pyth_params(const PythParams& p) {
  if (p.n < 1) throw std::invalid_argument("parametrization requires n >= 1");
  if (p.m <= p.n) throw std::invalid_argument("parametrization requires m > n");
  if (std::gcd(p.m, p.n) != 1) throw std::invalid_argument("parametrization requires gcd(m, n) = 1");
  if ((p.m + p.n) % 2 == 0) throw std::invalid_argument("parametrization requires m + n odd");
  if (p.delta < 1) throw std::invalid_argument("parametrization requires delta >= 1");
  if (p.m > kMaxSide) throw std::invalid_argument("parametrization requires m within the side cap");
  if (p.delta > kMaxSide) throw std::invalid_argument("parametrization requires delta within the side cap");
}

// A generator hit that fails its own median claim is a library bug.
void verify_hit(const FamilyHit& hit) {
  const auto analysis = analyze_medians(hit.triangle);
  for (const auto& cm : hit.medians) {
    const auto& st = analysis.status[static_cast<std::size_t>(cm.side)];
    if (!(st.kind == MedianKind::Integral && st.value == cm.mu))
      throw std::logic_error(std::string(family_name(hit.family)) +
                             " hit failed median re-verification at triangle " +
                             triple_str(hit.triangle.a(), hit.triangle.b(), hit.triangle.c()));
  }
}

// Walk the valid (m, n, delta) points in lexicographic order.
template <typename F>
void for_each_pyth_point(const PythRanges& r, std::int64_t delta_step, std::int64_t delta_from,
                         F&& fn) {
  for (std::int64_t m = 2; m <= r.m_max; ++m)
    for (std::int64_t n = 1; n <= r.n_max && n < m; ++n) {
      if (std::gcd(m, n) != 1 || (m + n) % 2 == 0) continue;
      for (std::int64_t d = delta_from; d <= r.delta_max; d += delta_step) fn(m, n, d);
    }
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::F1: return "f1";
    case Family::F2a: return "f2a";
    case Family::F2b: return "f2b";
    case Family::F3: return "f3";
    case Family::F4: return "f4";
  }
  return "?";
}

Triangle pythagorean(const PythParams& p) {
  validate_pyth_params(p);
  const Wide m = p.m, n = p.n, d = p.delta;
  const Wide leg1 = 2 * d * m * n;
  const Wide leg2 = d * (m * m - n * n);
  const Wide hyp = d * (m * m + n * n);
  if (hyp > kMaxSide)
    throw std::invalid_argument("parameters " + triple_str(p.m, p.n, p.delta) +
                                " push the hypotenuse past the side cap");
  return Triangle(static_cast<std::int64_t>(leg1), static_cast<std::int64_t>(leg2),
                  static_cast<std::int64_t>(hyp));
}

std::vector<FamilyHit> gen_f1(const PythRanges& r, std::int64_t max_emitted_side) {
  std::vector<FamilyHit> hits;
  for_each_pyth_point(r, 2, 2, [&](std::int64_t m, std::int64_t n, std::int64_t d) {
    const Wide hyp = Wide(d) * (Wide(m) * m + Wide(n) * n);
    if (hyp > max_emitted_side) return;
    const Triangle t = pythagorean({m, n, d});
    FamilyHit hit{Family::F1, t, {{2, static_cast<std::int64_t>(hyp / 2)}}, {m, n, d}};
    verify_hit(hit);
    hits.push_back(std::move(hit));
  });
  return hits;
}

namespace {

std::vector<FamilyHit> gen_f2_impl(const PythRanges& r, bool subfamily_b,
                                   std::int64_t max_emitted_side) {
  std::vector<FamilyHit> hits;
  for_each_pyth_point(r, 1, 1, [&](std::int64_t m, std::int64_t n, std::int64_t d) {
    const Wide mm = Wide(m) * m, nn = Wide(n) * n;
    const Wide alpha = subfamily_b ? 2 * Wide(d) * (mm - nn) : 4 * Wide(d) * m * n;
    const Wide beta = Wide(d) * (mm + nn);
    const Wide mu = subfamily_b ? 2 * Wide(d) * m * n : Wide(d) * (mm - nn);
    if (alpha > max_emitted_side || beta > max_emitted_side) return;
    FamilyHit hit{subfamily_b ? Family::F2b : Family::F2a,
                  Triangle(static_cast<std::int64_t>(alpha), static_cast<std::int64_t>(beta),
                           static_cast<std::int64_t>(beta)),
                  {{0, static_cast<std::int64_t>(mu)}},
                  {m, n, d}};
    verify_hit(hit);
    hits.push_back(std::move(hit));
  });
  return hits;
}

}  // namespace

std::vector<FamilyHit> gen_f2a(const PythRanges& r, std::int64_t max_emitted_side) {
  return gen_f2_impl(r, false, max_emitted_side);
}

std::vector<FamilyHit> gen_f2b(const PythRanges& r, std::int64_t max_emitted_side) {
  return gen_f2_impl(r, true, max_emitted_side);
}

Xyz solve_x2_2y2_z2(std::int64_t k, std::int64_t l, std::int64_t delta) {
  if (k < 1 || l < 1) throw std::invalid_argument("solution form requires k, l >= 1");
  if (delta < 1) throw std::invalid_argument("solution form requires delta >= 1");
  if (std::gcd(k, l) != 1) throw std::invalid_argument("solution form requires gcd(k, l) = 1");
  if (k > kMaxSide || l > kMaxSide || delta > kMaxSide)
    throw std::invalid_argument("solution form requires k, l, delta within the side cap");
  const Wide kk = Wide(k) * k, ll2 = 2 * Wide(l) * l;
  const Wide x = Wide(delta) * (kk > ll2 ? kk - ll2 : ll2 - kk);
  const Wide y = 2 * Wide(delta) * k * l;
  const Wide z = Wide(delta) * (kk + ll2);
  if (z > INT64_MAX)
    throw std::overflow_error("k, l, delta overflow the 64-bit solution range");
  return Xyz{static_cast<std::int64_t>(x), static_cast<std::int64_t>(y),
             static_cast<std::int64_t>(z)};
}

std::vector<FamilyHit> gen_f3(const F3Ranges& r, std::int64_t max_emitted_side) {
  std::vector<FamilyHit> hits;
  for (std::int64_t k = 1; k <= r.k_max; ++k)
    for (std::int64_t l = 1; l <= r.l_max; ++l) {
      if (std::gcd(k, l) != 1) continue;
      const Wide kk = Wide(k) * k, ll2 = 2 * Wide(l) * l;
      const Wide base = kk > ll2 ? kk - ll2 : ll2 - kk;  // |k^2 - 2 l^2|
      if (base <= Wide(k) * l) continue;                 // triangle inequality
      const Wide zsum = kk + ll2;
      for (std::int64_t d = 1; d <= r.delta_max; ++d) {
        if ((Wide(d) * zsum) % 2 != 0) continue;  // median must be an integer
        const Wide alpha = 2 * Wide(d) * k * l;
        const Wide beta = Wide(d) * base;
        // sides grow with delta, so the rest of this run is out too
        if (alpha > max_emitted_side || beta > max_emitted_side) break;
        const auto mu = static_cast<std::int64_t>(Wide(d) * zsum / 2);
        FamilyHit hit{Family::F3,
                      Triangle(static_cast<std::int64_t>(alpha), static_cast<std::int64_t>(beta),
                               static_cast<std::int64_t>(beta)),
                      {{1, mu}, {2, mu}},
                      {k, l, d}};
        verify_hit(hit);
        hits.push_back(std::move(hit));
      }
    }
  return hits;
}

F4CandidateResult check_f4_candidate(std::int64_t a, std::int64_t b, std::int64_t c, int e1,
                                     int e3) {
  F4CandidateResult res;
  auto reject = [&](std::string why) {
    res.reject_reason = std::move(why);
    return res;
  };
  if (a < 1 || b < 1 || c < 1) return reject("a, b, c must be positive");
  if (a % 2 == 0 || b % 2 == 0 || c % 2 == 0) return reject("a, b, c must be odd");
  if (e1 < 1) return reject("e1 must be >= 1");
  if (e1 >= e3) return reject("e1 < e3 violated");
  if (e3 > kMaxExponent) return reject("e3 exceeds the exponent cap of " + std::to_string(kMaxExponent));
  if (a > kMaxSide || b > kMaxSide || c > kMaxSide) return reject("odd part exceeds the side cap");

  const Wide alpha = Wide(a) << e1, beta = Wide(b) << e1, gamma = Wide(c) << e3;
  if (alpha > kMaxSide || beta > kMaxSide || gamma > kMaxSide)
    return reject("implied side exceeds the side cap");

  // 2*(e3-e1)+1 <= 2*kMaxExponent, and the sides are capped, so both
  // expressions stay far inside 128 bits
  const Wide shifted = (Wide(1) << (2 * (e3 - e1) + 1)) * c * c;
  const Wide m_sq = 2 * Wide(b) * b - Wide(a) * a + shifted;
  const Wide n_sq = 2 * Wide(a) * a - Wide(b) * b + shifted;
  if (m_sq <= 0) return reject("first square expression is not positive");
  if (n_sq <= 0) return reject("second square expression is not positive");
  if (!is_perfect_square(static_cast<UWide>(m_sq)))
    return reject("first square expression is not a perfect square");
  if (!is_perfect_square(static_cast<UWide>(n_sq)))
    return reject("second square expression is not a perfect square");
  res.squares_hold = true;
  const auto M = static_cast<std::int64_t>(isqrt(static_cast<UWide>(m_sq)));
  const auto N = static_cast<std::int64_t>(isqrt(static_cast<UWide>(n_sq)));
  if (a == b) return reject("alpha = beta, candidate is not scalene");
  if (alpha + beta <= gamma || beta + gamma <= alpha || gamma + alpha <= beta)
    return reject("implied sides " + triple_str(alpha, beta, gamma) +
                  " fail the strict triangle inequality");

  FamilyHit hit{Family::F4,
                Triangle(static_cast<std::int64_t>(alpha), static_cast<std::int64_t>(beta),
                         static_cast<std::int64_t>(gamma)),
                {{0, M << (e1 - 1)}, {1, N << (e1 - 1)}},
                {a, b, c, e1, e3}};
  verify_hit(hit);
  res.hit = std::move(hit);
  return res;
}

std::vector<FamilyHit> gen_f4(const F4Ranges& r, std::vector<F4Rejection>* diagnostics,
                              std::int64_t max_emitted_side) {
  std::vector<FamilyHit> hits;
  for (std::int64_t a = 1; a <= r.odd_max; a += 2)
    for (std::int64_t b = 1; b <= r.odd_max; b += 2)
      for (std::int64_t c = 1; c <= r.odd_max; c += 2)
        for (int e1 = 1; e1 < r.e_max; ++e1) {
          if ((Wide(a) << e1) > max_emitted_side || (Wide(b) << e1) > max_emitted_side) break;
          for (int e3 = e1 + 1; e3 <= r.e_max; ++e3) {
            if ((Wide(c) << e3) > max_emitted_side) break;
            auto res = check_f4_candidate(a, b, c, e1, e3);
            if (res.hit) {
              hits.push_back(std::move(*res.hit));
            } else if (diagnostics && res.squares_hold) {
              diagnostics->push_back(F4Rejection{{a, b, c, e1, e3}, std::move(res.reject_reason)});
            }
          }
        }
  return hits;
}

std::vector<DedupedHit> dedup_hits(std::span<const FamilyHit> hits) {
  // order by (c, b, a) ascending, matching the search stream order
  const auto cba_less = [](const Triangle& lhs, const Triangle& rhs) {
    return std::array{lhs.c(), lhs.b(), lhs.a()} < std::array{rhs.c(), rhs.b(), rhs.a()};
  };
  std::map<Triangle, std::vector<FamilyHit>, decltype(cba_less)> grouped(cba_less);
  for (const auto& hit : hits) grouped[canonicalize(hit.triangle).triangle].push_back(hit);
  std::vector<DedupedHit> out;
  out.reserve(grouped.size());
  for (auto& [tri, sources] : grouped) out.push_back(DedupedHit{tri, std::move(sources)});
  return out;
}

}  // namespace medtri
