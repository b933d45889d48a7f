#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "medtri/core.hpp"

namespace medtri {

enum class Family { F1, F2a, F2b, F3, F4 };

std::string_view family_name(Family f);  // "f1", "f2a", "f2b", "f3", "f4"

// m > n >= 1, gcd(m, n) = 1, m + n odd, delta >= 1.
struct PythParams {
  std::int64_t m = 0, n = 0, delta = 0;
};

// Right triangle (2*d*m*n, d*(m^2-n^2), d*(m^2+n^2)): legs first,
// hypotenuse last.  Throws with the violated constraint named.
Triangle pythagorean(const PythParams& p);

struct ClaimedMedian {
  int side = 0;  // index into the hit triangle's own side order
  std::int64_t mu = 0;

  bool operator==(const ClaimedMedian&) const = default;
};

// One generator output: a triangle in the family's own side order, the
// medians the family construction guarantees to be integral, and the
// parameter point that produced it.
struct FamilyHit {
  Family family = Family::F1;
  Triangle triangle;
  std::vector<ClaimedMedian> medians;
  std::vector<std::int64_t> params;  // f1/f2: m,n,delta  f3: k,l,delta  f4: a,b,c,e1,e3
};

struct PythRanges {
  std::int64_t m_max = 0, n_max = 0, delta_max = 0;
};

struct F3Ranges {
  std::int64_t k_max = 0, l_max = 0, delta_max = 0;
};

struct F4Ranges {
  std::int64_t odd_max = 0;  // bound on the odd parts a, b, c
  int e_max = 0;             // bound on the exponent e3 (and so e1)
};

// Every generator walks its parameter tuple in lexicographic order,
// skips parameter points violating the family constraints or pushing a
// side beyond max_emitted_side (default: the global cap), and
// re-verifies each hit against analyze_medians before emitting it.

// Right triangles with an integral hypotenuse median: even delta only,
// median to the hypotenuse = delta*(m^2+n^2)/2.
std::vector<FamilyHit> gen_f1(const PythRanges& r, std::int64_t max_emitted_side = kMaxSide);

// Isosceles (alpha, beta, beta) with integral median to the base alpha.
// Subfamily a: alpha = 4*d*m*n,        median = d*(m^2-n^2).
// Subfamily b: alpha = 2*d*(m^2-n^2),  median = 2*d*m*n.
std::vector<FamilyHit> gen_f2a(const PythRanges& r, std::int64_t max_emitted_side = kMaxSide);
std::vector<FamilyHit> gen_f2b(const PythRanges& r, std::int64_t max_emitted_side = kMaxSide);

struct Xyz {
  std::int64_t x = 0, y = 0, z = 0;

  bool operator==(const Xyz&) const = default;
};

// The general solution of x^2 + 2*y^2 = z^2 in positive integers:
// (d*|k^2-2*l^2|, 2*d*k*l, d*(k^2+2*l^2)) with gcd(k, l) = 1.
Xyz solve_x2_2y2_z2(std::int64_t k, std::int64_t l, std::int64_t delta);

// Isosceles (2*d*k*l, beta, beta) with beta = d*|k^2-2*l^2| and the two
// equal-side medians both d*(k^2+2*l^2)/2.  Requires gcd(k, l) = 1,
// |k^2-2*l^2| > k*l and d*(k^2+2*l^2) even.
std::vector<FamilyHit> gen_f3(const F3Ranges& r, std::int64_t max_emitted_side = kMaxSide);

// Evaluation of one scalene two-median candidate (a, b, c odd,
// 1 <= e1 < e3): sides (2^e1*a, 2^e1*b, 2^e3*c), integral medians to
// the first two sides when both shifted-square conditions hold.
struct F4CandidateResult {
  std::optional<FamilyHit> hit;
  std::string reject_reason;  // empty iff hit
  bool squares_hold = false;  // both square conditions held
};

F4CandidateResult check_f4_candidate(std::int64_t a, std::int64_t b, std::int64_t c, int e1,
                                     int e3);

struct F4Rejection {
  std::array<std::int64_t, 5> params{};  // a, b, c, e1, e3
  std::string reason;
};

// diagnostics, when non-null, collects the near misses: candidates
// whose square conditions hold but which fail the triangle checks.
std::vector<FamilyHit> gen_f4(const F4Ranges& r, std::vector<F4Rejection>* diagnostics = nullptr,
                              std::int64_t max_emitted_side = kMaxSide);

struct DedupedHit {
  Triangle triangle;  // canonical ascending sides
  std::vector<FamilyHit> sources;
};

// Collapse hits by canonical triangle, keeping every source parameter
// point.  Output ordered by (c, b, a) ascending.
std::vector<DedupedHit> dedup_hits(std::span<const FamilyHit> hits);

}  // namespace medtri
