#include "medtri/search.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "medtri/enumerate.hpp"

namespace medtri {

namespace {

constexpr std::array<std::pair<Tag, std::string_view>, 7> kTagTable{{
    {kTagPythagorean, "pythagorean"},
    {kTagIsosceles, "isosceles"},
    {kTagEquilateral, "equilateral"},
    {kTagF1, "F1"},
    {kTagF2, "F2"},
    {kTagF3, "F3"},
    {kTagF4Form, "F4-form"},
}};

std::int64_t isqrt64(std::int64_t n) {
  return n < 0 ? 0 : static_cast<std::int64_t>(isqrt(static_cast<UWide>(n)));
}

// canonical set of triangles ordered like the search stream
using TriangleSet = std::set<Triangle>;

std::vector<Triangle> set_difference_sorted(const TriangleSet& lhs, const TriangleSet& rhs) {
  std::vector<Triangle> out;
  std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(out));
  return out;
}

TriangleSet generated_set(const std::vector<FamilyHit>& hits, std::int64_t max_side) {
  TriangleSet out;
  for (const auto& h : hits) {
    const Triangle t = canonicalize(h.triangle).triangle;
    if (t.c() <= max_side) out.insert(t);
  }
  return out;
}

}  // namespace

std::vector<std::string> tag_names(TagSet tags) {
  std::vector<std::string> out;
  for (const auto& [bit, name] : kTagTable)
    if (tags & bit) out.emplace_back(name);
  return out;
}

TagSet classify_canonical(const Triangle& t, const MedianAnalysis& analysis) {
  const std::int64_t a = t.a(), b = t.b(), c = t.c();
  TagSet tags = 0;

  const bool pyth = Wide(a) * a + Wide(b) * b == Wide(c) * c;
  if (pyth) {
    tags |= kTagPythagorean;
    if (c % 2 == 0 && analysis.status[2].is_integral()) tags |= kTagF1;
  }

  const bool iso = a == b || b == c;
  if (iso) {
    tags |= kTagIsosceles;
    if (a == c) tags |= kTagEquilateral;
    // base = the odd side out (for equilateral any choice agrees)
    const int base = a == b ? 2 : 0;
    const int equal = a == b ? 0 : 1;
    if (analysis.status[static_cast<std::size_t>(base)].is_integral()) tags |= kTagF2;
    if (analysis.status[static_cast<std::size_t>(equal)].is_integral()) tags |= kTagF3;
  } else {
    // scalene: look for two integral medians whose sides share a
    // valuation while the third side's is strictly larger
    for (int i = 0; i < 3 && !(tags & kTagF4Form); ++i) {
      for (int j = i + 1; j < 3; ++j) {
        if (!analysis.status[static_cast<std::size_t>(i)].is_integral() ||
            !analysis.status[static_cast<std::size_t>(j)].is_integral())
          continue;
        const int other = 3 - i - j;
        const int vi = two_adic(t.side(i)).valuation;
        const int vj = two_adic(t.side(j)).valuation;
        const int vo = two_adic(t.side(other)).valuation;
        if (vi == vj && vo > vi) {
          tags |= kTagF4Form;
          break;
        }
      }
    }
  }
  return tags;
}

TagSet classify(const Triangle& t) {
  const Triangle canon = canonicalize(t).triangle;
  return classify_canonical(canon, analyze_medians(canon));
}

SearchRecord make_record(const Triangle& t) {
  const Triangle canon = canonicalize(t).triangle;
  SearchRecord rec{canon, analyze_medians(canon), 0, 0};
  for (const auto& st : rec.analysis.status) rec.integral_count += st.is_integral() ? 1 : 0;
  rec.tags = classify_canonical(canon, rec.analysis);
  return rec;
}

void enumerate_triangles(std::int64_t max_side,
                         const std::function<void(const Triangle&)>& fn) {
  if (max_side < 1 || max_side > kMaxSide)
    throw std::invalid_argument("max_side must be between 1 and " + std::to_string(kMaxSide));
  visit_triangles(1, max_side, [&](std::int64_t a, std::int64_t b, std::int64_t c) {
    fn(Triangle(a, b, c));
  });
}

std::vector<SearchRecord> search_integral_medians(std::int64_t max_side, int min_count,
                                                  SideFilter filter, int workers) {
  if (max_side < 1 || max_side > kMaxSide)
    throw std::invalid_argument("max_side must be between 1 and " + std::to_string(kMaxSide));
  if (min_count < 0 || min_count > 3)
    throw std::invalid_argument("min_count must be between 0 and 3");
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");

  auto chunk = [=](std::int64_t lo, std::int64_t hi) {
    std::vector<SearchRecord> out;
    visit_triangles(lo, hi, [&](std::int64_t a, std::int64_t b, std::int64_t c) {
      const bool iso = a == b || b == c;
      if (filter == SideFilter::Scalene && iso) return;
      if (filter == SideFilter::Isosceles && !iso) return;
      // quads inline: this loop dominates the big scans
      const Wide aa = Wide(a) * a, bb = Wide(b) * b, cc = Wide(c) * c;
      MedianAnalysis an;
      an.quad = {static_cast<std::int64_t>(2 * (bb + cc) - aa),
                 static_cast<std::int64_t>(2 * (aa + cc) - bb),
                 static_cast<std::int64_t>(2 * (aa + bb) - cc)};
      int count = 0;
      for (int i = 0; i < 3; ++i) {
        an.status[static_cast<std::size_t>(i)] = classify_quad(an.quad[static_cast<std::size_t>(i)]);
        count += an.status[static_cast<std::size_t>(i)].is_integral() ? 1 : 0;
      }
      if (count < min_count) return;
      const Triangle t(a, b, c);
      out.push_back(SearchRecord{t, an, count, classify_canonical(t, an)});
    });
    return out;
  };

  std::vector<SearchRecord> records;
  for (auto& part : run_chunked(max_side, workers, chunk))
    records.insert(records.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
  return records;
}

// Derivations: every side formula below grows monotonically in each
// parameter, so a family point reaching any triangle with all sides
// <= max_side must sit inside these rectangles.
//
// f1: hypotenuse = delta*(m^2+n^2) with delta >= 2 even, n >= 1, m > n,
//     so m^2 < max_side/2 and delta <= max_side/(m^2+n^2) <= max_side/5.
PythRanges f1_bounds_for_max_side(std::int64_t max_side) {
  const std::int64_t half = max_side / 2;
  PythRanges r;
  r.m_max = isqrt64(half - 1 < 0 ? 0 : half - 1);
  r.n_max = isqrt64(half - 4 < 0 ? 0 : half - 4);
  r.delta_max = max_side / 5;
  return r;
}

// f2: the equal sides are delta*(m^2+n^2) <= max_side with delta >= 1,
//     m >= 2, n >= 1, so m^2 <= max_side-1, n^2 <= max_side-4 and
//     delta <= max_side/5.
PythRanges f2_bounds_for_max_side(std::int64_t max_side) {
  PythRanges r;
  r.m_max = isqrt64(max_side - 1);
  r.n_max = isqrt64(max_side - 4);
  r.delta_max = max_side / 5;
  return r;
}

// f3: |k^2 - 2 l^2| > k*l forces k > 2l or k < l.  When k > 2l the
//     equal side delta*(k^2-2*l^2) exceeds k^2/2, so k^2 < 2*max_side;
//     when k < l it exceeds l^2, so l^2 < max_side.  The base
//     2*delta*k*l <= max_side bounds delta by max_side/2.
F3Ranges f3_bounds_for_max_side(std::int64_t max_side) {
  return F3Ranges{isqrt64(2 * max_side), isqrt64(max_side), max_side / 2};
}

// f4: sides 2^e1*a, 2^e1*b, 2^e3*c with e1 >= 1, so the odd parts are
//     at most max_side/2 and 2^e3 <= max_side.
F4Ranges f4_bounds_for_max_side(std::int64_t max_side) {
  F4Ranges r;
  r.odd_max = max_side / 2;
  r.e_max = 0;
  while ((std::int64_t(1) << (r.e_max + 1)) <= max_side) ++r.e_max;
  return r;
}

GeneratorBounds safe_generator_bounds(std::int64_t max_side) {
  return GeneratorBounds{f1_bounds_for_max_side(max_side), f2_bounds_for_max_side(max_side),
                         f3_bounds_for_max_side(max_side), f4_bounds_for_max_side(max_side)};
}

CoverageReport coverage_report(std::int64_t max_side) {
  return coverage_report(max_side, safe_generator_bounds(max_side));
}

CoverageReport coverage_report(std::int64_t max_side, const GeneratorBounds& bounds) {
  if (max_side < 1 || max_side > kMaxSide)
    throw std::invalid_argument("max_side must be between 1 and " + std::to_string(kMaxSide));

  CoverageReport report;
  report.max_side = max_side;

  const GeneratorBounds safe = safe_generator_bounds(max_side);
  auto warn_if_short = [&](bool short_bounds, std::string_view family) {
    if (short_bounds)
      report.warnings.push_back(std::string(family) +
                                " bounds are below the safe rectangle for max_side " +
                                std::to_string(max_side) + "; coverage may be incomplete");
  };
  warn_if_short(bounds.f1.m_max < safe.f1.m_max || bounds.f1.n_max < safe.f1.n_max ||
                    bounds.f1.delta_max < safe.f1.delta_max,
                "f1");
  warn_if_short(bounds.f2.m_max < safe.f2.m_max || bounds.f2.n_max < safe.f2.n_max ||
                    bounds.f2.delta_max < safe.f2.delta_max,
                "f2");
  warn_if_short(bounds.f3.k_max < safe.f3.k_max || bounds.f3.l_max < safe.f3.l_max ||
                    bounds.f3.delta_max < safe.f3.delta_max,
                "f3");
  warn_if_short(bounds.f4.odd_max < safe.f4.odd_max || bounds.f4.e_max < safe.f4.e_max, "f4");

  // brute-force sets straight from the definitions
  TriangleSet brute_f1, brute_f2, brute_f3, brute_f4;
  visit_triangles(1, max_side, [&](std::int64_t a, std::int64_t b, std::int64_t c) {
    const Triangle t(a, b, c);
    const auto analysis = analyze_medians(t);
    const TagSet tags = classify_canonical(t, analysis);
    if (tags & kTagF1) brute_f1.insert(t);
    if (tags & kTagF2) brute_f2.insert(t);
    if (tags & kTagF3) brute_f3.insert(t);
    if (!(tags & kTagIsosceles)) {
      int count = 0;
      for (const auto& st : analysis.status) count += st.is_integral() ? 1 : 0;
      if (count >= 2) brute_f4.insert(t);
    }
  });

  const TriangleSet gen_1 = generated_set(gen_f1(bounds.f1, max_side), max_side);
  auto f2_hits = gen_f2a(bounds.f2, max_side);
  {
    auto f2b_hits = gen_f2b(bounds.f2, max_side);
    f2_hits.insert(f2_hits.end(), std::make_move_iterator(f2b_hits.begin()),
                   std::make_move_iterator(f2b_hits.end()));
  }
  const TriangleSet gen_2 = generated_set(f2_hits, max_side);
  const TriangleSet gen_3 = generated_set(gen_f3(bounds.f3, max_side), max_side);
  const TriangleSet gen_4 = generated_set(gen_f4(bounds.f4, nullptr, max_side), max_side);

  auto add = [&](std::string label, const TriangleSet& brute, const TriangleSet& generated) {
    FamilyCoverage cov;
    cov.label = std::move(label);
    cov.brute_count = brute.size();
    cov.generated_count = generated.size();
    cov.missing = set_difference_sorted(brute, generated);
    cov.extra = set_difference_sorted(generated, brute);
    report.families.push_back(std::move(cov));
  };
  add("f1", brute_f1, gen_1);
  add("f2", brute_f2, gen_2);
  add("f3", brute_f3, gen_3);
  add("f4", brute_f4, gen_4);
  return report;
}

std::vector<FamilyWitness> find_family_witnesses(const Triangle& t) {
  const Triangle canon = canonicalize(t).triangle;
  const std::int64_t max_side = canon.c();
  const GeneratorBounds bounds = safe_generator_bounds(max_side);

  std::vector<FamilyWitness> witnesses;
  auto collect = [&](const std::vector<FamilyHit>& hits) {
    for (const auto& h : hits)
      if (canonicalize(h.triangle).triangle == canon)
        witnesses.push_back(FamilyWitness{h.family, h.params});
  };
  collect(gen_f1(bounds.f1, max_side));
  collect(gen_f2a(bounds.f2, max_side));
  collect(gen_f2b(bounds.f2, max_side));
  collect(gen_f3(bounds.f3, max_side));
  collect(gen_f4(bounds.f4, nullptr, max_side));
  return witnesses;
}

std::vector<LegMedianViolation> survey_pythagorean_leg_medians(std::int64_t max_side) {
  if (max_side < 1 || max_side > kMaxSide)
    throw std::invalid_argument("max_side must be between 1 and " + std::to_string(kMaxSide));
  std::vector<LegMedianViolation> violations;
  visit_triangles(1, max_side, [&](std::int64_t a, std::int64_t b, std::int64_t c) {
    if (Wide(a) * a + Wide(b) * b != Wide(c) * c) return;
    const Triangle t(a, b, c);
    const auto analysis = analyze_medians(t);
    for (int side = 0; side < 2; ++side) {  // the legs: hypotenuse is side 2
      const auto& st = analysis.status[static_cast<std::size_t>(side)];
      if (st.is_rational()) violations.push_back(LegMedianViolation{t, side, st});
    }
  });
  return violations;
}

}  // namespace medtri
