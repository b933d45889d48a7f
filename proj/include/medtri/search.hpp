#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "medtri/core.hpp"
#include "medtri/families.hpp"

namespace medtri {

// Structural tags a triangle can carry, from its sides and median
// statuses alone.
enum Tag : unsigned {
  kTagPythagorean = 1u << 0,
  kTagIsosceles = 1u << 1,
  kTagEquilateral = 1u << 2,
  kTagF1 = 1u << 3,      // right triangle, even hypotenuse, integral hypotenuse median
  kTagF2 = 1u << 4,      // isosceles with integral base median
  kTagF3 = 1u << 5,      // isosceles with integral equal-side medians
  kTagF4Form = 1u << 6,  // scalene, >= 2 integral medians, valuation shape 2-equal-1-larger
};

using TagSet = unsigned;

inline constexpr TagSet kAllTags = (1u << 7) - 1;

// Tag names in emission order.
std::vector<std::string> tag_names(TagSet tags);

TagSet classify(const Triangle& t);
TagSet classify_canonical(const Triangle& canonical, const MedianAnalysis& analysis);

struct SearchRecord {
  Triangle triangle;  // canonical ascending sides
  MedianAnalysis analysis;
  int integral_count = 0;
  TagSet tags = 0;

  bool operator==(const SearchRecord&) const = default;
};

// Full record for one triangle (canonicalizes first).
SearchRecord make_record(const Triangle& t);

// Every triangle with sides <= max_side, ascending in (c, b, a).
void enumerate_triangles(std::int64_t max_side, const std::function<void(const Triangle&)>& fn);

enum class SideFilter { All, Scalene, Isosceles };

// Brute-force scan: records for every triangle with at least min_count
// integral medians, optionally restricted by shape.  Output is
// deterministic and identical for every worker count.
std::vector<SearchRecord> search_integral_medians(std::int64_t max_side, int min_count,
                                                  SideFilter filter = SideFilter::All,
                                                  int workers = 1);

// Parameter rectangles guaranteed to reach every triangle a family can
// produce with all sides <= max_side (derived from the monotone growth
// of each side formula; see the implementations).
PythRanges f1_bounds_for_max_side(std::int64_t max_side);
PythRanges f2_bounds_for_max_side(std::int64_t max_side);
F3Ranges f3_bounds_for_max_side(std::int64_t max_side);
F4Ranges f4_bounds_for_max_side(std::int64_t max_side);

struct GeneratorBounds {
  PythRanges f1, f2;
  F3Ranges f3;
  F4Ranges f4;
};

GeneratorBounds safe_generator_bounds(std::int64_t max_side);

// Generator output versus brute force, per family, up to max_side.
// For f1/f2/f3 the brute set is the family's defining property; for f4
// it is every scalene triangle with >= 2 integral medians, so missing
// entries there are findings about the form, not generator bugs.
struct FamilyCoverage {
  std::string label;  // "f1", "f2", "f3", "f4"
  std::size_t brute_count = 0, generated_count = 0;
  std::vector<Triangle> missing;  // brute-force members no generator point reaches
  std::vector<Triangle> extra;    // generated triangles outside the brute set
};

struct CoverageReport {
  std::int64_t max_side = 0;
  std::vector<FamilyCoverage> families;
  std::vector<std::string> warnings;  // set when explicit bounds fall short of the safe ones
};

CoverageReport coverage_report(std::int64_t max_side);
CoverageReport coverage_report(std::int64_t max_side, const GeneratorBounds& bounds);

// Generator parameter points reaching the given triangle, searched
// within the safe bounds for its largest side.
struct FamilyWitness {
  Family family = Family::F1;
  std::vector<std::int64_t> params;
};

std::vector<FamilyWitness> find_family_witnesses(const Triangle& t);

// Empirical check across all right triangles with sides <= max_side:
// the medians to the two legs are expected irrational.  Returns the
// violations (triangle, side index, status), expected empty.
struct LegMedianViolation {
  Triangle triangle;
  int side = 0;
  MedianStatus status;
};

std::vector<LegMedianViolation> survey_pythagorean_leg_medians(std::int64_t max_side);

}  // namespace medtri
