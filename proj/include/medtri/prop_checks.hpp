#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "medtri/core.hpp"

namespace medtri {

// Magnitude cap for decomposition-check inputs: keeps every shifted
// square expression inside 128 bits.
inline constexpr std::int64_t kMaxInstanceValue = 2'000'000'000'000'000'000;

// True iff 4*k^2 = 2*(n2^2 + n3^2) - n1^2 exactly.  All inputs must be
// positive and within kMaxInstanceValue.
bool check_prop1_equation(std::int64_t k, std::int64_t n1, std::int64_t n2, std::int64_t n3);

// A solution of the equation above: k is the median to side n1 in a
// (possibly degenerate) integer triple (n1, n2, n3).
struct Prop1Instance {
  std::int64_t k = 0, n1 = 0, n2 = 0, n3 = 0;

  bool operator==(const Prop1Instance&) const = default;
};

enum class Prop1Branch { None, A, B, Both };

std::string_view branch_name(Prop1Branch b);  // "none", "A", "B", "both"

// Result of testing one instance against the claimed decomposition
// shape.  Writing k = 2^m M, n1 = 2^e1 a, n2 = 2^e2 b, n3 = 2^e3 c with
// M, a, b, c odd, the shape demands m = e1 - 1 together with either
//   branch A: e1 = e2 < e3 and M^2 = 2 b^2 - a^2 + 2^(2(e3-e1)+1) c^2, or
//   branch B: e1 = e3 < e2 and M^2 = 2 c^2 - a^2 + 2^(2(e2-e1)+1) b^2.
struct Prop1Report {
  Prop1Instance instance;
  TwoAdic k_dec, n1_dec, n2_dec, n3_dec;
  bool branch_a_holds = false;
  bool branch_b_holds = false;
  Prop1Branch branch = Prop1Branch::None;
  bool conditions_hold = false;
  // the decomposition shape is stated for strictly positive side
  // exponents; instances with e2 = 0 or e3 = 0 sit outside it
  bool exponent_precondition_violated = false;
  std::string violated_details;  // empty when conditions_hold
};

// Throws std::invalid_argument if the instance equation does not hold.
Prop1Report check_prop1_conditions(const Prop1Instance& inst);

// The sufficiency direction: from odd a, b, c and exponents
// 1 <= e1 < e3, form S = 2 b^2 - a^2 + 2^(2(e3-e1)+1) c^2.  When S is a
// positive perfect square M^2 the instance
//   (k, n1, n2, n3) = (M 2^(e1-1), 2^e1 a, 2^e1 b, 2^e3 c)
// satisfies the equation exactly; otherwise nullopt.  The construction
// targets the Diophantine relation only -- the triple need not form a
// triangle.
std::optional<Prop1Instance> construct_from_conditions(std::int64_t a, std::int64_t b,
                                                       std::int64_t c, int e1, int e3);

struct SurveyEntry {
  Triangle triangle;
  int side = 0;  // which side's median produced the instance
  Prop1Report report;
};

// Every integral median of every triangle with sides <= max_side,
// tested against the decomposition shape.
struct NecessitySurvey {
  std::int64_t max_side = 0;
  std::uint64_t instances = 0, holds = 0, fails = 0;
  std::vector<SurveyEntry> entries;  // all instances, in (c, b, a) triangle order

  std::vector<const SurveyEntry*> failures() const;
};

NecessitySurvey prop1_necessity_survey(std::int64_t max_side, int workers = 1);

struct Prop2Finding {
  Triangle triangle;
  std::array<std::int64_t, 3> medians{};  // mu per side, all integral

  bool operator==(const Prop2Finding&) const = default;
};

// Exhaustive search for triangles whose three medians are all
// integral; tests the claim that at most two can be.
std::vector<Prop2Finding> prop2_experiment(std::int64_t max_side, int workers = 1);

}  // namespace medtri
