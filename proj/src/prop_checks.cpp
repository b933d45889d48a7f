#include "medtri/prop_checks.hpp"

#include <stdexcept>

#include "medtri/enumerate.hpp"

namespace medtri {

namespace {

void require_instance_range(std::int64_t v, const char* name) {
  if (v < 1)
    throw std::invalid_argument(std::string(name) + " must be a positive integer, got " +
                                std::to_string(v));
  if (v > kMaxInstanceValue)
    throw std::invalid_argument(std::string(name) + " exceeds the width budget of " +
                                std::to_string(kMaxInstanceValue));
}

// 2 b^2 - a^2 + 2^(2*diff+1) c^2 for the odd parts of a decomposition.
Wide shifted_square_expr(std::int64_t a, std::int64_t b, std::int64_t c, int diff) {
  return 2 * Wide(b) * b - Wide(a) * a + (Wide(1) << (2 * diff + 1)) * (Wide(c) * c);
}

struct BranchOutcome {
  bool holds = false;
  std::string failed_clause;  // first violated clause when !holds
};

BranchOutcome eval_branch(const TwoAdic& dk, const TwoAdic& d1, const TwoAdic& dfirst,
                          const TwoAdic& dsecond, const char* first_name,
                          const char* second_name) {
  // branch shape: e1 = e(first) < e(second), m = e1 - 1, and the odd
  // parts satisfy M^2 = 2*first^2 - a^2 + 2^(2(e(second)-e1)+1)*second^2
  BranchOutcome out;
  if (d1.valuation != dfirst.valuation) {
    out.failed_clause = std::string("e1 != e(") + first_name + ")";
    return out;
  }
  if (!(dfirst.valuation < dsecond.valuation)) {
    out.failed_clause = std::string("e(") + first_name + ") is not below e(" + second_name + ")";
    return out;
  }
  if (dk.valuation != d1.valuation - 1) {
    out.failed_clause = "m != e1 - 1";
    return out;
  }
  const Wide want = shifted_square_expr(d1.odd_part, dfirst.odd_part, dsecond.odd_part,
                                        dsecond.valuation - d1.valuation);
  if (Wide(dk.odd_part) * dk.odd_part != want) {
    out.failed_clause = "odd-part square identity fails";
    return out;
  }
  out.holds = true;
  return out;
}

}  // namespace

bool check_prop1_equation(std::int64_t k, std::int64_t n1, std::int64_t n2, std::int64_t n3) {
  require_instance_range(k, "k");
  require_instance_range(n1, "n1");
  require_instance_range(n2, "n2");
  require_instance_range(n3, "n3");
  return 4 * Wide(k) * k == 2 * (Wide(n2) * n2 + Wide(n3) * n3) - Wide(n1) * n1;
}

std::string_view branch_name(Prop1Branch b) {
  switch (b) {
    case Prop1Branch::None: return "none";
    case Prop1Branch::A: return "A";
    case Prop1Branch::B: return "B";
    case Prop1Branch::Both: return "both";
  }
  return "?";
}

Prop1Report check_prop1_conditions(const Prop1Instance& inst) {
  if (!check_prop1_equation(inst.k, inst.n1, inst.n2, inst.n3))
    throw std::invalid_argument("instance does not satisfy 4k^2 = 2(n2^2 + n3^2) - n1^2");

  Prop1Report rep;
  rep.instance = inst;
  rep.k_dec = two_adic(inst.k);
  rep.n1_dec = two_adic(inst.n1);
  rep.n2_dec = two_adic(inst.n2);
  rep.n3_dec = two_adic(inst.n3);

  // the equation forces n1 even, so e1 >= 1 always; e2 or e3 can be 0
  rep.exponent_precondition_violated =
      rep.n1_dec.valuation == 0 || rep.n2_dec.valuation == 0 || rep.n3_dec.valuation == 0;

  const BranchOutcome a = eval_branch(rep.k_dec, rep.n1_dec, rep.n2_dec, rep.n3_dec, "n2", "n3");
  const BranchOutcome b = eval_branch(rep.k_dec, rep.n1_dec, rep.n3_dec, rep.n2_dec, "n3", "n2");
  rep.branch_a_holds = a.holds;
  rep.branch_b_holds = b.holds;
  rep.conditions_hold = a.holds || b.holds;
  if (a.holds && b.holds) rep.branch = Prop1Branch::Both;
  else if (a.holds) rep.branch = Prop1Branch::A;
  else if (b.holds) rep.branch = Prop1Branch::B;
  else rep.branch = Prop1Branch::None;

  if (!rep.conditions_hold) {
    rep.violated_details = "branch A: " + a.failed_clause + "; branch B: " + b.failed_clause;
    if (rep.exponent_precondition_violated)
      rep.violated_details +=
          "; side valuations (" + std::to_string(rep.n1_dec.valuation) + ", " +
          std::to_string(rep.n2_dec.valuation) + ", " + std::to_string(rep.n3_dec.valuation) +
          ") violate the stated positivity requirement";
  }
  return rep;
}

std::optional<Prop1Instance> construct_from_conditions(std::int64_t a, std::int64_t b,
                                                       std::int64_t c, int e1, int e3) {
  require_instance_range(a, "a");
  require_instance_range(b, "b");
  require_instance_range(c, "c");
  if (a % 2 == 0 || b % 2 == 0 || c % 2 == 0)
    throw std::invalid_argument("a, b, c must all be odd");
  if (e1 < 1) throw std::invalid_argument("e1 must be >= 1");
  if (e1 >= e3) throw std::invalid_argument("exponents must satisfy e1 < e3");
  if (e3 > 60) throw std::invalid_argument("e3 exceeds the width budget");
  if ((Wide(c) << e3) > kMaxInstanceValue || (Wide(b) << e1) > kMaxInstanceValue ||
      (Wide(a) << e1) > kMaxInstanceValue)
    throw std::invalid_argument("shifted inputs exceed the width budget");

  const Wide s = shifted_square_expr(a, b, c, e3 - e1);
  if (s <= 0) return std::nullopt;
  if (!is_perfect_square(static_cast<UWide>(s))) return std::nullopt;
  const Wide m_root = static_cast<Wide>(isqrt(static_cast<UWide>(s)));
  const Wide k = m_root << (e1 - 1);
  if (k > kMaxInstanceValue) throw std::invalid_argument("constructed k exceeds the width budget");
  return Prop1Instance{static_cast<std::int64_t>(k), a << e1, b << e1, c << e3};
}

std::vector<const SurveyEntry*> NecessitySurvey::failures() const {
  std::vector<const SurveyEntry*> out;
  for (const auto& e : entries)
    if (!e.report.conditions_hold) out.push_back(&e);
  return out;
}

NecessitySurvey prop1_necessity_survey(std::int64_t max_side, int workers) {
  if (max_side < 1 || max_side > kMaxSide)
    throw std::invalid_argument("max_side must be between 1 and " + std::to_string(kMaxSide));
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");

  auto chunk = [](std::int64_t lo, std::int64_t hi) {
    std::vector<SurveyEntry> entries;
    visit_triangles(lo, hi, [&](std::int64_t a, std::int64_t b, std::int64_t c) {
      const Triangle t(a, b, c);
      const auto analysis = analyze_medians(t);
      for (int side = 0; side < 3; ++side) {
        const auto& st = analysis.status[static_cast<std::size_t>(side)];
        if (!st.is_integral()) continue;
        // n2, n3 are the two remaining sides in ascending order
        std::int64_t other1 = t.side((side + 1) % 3), other2 = t.side((side + 2) % 3);
        if (other1 > other2) std::swap(other1, other2);
        const Prop1Instance inst{st.value, t.side(side), other1, other2};
        entries.push_back(SurveyEntry{t, side, check_prop1_conditions(inst)});
      }
    });
    return entries;
  };

  NecessitySurvey survey;
  survey.max_side = max_side;
  for (auto& part : run_chunked(max_side, workers, chunk))
    survey.entries.insert(survey.entries.end(), std::make_move_iterator(part.begin()),
                          std::make_move_iterator(part.end()));
  survey.instances = survey.entries.size();
  for (const auto& e : survey.entries)
    ++(e.report.conditions_hold ? survey.holds : survey.fails);
  return survey;
}

std::vector<Prop2Finding> prop2_experiment(std::int64_t max_side, int workers) {
  if (max_side < 1 || max_side > kMaxSide)
    throw std::invalid_argument("max_side must be between 1 and " + std::to_string(kMaxSide));
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");

  auto chunk = [](std::int64_t lo, std::int64_t hi) {
    std::vector<Prop2Finding> found;
    visit_triangles(lo, hi, [&](std::int64_t a, std::int64_t b, std::int64_t c) {
      const Triangle t(a, b, c);
      const auto analysis = analyze_medians(t);
      if (!analysis.status[0].is_integral() || !analysis.status[1].is_integral() ||
          !analysis.status[2].is_integral())
        return;
      found.push_back(Prop2Finding{
          t, {analysis.status[0].value, analysis.status[1].value, analysis.status[2].value}});
    });
    return found;
  };

  std::vector<Prop2Finding> findings;
  for (auto& part : run_chunked(max_side, workers, chunk))
    findings.insert(findings.end(), std::make_move_iterator(part.begin()),
                    std::make_move_iterator(part.end()));
  return findings;
}

}  // namespace medtri
