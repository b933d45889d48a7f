// Acceptance gate: one line per criterion, PASS or FAIL, with timing.
// Exits nonzero if any criterion fails.  Every numeric re-check here is done
// with direct 128-bit arithmetic, independent of the library's own verdicts.
#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "medtri/cli.hpp"
#include "medtri/core.hpp"
#include "medtri/families.hpp"
#include "medtri/prop_checks.hpp"
#include "medtri/report.hpp"
#include "medtri/search.hpp"

using namespace medtri;

namespace {

int g_index = 0;
int g_failures = 0;

template <class Fn>
void criterion(const std::string& name, double budget_seconds, Fn fn) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = fn(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (ok && budget_seconds > 0 && secs > budget_seconds) {
    ok = false;
    detail = "time budget of " + std::to_string(budget_seconds) + " s exceeded";
  }
  ++g_index;
  std::printf("[%d/8] %s %s (%.2f s)\n", g_index, ok ? "PASS" : "FAIL", name.c_str(), secs);
  if (!ok) {
    if (!detail.empty()) std::printf("      %s\n", detail.c_str());
    ++g_failures;
  }
  std::fflush(stdout);
}

std::string run_cli_capture(std::initializer_list<const char*> args, int* code = nullptr) {
  std::vector<const char*> argv{"medtri"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int rc = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (code) *code = rc;
  return out.str();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

// Checks one generated hit against the defining identity 4*mu^2 = 2(y^2+z^2) - x^2.
bool hits_sound(const std::vector<FamilyHit>& hits, std::string& detail) {
  for (const auto& hit : hits) {
    const auto sides = hit.triangle.sides();
    if (hit.medians.empty()) {
      detail = "hit without a claimed median";
      return false;
    }
    for (const auto& claim : hit.medians) {
      const Wide x = sides[static_cast<std::size_t>(claim.side)];
      const Wide y = sides[static_cast<std::size_t>((claim.side + 1) % 3)];
      const Wide z = sides[static_cast<std::size_t>((claim.side + 2) % 3)];
      if (4 * Wide(claim.mu) * claim.mu != 2 * (y * y + z * z) - x * x) {
        detail = "claimed median " + std::to_string(claim.mu) + " fails the identity for (" +
                 std::to_string(hit.triangle.a()) + ", " + std::to_string(hit.triangle.b()) +
                 ", " + std::to_string(hit.triangle.c()) + ")";
        return false;
      }
    }
  }
  return true;
}

}  // namespace

int main() {
  criterion("pinned median values via library and CLI", 0, [](std::string& detail) {
    const auto right = analyze_medians(Triangle(3, 4, 5));
    if (right.status[2] != MedianStatus::half_integer(5) ||
        right.status[0] != MedianStatus::irrational()) {
      detail = "(3,4,5) analysis mismatch";
      return false;
    }
    if (analyze_medians(Triangle(10, 24, 26)).status[2] != MedianStatus::integral(13)) {
      detail = "(10,24,26) hypotenuse median is not 13";
      return false;
    }
    if (analyze_medians(Triangle(5, 5, 8)).status[2] != MedianStatus::integral(3)) {
      detail = "(5,5,8) base median is not 3";
      return false;
    }
    const auto three = analyze_medians(Triangle(136, 170, 174));
    if (three.status[0] != MedianStatus::integral(158) ||
        three.status[1] != MedianStatus::integral(131) ||
        three.status[2] != MedianStatus::integral(127)) {
      detail = "(136,170,174) medians are not (158,131,127)";
      return false;
    }
    const auto equilateral = analyze_medians(Triangle(2, 2, 2));
    for (int i = 0; i < 3; ++i)
      if (equilateral.status[i] != MedianStatus::irrational()) {
        detail = "(2,2,2) medians must all be irrational";
        return false;
      }
    int code = 0;
    const auto cli_right = run_cli_capture({"medians", "3", "4", "5"}, &code);
    if (code != 0 || !contains(cli_right, "5/2") || !contains(cli_right, "sqrt(73)/2")) {
      detail = "CLI medians 3 4 5 output mismatch";
      return false;
    }
    const auto cli_three = run_cli_capture({"medians", "136", "170", "174"}, &code);
    if (code != 0 || !contains(cli_three, "158") || !contains(cli_three, "131") ||
        !contains(cli_three, "127") || !contains(cli_three, "integral medians: 3")) {
      detail = "CLI medians 136 170 174 output mismatch";
      return false;
    }
    return true;
  });

  criterion("family generators emit only verified integral medians", 10,
            [](std::string& detail) {
              const PythRanges pyth{20, 20, 10};
              struct Case {
                const char* label;
                std::vector<FamilyHit> hits;
              };
              std::vector<Case> cases;
              cases.push_back({"f1", gen_f1(pyth)});
              cases.push_back({"f2a", gen_f2a(pyth)});
              cases.push_back({"f2b", gen_f2b(pyth)});
              cases.push_back({"f3", gen_f3({20, 20, 10})});
              cases.push_back({"f4", gen_f4({99, 4})});
              for (auto& c : cases) {
                if (c.hits.empty()) {
                  detail = std::string(c.label) + " produced no hits over its grid";
                  return false;
                }
                if (!hits_sound(c.hits, detail)) {
                  detail = std::string(c.label) + ": " + detail;
                  return false;
                }
              }
              return true;
            });

  criterion("generators reproduce the exhaustive catalog up to side 120", 30,
            [](std::string& detail) {
              const auto report = coverage_report(120);
              if (!report.warnings.empty()) {
                detail = "bounds warning: " + report.warnings.front();
                return false;
              }
              for (const auto& fam : report.families) {
                if (!fam.extra.empty()) {
                  detail = fam.label + " generated " + std::to_string(fam.extra.size()) +
                           " triangles outside the brute-force set";
                  return false;
                }
                const bool must_be_complete =
                    fam.label == "f1" || fam.label == "f2" || fam.label == "f3";
                if (must_be_complete && !fam.missing.empty()) {
                  detail = fam.label + " missed " + std::to_string(fam.missing.size()) +
                           " catalog triangles";
                  return false;
                }
              }
              return true;
            });

  criterion("condition-built instances satisfy the defining equation", 20,
            [](std::string& detail) {
              std::int64_t built = 0;
              bool pinned_seen = false;
              for (std::int64_t a = 1; a <= 99; a += 2)
                for (std::int64_t b = 1; b <= 99; b += 2)
                  for (std::int64_t c = 1; c <= 99; c += 2)
                    for (int e1 = 1; e1 <= 3; ++e1)
                      for (int e3 = e1 + 1; e3 <= 4; ++e3) {
                        const auto inst = construct_from_conditions(a, b, c, e1, e3);
                        if (!inst) continue;
                        ++built;
                        const Wide k = inst->k, n1 = inst->n1, n2 = inst->n2, n3 = inst->n3;
                        if (4 * k * k != 2 * (n2 * n2 + n3 * n3) - n1 * n1) {
                          detail = "constructed instance violates the equation at (" +
                                   std::to_string(a) + "," + std::to_string(b) + "," +
                                   std::to_string(c) + "," + std::to_string(e1) + "," +
                                   std::to_string(e3) + ")";
                          return false;
                        }
                        if (*inst == Prop1Instance{131, 170, 174, 136}) pinned_seen = true;
                      }
              if (built == 0) {
                detail = "no instances constructed over the grid";
                return false;
              }
              if (!pinned_seen) {
                detail = "the (85,87,17,1,3) construction did not appear";
                return false;
              }
              return true;
            });

  criterion("necessity survey up to side 60 exposes the failing shape", 5,
            [](std::string& detail) {
              const auto survey = prop1_necessity_survey(60);
              if (survey.instances != survey.holds + survey.fails) {
                detail = "tallies do not add up";
                return false;
              }
              if (survey.instances == 0) {
                detail = "no instances surveyed";
                return false;
              }
              bool fail_seen = false;
              for (const auto* entry : survey.failures()) {
                if (entry->report.conditions_hold) {
                  detail = "failures() returned a holding entry";
                  return false;
                }
                if (entry->report.violated_details.empty()) {
                  detail = "failing entry lacks details";
                  return false;
                }
                if (entry->report.instance == Prop1Instance{3, 8, 5, 5}) fail_seen = true;
              }
              if (!fail_seen) {
                detail = "(3,8,5,5) did not appear among the failures";
                return false;
              }
              return true;
            });

  criterion("three-integral-median claim: consistent at 100, refuted at 174", 10,
            [](std::string& detail) {
              if (!prop2_experiment(100).empty()) {
                detail = "unexpected finding below side 100";
                return false;
              }
              const auto findings = prop2_experiment(174);
              if (findings.size() != 1 || findings[0].triangle != Triangle(136, 170, 174)) {
                detail = "expected exactly the (136,170,174) finding";
                return false;
              }
              const auto medians = findings[0].medians;
              if (medians != std::array<std::int64_t, 3>{158, 131, 127}) {
                detail = "finding medians are not (158,131,127)";
                return false;
              }
              const auto sides = findings[0].triangle.sides();
              for (int i = 0; i < 3; ++i) {
                const Wide x = sides[static_cast<std::size_t>(i)];
                const Wide y = sides[static_cast<std::size_t>((i + 1) % 3)];
                const Wide z = sides[static_cast<std::size_t>((i + 2) % 3)];
                const Wide mu = medians[static_cast<std::size_t>(i)];
                if (4 * mu * mu != 2 * (y * y + z * z) - x * x) {
                  detail = "finding median " + std::to_string(static_cast<long long>(mu)) +
                           " fails the identity";
                  return false;
                }
              }
              int code = 0;
              const auto cli = run_cli_capture({"verify", "prop2", "--max-side", "174"}, &code);
              if (code != 0 || !contains(cli, "REFUTED") || !contains(cli, "(136, 170, 174)") ||
                  !contains(cli, "at most two integral medians")) {
                detail = "CLI verify prop2 output mismatch";
                return false;
              }
              return true;
            });

  criterion("exhaustive search to 500 is fast and worker-count invariant", 60,
            [](std::string& detail) {
              const auto single = search_integral_medians(500, 1, SideFilter::All, 1);
              if (single.empty()) {
                detail = "search found nothing";
                return false;
              }
              const auto parallel = search_integral_medians(500, 1, SideFilter::All, 4);
              std::ostringstream a, b;
              write_records_csv(a, single);
              write_records_csv(b, parallel);
              if (a.str() != b.str()) {
                detail = "csv output differs between 1 and 4 workers";
                return false;
              }
              return true;
            });

  criterion("no right triangle up to side 200 has a rational leg median", 10,
            [](std::string& detail) {
              const auto violations = survey_pythagorean_leg_medians(200);
              if (!violations.empty()) {
                detail = "found " + std::to_string(violations.size()) + " rational leg medians";
                return false;
              }
              return true;
            });

  std::printf("ACCEPTANCE: %d/8 criteria passed\n", 8 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
