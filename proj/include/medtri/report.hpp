#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "medtri/prop_checks.hpp"
#include "medtri/search.hpp"

namespace medtri {

// Fixed machine-readable schema for triangle records.  quad_* are the values
// 2(y^2 + z^2) - x^2 whose square roots are the doubled medians; status_* is
// one of "int" / "half" / "irr"; twice_mu_* carries 2*mu for both rational
// kinds and is empty (CSV) or null (JSON) for irrational medians.
inline constexpr std::string_view kCsvHeader =
    "a,b,c,quad_a,quad_b,quad_c,status_a,status_b,status_c,"
    "twice_mu_a,twice_mu_b,twice_mu_c,integral_count,tags";

std::string status_code(MedianKind kind);

// Exact human rendering of a median length: "13", "5/2", or "sqrt(73)/2".
std::string human_median(const MedianStatus& status, std::int64_t quad);

std::string csv_row(const SearchRecord& record);
void write_records_csv(std::ostream& out, std::span<const SearchRecord> records);

nlohmann::ordered_json record_to_json(const SearchRecord& record);
void write_records_json(std::ostream& out, std::span<const SearchRecord> records);
std::vector<SearchRecord> parse_records_json(std::istream& in);

// One human-readable line per record.
std::string record_human_line(const SearchRecord& record);

// Necessity survey reports.  The CSV/JSON forms carry every surveyed
// instance; the human form prints the tallies and the failing instances.
inline constexpr std::string_view kSurveyCsvHeader =
    "k,n1,n2,n3,a,b,c,side,e_k,e_n1,e_n2,e_n3,branch,holds,exponent_flag,details";

std::string survey_csv_row(const SurveyEntry& entry);
void write_survey_csv(std::ostream& out, const NecessitySurvey& survey);
nlohmann::ordered_json survey_to_json(const NecessitySurvey& survey);
void write_survey_json(std::ostream& out, const NecessitySurvey& survey);
void write_survey_human(std::ostream& out, const NecessitySurvey& survey);
std::string survey_summary_line(const NecessitySurvey& survey);

// Experiment on the at-most-two-integral-medians claim.
std::string at_most_two_claim();
std::string findings_summary_line(std::int64_t max_side, std::size_t finding_count);
void write_findings_human(std::ostream& out, std::int64_t max_side,
                          std::span<const Prop2Finding> findings);

}  // namespace medtri
