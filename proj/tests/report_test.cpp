#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "medtri/report.hpp"

using namespace medtri;

namespace {

SearchRecord record_for(std::int64_t a, std::int64_t b, std::int64_t c) {
  return make_record(Triangle(a, b, c));
}

}  // namespace

TEST_CASE("csv header is the fixed schema") {
  CHECK(kCsvHeader ==
        "a,b,c,quad_a,quad_b,quad_c,status_a,status_b,status_c,"
        "twice_mu_a,twice_mu_b,twice_mu_c,integral_count,tags");
}

TEST_CASE("csv rows for pinned triangles") {
  CHECK(csv_row(record_for(3, 4, 5)) == "3,4,5,73,52,25,irr,irr,half,,,5,0,pythagorean");
  CHECK(csv_row(record_for(10, 24, 26)) ==
        "10,24,26,2404,976,676,irr,irr,int,,,26,1,pythagorean;F1");
  CHECK(csv_row(record_for(8, 14, 14)) ==
        "8,14,14,720,324,324,irr,int,int,,18,18,2,isosceles;F3");
  CHECK(csv_row(record_for(2, 2, 2)) == "2,2,2,12,12,12,irr,irr,irr,,,,0,isosceles;equilateral");
  CHECK(csv_row(record_for(136, 170, 174)) ==
        "136,170,174,99856,68644,64516,int,int,int,316,262,254,3,F4-form");
}

TEST_CASE("human median strings") {
  const auto analysis = analyze_medians(Triangle(3, 4, 5));
  CHECK(human_median(analysis.status[0], analysis.quad[0]) == "sqrt(73)/2");
  CHECK(human_median(analysis.status[2], analysis.quad[2]) == "5/2");
  const auto int_case = analyze_medians(Triangle(10, 24, 26));
  CHECK(human_median(int_case.status[2], int_case.quad[2]) == "13");
}

TEST_CASE("status codes") {
  CHECK(status_code(MedianKind::Integral) == "int");
  CHECK(status_code(MedianKind::HalfInteger) == "half");
  CHECK(status_code(MedianKind::Irrational) == "irr");
}

TEST_CASE("json record carries the same fields as csv") {
  const auto j = record_to_json(record_for(10, 24, 26));
  CHECK(j.at("a") == 10);
  CHECK(j.at("b") == 24);
  CHECK(j.at("c") == 26);
  CHECK(j.at("quad_a") == 2404);
  CHECK(j.at("status_c") == "int");
  CHECK(j.at("twice_mu_a").is_null());
  CHECK(j.at("twice_mu_c") == 26);
  CHECK(j.at("integral_count") == 1);
  CHECK(j.at("tags") == nlohmann::ordered_json::array({"pythagorean", "F1"}));
  // field order is part of the schema
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"a", "b", "c", "quad_a", "quad_b", "quad_c", "status_a",
                                         "status_b", "status_c", "twice_mu_a", "twice_mu_b",
                                         "twice_mu_c", "integral_count", "tags"});
}

TEST_CASE("json round trip preserves search records") {
  const auto records = search_integral_medians(30, 1);
  REQUIRE(!records.empty());
  std::stringstream buffer;
  write_records_json(buffer, records);
  const auto parsed = parse_records_json(buffer);
  REQUIRE(parsed.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) CHECK(parsed[i] == records[i]);
}

TEST_CASE("csv and json record streams agree row by row") {
  const auto records = search_integral_medians(30, 1);
  std::stringstream csv;
  write_records_csv(csv, records);
  std::string line;
  REQUIRE(std::getline(csv, line));
  CHECK(line == kCsvHeader);
  std::size_t rows = 0;
  while (std::getline(csv, line)) {
    CHECK(line == csv_row(records[rows]));
    ++rows;
  }
  CHECK(rows == records.size());
}

TEST_CASE("survey csv schema and rows") {
  CHECK(kSurveyCsvHeader ==
        "k,n1,n2,n3,a,b,c,side,e_k,e_n1,e_n2,e_n3,branch,holds,exponent_flag,details");
  const auto survey = prop1_necessity_survey(10);
  std::stringstream csv;
  write_survey_csv(csv, survey);
  std::string text = csv.str();
  CHECK(text.find("3,8,5,5,5,5,8,2,0,3,0,0,none,false,true,") != std::string::npos);
  CHECK(text.find("5,10,6,8,6,8,10,2,0,1,1,3,A,true,false,") != std::string::npos);
}

TEST_CASE("survey human report shows the tallies and failing instances") {
  const auto survey = prop1_necessity_survey(10);
  std::stringstream human;
  write_survey_human(human, survey);
  const std::string text = human.str();
  CHECK(text.find("(3, 8, 5, 5)") != std::string::npos);
  CHECK(text.find("(5, 10, 6, 8)") == std::string::npos);  // holding instances not listed
  CHECK(text.find(survey_summary_line(survey)) != std::string::npos);
}

TEST_CASE("survey json carries the full decomposition") {
  const auto survey = prop1_necessity_survey(10);
  const auto j = survey_to_json(survey);
  CHECK(j.at("max_side") == 10);
  CHECK(j.at("instances") == survey.instances);
  REQUIRE(j.at("entries").size() == survey.entries.size());
  bool found = false;
  for (const auto& e : j.at("entries")) {
    if (e.at("instance").at("k") != 3) continue;
    found = true;
    CHECK(e.at("triangle") == nlohmann::ordered_json::array({5, 5, 8}));
    CHECK(e.at("side") == 2);
    CHECK(e.at("branch") == "none");
    CHECK(e.at("holds") == false);
    CHECK(e.at("exponent_precondition_violated") == true);
    CHECK(e.at("decomposition").at("n1").at("valuation") == 3);
    CHECK(e.at("decomposition").at("n1").at("odd_part") == 1);
  }
  CHECK(found);
}

TEST_CASE("claim summary lines state the claim and the outcome") {
  const auto consistent = findings_summary_line(100, 0);
  CHECK(consistent.find("at most two integral medians") != std::string::npos);
  CHECK(consistent.find("consistent") != std::string::npos);
  CHECK(consistent.find("100") != std::string::npos);
  const auto refuted = findings_summary_line(174, 1);
  CHECK(refuted.find("REFUTED") != std::string::npos);
  CHECK(refuted.find("174") != std::string::npos);
}

TEST_CASE("findings human report lists the triangle and its medians") {
  const auto findings = prop2_experiment(174);
  std::stringstream human;
  write_findings_human(human, 174, findings);
  const std::string text = human.str();
  CHECK(text.find("(136, 170, 174)") != std::string::npos);
  CHECK(text.find("(158, 131, 127)") != std::string::npos);
  CHECK(text.find("REFUTED") != std::string::npos);
}

TEST_CASE("record human line") {
  CHECK(record_human_line(record_for(5, 5, 6)) ==
        "(5, 5, 6): mu = [sqrt(97)/2, sqrt(97)/2, 4], integral medians: 1, tags: isosceles, F2");
  CHECK(record_human_line(record_for(2, 3, 4)) ==
        "(2, 3, 4): mu = [sqrt(46)/2, sqrt(31)/2, sqrt(10)/2], integral medians: 0");
}

TEST_CASE("csv escaping quotes fields with commas or quotes") {
  // exercised through survey details, which join clauses with semicolons;
  // craft a record-level check directly on the helper behavior instead
  const auto survey = prop1_necessity_survey(10);
  std::stringstream csv;
  write_survey_csv(csv, survey);
  std::string line;
  std::getline(csv, line);  // header
  while (std::getline(csv, line)) {
    // 16 columns means 15 separating commas outside quotes
    int commas = 0;
    bool quoted = false;
    for (char ch : line) {
      if (ch == '"') quoted = !quoted;
      if (ch == ',' && !quoted) ++commas;
    }
    CHECK(commas == 15);
  }
}
