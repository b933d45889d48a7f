#include "medtri/report.hpp"

#include <array>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace medtri {

namespace {

using nlohmann::ordered_json;

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
  std::string quoted = "\"";
  for (char ch : field) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

std::string join_tags(TagSet tags) {
  std::string out;
  for (const auto& name : tag_names(tags)) {
    if (!out.empty()) out += ';';
    out += name;
  }
  return out;
}

TagSet tags_from_names(const std::vector<std::string>& names) {
  TagSet tags = 0;
  for (const auto& name : names) {
    bool known = false;
    for (unsigned bit = 1; bit != 0 && bit <= kAllTags; bit <<= 1) {
      const auto single = tag_names(bit & kAllTags);
      if (single.size() == 1 && single[0] == name) {
        tags |= bit;
        known = true;
        break;
      }
    }
    if (!known) throw std::invalid_argument("unknown tag name: " + name);
  }
  return tags;
}

MedianStatus status_from_fields(const std::string& code, const ordered_json& twice_mu) {
  if (code == "irr") return MedianStatus::irrational();
  const auto doubled = twice_mu.get<std::int64_t>();
  if (code == "half") return MedianStatus::half_integer(doubled);
  if (code == "int") return MedianStatus::integral(doubled / 2);
  throw std::invalid_argument("unknown status code: " + code);
}

constexpr std::array<std::string_view, 3> kSideSuffix = {"a", "b", "c"};

}  // namespace

std::string status_code(MedianKind kind) {
  switch (kind) {
    case MedianKind::Integral: return "int";
    case MedianKind::HalfInteger: return "half";
    case MedianKind::Irrational: return "irr";
  }
  throw std::logic_error("unreachable median kind");
}

std::string human_median(const MedianStatus& status, std::int64_t quad) {
  switch (status.kind) {
    case MedianKind::Integral: return std::to_string(status.value);
    case MedianKind::HalfInteger: return std::to_string(status.value) + "/2";
    case MedianKind::Irrational: return "sqrt(" + std::to_string(quad) + ")/2";
  }
  throw std::logic_error("unreachable median kind");
}

std::string csv_row(const SearchRecord& record) {
  std::string row;
  for (int i = 0; i < 3; ++i) {
    row += std::to_string(record.triangle.side(i));
    row += ',';
  }
  for (int i = 0; i < 3; ++i) {
    row += std::to_string(record.analysis.quad[i]);
    row += ',';
  }
  for (int i = 0; i < 3; ++i) {
    row += status_code(record.analysis.status[i].kind);
    row += ',';
  }
  for (int i = 0; i < 3; ++i) {
    const auto& status = record.analysis.status[i];
    if (status.is_rational()) row += std::to_string(status.twice_mu());
    row += ',';
  }
  row += std::to_string(record.integral_count);
  row += ',';
  row += csv_escape(join_tags(record.tags));
  return row;
}

void write_records_csv(std::ostream& out, std::span<const SearchRecord> records) {
  out << kCsvHeader << '\n';
  for (const auto& record : records) out << csv_row(record) << '\n';
}

ordered_json record_to_json(const SearchRecord& record) {
  ordered_json j;
  for (int i = 0; i < 3; ++i) j[std::string(kSideSuffix[i])] = record.triangle.side(i);
  for (int i = 0; i < 3; ++i)
    j["quad_" + std::string(kSideSuffix[i])] = record.analysis.quad[i];
  for (int i = 0; i < 3; ++i)
    j["status_" + std::string(kSideSuffix[i])] = status_code(record.analysis.status[i].kind);
  for (int i = 0; i < 3; ++i) {
    const auto key = "twice_mu_" + std::string(kSideSuffix[i]);
    const auto& status = record.analysis.status[i];
    if (status.is_rational()) {
      j[key] = status.twice_mu();
    } else {
      j[key] = nullptr;
    }
  }
  j["integral_count"] = record.integral_count;
  j["tags"] = tag_names(record.tags);
  return j;
}

void write_records_json(std::ostream& out, std::span<const SearchRecord> records) {
  ordered_json arr = ordered_json::array();
  for (const auto& record : records) arr.push_back(record_to_json(record));
  out << arr.dump(2) << '\n';
}

std::vector<SearchRecord> parse_records_json(std::istream& in) {
  const auto arr = ordered_json::parse(in);
  if (!arr.is_array()) throw std::invalid_argument("expected a JSON array of records");
  std::vector<SearchRecord> records;
  records.reserve(arr.size());
  for (const auto& j : arr) {
    SearchRecord record{
        Triangle(j.at("a").get<std::int64_t>(), j.at("b").get<std::int64_t>(),
                 j.at("c").get<std::int64_t>()),
        MedianAnalysis{},
        j.at("integral_count").get<int>(),
        tags_from_names(j.at("tags").get<std::vector<std::string>>()),
    };
    for (int i = 0; i < 3; ++i) {
      const auto suffix = std::string(kSideSuffix[i]);
      record.analysis.quad[i] = j.at("quad_" + suffix).get<std::int64_t>();
      record.analysis.status[i] =
          status_from_fields(j.at("status_" + suffix).get<std::string>(),
                             j.at("twice_mu_" + suffix));
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::string record_human_line(const SearchRecord& record) {
  std::ostringstream line;
  line << '(' << record.triangle.a() << ", " << record.triangle.b() << ", "
       << record.triangle.c() << "): mu = [";
  for (int i = 0; i < 3; ++i) {
    if (i) line << ", ";
    line << human_median(record.analysis.status[i], record.analysis.quad[i]);
  }
  line << "], integral medians: " << record.integral_count;
  const auto names = tag_names(record.tags);
  if (!names.empty()) {
    line << ", tags: ";
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) line << ", ";
      line << names[i];
    }
  }
  return line.str();
}

std::string survey_csv_row(const SurveyEntry& entry) {
  const auto& r = entry.report;
  std::string row;
  const auto add = [&row](auto value) {
    row += std::to_string(value);
    row += ',';
  };
  add(r.instance.k);
  add(r.instance.n1);
  add(r.instance.n2);
  add(r.instance.n3);
  add(entry.triangle.a());
  add(entry.triangle.b());
  add(entry.triangle.c());
  add(entry.side);
  add(r.k_dec.valuation);
  add(r.n1_dec.valuation);
  add(r.n2_dec.valuation);
  add(r.n3_dec.valuation);
  row += std::string(branch_name(r.branch));
  row += ',';
  row += r.conditions_hold ? "true" : "false";
  row += ',';
  row += r.exponent_precondition_violated ? "true" : "false";
  row += ',';
  row += csv_escape(r.violated_details);
  return row;
}

void write_survey_csv(std::ostream& out, const NecessitySurvey& survey) {
  out << kSurveyCsvHeader << '\n';
  for (const auto& entry : survey.entries) out << survey_csv_row(entry) << '\n';
}

ordered_json survey_to_json(const NecessitySurvey& survey) {
  ordered_json j;
  j["max_side"] = survey.max_side;
  j["instances"] = survey.instances;
  j["holds"] = survey.holds;
  j["fails"] = survey.fails;
  auto entries = ordered_json::array();
  for (const auto& entry : survey.entries) {
    const auto& r = entry.report;
    ordered_json e;
    e["triangle"] = {entry.triangle.a(), entry.triangle.b(), entry.triangle.c()};
    e["side"] = entry.side;
    e["instance"] = {{"k", r.instance.k},
                     {"n1", r.instance.n1},
                     {"n2", r.instance.n2},
                     {"n3", r.instance.n3}};
    const auto dec = [](const TwoAdic& d) {
      return ordered_json{{"valuation", d.valuation}, {"odd_part", d.odd_part}};
    };
    e["decomposition"] = {
        {"k", dec(r.k_dec)}, {"n1", dec(r.n1_dec)}, {"n2", dec(r.n2_dec)}, {"n3", dec(r.n3_dec)}};
    e["branch"] = std::string(branch_name(r.branch));
    e["holds"] = r.conditions_hold;
    e["exponent_precondition_violated"] = r.exponent_precondition_violated;
    e["details"] = r.violated_details;
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

void write_survey_json(std::ostream& out, const NecessitySurvey& survey) {
  out << survey_to_json(survey).dump(2) << '\n';
}

std::string survey_summary_line(const NecessitySurvey& survey) {
  std::ostringstream line;
  line << "integral-median instances with sides up to " << survey.max_side << ": "
       << survey.instances << " checked, " << survey.holds
       << " match the claimed decomposition shape, " << survey.fails << " do not";
  return line.str();
}

void write_survey_human(std::ostream& out, const NecessitySurvey& survey) {
  out << survey_summary_line(survey) << '\n';
  for (const auto* entry : survey.failures()) {
    const auto& r = entry->report;
    out << "fail: triangle (" << entry->triangle.a() << ", " << entry->triangle.b() << ", "
        << entry->triangle.c() << "), median to side of length "
        << entry->triangle.side(entry->side) << ", instance (k, n1, n2, n3) = (" << r.instance.k
        << ", " << r.instance.n1 << ", " << r.instance.n2 << ", " << r.instance.n3 << ")";
    if (!r.violated_details.empty()) out << " -- " << r.violated_details;
    out << '\n';
  }
}

std::string at_most_two_claim() {
  return "every integer-sided triangle has at most two integral medians";
}

std::string findings_summary_line(std::int64_t max_side, std::size_t finding_count) {
  std::ostringstream line;
  line << "claim \"" << at_most_two_claim() << "\": ";
  if (finding_count == 0) {
    line << "consistent for all triangles with sides up to " << max_side
         << " (no triangle with three integral medians found)";
  } else {
    line << "REFUTED within side bound " << max_side << " (" << finding_count
         << " triangle" << (finding_count == 1 ? "" : "s")
         << " with three integral medians found)";
  }
  return line.str();
}

void write_findings_human(std::ostream& out, std::int64_t max_side,
                          std::span<const Prop2Finding> findings) {
  for (const auto& f : findings) {
    out << "three integral medians: triangle (" << f.triangle.a() << ", " << f.triangle.b()
        << ", " << f.triangle.c() << "), medians (" << f.medians[0] << ", " << f.medians[1]
        << ", " << f.medians[2] << ")\n";
  }
  out << findings_summary_line(max_side, findings.size()) << '\n';
}

}  // namespace medtri
