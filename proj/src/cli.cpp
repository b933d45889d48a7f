#include "medtri/cli.hpp"

#include <cstdint>
#include <fstream>
#include <map>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "medtri/core.hpp"
#include "medtri/families.hpp"
#include "medtri/prop_checks.hpp"
#include "medtri/report.hpp"
#include "medtri/search.hpp"

namespace medtri {
namespace {

enum class Format { Human, Csv, Json };

const std::map<std::string, Format> kFormatMap{
    {"human", Format::Human}, {"csv", Format::Csv}, {"json", Format::Json}};

struct CommonOut {
  Format format = Format::Human;
  std::string out_path;
};

// Routes data output to --out when given, otherwise to the default stream.
class DataSink {
 public:
  DataSink(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      stream_ = &fallback;
      return;
    }
    file_.open(path);
    if (!file_) throw std::invalid_argument("cannot open output file: " + path);
    stream_ = &file_;
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string_view param_names(Family family) {
  switch (family) {
    case Family::F1:
    case Family::F2a:
    case Family::F2b: return "m, n, delta";
    case Family::F3: return "k, l, delta";
    case Family::F4: return "a, b, c, e1, e3";
  }
  return "";
}

std::string param_tuple(std::span<const std::int64_t> params) {
  std::string s = "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(params[i]);
  }
  s += ")";
  return s;
}

std::string sides_tuple(const Triangle& t) {
  return "(" + std::to_string(t.a()) + ", " + std::to_string(t.b()) + ", " +
         std::to_string(t.c()) + ")";
}

std::string_view status_word(MedianKind kind) {
  switch (kind) {
    case MedianKind::Integral: return "integral";
    case MedianKind::HalfInteger: return "half-integer";
    case MedianKind::Irrational: return "irrational";
  }
  return "";
}

std::string joined_tags(TagSet tags) {
  const auto names = tag_names(tags);
  if (names.empty()) return "(none)";
  std::string s;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) s += ", ";
    s += names[i];
  }
  return s;
}

void add_common(CLI::App* cmd, CommonOut& opts) {
  cmd->add_option("--format", opts.format, "output format: human, csv, or json")
      ->transform(CLI::CheckedTransformer(kFormatMap, CLI::ignore_case));
  cmd->add_option("--out", opts.out_path, "write the data output to this file");
}

void print_analysis_lines(std::ostream& os, const Triangle& t, const SearchRecord& record) {
  for (int i = 0; i < 3; ++i) {
    os << "median to side of length " << t.side(i) << ": "
       << human_median(record.analysis.status[i], record.analysis.quad[i]) << " ["
       << status_word(record.analysis.status[i].kind) << "]\n";
  }
  os << "integral medians: " << record.integral_count << '\n';
  os << "tags: " << joined_tags(record.tags) << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact arithmetic for integer-triangle medians"};
  app.name("medtri");
  app.require_subcommand(1);

  // ---- medians ----
  struct {
    std::int64_t a = 0, b = 0, c = 0;
    CommonOut common;
  } med;
  auto* medians = app.add_subcommand("medians", "median lengths of one triangle");
  medians->add_option("a", med.a, "first side")->required();
  medians->add_option("b", med.b, "second side")->required();
  medians->add_option("c", med.c, "third side")->required();
  add_common(medians, med.common);
  medians->callback([&] {
    const Triangle given(med.a, med.b, med.c);
    const auto canon = canonicalize(given);
    const SearchRecord record = make_record(canon.triangle);
    DataSink sink(med.common.out_path, out);
    switch (med.common.format) {
      case Format::Human: {
        auto& os = sink.stream();
        os << "triangle " << sides_tuple(given) << '\n';
        const auto analysis = analyze_medians(given);
        SearchRecord as_given{given, analysis, record.integral_count, record.tags};
        print_analysis_lines(os, given, as_given);
        break;
      }
      case Format::Csv: write_records_csv(sink.stream(), {&record, 1}); break;
      case Format::Json: write_records_json(sink.stream(), {&record, 1}); break;
    }
  });

  // ---- gen ----
  struct {
    PythRanges pyth{0, 0, 0};
    F3Ranges f3{0, 0, 0};
    F4Ranges f4{0, 0};
    std::int64_t max_side = kMaxSide;
    bool dedup = false;
    bool diagnostics = false;
    CommonOut common;
  } gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate triangles with integral medians");
  gen_cmd->require_subcommand(1);

  const auto add_gen_common = [&](CLI::App* cmd) {
    cmd->add_option("--max-side", gen.max_side,
                    "emit only triangles with every side at most this")
        ->check(CLI::Range(std::int64_t{1}, kMaxSide));
    cmd->add_flag("--dedup", gen.dedup,
                  "collapse repeated triangles and list their parameter points");
    add_common(cmd, gen.common);
  };

  const auto finish_gen = [&](std::vector<FamilyHit> hits,
                              const std::vector<F4Rejection>& near_misses) {
    if (gen.diagnostics) {
      for (const auto& miss : near_misses)
        err << "near miss (a, b, c, e1, e3) = " << param_tuple(miss.params) << ": "
            << miss.reason << '\n';
    }
    const auto deduped = dedup_hits(hits);
    std::string summary = "generated " + std::to_string(hits.size()) + " parameter points, " +
                          std::to_string(deduped.size()) + " distinct triangles";
    DataSink sink(gen.common.out_path, out);
    auto& data = sink.stream();
    if (gen.common.format == Format::Human) {
      if (gen.dedup) {
        for (const auto& d : deduped) {
          data << sides_tuple(d.triangle) << ": from ";
          for (std::size_t i = 0; i < d.sources.size(); ++i) {
            if (i) data << ", ";
            data << family_name(d.sources[i].family) << ' ' << param_tuple(d.sources[i].params);
          }
          data << '\n';
        }
      } else {
        for (const auto& hit : hits) {
          data << family_name(hit.family) << " (" << param_names(hit.family)
               << ") = " << param_tuple(hit.params) << ": sides " << sides_tuple(hit.triangle);
          for (const auto& claim : hit.medians)
            data << ", median " << claim.mu << " to side of length "
                 << hit.triangle.side(claim.side);
          data << '\n';
        }
      }
      data << summary << '\n';
      return;
    }
    std::vector<SearchRecord> records;
    if (gen.dedup) {
      records.reserve(deduped.size());
      for (const auto& d : deduped) records.push_back(make_record(d.triangle));
    } else {
      records.reserve(hits.size());
      for (const auto& hit : hits)
        records.push_back(make_record(canonicalize(hit.triangle).triangle));
    }
    if (gen.common.format == Format::Csv) {
      write_records_csv(data, records);
    } else {
      write_records_json(data, records);
    }
    err << summary << '\n';
  };

  const auto add_pyth_options = [&](CLI::App* cmd) {
    cmd->add_option("--m-max", gen.pyth.m_max, "largest m")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--n-max", gen.pyth.n_max, "largest n")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--delta-max", gen.pyth.delta_max, "largest scale factor")
        ->required()
        ->check(CLI::PositiveNumber);
    add_gen_common(cmd);
  };

  auto* f1_cmd = gen_cmd->add_subcommand(
      "f1", "right triangles with an even hypotenuse and integral hypotenuse median");
  add_pyth_options(f1_cmd);
  f1_cmd->callback([&] { finish_gen(gen_f1(gen.pyth, gen.max_side), {}); });

  auto* f2a_cmd = gen_cmd->add_subcommand(
      "f2a", "isosceles triangles with an integral base median (odd-leg form)");
  add_pyth_options(f2a_cmd);
  f2a_cmd->callback([&] { finish_gen(gen_f2a(gen.pyth, gen.max_side), {}); });

  auto* f2b_cmd = gen_cmd->add_subcommand(
      "f2b", "isosceles triangles with an integral base median (even-leg form)");
  add_pyth_options(f2b_cmd);
  f2b_cmd->callback([&] { finish_gen(gen_f2b(gen.pyth, gen.max_side), {}); });

  auto* f3_cmd = gen_cmd->add_subcommand(
      "f3", "isosceles triangles with integral equal-side medians");
  f3_cmd->add_option("--k-max", gen.f3.k_max, "largest k")
      ->required()
      ->check(CLI::PositiveNumber);
  f3_cmd->add_option("--l-max", gen.f3.l_max, "largest l")
      ->required()
      ->check(CLI::PositiveNumber);
  f3_cmd->add_option("--delta-max", gen.f3.delta_max, "largest scale factor")
      ->required()
      ->check(CLI::PositiveNumber);
  add_gen_common(f3_cmd);
  f3_cmd->callback([&] { finish_gen(gen_f3(gen.f3, gen.max_side), {}); });

  auto* f4_cmd = gen_cmd->add_subcommand(
      "f4", "scalene triangles with two integral medians from the shifted-square construction");
  f4_cmd->add_option("--odd-max", gen.f4.odd_max, "largest odd part")
      ->required()
      ->check(CLI::Range(std::int64_t{1}, kMaxSide));
  f4_cmd->add_option("--e-max", gen.f4.e_max, "largest exponent")
      ->required()
      ->check(CLI::Range(1, 60));
  f4_cmd->add_flag("--diagnostics", gen.diagnostics,
                   "also report near misses where the squares hold but no triangle results");
  add_gen_common(f4_cmd);
  f4_cmd->callback([&] {
    std::vector<F4Rejection> near_misses;
    auto hits = gen_f4(gen.f4, gen.diagnostics ? &near_misses : nullptr, gen.max_side);
    finish_gen(std::move(hits), near_misses);
  });

  // ---- search ----
  struct {
    std::int64_t max_side = 0;
    int min_count = 1;
    std::string filter = "all";
    int workers = 0;
    CommonOut common;
  } se;
  auto* search_cmd =
      app.add_subcommand("search", "exhaustively scan triangles for integral medians");
  search_cmd->add_option("--max-side", se.max_side, "largest side to scan")
      ->required()
      ->check(CLI::Range(std::int64_t{1}, kMaxSide));
  search_cmd
      ->add_option("--min-count,--min-integral", se.min_count,
                   "keep triangles with at least this many integral medians")
      ->check(CLI::Range(0, 3));
  search_cmd->add_option("--filter", se.filter, "side shape: all, scalene, or isosceles")
      ->check(CLI::IsMember({"all", "scalene", "isosceles"}));
  search_cmd->add_option("--workers", se.workers, "worker threads (0 = all cores)")
      ->check(CLI::Range(0, 1024));
  add_common(search_cmd, se.common);
  search_cmd->callback([&] {
    const SideFilter filter = se.filter == "scalene"     ? SideFilter::Scalene
                              : se.filter == "isosceles" ? SideFilter::Isosceles
                                                         : SideFilter::All;
    const auto records =
        search_integral_medians(se.max_side, se.min_count, filter, resolve_workers(se.workers));
    const std::string summary =
        "found " + std::to_string(records.size()) +
        (records.size() == 1 ? " triangle" : " triangles") + " with at least " +
        std::to_string(se.min_count) +
        (se.min_count == 1 ? " integral median" : " integral medians") + " and sides up to " +
        std::to_string(se.max_side);
    DataSink sink(se.common.out_path, out);
    auto& data = sink.stream();
    switch (se.common.format) {
      case Format::Human:
        for (const auto& record : records) data << record_human_line(record) << '\n';
        data << summary << '\n';
        break;
      case Format::Csv:
        write_records_csv(data, records);
        err << summary << '\n';
        break;
      case Format::Json:
        write_records_json(data, records);
        err << summary << '\n';
        break;
    }
  });

  // ---- verify ----
  struct {
    std::int64_t max_side = 0;
    int workers = 0;
    CommonOut common;
  } ver;
  auto* verify_cmd = app.add_subcommand("verify", "check structural claims exhaustively");
  verify_cmd->require_subcommand(1);
  const auto add_verify_options = [&](CLI::App* cmd) {
    cmd->add_option("--max-side", ver.max_side, "largest side to scan")
        ->required()
        ->check(CLI::Range(std::int64_t{1}, kMaxSide));
    cmd->add_option("--workers", ver.workers, "worker threads (0 = all cores)")
        ->check(CLI::Range(0, 1024));
    add_common(cmd, ver.common);
  };

  auto* prop1_cmd = verify_cmd->add_subcommand(
      "prop1", "survey whether integral-median instances match the claimed decomposition shape");
  add_verify_options(prop1_cmd);
  prop1_cmd->callback([&] {
    const auto survey = prop1_necessity_survey(ver.max_side, resolve_workers(ver.workers));
    DataSink sink(ver.common.out_path, out);
    switch (ver.common.format) {
      case Format::Human: write_survey_human(sink.stream(), survey); break;
      case Format::Csv:
        write_survey_csv(sink.stream(), survey);
        err << survey_summary_line(survey) << '\n';
        break;
      case Format::Json:
        write_survey_json(sink.stream(), survey);
        err << survey_summary_line(survey) << '\n';
        break;
    }
  });

  auto* prop2_cmd = verify_cmd->add_subcommand(
      "prop2", "search for triangles with three integral medians");
  add_verify_options(prop2_cmd);
  prop2_cmd->callback([&] {
    const auto findings = prop2_experiment(ver.max_side, resolve_workers(ver.workers));
    DataSink sink(ver.common.out_path, out);
    auto& data = sink.stream();
    if (ver.common.format == Format::Human) {
      write_findings_human(data, ver.max_side, findings);
      return;
    }
    std::vector<SearchRecord> records;
    records.reserve(findings.size());
    for (const auto& finding : findings) records.push_back(make_record(finding.triangle));
    if (ver.common.format == Format::Csv) {
      write_records_csv(data, records);
    } else {
      write_records_json(data, records);
    }
    err << findings_summary_line(ver.max_side, findings.size()) << '\n';
  });

  // ---- classify ----
  struct {
    std::int64_t a = 0, b = 0, c = 0;
    std::string out_path;
  } cl;
  auto* classify_cmd =
      app.add_subcommand("classify", "tags and family parameter points for one triangle");
  classify_cmd->add_option("a", cl.a, "first side")->required();
  classify_cmd->add_option("b", cl.b, "second side")->required();
  classify_cmd->add_option("c", cl.c, "third side")->required();
  classify_cmd->add_option("--out", cl.out_path, "write the output to this file");
  classify_cmd->callback([&] {
    const Triangle given(cl.a, cl.b, cl.c);
    const Triangle t = canonicalize(given).triangle;
    const SearchRecord record = make_record(t);
    DataSink sink(cl.out_path, out);
    auto& os = sink.stream();
    os << "triangle " << sides_tuple(t) << '\n';
    print_analysis_lines(os, t, record);
    const auto witnesses = find_family_witnesses(t);
    if (witnesses.empty()) {
      os << "family points: none\n";
    } else {
      os << "family points:\n";
      for (const auto& w : witnesses)
        os << "  " << family_name(w.family) << " (" << param_names(w.family)
           << ") = " << param_tuple(w.params) << '\n';
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace medtri
