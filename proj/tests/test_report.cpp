#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "termex/evaluate.hpp"
#include "termex/report.hpp"

using termex::build_matrix;
using termex::ConfusionCounts;
using termex::EvalResult;
using termex::metrics;
using termex::overlap_regions;
using termex::parse_matrix_json;
using termex::render_overlap;
using termex::render_table;
using termex::ResultsMatrix;
using termex::round_half_away;
using termex::TableFormat;
using termex::TermList;

namespace {

EvalResult make_result(const std::string& extractor, long long tp,
                       long long fp, long long fn,
                       const std::string& reference = "ref") {
  EvalResult r;
  r.extractor = extractor;
  r.reference = reference;
  r.counts.tp = tp;
  r.counts.fp = fp;
  r.counts.fn = fn;
  r.scores = metrics(r.counts);
  return r;
}

// Four columns with the published title-list counts.
std::vector<EvalResult> title_results() {
  return {
      make_result("neural", 399, 1097, 873),
      make_result("linker", 507, 251, 765),
      make_result("phrases", 1160, 13529, 112),
      make_result("ranker", 684, 3147, 588),
  };
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("columns sort alphabetically and scores render to two decimals") {
  ResultsMatrix m = build_matrix(title_results());
  CHECK(m.columns == std::vector<std::string>{"linker", "neural", "phrases",
                                              "ranker"});
  std::string md = render_table(m, TableFormat::Markdown);
  CHECK(md.find("| Metric | linker | neural | phrases | ranker |") !=
        std::string::npos);
  // The 0.67 precision column is the bold one.
  CHECK(md.find("| Precision | **0.67** | 0.27 | 0.08 | 0.18 |") !=
        std::string::npos);
  CHECK(md.find("| F1 | **0.50** | 0.29 | 0.15 | 0.27 |") !=
        std::string::npos);
  // Error rows flag the minimum.
  CHECK(md.find("| False Positives | **251** | 1097 | 13529 | 3147 |") !=
        std::string::npos);
  CHECK(md.find("| False Negatives | 765 | 873 | **112** | 588 |") !=
        std::string::npos);
}

TEST_CASE("a single column is best in every row") {
  ResultsMatrix m = build_matrix({make_result("only", 5, 2, 3)});
  std::string md = render_table(m, TableFormat::Markdown);
  CHECK(md.find("**5**") != std::string::npos);
  CHECK(md.find("**2**") != std::string::npos);
  CHECK(md.find("**0.71**") != std::string::npos);  // precision 5/7
}

TEST_CASE("ties flag every optimum") {
  ResultsMatrix m = build_matrix({
      make_result("a", 10, 10, 10),
      make_result("b", 10, 10, 10),
  });
  std::string csv = render_table(m, TableFormat::Csv);
  CHECK(csv.find("F1,0.50,0.50,a;b\n") != std::string::npos);
}

TEST_CASE("csv is rfc-4180 quoted when needed") {
  ResultsMatrix m = build_matrix({make_result("odd,name", 1, 0, 0)});
  std::string csv = render_table(m, TableFormat::Csv);
  CHECK(csv.find("metric,\"odd,name\",best\n") == 0);
  CHECK(csv.find("True Positives,1,\"odd,name\"\n") != std::string::npos);
}

TEST_CASE("json rendering round-trips to an equal matrix") {
  ResultsMatrix m = build_matrix(title_results());
  std::string json = render_table(m, TableFormat::Json);
  ResultsMatrix back = parse_matrix_json(json);
  CHECK(back == m);
  CHECK(render_table(back, TableFormat::Json) == json);
}

TEST_CASE("rendering is stable across calls") {
  ResultsMatrix m = build_matrix(title_results());
  for (TableFormat f :
       {TableFormat::Markdown, TableFormat::Csv, TableFormat::Json}) {
    CHECK(render_table(m, f) == render_table(m, f));
  }
}

TEST_CASE("rounding is half away from zero") {
  CHECK(round_half_away(0.2614) == 26);
  CHECK(round_half_away(0.675) == 68);
  CHECK(round_half_away(0.0) == 0);
  CHECK(round_half_away(1.0) == 100);
  CHECK(round_half_away(0.005) == 1);
  CHECK(round_half_away(0.004999) == 0);
}

TEST_CASE("mixed references are rejected") {
  CHECK_THROWS_AS(build_matrix({make_result("a", 1, 1, 1, "r1"),
                                make_result("b", 1, 1, 1, "r2")}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_matrix({make_result("a", 1, 1, 1),
                                make_result("a", 2, 2, 2)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_matrix({}), std::invalid_argument);
}

TEST_CASE("overlap rows order by size then mask") {
  TermList a = helpers::make_list("A", {"a", "b"});
  TermList b = helpers::make_list("B", {"b", "c"});
  TermList c = helpers::make_list("C", {"c"});
  auto report = overlap_regions({&a, &b, &c});
  std::string md = render_overlap(report, TableFormat::Markdown);
  CHECK(md ==
        "| Lists | Size |\n"
        "|---|---|\n"
        "| A | 1 |\n"
        "| A + B | 1 |\n"
        "| B + C | 1 |\n");
  std::string csv = render_overlap(report, TableFormat::Csv);
  CHECK(csv ==
        "lists,size\n"
        "A,1\n"
        "A;B,1\n"
        "B;C,1\n");
}

TEST_CASE("one-list-only regions carry exactly that list name") {
  TermList a = helpers::make_list("simple", {"x", "y"});
  TermList b = helpers::make_list("other", {"y"});
  auto report = overlap_regions({&a, &b});
  std::string md = render_overlap(report, TableFormat::Markdown);
  CHECK(md.find("| simple | 1 |") != std::string::npos);
}

TEST_CASE("empty overlap renders a note") {
  TermList a("A");
  TermList b("B");
  auto report = overlap_regions({&a, &b});
  std::string md = render_overlap(report, TableFormat::Markdown);
  CHECK(md.find("(no terms in any list)") != std::string::npos);
  std::string json = render_overlap(report, TableFormat::Json);
  CHECK(json.find("\"note\"") != std::string::npos);
}

}  // TEST_SUITE
