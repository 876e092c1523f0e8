/* Copyright 2026 The termex authors. All rights reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef TERMEX_REPORT_HPP_
#define TERMEX_REPORT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "termex/evaluate.hpp"

namespace termex {

enum class TableFormat { Markdown, Csv, Json };

TableFormat table_format_from_string(std::string_view s);

// Score cells hold hundredths so that rendering, comparison, and the JSON
// round trip are all exact. Rounding is half-away-from-zero.
struct MatrixCell {
  bool is_score = false;
  long long count = 0;
  int centi = 0;

  bool operator==(const MatrixCell&) const = default;
};

// One evaluation table: six fixed metric rows, one column per extractor,
// columns ordered alphabetically.
struct ResultsMatrix {
  std::string reference;
  std::vector<std::string> columns;
  // rows[r][c] matches kMetricRows[r] x columns[c].
  std::vector<std::vector<MatrixCell>> rows;

  bool operator==(const ResultsMatrix&) const = default;
};

extern const std::vector<std::string> kMetricRows;

ResultsMatrix build_matrix(const std::vector<EvalResult>& results);

// Markdown bolds the best cell per row; CSV and JSON carry an explicit best
// column. Best means max for counts of hits and scores, min for the error
// rows; ties flag every optimum.
std::string render_table(const ResultsMatrix& m, TableFormat format);

// Round trip for the JSON rendering.
ResultsMatrix parse_matrix_json(std::string_view json_text);

// One row per non-empty region, ordered by size descending then mask.
std::string render_overlap(const OverlapReport& r, TableFormat format);

int round_half_away(double score_0_to_1);

}  // namespace termex

#endif  // TERMEX_REPORT_HPP_
