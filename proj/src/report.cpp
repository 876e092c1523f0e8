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

#include "termex/report.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace termex {

const std::vector<std::string> kMetricRows = {
    "True Positives", "False Positives", "False Negatives",
    "Precision",      "Recall",          "F1",
};

namespace {

// Rows where smaller is better.
bool lower_is_better(std::size_t row) { return row == 1 || row == 2; }

std::string render_cell(const MatrixCell& cell) {
  if (!cell.is_score) return std::to_string(cell.count);
  return std::to_string(cell.centi / 100) + "." +
         (cell.centi % 100 < 10 ? "0" : "") + std::to_string(cell.centi % 100);
}

long long cell_value(const MatrixCell& cell) {
  return cell.is_score ? cell.centi : cell.count;
}

std::vector<bool> best_flags(const std::vector<MatrixCell>& row,
                             bool lower_better) {
  std::vector<bool> flags(row.size(), false);
  if (row.empty()) return flags;
  long long best = cell_value(row[0]);
  for (const MatrixCell& cell : row) {
    best = lower_better ? std::min(best, cell_value(cell))
                        : std::max(best, cell_value(cell));
  }
  for (std::size_t i = 0; i < row.size(); ++i)
    flags[i] = cell_value(row[i]) == best;
  return flags;
}

// RFC 4180: quote fields containing commas, quotes, or line breaks.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

}  // namespace

TableFormat table_format_from_string(std::string_view s) {
  if (s == "markdown" || s == "md") return TableFormat::Markdown;
  if (s == "csv") return TableFormat::Csv;
  if (s == "json") return TableFormat::Json;
  throw std::invalid_argument("unknown table format '" + std::string(s) +
                              "' (expected markdown, csv, or json)");
}

int round_half_away(double score_0_to_1) {
  return static_cast<int>(std::floor(score_0_to_1 * 100.0 + 0.5));
}

ResultsMatrix build_matrix(const std::vector<EvalResult>& results) {
  if (results.empty())
    throw std::invalid_argument("cannot build a matrix from zero results");
  ResultsMatrix m;
  m.reference = results.front().reference;

  std::vector<const EvalResult*> ordered;
  for (const EvalResult& r : results) {
    if (r.reference != m.reference)
      throw std::invalid_argument(
          "matrix mixes results for different references");
    ordered.push_back(&r);
  }
  std::sort(ordered.begin(), ordered.end(),
            [](const EvalResult* a, const EvalResult* b) {
              return a->extractor < b->extractor;
            });
  for (std::size_t i = 1; i < ordered.size(); ++i) {
    if (ordered[i]->extractor == ordered[i - 1]->extractor)
      throw std::invalid_argument("duplicate extractor column '" +
                                  ordered[i]->extractor + "'");
  }

  m.rows.assign(kMetricRows.size(), {});
  for (const EvalResult* r : ordered) {
    m.columns.push_back(r->extractor);
    m.rows[0].push_back({false, r->counts.tp, 0});
    m.rows[1].push_back({false, r->counts.fp, 0});
    m.rows[2].push_back({false, r->counts.fn, 0});
    m.rows[3].push_back({true, 0, round_half_away(r->scores.precision)});
    m.rows[4].push_back({true, 0, round_half_away(r->scores.recall)});
    m.rows[5].push_back({true, 0, round_half_away(r->scores.f1)});
  }
  return m;
}

std::string render_table(const ResultsMatrix& m, TableFormat format) {
  if (format == TableFormat::Json) {
    nlohmann::ordered_json out;
    out["reference"] = m.reference;
    out["columns"] = m.columns;
    out["rows"] = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < kMetricRows.size(); ++r) {
      nlohmann::ordered_json row;
      row["metric"] = kMetricRows[r];
      nlohmann::ordered_json values = nlohmann::ordered_json::object();
      std::vector<bool> flags = best_flags(m.rows[r], lower_is_better(r));
      std::vector<std::string> best;
      for (std::size_t c = 0; c < m.columns.size(); ++c) {
        const MatrixCell& cell = m.rows[r][c];
        if (cell.is_score) {
          values[m.columns[c]] = render_cell(cell);
        } else {
          values[m.columns[c]] = cell.count;
        }
        if (flags[c]) best.push_back(m.columns[c]);
      }
      row["values"] = values;
      row["best"] = best;
      out["rows"].push_back(row);
    }
    return out.dump(2) + "\n";
  }

  if (format == TableFormat::Csv) {
    std::string out = "metric";
    for (const auto& col : m.columns) out += "," + csv_field(col);
    out += ",best\n";
    for (std::size_t r = 0; r < kMetricRows.size(); ++r) {
      std::vector<bool> flags = best_flags(m.rows[r], lower_is_better(r));
      out += csv_field(kMetricRows[r]);
      for (std::size_t c = 0; c < m.columns.size(); ++c)
        out += "," + render_cell(m.rows[r][c]);
      std::string best;
      for (std::size_t c = 0; c < m.columns.size(); ++c) {
        if (!flags[c]) continue;
        if (!best.empty()) best += ";";
        best += m.columns[c];
      }
      out += "," + csv_field(best) + "\n";
    }
    return out;
  }

  // Markdown: best cell per row in bold, mirroring the usual results-table
  // convention.
  std::string out = "| Metric |";
  for (const auto& col : m.columns) out += " " + col + " |";
  out += "\n|---|";
  for (std::size_t c = 0; c < m.columns.size(); ++c) out += "---|";
  out += "\n";
  for (std::size_t r = 0; r < kMetricRows.size(); ++r) {
    std::vector<bool> flags = best_flags(m.rows[r], lower_is_better(r));
    out += "| " + kMetricRows[r] + " |";
    for (std::size_t c = 0; c < m.columns.size(); ++c) {
      std::string cell = render_cell(m.rows[r][c]);
      if (flags[c]) cell = "**" + cell + "**";
      out += " " + cell + " |";
    }
    out += "\n";
  }
  return out;
}

ResultsMatrix parse_matrix_json(std::string_view json_text) {
  nlohmann::json in = nlohmann::json::parse(json_text);
  ResultsMatrix m;
  m.reference = in.at("reference").get<std::string>();
  m.columns = in.at("columns").get<std::vector<std::string>>();
  const auto& rows = in.at("rows");
  if (rows.size() != kMetricRows.size())
    throw std::invalid_argument("matrix JSON must carry all six metric rows");
  m.rows.assign(kMetricRows.size(), {});
  for (std::size_t r = 0; r < kMetricRows.size(); ++r) {
    if (rows[r].at("metric").get<std::string>() != kMetricRows[r])
      throw std::invalid_argument("unexpected metric row order");
    const auto& values = rows[r].at("values");
    for (const std::string& col : m.columns) {
      MatrixCell cell;
      const auto& v = values.at(col);
      if (v.is_string()) {
        cell.is_score = true;
        const std::string s = v.get<std::string>();
        std::size_t dot = s.find('.');
        if (dot == std::string::npos || s.size() - dot - 1 != 2)
          throw std::invalid_argument("bad score cell '" + s + "'");
        cell.centi = std::stoi(s.substr(0, dot)) * 100 +
                     std::stoi(s.substr(dot + 1));
      } else {
        cell.count = v.get<long long>();
      }
      m.rows[r].push_back(cell);
    }
  }
  return m;
}

std::string render_overlap(const OverlapReport& r, TableFormat format) {
  // Non-empty regions, size descending, then mask.
  std::vector<const OverlapRegion*> rows;
  for (const auto& region : r.regions) {
    if (region.size() > 0) rows.push_back(&region);
  }
  std::sort(rows.begin(), rows.end(),
            [](const OverlapRegion* a, const OverlapRegion* b) {
              if (a->size() != b->size()) return a->size() > b->size();
              return a->mask < b->mask;
            });

  auto join_names = [](const OverlapRegion& region, const char* sep) {
    std::string out;
    for (const auto& name : region.list_names) {
      if (!out.empty()) out += sep;
      out += name;
    }
    return out;
  };

  if (format == TableFormat::Json) {
    nlohmann::ordered_json out;
    out["lists"] = r.names;
    out["union_size"] = r.union_size();
    out["regions"] = nlohmann::ordered_json::array();
    for (const OverlapRegion* region : rows) {
      nlohmann::ordered_json item;
      item["lists"] = region->list_names;
      item["size"] = region->size();
      out["regions"].push_back(item);
    }
    if (rows.empty()) out["note"] = "all lists are empty";
    return out.dump(2) + "\n";
  }

  if (format == TableFormat::Csv) {
    std::string out = "lists,size\n";
    for (const OverlapRegion* region : rows) {
      out += csv_field(join_names(*region, ";")) + "," +
             std::to_string(region->size()) + "\n";
    }
    return out;
  }

  std::string out = "| Lists | Size |\n|---|---|\n";
  for (const OverlapRegion* region : rows) {
    out += "| " + join_names(*region, " + ") + " | " +
           std::to_string(region->size()) + " |\n";
  }
  if (rows.empty()) out += "\n(no terms in any list)\n";
  return out;
}

}  // namespace termex
