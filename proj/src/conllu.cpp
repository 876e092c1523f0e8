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

#include "termex/conllu.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "termex/normalize.hpp"

namespace termex {

namespace {

constexpr int kColumns = 10;

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> cols;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      cols.push_back(line.substr(start));
      break;
    }
    cols.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return cols;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Splits "a | b | c"; single keywords may still contain commas.
std::vector<std::string> split_keywords(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t bar = s.find('|', start);
    std::string_view piece = bar == std::string_view::npos
                                 ? s.substr(start)
                                 : s.substr(start, bar - start);
    piece = trim_view(piece);
    if (!piece.empty()) out.emplace_back(piece);
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return out;
}

struct Builder {
  Corpus corpus;
  std::vector<std::string> warnings;
  Document* doc = nullptr;
  Sentence sent;
  std::string pending_sent_id;
  int synth_doc = 0;
  int synth_sent = 0;

  Document& current_doc() {
    if (doc == nullptr) {
      Document d;
      d.id = "doc" + std::to_string(++synth_doc);
      warnings.push_back("missing document id, synthesized '" + d.id + "'");
      corpus.documents.push_back(std::move(d));
      doc = &corpus.documents.back();
    }
    return *doc;
  }

  void start_doc(std::string id) {
    flush_sentence();
    Document d;
    d.id = std::move(id);
    corpus.documents.push_back(std::move(d));
    doc = &corpus.documents.back();
    synth_sent = 0;
  }

  void flush_sentence() {
    if (sent.tokens.empty()) {
      pending_sent_id.clear();
      return;
    }
    Document& d = current_doc();
    if (pending_sent_id.empty()) {
      sent.id = d.id + "-s" + std::to_string(++synth_sent);
    } else {
      sent.id = pending_sent_id;
    }
    d.sentences.push_back(std::move(sent));
    sent = Sentence{};
    pending_sent_id.clear();
  }
};

}  // namespace

ConlluResult parse_conllu(std::string_view text, std::string corpus_name) {
  Builder b;
  b.corpus.name = std::move(corpus_name);

  std::set<std::string> doc_ids;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view line = nl == std::string_view::npos
                                ? text.substr(start)
                                : text.substr(start, nl - start);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (line.empty()) {
      b.flush_sentence();
    } else if (line.front() == '#') {
      std::string_view comment = trim_view(line.substr(1));
      if (comment.rfind("newdoc id =", 0) == 0) {
        std::string id(trim_view(comment.substr(11)));
        if (!doc_ids.insert(id).second)
          throw ParseError(line_no, "duplicate document id '" + id + "'");
        b.start_doc(std::move(id));
      } else if (comment.rfind("sent_id =", 0) == 0) {
        b.pending_sent_id = std::string(trim_view(comment.substr(9)));
      } else if (comment.rfind("keywords =", 0) == 0) {
        for (auto& kw : split_keywords(comment.substr(10)))
          b.current_doc().author_keywords.push_back(std::move(kw));
      }
      // Other comments are ignored.
    } else {
      auto cols = split_tabs(line);
      if (cols.size() != kColumns) {
        throw ParseError(line_no, "expected " + std::to_string(kColumns) +
                                      " tab-separated columns, got " +
                                      std::to_string(cols.size()));
      }
      std::string_view id = cols[0];
      // Multiword-token ranges ("3-4") and empty nodes ("3.1") are skipped.
      if (id.find('-') != std::string_view::npos ||
          id.find('.') != std::string_view::npos) {
        if (nl == std::string_view::npos) break;
        start = nl + 1;
        continue;
      }
      if (!all_digits(id) || id.size() > 6)
        throw ParseError(line_no, "bad token id '" + std::string(id) + "'");
      Token tok;
      tok.index = std::stoi(std::string(id));
      int expected = static_cast<int>(b.sent.tokens.size()) + 1;
      if (tok.index != expected)
        throw ParseError(line_no, "token id " + std::string(id) +
                                      " out of order (expected " +
                                      std::to_string(expected) + ")");
      tok.form = std::string(cols[1]);
      if (tok.form.empty())
        throw ParseError(line_no, "empty form");
      tok.lemma = (cols[2].empty() || cols[2] == "_")
                      ? ascii_lower(tok.form)
                      : std::string(cols[2]);
      tok.upos = upos_from_string(cols[3]);
      b.sent.tokens.push_back(std::move(tok));
    }

    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  b.flush_sentence();

  return {std::move(b.corpus), std::move(b.warnings)};
}

std::string write_conllu(const Corpus& corpus) {
  std::string out;
  for (const auto& doc : corpus.documents) {
    out += "# newdoc id = " + doc.id + "\n";
    if (!doc.author_keywords.empty()) {
      out += "# keywords =";
      for (std::size_t i = 0; i < doc.author_keywords.size(); ++i) {
        out += i == 0 ? " " : " | ";
        out += doc.author_keywords[i];
      }
      out += "\n";
    }
    for (const auto& sent : doc.sentences) {
      out += "# sent_id = " + sent.id + "\n";
      for (const auto& tok : sent.tokens) {
        out += std::to_string(tok.index);
        out += '\t';
        out += tok.form;
        out += '\t';
        out += tok.lemma;
        out += '\t';
        out += upos_to_string(tok.upos);
        out += "\t_\t_\t_\t_\t_\t_\n";
      }
      out += "\n";
    }
  }
  return out;
}

}  // namespace termex
