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

#include "termex/raw_corpus.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "termex/normalize.hpp"

namespace termex {

namespace {

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Sentence break: . ! ? followed by a space and a capital letter.
std::vector<std::string> segment_sentences(std::string_view text) {
  std::vector<std::string> sentences;
  std::size_t start = 0;
  for (std::size_t i = 0; i + 2 < text.size(); ++i) {
    char c = text[i];
    if ((c == '.' || c == '!' || c == '?') && text[i + 1] == ' ' &&
        std::isupper(static_cast<unsigned char>(text[i + 2]))) {
      sentences.emplace_back(text.substr(start, i + 1 - start));
      start = i + 2;
    }
  }
  if (start < text.size()) sentences.emplace_back(text.substr(start));
  return sentences;
}

// Whitespace split with leading/trailing punctuation peeled off into their
// own tokens, so "torsors." becomes "torsors" "." like an annotator would.
std::vector<std::string> tokenize(std::string_view sentence) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  auto is_punct = [](char c) {
    return std::ispunct(static_cast<unsigned char>(c)) != 0 &&
           static_cast<unsigned char>(c) < 0x80;
  };
  while (i < sentence.size()) {
    while (i < sentence.size() && is_ws(sentence[i])) ++i;
    std::size_t j = i;
    while (j < sentence.size() && !is_ws(sentence[j])) ++j;
    if (j == i) break;
    std::string_view word = sentence.substr(i, j - i);
    std::size_t lead = 0;
    while (lead < word.size() && is_punct(word[lead])) ++lead;
    std::size_t tail = word.size();
    while (tail > lead && is_punct(word[tail - 1])) --tail;
    if (lead > 0) tokens.emplace_back(word.substr(0, lead));
    if (tail > lead) tokens.emplace_back(word.substr(lead, tail - lead));
    if (tail < word.size()) tokens.emplace_back(word.substr(tail));
    i = j;
  }
  return tokens;
}

UPos fallback_upos(std::string_view form) {
  for (char c : form) {
    unsigned char u = static_cast<unsigned char>(c);
    if (u >= 0x80 || std::ispunct(u) == 0) return UPos::X;
  }
  return UPos::PUNCT;
}

}  // namespace

ConlluResult load_raw_documents(std::string_view jsonl,
                                const CleanOptions& opts,
                                std::string corpus_name) {
  ConlluResult result;
  result.corpus.name = std::move(corpus_name);

  std::set<std::string> doc_ids;
  std::size_t record_no = 0;
  std::size_t start = 0;
  while (start <= jsonl.size()) {
    std::size_t nl = jsonl.find('\n', start);
    std::string_view line = nl == std::string_view::npos
                                ? jsonl.substr(start)
                                : jsonl.substr(start, nl - start);
    start = nl == std::string_view::npos ? jsonl.size() + 1 : nl + 1;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.remove_suffix(1);
    if (line.empty()) continue;
    ++record_no;

    nlohmann::json rec = nlohmann::json::parse(line, nullptr, false);
    if (rec.is_discarded() || !rec.is_object())
      throw ParseError(record_no, "malformed JSON record");
    if (!rec.contains("id") || !rec["id"].is_string())
      throw ParseError(record_no, "missing string field 'id'");
    if (!rec.contains("text") || !rec["text"].is_string())
      throw ParseError(record_no, "missing string field 'text'");

    Document doc;
    doc.id = rec["id"].get<std::string>();
    if (!doc_ids.insert(doc.id).second)
      throw ParseError(record_no, "duplicate document id '" + doc.id + "'");
    if (rec.contains("keywords")) {
      if (!rec["keywords"].is_array())
        throw ParseError(record_no, "field 'keywords' must be an array");
      for (const auto& kw : rec["keywords"]) {
        if (!kw.is_string())
          throw ParseError(record_no, "non-string entry in 'keywords'");
        doc.author_keywords.push_back(kw.get<std::string>());
      }
    }

    CleanResult cleaned = strip_markup(rec["text"].get<std::string>(), opts);
    for (auto& w : cleaned.warnings)
      result.warnings.push_back(doc.id + ": " + w);

    int sent_no = 0;
    for (const std::string& sent_text : segment_sentences(cleaned.text)) {
      Sentence sent;
      int index = 0;
      for (std::string& form : tokenize(sent_text)) {
        Token tok;
        tok.index = ++index;
        tok.lemma = ascii_lower(form);
        tok.upos = fallback_upos(form);
        tok.form = std::move(form);
        sent.tokens.push_back(std::move(tok));
      }
      if (sent.tokens.empty()) continue;
      sent.id = doc.id + "-s" + std::to_string(++sent_no);
      doc.sentences.push_back(std::move(sent));
    }
    result.corpus.documents.push_back(std::move(doc));
  }
  return result;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

ConlluResult load_raw_documents_file(const std::string& path,
                                     const CleanOptions& opts) {
  return load_raw_documents(read_file(path), opts, path);
}

}  // namespace termex
