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

#ifndef TERMEX_CORPUS_HPP_
#define TERMEX_CORPUS_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace termex {

// Universal POS tag set. Anything we cannot recognize maps to X.
enum class UPos {
  ADJ, ADP, ADV, AUX, CCONJ, DET, INTJ, NOUN, NUM, PART,
  PRON, PROPN, PUNCT, SCONJ, SYM, VERB, X,
};

UPos upos_from_string(std::string_view s);
std::string_view upos_to_string(UPos p);

// One annotated token. `index` is the 1-based position within its sentence.
// `lemma` is never empty: when the source has no lemma we fall back to the
// lowercased surface form.
struct Token {
  int index = 0;
  std::string form;
  std::string lemma;
  UPos upos = UPos::X;

  bool operator==(const Token&) const = default;
};

struct Sentence {
  std::string id;
  std::vector<Token> tokens;

  bool operator==(const Sentence&) const = default;
};

struct Document {
  std::string id;
  std::vector<Sentence> sentences;
  std::vector<std::string> author_keywords;

  bool operator==(const Document&) const = default;
};

// Documents keep their input order; ids are unique within a corpus.
struct Corpus {
  std::string name;
  std::vector<Document> documents;

  std::size_t sentence_count() const;
  std::size_t token_count() const;
};

// Content equality over the annotated fields (ids, forms, lemmas, UPOS,
// keywords). The corpus name is presentation-only and not compared.
bool same_content(const Corpus& a, const Corpus& b);

}  // namespace termex

#endif  // TERMEX_CORPUS_HPP_
