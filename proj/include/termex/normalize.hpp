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

#ifndef TERMEX_NORMALIZE_HPP_
#define TERMEX_NORMALIZE_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "termex/corpus.hpp"

namespace termex {

// A term key is the canonical form a phrase is reduced to before any set
// logic: lowercased, single-spaced, edge punctuation and edge stop words
// stripped, each word singularized (raw path) or lemmatized (token path).
// Normalizing a key returns the key unchanged.
using TermKey = std::string;

struct NormalizeOptions {
  // Replaces the built-in stop-word list when non-empty.
  std::vector<std::string> stopword_override;
  // Expands "(co)homology"-style shorthand into both variants.
  bool expand_co = false;
};

class Normalizer {
 public:
  explicit Normalizer(NormalizeOptions opts = {});

  // Canonical key for a contiguous token span, built from lemmas.
  // Punctuation/symbol tokens are dropped; returns nullopt when nothing
  // survives edge stop-word stripping.
  std::optional<TermKey> key_for_tokens(std::span<const Token> span) const;

  // Canonical key for a raw phrase (no annotations available): rule-based
  // plural stripping stands in for lemmatization.
  std::optional<TermKey> key_for_phrase(std::string_view phrase) const;

  // Like key_for_phrase but honoring expand_co: "(co)homology" yields both
  // "homology" and "cohomology". Without expansion this is at most one key.
  std::vector<TermKey> keys_for_phrase(std::string_view phrase) const;

  bool is_stopword(std::string_view word) const;

  // Normalized single word for one token (lowercased lemma, edge punctuation
  // stripped), with stop words kept. This is the vocabulary the extractive
  // filter and the co-occurrence graph operate on. Empty result means the
  // token is pure punctuation.
  std::string token_word(const Token& tok) const;

  const std::vector<std::string>& stopwords() const { return stopwords_; }
  bool expand_co() const { return opts_.expand_co; }

  // Rule-based English plural stripping, applied to a lowercased word.
  // Approximate: a small irregulars table catches the domain vocabulary the
  // suffix rules would mangle.
  static std::string singularize(std::string word);

  static const std::vector<std::string>& builtin_stopwords();

 private:
  NormalizeOptions opts_;
  std::vector<std::string> stopwords_;
  std::unordered_set<std::string> stopset_;
};

// ASCII-only case folding; multi-byte UTF-8 sequences pass through.
std::string ascii_lower(std::string_view s);

// Strips edge punctuation from a single word. An edge bracket survives when
// its partner sits strictly inside the word, so "(co)homology" keeps its
// prefix while "(torsor)" loses the wrapping pair.
std::string strip_edge_punct(std::string_view word);

}  // namespace termex

#endif  // TERMEX_NORMALIZE_HPP_
