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

#include "termex/normalize.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace termex {

namespace {

bool is_ws(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

bool is_ascii_punct(char c) {
  return std::ispunct(static_cast<unsigned char>(c)) != 0 &&
         static_cast<unsigned char>(c) < 0x80;
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_ws(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !is_ws(s[j])) ++j;
    if (j > i) words.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return words;
}

// Position of the bracket matching an opener at `from`, or npos.
std::size_t match_forward(std::string_view w, std::size_t from, char open,
                          char close) {
  int depth = 0;
  for (std::size_t i = from; i < w.size(); ++i) {
    if (w[i] == open) ++depth;
    if (w[i] == close && --depth == 0) return i;
  }
  return std::string_view::npos;
}

bool has_opener_inside(std::string_view w, char open, char close) {
  int depth = 0;
  for (std::size_t i = w.size(); i-- > 1;) {
    if (w[i] == close) ++depth;
    if (w[i] == open && --depth == 0) return true;
  }
  return false;
}

// Exact plural -> singular pairs the suffix rules would get wrong, plus
// s-final singulars that must not be clipped.
const std::unordered_map<std::string, std::string>& irregular_forms() {
  static const std::unordered_map<std::string, std::string> kMap = {
      {"analyses", "analysis"},   {"axes", "axis"},
      {"bases", "basis"},         {"children", "child"},
      {"corpora", "corpus"},      {"criteria", "criterion"},
      {"feet", "foot"},           {"foci", "focus"},
      {"formulae", "formula"},    {"genera", "genus"},
      {"geese", "goose"},         {"indices", "index"},
      {"lemmata", "lemma"},       {"lenses", "lens"},
      {"loci", "locus"},          {"matrices", "matrix"},
      {"men", "man"},             {"mice", "mouse"},
      {"moduli", "modulus"},      {"phenomena", "phenomenon"},
      {"schemata", "schema"},     {"sheaves", "sheaf"},
      {"simplices", "simplex"},   {"teeth", "tooth"},
      {"theses", "thesis"},       {"tori", "torus"},
      {"topoi", "topos"},         {"vertices", "vertex"},
      {"women", "woman"},
      // s-final singulars.
      {"topos", "topos"},         {"chaos", "chaos"},
      {"cosmos", "cosmos"},       {"ethos", "ethos"},
      {"lens", "lens"},           {"series", "series"},
      {"species", "species"},     {"mathematics", "mathematics"},
      {"physics", "physics"},     {"dynamics", "dynamics"},
      {"gas", "gas"},
  };
  return kMap;
}

bool ends_with(std::string_view w, std::string_view suffix) {
  return w.size() >= suffix.size() &&
         w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string singularize_once(std::string word) {
  auto it = irregular_forms().find(word);
  if (it != irregular_forms().end()) return it->second;
  if (ends_with(word, "ies")) {
    if (word.size() > 4) {
      word.replace(word.size() - 3, 3, "y");
    } else {
      word.pop_back();  // ties -> tie
    }
    return word;
  }
  if (ends_with(word, "sses") || ends_with(word, "xes") ||
      ends_with(word, "zes") || ends_with(word, "ches") ||
      ends_with(word, "shes")) {
    word.erase(word.size() - 2);
    return word;
  }
  if (ends_with(word, "ss") || ends_with(word, "us") || ends_with(word, "is"))
    return word;
  if (word.size() > 2 && word.back() == 's') word.pop_back();
  return word;
}

}  // namespace

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    unsigned char u = static_cast<unsigned char>(c);
    if (u < 0x80) c = static_cast<char>(std::tolower(u));
  }
  return out;
}

std::string strip_edge_punct(std::string_view word) {
  std::string w(word);
  bool changed = true;
  while (changed && !w.empty()) {
    changed = false;
    // Wrapping bracket pair.
    auto wrap = [&](char open, char close) {
      if (w.size() >= 2 && w.front() == open &&
          match_forward(w, 0, open, close) == w.size() - 1) {
        w = w.substr(1, w.size() - 2);
        changed = true;
      }
    };
    wrap('(', ')');
    wrap('[', ']');
    if (w.empty()) break;

    char f = w.front();
    if (is_ascii_punct(f)) {
      bool protected_open =
          (f == '(' && match_forward(w, 0, '(', ')') != std::string::npos) ||
          (f == '[' && match_forward(w, 0, '[', ']') != std::string::npos);
      if (!protected_open) {
        w.erase(0, 1);
        changed = true;
        continue;
      }
    }
    if (w.empty()) break;
    char b = w.back();
    if (is_ascii_punct(b)) {
      bool protected_close = (b == ')' && has_opener_inside(w, '(', ')')) ||
                             (b == ']' && has_opener_inside(w, '[', ']'));
      if (!protected_close) {
        w.pop_back();
        changed = true;
      }
    }
  }
  return w;
}

std::string Normalizer::singularize(std::string word) {
  // Run to a fixed point so normalization stays idempotent even on junk
  // input where one clipped suffix exposes another.
  while (true) {
    std::string next = singularize_once(word);
    if (next == word) return word;
    word = std::move(next);
  }
}

const std::vector<std::string>& Normalizer::builtin_stopwords() {
  static const std::vector<std::string> kList = {
      "a",         "about",     "above",      "after",      "again",
      "against",   "all",       "also",       "although",   "always",
      "am",        "an",        "and",        "any",        "are",
      "as",        "at",        "be",         "because",    "been",
      "before",    "being",     "below",      "between",    "both",
      "but",       "by",        "can",        "cannot",     "could",
      "did",       "do",        "does",       "doing",      "down",
      "during",    "each",      "either",     "enough",     "etc",
      "ever",      "every",     "few",        "for",        "from",
      "further",   "had",       "has",        "have",       "having",
      "he",        "her",       "here",       "hers",       "herself",
      "him",       "himself",   "his",        "how",        "however",
      "i",         "if",        "in",         "indeed",     "into",
      "is",        "it",        "its",        "itself",     "just",
      "least",     "less",      "let",        "like",       "many",
      "may",       "me",        "might",      "more",       "moreover",
      "most",      "much",      "must",       "my",         "myself",
      "neither",   "never",     "no",         "nor",        "not",
      "now",       "of",        "off",        "often",      "on",
      "once",      "one",       "only",       "onto",       "or",
      "other",     "otherwise", "our",        "ours",       "ourselves",
      "out",       "over",      "own",        "per",        "perhaps",
      "rather",    "same",      "shall",      "she",        "should",
      "since",     "so",        "some",       "sometimes",  "still",
      "such",      "than",      "that",       "the",        "their",
      "theirs",    "them",      "themselves", "then",       "there",
      "therefore", "these",     "they",       "this",       "those",
      "though",    "through",   "throughout", "thus",       "to",
      "too",       "toward",    "towards",    "under",      "until",
      "up",        "upon",      "us",         "very",       "was",
      "we",        "well",      "were",       "what",       "when",
      "where",     "whereas",   "whether",    "which",      "while",
      "who",       "whom",      "whose",      "why",        "will",
      "with",      "within",    "without",    "would",      "yet",
      "you",       "your",      "yours",      "yourself",   "yourselves",
  };
  return kList;
}

Normalizer::Normalizer(NormalizeOptions opts) : opts_(std::move(opts)) {
  stopwords_ = opts_.stopword_override.empty() ? builtin_stopwords()
                                               : opts_.stopword_override;
  for (auto& w : stopwords_) w = ascii_lower(w);
  std::sort(stopwords_.begin(), stopwords_.end());
  stopwords_.erase(std::unique(stopwords_.begin(), stopwords_.end()),
                   stopwords_.end());
  stopset_.insert(stopwords_.begin(), stopwords_.end());
}

bool Normalizer::is_stopword(std::string_view word) const {
  return stopset_.count(std::string(word)) > 0;
}

std::string Normalizer::token_word(const Token& tok) const {
  if (tok.upos == UPos::PUNCT || tok.upos == UPos::SYM) return "";
  return strip_edge_punct(ascii_lower(tok.lemma));
}

namespace {

// Shared tail of both normalization paths: drop leading/trailing stop words
// and join with single spaces.
std::optional<TermKey> finish_key(std::vector<std::string> words,
                                  const Normalizer& norm) {
  std::size_t begin = 0;
  std::size_t end = words.size();
  while (begin < end && norm.is_stopword(words[begin])) ++begin;
  while (end > begin && norm.is_stopword(words[end - 1])) --end;
  if (begin == end) return std::nullopt;
  std::string key;
  for (std::size_t i = begin; i < end; ++i) {
    if (!key.empty()) key.push_back(' ');
    key += words[i];
  }
  return key;
}

}  // namespace

std::optional<TermKey> Normalizer::key_for_tokens(
    std::span<const Token> span) const {
  std::vector<std::string> words;
  words.reserve(span.size());
  for (const Token& tok : span) {
    std::string w = token_word(tok);
    if (!w.empty()) words.push_back(std::move(w));
  }
  return finish_key(std::move(words), *this);
}

std::optional<TermKey> Normalizer::key_for_phrase(
    std::string_view phrase) const {
  std::vector<std::string> words;
  for (std::string& raw : split_words(ascii_lower(phrase))) {
    // Alternate edge stripping and plural stripping to a fixed point:
    // clipping a plural 's' can expose punctuation ("h)s" -> "h)") and
    // vice versa.
    std::string w = std::move(raw);
    while (true) {
      std::string next = singularize(strip_edge_punct(w));
      if (next == w) break;
      w = std::move(next);
    }
    if (!w.empty()) words.push_back(std::move(w));
  }
  return finish_key(std::move(words), *this);
}

std::vector<TermKey> Normalizer::keys_for_phrase(
    std::string_view phrase) const {
  if (!opts_.expand_co) {
    auto key = key_for_phrase(phrase);
    return key ? std::vector<TermKey>{*key} : std::vector<TermKey>{};
  }
  // Expand "(co)homology" into both readings, then normalize each variant.
  std::vector<std::string> variants{std::string(phrase)};
  bool expanded = true;
  while (expanded && variants.size() < 16) {
    expanded = false;
    std::vector<std::string> next;
    for (const std::string& v : variants) {
      std::size_t pos = ascii_lower(v).find("(co)");
      if (pos != std::string::npos) {
        std::string without = v.substr(0, pos) + v.substr(pos + 4);
        std::string with = v.substr(0, pos) + "co" + v.substr(pos + 4);
        next.push_back(std::move(without));
        next.push_back(std::move(with));
        expanded = true;
      } else {
        next.push_back(v);
      }
    }
    variants = std::move(next);
  }
  std::vector<TermKey> keys;
  for (const std::string& v : variants) {
    if (auto key = key_for_phrase(v)) {
      if (std::find(keys.begin(), keys.end(), *key) == keys.end())
        keys.push_back(*key);
    }
  }
  return keys;
}

}  // namespace termex
