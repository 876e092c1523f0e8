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

#include "termex/corpus.hpp"

#include <array>
#include <utility>

namespace termex {

namespace {

constexpr std::array<std::pair<std::string_view, UPos>, 17> kUposNames = {{
    {"ADJ", UPos::ADJ},     {"ADP", UPos::ADP},     {"ADV", UPos::ADV},
    {"AUX", UPos::AUX},     {"CCONJ", UPos::CCONJ}, {"DET", UPos::DET},
    {"INTJ", UPos::INTJ},   {"NOUN", UPos::NOUN},   {"NUM", UPos::NUM},
    {"PART", UPos::PART},   {"PRON", UPos::PRON},   {"PROPN", UPos::PROPN},
    {"PUNCT", UPos::PUNCT}, {"SCONJ", UPos::SCONJ}, {"SYM", UPos::SYM},
    {"VERB", UPos::VERB},   {"X", UPos::X},
}};

}  // namespace

UPos upos_from_string(std::string_view s) {
  for (const auto& [name, tag] : kUposNames) {
    if (s == name) return tag;
  }
  return UPos::X;
}

std::string_view upos_to_string(UPos p) {
  for (const auto& [name, tag] : kUposNames) {
    if (tag == p) return name;
  }
  return "X";
}

std::size_t Corpus::sentence_count() const {
  std::size_t n = 0;
  for (const auto& doc : documents) n += doc.sentences.size();
  return n;
}

std::size_t Corpus::token_count() const {
  std::size_t n = 0;
  for (const auto& doc : documents) {
    for (const auto& sent : doc.sentences) n += sent.tokens.size();
  }
  return n;
}

bool same_content(const Corpus& a, const Corpus& b) {
  return a.documents == b.documents;
}

}  // namespace termex
