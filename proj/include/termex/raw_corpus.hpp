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

#ifndef TERMEX_RAW_CORPUS_HPP_
#define TERMEX_RAW_CORPUS_HPP_

#include <string>
#include <string_view>

#include "termex/clean.hpp"
#include "termex/conllu.hpp"
#include "termex/corpus.hpp"

namespace termex {

// Reads the JSON-lines abstract format: one object per line with a required
// "id" and "text" and an optional "keywords" array. Text is cleaned with
// strip_markup and segmented by a simple rule (sentence break at . ! ?
// followed by a space and a capital letter). Tokens carry the surface form
// only; lemma falls back to the lowercased form and upos to X. This path is
// lower quality than annotated CoNLL-U input and exists so raw abstracts can
// be processed without an upstream annotator.
//
// Throws ParseError (1-based record index) on malformed records.
ConlluResult load_raw_documents(std::string_view jsonl,
                                const CleanOptions& opts = {},
                                std::string corpus_name = "");

ConlluResult load_raw_documents_file(const std::string& path,
                                     const CleanOptions& opts = {});

// Reads a whole file into a string; throws std::runtime_error if unreadable.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace termex

#endif  // TERMEX_RAW_CORPUS_HPP_
