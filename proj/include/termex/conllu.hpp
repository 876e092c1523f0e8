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

#ifndef TERMEX_CONLLU_HPP_
#define TERMEX_CONLLU_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "termex/corpus.hpp"

namespace termex {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ConlluResult {
  Corpus corpus;
  std::vector<std::string> warnings;
};

// Parses 10-column tab-separated CoNLL-U text. Only columns 1-4 (id, form,
// lemma, upos) are kept; multiword-token ranges ("3-4") and empty nodes
// ("3.1") are skipped. Documents are delimited by "# newdoc id =" comments,
// sentences by "# sent_id =" comments and blank lines. A
// "# keywords = a | b" comment attaches author keywords to the current
// document. Throws ParseError on malformed token lines.
ConlluResult parse_conllu(std::string_view text, std::string corpus_name = "");

// Inverse of parse_conllu over the fields in scope. Unused columns are
// written as "_"; every sentence ends with a blank line.
std::string write_conllu(const Corpus& corpus);

}  // namespace termex

#endif  // TERMEX_CONLLU_HPP_
