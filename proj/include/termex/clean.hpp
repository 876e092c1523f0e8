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

#ifndef TERMEX_CLEAN_HPP_
#define TERMEX_CLEAN_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace termex {

enum class MathMode { Delete, Placeholder };

struct CleanOptions {
  MathMode math = MathMode::Delete;
  std::string placeholder = "MATH";
};

struct CleanResult {
  std::string text;
  std::vector<std::string> warnings;
};

// Removes TeX math ($...$, $$...$$, \[...\], \(...\)), TeX commands,
// markdown/wiki headings, and link syntax from raw text, collapsing all
// whitespace to single spaces. Math segments are deleted or replaced by a
// single placeholder token depending on the options. The result is a fixed
// point: cleaning it again changes nothing.
//
// Unbalanced math delimiters are recoverable: the rest of the offending line
// is dropped and a warning is recorded.
CleanResult strip_markup(std::string_view raw, const CleanOptions& opts = {});

}  // namespace termex

#endif  // TERMEX_CLEAN_HPP_
