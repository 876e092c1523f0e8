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

#include "termex/clean.hpp"

#include <cctype>
#include <unordered_set>

namespace termex {

namespace {

bool is_ws(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (is_ws(c)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out.push_back(' ');
      pending_space = false;
      out.push_back(c);
    }
  }
  return out;
}

std::vector<std::string_view> split_lines(std::string_view s) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t nl = s.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(s.substr(start));
      break;
    }
    lines.push_back(s.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_ws(s.back())) s.remove_suffix(1);
  return s;
}

std::size_t word_count(std::string_view s) {
  std::size_t n = 0;
  bool in_word = false;
  for (char c : s) {
    if (is_ws(c)) {
      in_word = false;
    } else if (!in_word) {
      in_word = true;
      ++n;
    }
  }
  return n;
}

bool contains_word(std::string_view line, std::string_view word) {
  if (word.empty()) return false;
  std::size_t pos = 0;
  while ((pos = line.find(word, pos)) != std::string_view::npos) {
    bool left_ok = pos == 0 || is_ws(line[pos - 1]);
    std::size_t end = pos + word.size();
    bool right_ok = end == line.size() || is_ws(line[end]);
    if (left_ok && right_ok) return true;
    pos += 1;
  }
  return false;
}

bool ends_with_sentence_punct(std::string_view s) {
  if (s.empty()) return false;
  char c = s.back();
  return c == '.' || c == '!' || c == '?' || c == ':' || c == ';' || c == ',';
}

// Heading shapes: markdown "#...", wiki "== title ==", numbered "2.1 Title",
// and short all-caps lines. Heuristic rules other than the explicit '#'
// marker never fire on a line carrying the math placeholder, so placeholder
// output survives re-cleaning.
bool is_heading_line(std::string_view trimmed, MathMode mode,
                     std::string_view placeholder) {
  if (trimmed.empty()) return false;
  if (trimmed.front() == '#') return true;

  if (mode == MathMode::Placeholder && contains_word(trimmed, placeholder))
    return false;

  if (trimmed.size() >= 3 && trimmed.front() == '=' && trimmed.back() == '=')
    return true;

  // Numbered heading: 2. / 2.1 / 3.4.1 followed by a short unpunctuated title.
  std::size_t i = 0;
  if (std::isdigit(static_cast<unsigned char>(trimmed[0]))) {
    while (i < trimmed.size() &&
           std::isdigit(static_cast<unsigned char>(trimmed[i])))
      ++i;
    while (i + 1 < trimmed.size() && trimmed[i] == '.' &&
           std::isdigit(static_cast<unsigned char>(trimmed[i + 1]))) {
      ++i;
      while (i < trimmed.size() &&
             std::isdigit(static_cast<unsigned char>(trimmed[i])))
        ++i;
    }
    if (i < trimmed.size() && trimmed[i] == '.') ++i;
    if (i < trimmed.size() && is_ws(trimmed[i])) {
      std::string_view title = trim(trimmed.substr(i));
      if (!title.empty() && word_count(title) <= 8 &&
          !ends_with_sentence_punct(title))
        return true;
    }
  }

  // Short all-caps line.
  bool has_upper = false;
  for (char c : trimmed) {
    unsigned char u = static_cast<unsigned char>(c);
    if (std::islower(u)) return false;
    if (std::isupper(u)) has_upper = true;
  }
  return has_upper && trimmed.size() <= 60 && word_count(trimmed) <= 6 &&
         !ends_with_sentence_punct(trimmed);
}

// Math segments on a single line. Unbalanced delimiters drop the rest of the
// line and record a warning.
std::string remove_math(std::string_view line, const CleanOptions& opts,
                        std::size_t line_no,
                        std::vector<std::string>& warnings) {
  std::string out;
  out.reserve(line.size());
  const bool keep_token = opts.math == MathMode::Placeholder;
  std::size_t i = 0;
  auto emit_placeholder = [&] {
    if (keep_token) {
      out.push_back(' ');
      out.append(opts.placeholder);
      out.push_back(' ');
    } else {
      out.push_back(' ');
    }
  };
  auto unbalanced = [&](const char* kind) {
    warnings.push_back("line " + std::to_string(line_no) + ": unbalanced " +
                       kind + " math delimiter, dropping rest of line");
    i = line.size();
  };
  while (i < line.size()) {
    char c = line[i];
    if (c == '$') {
      if (i + 1 < line.size() && line[i + 1] == '$') {
        std::size_t close = line.find("$$", i + 2);
        if (close == std::string_view::npos) {
          unbalanced("$$");
        } else {
          emit_placeholder();
          i = close + 2;
        }
      } else {
        std::size_t close = line.find('$', i + 1);
        if (close == std::string_view::npos) {
          unbalanced("$");
        } else {
          emit_placeholder();
          i = close + 1;
        }
      }
    } else if (c == '\\' && i + 1 < line.size() &&
               (line[i + 1] == '[' || line[i + 1] == '(')) {
      const bool bracket = line[i + 1] == '[';
      std::size_t close = line.find(bracket ? "\\]" : "\\)", i + 2);
      if (close == std::string_view::npos) {
        unbalanced(bracket ? "\\[" : "\\(");
      } else {
        emit_placeholder();
        i = close + 2;
      }
    } else {
      out.push_back(c);
      ++i;
    }
  }
  return out;
}

// Markdown [text](url) and ![alt](url), wiki [[target]] and [[target|text]].
std::string remove_links(std::string_view line) {
  std::string out;
  out.reserve(line.size());
  std::size_t i = 0;
  while (i < line.size()) {
    if (line.compare(i, 2, "[[") == 0) {
      std::size_t close = line.find("]]", i + 2);
      if (close != std::string_view::npos) {
        std::string_view inner = line.substr(i + 2, close - (i + 2));
        std::size_t bar = inner.rfind('|');
        if (bar != std::string_view::npos) inner = inner.substr(bar + 1);
        out.append(inner);
        i = close + 2;
        continue;
      }
    }
    if (line[i] == '[' || (line[i] == '!' && i + 1 < line.size() &&
                           line[i + 1] == '[')) {
      std::size_t open = line[i] == '!' ? i + 1 : i;
      std::size_t close = line.find(']', open + 1);
      if (close != std::string_view::npos && close + 1 < line.size() &&
          line[close + 1] == '(') {
        std::size_t paren = line.find(')', close + 2);
        if (paren != std::string_view::npos) {
          out.append(line.substr(open + 1, close - open - 1));
          i = paren + 1;
          continue;
        }
      }
    }
    out.push_back(line[i]);
    ++i;
  }
  return out;
}

// Commands whose brace argument is metadata rather than prose; the argument
// is consumed along with the command. Everything else is unwrapped: command
// name dropped, argument text kept.
const std::unordered_set<std::string>& drop_arg_commands() {
  static const std::unordered_set<std::string> kSet = {
      "cite",     "citep",    "citet",        "citealp",
      "ref",      "eqref",    "pageref",      "autoref",
      "label",    "url",      "href",         "footnote",
      "footnotemark",         "includegraphics",
      "input",    "include",  "bibliography", "bibliographystyle",
      "usepackage",           "documentclass",
      "begin",    "end",      "vspace",       "hspace",
      "newcommand",           "renewcommand", "setlength",
  };
  return kSet;
}

// Consumes a balanced {...} group starting at i; returns one past the close,
// or i if the group never closes.
std::size_t skip_brace_group(std::string_view s, std::size_t i) {
  if (i >= s.size() || s[i] != '{') return i;
  int depth = 0;
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] == '{') ++depth;
    if (s[j] == '}' && --depth == 0) return j + 1;
  }
  return i;
}

std::string remove_tex_commands(std::string_view line) {
  std::string out;
  out.reserve(line.size());
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '\\') {
      if (i + 1 >= line.size()) break;
      char n = line[i + 1];
      if (std::isalpha(static_cast<unsigned char>(n))) {
        std::size_t j = i + 1;
        while (j < line.size() &&
               std::isalpha(static_cast<unsigned char>(line[j])))
          ++j;
        std::string name(line.substr(i + 1, j - i - 1));
        if (j < line.size() && line[j] == '*') ++j;
        if (drop_arg_commands().count(name)) {
          while (j < line.size() && line[j] == '[') {
            std::size_t close = line.find(']', j + 1);
            if (close == std::string_view::npos) break;
            j = close + 1;
          }
          j = skip_brace_group(line, j);
        }
        out.push_back(' ');
        i = j;
      } else if (n == '\\' || n == '{' || n == '}') {
        out.push_back(' ');
        i += 2;
      } else {
        out.push_back(n);
        i += 2;
      }
    } else if (c == '{' || c == '}') {
      i += 1;
    } else {
      out.push_back(c);
      ++i;
    }
  }
  return out;
}

std::string clean_pass(std::string_view text, const CleanOptions& opts,
                       std::vector<std::string>& warnings) {
  std::string joined;
  joined.reserve(text.size());
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    std::string_view trimmed = trim(line);
    if (trimmed.empty()) continue;
    if (is_heading_line(trimmed, opts.math, opts.placeholder)) continue;
    std::string stage = remove_math(trimmed, opts, line_no, warnings);
    stage = remove_links(stage);
    stage = remove_tex_commands(stage);
    joined.append(stage);
    joined.push_back(' ');
  }
  return collapse_whitespace(joined);
}

}  // namespace

CleanResult strip_markup(std::string_view raw, const CleanOptions& opts) {
  CleanResult result;
  std::string cur(raw);
  // Cleaning runs to a fixed point: a pass can expose text (e.g. a bare
  // all-caps fragment) that only becomes a heading once the markup around it
  // is gone.
  for (int pass = 0; pass < 8; ++pass) {
    std::string next = clean_pass(cur, opts, result.warnings);
    if (next == cur) break;
    cur = std::move(next);
  }
  result.text = std::move(cur);
  return result;
}

}  // namespace termex
