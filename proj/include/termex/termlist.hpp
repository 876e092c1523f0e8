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

#ifndef TERMEX_TERMLIST_HPP_
#define TERMEX_TERMLIST_HPP_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "termex/normalize.hpp"

namespace termex {

// A surface phrase with its canonical key and the labels of whatever produced
// it. The key is always the normalization of the surface.
struct Term {
  std::string surface;
  TermKey key;
  std::set<std::string> sources;

  bool operator==(const Term&) const = default;
};

// A named, deduplicated set of terms keyed by TermKey. At most one Term per
// key; the first surface seen for a key wins, later sources are merged in.
// Iteration order is key order, so every consumer is deterministic.
class TermList {
 public:
  explicit TermList(std::string name);

  const std::string& name() const { return name_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  bool contains(const TermKey& key) const { return terms_.count(key) > 0; }
  const Term* find(const TermKey& key) const;

  // Inserts or merges. Returns true when the key was new.
  bool insert(std::string surface, TermKey key, std::string source);
  bool insert(Term term);

  const std::map<TermKey, Term>& terms() const { return terms_; }

  std::vector<TermKey> keys() const;

  bool operator==(const TermList&) const = default;

 private:
  std::string name_;
  std::map<TermKey, Term> terms_;
};

// Term-list file format: one term per line, optional tab-separated second
// column with a source label, '#' comments ignored.
std::string render_termlist(const TermList& list);

}  // namespace termex

#endif  // TERMEX_TERMLIST_HPP_
