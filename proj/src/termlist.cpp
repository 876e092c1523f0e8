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

#include "termex/termlist.hpp"

#include <stdexcept>

namespace termex {

TermList::TermList(std::string name) : name_(std::move(name)) {
  if (name_.empty()) throw std::invalid_argument("term list name is empty");
}

const Term* TermList::find(const TermKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? nullptr : &it->second;
}

bool TermList::insert(std::string surface, TermKey key, std::string source) {
  Term term;
  term.surface = std::move(surface);
  term.key = std::move(key);
  term.sources.insert(std::move(source));
  return insert(std::move(term));
}

bool TermList::insert(Term term) {
  if (term.key.empty()) throw std::invalid_argument("empty term key");
  if (term.sources.empty())
    throw std::invalid_argument("term without provenance");
  auto [it, added] = terms_.try_emplace(term.key, std::move(term));
  if (!added) {
    // First surface wins; provenance accumulates.
    for (const auto& s : term.sources) it->second.sources.insert(s);
  }
  return added;
}

std::vector<TermKey> TermList::keys() const {
  std::vector<TermKey> out;
  out.reserve(terms_.size());
  for (const auto& [key, term] : terms_) out.push_back(key);
  return out;
}

std::string render_termlist(const TermList& list) {
  // Canonical keys, not surfaces: normalization is idempotent, so a written
  // list re-imports to exactly the same key set.
  std::string out;
  for (const auto& [key, term] : list.terms()) {
    out += key;
    if (!term.sources.empty()) {
      out += '\t';
      bool first = true;
      for (const auto& s : term.sources) {
        if (!first) out += ',';
        out += s;
        first = false;
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace termex
