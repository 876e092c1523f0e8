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

#include "termex/version.hpp"

#include "termex/digest.hpp"
#include "termex/normalize.hpp"

#ifndef TERMEX_BUILD_HASH
#define TERMEX_BUILD_HASH "unknown"
#endif

namespace termex {

const char* build_hash() { return TERMEX_BUILD_HASH; }

const std::string& default_stopwords_hash() {
  static const std::string kHash = [] {
    std::string joined;
    for (const auto& w : Normalizer::builtin_stopwords()) {
      joined += w;
      joined += '\n';
    }
    return sha256_hex(joined);
  }();
  return kHash;
}

}  // namespace termex
