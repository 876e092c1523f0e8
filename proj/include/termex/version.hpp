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

#ifndef TERMEX_VERSION_HPP_
#define TERMEX_VERSION_HPP_

#include <string>

namespace termex {

inline constexpr const char* kVersion = "0.1.0";

// Short source revision baked in at configure time ("unknown" outside git).
const char* build_hash();

// SHA-256 of the built-in stop-word list, one word per line. Together with
// the version and build hash this pins a run's normalization behavior.
const std::string& default_stopwords_hash();

}  // namespace termex

#endif  // TERMEX_VERSION_HPP_
