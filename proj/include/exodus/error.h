/* Copyright 2026 The Exodus Authors. All Rights Reserved.

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

#ifndef EXODUS_ERROR_H_
#define EXODUS_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace exodus {

// Malformed input: dangling ids, ill-typed expressions, parameters out of
// range. Maps to CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A size guard tripped. Maps to CLI exit code 3.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Outcome of an exhaustive check. Empty means the checked structure satisfies
// every law that was tested.
struct Report {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string v) { violations.push_back(std::move(v)); }
  void merge(const Report& other, const std::string& prefix = "") {
    for (const auto& v : other.violations) violations.push_back(prefix + v);
  }
};

// Size guards shared by every enumerating operation.
struct Caps {
  std::size_t max_objects = 20000;
  std::size_t max_morphisms = 100000;
  std::size_t max_word_length = 16;
  std::size_t max_reps = 20000;

  // Reads overrides from a "key=value,key=value" string (keys: objects,
  // morphisms, word, reps). Throws InputError on unknown keys or bad numbers.
  static Caps parse(const std::string& spec, Caps base);
  static Caps parse(const std::string& spec);
  // Defaults overridden by the EXODUS_CAPS environment variable, if set.
  static Caps from_env();
};

[[noreturn]] void throw_cap(const std::string& what, std::size_t limit);

}  // namespace exodus

#endif  // EXODUS_ERROR_H_
