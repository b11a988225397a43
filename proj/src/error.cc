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

#include "exodus/error.h"

#include <cstdlib>
#include <sstream>

namespace exodus {

void throw_cap(const std::string& what, std::size_t limit) {
  throw CapExceeded(what + " exceeds cap of " + std::to_string(limit));
}

Caps Caps::parse(const std::string& spec) { return parse(spec, Caps()); }

Caps Caps::parse(const std::string& spec, Caps base) {
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw InputError("caps: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    char* end = nullptr;
    const unsigned long long n = std::strtoull(value.c_str(), &end, 10);
    if (value.empty() || *end != '\0' || n == 0)
      throw InputError("caps: '" + key + "' needs a positive integer");
    if (key == "objects") {
      base.max_objects = n;
    } else if (key == "morphisms") {
      base.max_morphisms = n;
    } else if (key == "word") {
      base.max_word_length = n;
    } else if (key == "reps") {
      base.max_reps = n;
    } else {
      throw InputError("caps: unknown key '" + key + "'");
    }
  }
  return base;
}

Caps Caps::from_env() {
  const char* env = std::getenv("EXODUS_CAPS");
  if (env == nullptr) return Caps{};
  return parse(env);
}

}  // namespace exodus
