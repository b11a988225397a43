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


// Command-line front end. run() never writes partial output: stdout is only
// filled when the exit code is 0 or 1.

#ifndef EXODUS_CLI_H_
#define EXODUS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace exodus::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInputError = 2,
  kCapExceeded = 3,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace exodus::cli

#endif  // EXODUS_CLI_H_
