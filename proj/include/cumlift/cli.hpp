// Copyright 2026 The cumlift Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <ostream>
#include <span>
#include <string>

namespace cumlift {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitMalformedInput = 2,
  kExitInfeasible = 3,
  kExitVerificationFailed = 4,
};

/// Entry point of the `cumlift` tool; `args` excludes the program name.
/// Primary output goes to `out` (unless --out is given), logs to `err`.
int CliMain(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cumlift
