// Copyright 2026 The orthox Authors
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
#include <string>
#include <string_view>
#include <vector>

#include "orthox/lattice.hpp"

namespace orthox::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kInfeasible = 3,
  kInconclusive = 4,
};

/// "1,2,2", "[1, 2, 2]", "(-3,4)". Throws PreconditionError on bad input.
IntVector parse_vector(std::string_view text);

/// Runs one command line (args excludes the program name). Records go to
/// `out`, diagnostics and ORTHO_EXTEND_LOG traces to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace orthox::cli
