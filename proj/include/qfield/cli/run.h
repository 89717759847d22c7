// Copyright 2026 The qfield Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QFIELD_CLI_RUN_H
#define QFIELD_CLI_RUN_H

#include <optional>
#include <ostream>
#include <string>

#include "qfield/cli/config.h"

namespace qfield::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitChecksFailed = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitComputation = 4;

struct Artifact {
    std::string text;
    // False only for a verify run with a failing check.
    bool all_passed = true;
};

/// Compute the artifact for a validated config. Throws ComputationError
/// (including DegenerateGeometry) when the numbers cannot be produced.
Artifact render(const RunConfig &config, std::ostream &diagnostics);

/// Render and write to config.output.path, or to `out` when no path is set.
/// Returns one of the exit codes above.
int run(const RunConfig &config, std::ostream &out, std::ostream &diagnostics);

/// Full command-line entry point.
int run_main(int argc, char **argv);

}  // namespace qfield::cli

#endif
