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

#ifndef QFIELD_VERIFICATION_H
#define QFIELD_VERIFICATION_H

#include <string>
#include <vector>

namespace qfield {

struct CheckResult {
    std::string name;
    double max_deviation;
    double tolerance;
    bool pass;
};

/// Every Heisenberg-picture observable paired with its oracle counterpart,
/// plus the algebraic invariants the pipelines rely on. Deterministic.
std::vector<CheckResult> run_verification_suite();

bool all_passed(const std::vector<CheckResult> &results);

}  // namespace qfield

#endif
