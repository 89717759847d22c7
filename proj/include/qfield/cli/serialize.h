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

#ifndef QFIELD_CLI_SERIALIZE_H
#define QFIELD_CLI_SERIALIZE_H

#include <string>
#include <vector>

#include "qfield/cli/config.h"
#include "qfield/diffraction.h"
#include "qfield/verification.h"

namespace qfield::cli {

/// Real numbers are printed with 17 significant digits. Throws
/// ComputationError on a non-finite value.
std::string format_real(double v);

struct TimeRow {
    double t;
    double probability;
};

struct CompareRow {
    double coordinate;
    double heisenberg;
    double oracle;
    double deviation;
};

struct CompareTable {
    std::string coordinate_name;
    std::vector<CompareRow> rows;
    double max_deviation = 0.0;
};

std::string serialize(const FringeTable &table, OutputFormat format);
std::string serialize(const std::vector<TimeRow> &rows, OutputFormat format);
std::string serialize(const CompareTable &table, OutputFormat format);
std::string serialize(const std::vector<CheckResult> &checks, OutputFormat format);

}  // namespace qfield::cli

#endif
