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

#ifndef QFIELD_CLI_CONFIG_H
#define QFIELD_CLI_CONFIG_H

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qfield/diffraction.h"
#include "qfield/fock.h"
#include "qfield/schwinger.h"

namespace qfield::cli {

enum class Experiment { fringe, qubit, verify, compare };
enum class OutputFormat { csv, json };

/// Thrown for malformed JSON (field is empty, line/column are set) or for a
/// value that breaks the schema (field holds the dotted key path).
class ConfigError : public std::runtime_error {
  public:
    ConfigError(std::string field, const std::string &message, std::size_t line = 0, std::size_t column = 0);

    const std::string &field() const { return field_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

  private:
    std::string field_;
    std::size_t line_;
    std::size_t column_;
};

/// Reading the config file itself failed.
class ConfigIoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class SourceKind { fock, coherent, thermal };

struct SourceStateConfig {
    SourceKind kind = SourceKind::fock;
    std::size_t n = 1;
    Complex alpha{0.0, 0.0};
    double mean = 0.0;
    std::size_t cutoff = 0;

    QuantumState build() const;
};

struct PositionScan {
    double x_min = 0.0;
    double x_max = 0.0;
    std::size_t n_points = 0;
};

struct TimeScan {
    double t_max = 0.0;
    std::size_t n_points = 0;
};

struct OutputConfig {
    std::optional<std::string> path;
    OutputFormat format = OutputFormat::csv;
};

struct RunConfig {
    Experiment experiment = Experiment::fringe;
    std::optional<SlitGeometry> geometry;
    std::optional<SourceStateConfig> source_state;
    std::optional<PositionScan> position_scan;
    std::optional<TimeScan> time_scan;
    std::optional<QubitModelParams> qubit;
    FringeMode fringe_mode = FringeMode::exact;
    OutputConfig output;
};

/// Strict parse: unknown keys are rejected, with a suggestion when a schema
/// key is one edit away.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string &path);

std::string_view experiment_name(Experiment e);

}  // namespace qfield::cli

#endif
