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

#include "qfield/cli/serialize.h"

#include <cmath>
#include <stdexcept>

#include "fmt/format.h"
#include "qfield/errors.h"

namespace qfield::cli {

std::string format_real(double v) {
    if (!std::isfinite(v)) {
        throw ComputationError("cannot serialize a non-finite value");
    }
    if (v == 0.0) {
        v = 0.0;  // drop the sign of negative zero
    }
    return fmt::format("{:.17g}", v);
}

namespace {

std::string json_string(const std::string &s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out + "\"";
}

template <typename Row, typename Fn>
std::string json_array(const std::vector<Row> &rows, Fn &&object_body) {
    std::string out = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out += i == 0 ? "\n  {" : ",\n  {";
        out += object_body(rows[i]);
        out += "}";
    }
    out += rows.empty() ? "]" : "\n]";
    return out;
}

}  // namespace

std::string serialize(const FringeTable &table, OutputFormat format) {
    if (format == OutputFormat::csv) {
        std::string out = "x_D,probability,raw_intensity\n";
        for (const auto &r : table.rows) {
            out += fmt::format("{},{},{}\n", format_real(r.x_detector), format_real(r.probability),
                               format_real(r.raw_intensity));
        }
        return out;
    }
    return json_array(table.rows,
                      [](const FringeRow &r) {
                          return fmt::format("\"x_D\": {}, \"probability\": {}, \"raw_intensity\": {}",
                                             format_real(r.x_detector), format_real(r.probability),
                                             format_real(r.raw_intensity));
                      }) +
           "\n";
}

std::string serialize(const std::vector<TimeRow> &rows, OutputFormat format) {
    if (format == OutputFormat::csv) {
        std::string out = "t,probability\n";
        for (const auto &r : rows) {
            out += fmt::format("{},{}\n", format_real(r.t), format_real(r.probability));
        }
        return out;
    }
    return json_array(rows,
                      [](const TimeRow &r) {
                          return fmt::format("\"t\": {}, \"probability\": {}", format_real(r.t),
                                             format_real(r.probability));
                      }) +
           "\n";
}

std::string serialize(const CompareTable &table, OutputFormat format) {
    if (format == OutputFormat::csv) {
        std::string out = table.coordinate_name + ",heisenberg,oracle,deviation\n";
        for (const auto &r : table.rows) {
            out += fmt::format("{},{},{},{}\n", format_real(r.coordinate), format_real(r.heisenberg),
                               format_real(r.oracle), format_real(r.deviation));
        }
        out += "# max_deviation," + format_real(table.max_deviation) + "\n";
        return out;
    }
    const std::string key = json_string(table.coordinate_name);
    std::string rows = json_array(table.rows, [&](const CompareRow &r) {
        return fmt::format("{}: {}, \"heisenberg\": {}, \"oracle\": {}, \"deviation\": {}", key,
                           format_real(r.coordinate), format_real(r.heisenberg), format_real(r.oracle),
                           format_real(r.deviation));
    });
    return fmt::format("{{\"max_deviation\": {}, \"rows\": {}}}\n", format_real(table.max_deviation), rows);
}

std::string serialize(const std::vector<CheckResult> &checks, OutputFormat format) {
    bool all = all_passed(checks);
    if (format == OutputFormat::csv) {
        std::string out = "name,max_deviation,tolerance,pass\n";
        for (const auto &c : checks) {
            out += fmt::format("{},{},{},{}\n", c.name, format_real(c.max_deviation), format_real(c.tolerance),
                               c.pass ? "true" : "false");
        }
        return out;
    }
    std::string rows = json_array(checks, [](const CheckResult &c) {
        return fmt::format("\"name\": {}, \"max_deviation\": {}, \"tolerance\": {}, \"pass\": {}", json_string(c.name),
                           format_real(c.max_deviation), format_real(c.tolerance), c.pass ? "true" : "false");
    });
    return fmt::format("{{\"all_passed\": {}, \"checks\": {}}}\n", all ? "true" : "false", rows);
}

}  // namespace qfield::cli
