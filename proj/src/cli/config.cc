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

#include "qfield/cli/config.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <numbers>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace qfield::cli {

using nlohmann::json;

ConfigError::ConfigError(std::string field, const std::string &message, std::size_t line, std::size_t column)
    : std::runtime_error(field.empty() ? message : field + ": " + message),
      field_(std::move(field)),
      line_(line),
      column_(column) {}

namespace {

std::size_t edit_distance(std::string_view a, std::string_view b) {
    std::vector<std::size_t> row(b.size() + 1);
    for (std::size_t j = 0; j <= b.size(); ++j) {
        row[j] = j;
    }
    for (std::size_t i = 1; i <= a.size(); ++i) {
        std::size_t diag = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            std::size_t up = row[j];
            row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
            diag = up;
        }
    }
    return row[b.size()];
}

std::string join(const std::string &prefix, std::string_view key) {
    return prefix.empty() ? std::string(key) : prefix + "." + std::string(key);
}

const json &require_object(const json &j, const std::string &path) {
    if (!j.is_object()) {
        throw ConfigError(path.empty() ? "config" : path, "must be a JSON object");
    }
    return j;
}

void reject_unknown(const json &obj, const std::string &path, std::initializer_list<std::string_view> known) {
    for (const auto &[key, value] : obj.items()) {
        if (std::find(known.begin(), known.end(), key) != known.end()) {
            continue;
        }
        std::string message = "unknown key";
        for (std::string_view candidate : known) {
            if (edit_distance(key, candidate) == 1) {
                message += "; did you mean '" + std::string(candidate) + "'?";
                break;
            }
        }
        throw ConfigError(join(path, key), message);
    }
}

double get_real(const json &j, const std::string &path) {
    if (!j.is_number()) {
        throw ConfigError(path, "must be a number");
    }
    double v = j.get<double>();
    if (!std::isfinite(v)) {
        throw ConfigError(path, "must be finite");
    }
    return v;
}

double get_positive(const json &j, const std::string &path) {
    double v = get_real(j, path);
    if (!(v > 0.0)) {
        throw ConfigError(path, "must be > 0");
    }
    return v;
}

std::size_t get_count(const json &j, const std::string &path) {
    if (!j.is_number_integer()) {
        throw ConfigError(path, "must be an integer");
    }
    if (j.is_number_unsigned()) {
        return j.get<std::size_t>();
    }
    auto v = j.get<long long>();
    if (v < 0) {
        throw ConfigError(path, "must be non-negative");
    }
    return static_cast<std::size_t>(v);
}

std::size_t get_n_points(const json &j, const std::string &path) {
    std::size_t n = get_count(j, path);
    if (n < 2) {
        throw ConfigError(path, "must be >= 2");
    }
    return n;
}

const json &member(const json &obj, const std::string &path, std::string_view key) {
    auto it = obj.find(std::string(key));
    if (it == obj.end()) {
        throw ConfigError(join(path, key), "is required");
    }
    return *it;
}

Point2 get_point(const json &j, const std::string &path) {
    if (!j.is_array() || j.size() != 2) {
        throw ConfigError(path, "must be a [x, z] pair");
    }
    return {get_real(j[0], path + "[0]"), get_real(j[1], path + "[1]")};
}

SlitGeometry parse_geometry(const json &j) {
    const std::string path = "geometry";
    require_object(j, path);
    reject_unknown(j, path, {"wavelength", "k", "source", "slits", "screen_z"});

    const bool has_wavelength = j.contains("wavelength");
    const bool has_k = j.contains("k");
    if (has_wavelength == has_k) {
        throw ConfigError("geometry.wavelength", "give exactly one of 'wavelength' or 'k'");
    }
    const double k = has_k ? get_positive(j["k"], "geometry.k")
                           : 2.0 * std::numbers::pi / get_positive(j["wavelength"], "geometry.wavelength");

    Point2 source{0.0, -1.0};
    if (j.contains("source")) {
        source = get_point(j["source"], "geometry.source");
    }
    const double screen_z = get_positive(member(j, path, "screen_z"), "geometry.screen_z");

    const json &slits_json = member(j, path, "slits");
    if (!slits_json.is_array() || slits_json.empty()) {
        throw ConfigError("geometry.slits", "must be a non-empty array");
    }
    std::vector<Point2> slits;
    for (std::size_t i = 0; i < slits_json.size(); ++i) {
        const std::string slit_path = "geometry.slits[" + std::to_string(i) + "]";
        // A bare number is a slit at (x, 0).
        if (slits_json[i].is_number()) {
            slits.push_back({get_real(slits_json[i], slit_path), 0.0});
        } else {
            slits.push_back(get_point(slits_json[i], slit_path));
        }
    }

    try {
        return SlitGeometry(source, std::move(slits), screen_z, k);
    } catch (const std::invalid_argument &e) {
        std::string what = e.what();
        auto colon = what.find(':');
        if (colon == std::string::npos) {
            throw ConfigError(path, what);
        }
        std::string field = what.substr(0, colon);
        if (field == "k" && has_wavelength) {
            field = "wavelength";
        }
        throw ConfigError(join(path, field), what.substr(colon + 2));
    }
}

SourceStateConfig parse_source_state(const json &j) {
    const std::string path = "source_state";
    require_object(j, path);
    reject_unknown(j, path, {"kind", "n", "alpha", "mean", "cutoff"});
    const json &kind = member(j, path, "kind");
    if (!kind.is_string()) {
        throw ConfigError("source_state.kind", "must be one of fock, coherent, thermal");
    }
    SourceStateConfig s;
    const std::string name = kind.get<std::string>();
    auto forbid = [&](std::string_view key) {
        if (j.contains(std::string(key))) {
            throw ConfigError(join(path, key), "not used by kind '" + name + "'");
        }
    };
    if (name == "fock") {
        s.kind = SourceKind::fock;
        s.n = get_count(member(j, path, "n"), "source_state.n");
        forbid("alpha");
        forbid("mean");
    } else if (name == "coherent") {
        s.kind = SourceKind::coherent;
        const json &a = member(j, path, "alpha");
        if (a.is_number()) {
            s.alpha = get_real(a, "source_state.alpha");
        } else if (a.is_array() && a.size() == 2) {
            s.alpha = {get_real(a[0], "source_state.alpha[0]"), get_real(a[1], "source_state.alpha[1]")};
        } else {
            throw ConfigError("source_state.alpha", "must be a number or a [re, im] pair");
        }
        forbid("n");
        forbid("mean");
    } else if (name == "thermal") {
        s.kind = SourceKind::thermal;
        s.mean = get_real(member(j, path, "mean"), "source_state.mean");
        if (s.mean < 0.0) {
            throw ConfigError("source_state.mean", "must be >= 0");
        }
        forbid("n");
        forbid("alpha");
    } else {
        throw ConfigError("source_state.kind", "must be one of fock, coherent, thermal");
    }

    s.cutoff = j.contains("cutoff") ? get_count(j["cutoff"], "source_state.cutoff") : 32;
    if (s.cutoff < 2) {
        throw ConfigError("source_state.cutoff", "must be >= 2");
    }
    if (s.kind == SourceKind::fock && s.n >= s.cutoff) {
        if (j.contains("cutoff")) {
            throw ConfigError("source_state.n", "must be below source_state.cutoff");
        }
        s.cutoff = s.n + 1;
    }
    return s;
}

PositionScan parse_position_scan(const json &j, FringeMode &mode) {
    const std::string path = "scan";
    reject_unknown(j, path, {"x_min", "x_max", "n_points", "mode"});
    PositionScan s;
    s.x_min = get_real(member(j, path, "x_min"), "scan.x_min");
    s.x_max = get_real(member(j, path, "x_max"), "scan.x_max");
    s.n_points = get_n_points(member(j, path, "n_points"), "scan.n_points");
    if (!(s.x_max > s.x_min)) {
        throw ConfigError("scan.x_max", "must exceed scan.x_min");
    }
    if (j.contains("mode")) {
        const json &m = j["mode"];
        if (m == "exact") {
            mode = FringeMode::exact;
        } else if (m == "far_field") {
            mode = FringeMode::far_field;
        } else {
            throw ConfigError("scan.mode", "must be 'exact' or 'far_field'");
        }
    }
    return s;
}

TimeScan parse_time_scan(const json &j) {
    const std::string path = "scan";
    reject_unknown(j, path, {"t_max", "n_points"});
    TimeScan s;
    s.t_max = get_positive(member(j, path, "t_max"), "scan.t_max");
    s.n_points = get_n_points(member(j, path, "n_points"), "scan.n_points");
    return s;
}

QubitModelParams parse_qubit(const json &j) {
    const std::string path = "qubit";
    require_object(j, path);
    reject_unknown(j, path, {"omega", "cutoff"});
    QubitModelParams q;
    if (j.contains("omega")) {
        q.omega = get_real(j["omega"], "qubit.omega");
    }
    if (j.contains("cutoff")) {
        q.cutoff = get_count(j["cutoff"], "qubit.cutoff");
    }
    try {
        q.validate();
    } catch (const std::invalid_argument &e) {
        std::string what = e.what();
        auto colon = what.find(':');
        throw ConfigError(what.substr(0, colon), what.substr(colon + 2));
    }
    return q;
}

OutputConfig parse_output(const json &j) {
    const std::string path = "output";
    require_object(j, path);
    reject_unknown(j, path, {"path", "format"});
    OutputConfig o;
    if (j.contains("path")) {
        if (!j["path"].is_string() || j["path"].get<std::string>().empty()) {
            throw ConfigError("output.path", "must be a non-empty string");
        }
        o.path = j["path"].get<std::string>();
    }
    if (j.contains("format")) {
        if (j["format"] == "csv") {
            o.format = OutputFormat::csv;
        } else if (j["format"] == "json") {
            o.format = OutputFormat::json;
        } else {
            throw ConfigError("output.format", "must be 'csv' or 'json'");
        }
    }
    return o;
}

void forbid_key(const json &root, std::string_view key, Experiment e) {
    if (root.contains(std::string(key))) {
        throw ConfigError(std::string(key), "not used by experiment '" + std::string(experiment_name(e)) + "'");
    }
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    // nlohmann reports the 1-based byte at which parsing stopped.
    std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

}  // namespace

QuantumState SourceStateConfig::build() const {
    const FockSpace space = FockSpace::bosonic(cutoff);
    switch (kind) {
    case SourceKind::fock:
        return fock_state(n, space);
    case SourceKind::coherent:
        return coherent_state(alpha, space);
    case SourceKind::thermal:
        return thermal_state(mean, space);
    }
    throw std::logic_error("unhandled source kind");
}

std::string_view experiment_name(Experiment e) {
    switch (e) {
    case Experiment::fringe:
        return "fringe";
    case Experiment::qubit:
        return "qubit";
    case Experiment::verify:
        return "verify";
    case Experiment::compare:
        return "compare";
    }
    return "?";
}

RunConfig parse_config(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        auto [line, column] = line_column(text, e.byte);
        std::ostringstream msg;
        msg << "malformed JSON at line " << line << ", column " << column;
        throw ConfigError("", msg.str(), line, column);
    }
    require_object(root, "");
    reject_unknown(root, "", {"experiment", "geometry", "source_state", "scan", "qubit", "output"});

    RunConfig cfg;
    const json &exp = member(root, "", "experiment");
    if (exp == "fringe") {
        cfg.experiment = Experiment::fringe;
    } else if (exp == "qubit") {
        cfg.experiment = Experiment::qubit;
    } else if (exp == "verify") {
        cfg.experiment = Experiment::verify;
    } else if (exp == "compare") {
        cfg.experiment = Experiment::compare;
    } else {
        throw ConfigError("experiment", "must be one of fringe, qubit, verify, compare");
    }

    if (root.contains("output")) {
        cfg.output = parse_output(root["output"]);
    }

    const auto parse_scan_object = [&]() -> const json & {
        const json &scan = member(root, "", "scan");
        return require_object(scan, "scan");
    };

    switch (cfg.experiment) {
    case Experiment::fringe:
        cfg.geometry = parse_geometry(member(root, "", "geometry"));
        cfg.position_scan = parse_position_scan(parse_scan_object(), cfg.fringe_mode);
        if (root.contains("source_state")) {
            cfg.source_state = parse_source_state(root["source_state"]);
        }
        forbid_key(root, "qubit", cfg.experiment);
        break;
    case Experiment::qubit:
        cfg.qubit = root.contains("qubit") ? parse_qubit(root["qubit"]) : QubitModelParams{};
        cfg.time_scan = parse_time_scan(parse_scan_object());
        forbid_key(root, "geometry", cfg.experiment);
        forbid_key(root, "source_state", cfg.experiment);
        break;
    case Experiment::compare:
        if (root.contains("geometry") == root.contains("qubit")) {
            throw ConfigError("geometry", "compare needs exactly one of 'geometry' or 'qubit'");
        }
        forbid_key(root, "source_state", cfg.experiment);
        if (root.contains("geometry")) {
            cfg.geometry = parse_geometry(root["geometry"]);
            if (parse_scan_object().contains("mode")) {
                throw ConfigError("scan.mode", "not used by experiment 'compare'");
            }
            cfg.position_scan = parse_position_scan(parse_scan_object(), cfg.fringe_mode);
            cfg.fringe_mode = FringeMode::far_field;
        } else {
            cfg.qubit = parse_qubit(root["qubit"]);
            cfg.time_scan = parse_time_scan(parse_scan_object());
        }
        break;
    case Experiment::verify:
        for (std::string_view key : {"geometry", "source_state", "scan", "qubit"}) {
            forbid_key(root, key, cfg.experiment);
        }
        break;
    }
    return cfg;
}

RunConfig load_config(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigIoError("cannot open config file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw ConfigIoError("cannot read config file '" + path + "'");
    }
    return parse_config(buf.str());
}

}  // namespace qfield::cli
