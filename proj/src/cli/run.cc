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

#include "qfield/cli/run.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qfield/cli/serialize.h"
#include "qfield/diffraction.h"
#include "qfield/errors.h"
#include "qfield/oracle.h"
#include "qfield/schwinger.h"
#include "qfield/verification.h"

namespace qfield::cli {

namespace {

std::vector<double> time_grid(const TimeScan &scan) { return uniform_grid(0.0, scan.t_max, scan.n_points); }

FringeTable run_fringe(const RunConfig &config, std::ostream &diagnostics) {
    const auto &scan = *config.position_scan;
    if (!config.source_state) {
        return fringe_scan(*config.geometry, scan.x_min, scan.x_max, scan.n_points, config.fringe_mode);
    }
    const QuantumState state = config.source_state->build();
    if (state.truncation_warning()) {
        diagnostics << "warning: source state loses " << state.truncation_loss()
                    << " of its norm to the Fock cutoff; raise source_state.cutoff\n";
    }
    return fringe_scan(*config.geometry, scan.x_min, scan.x_max, scan.n_points, config.fringe_mode, state);
}

std::vector<TimeRow> run_qubit(const RunConfig &config) {
    const SchwingerModel model(*config.qubit);
    std::vector<TimeRow> rows;
    for (double t : time_grid(*config.time_scan)) {
        rows.push_back({t, transition_probability(model, t)});
    }
    return rows;
}

CompareTable run_compare(const RunConfig &config) {
    CompareTable table;
    auto add = [&](double c, double h, double o) {
        const double dev = std::abs(h - o);
        table.rows.push_back({c, h, o, dev});
        table.max_deviation = std::max(table.max_deviation, dev);
    };
    if (config.geometry) {
        table.coordinate_name = "x_D";
        const auto &scan = *config.position_scan;
        for (double x : uniform_grid(scan.x_min, scan.x_max, scan.n_points)) {
            add(x, single_photon_fringe(*config.geometry, x, FringeMode::far_field),
                slit_mode_oracle(*config.geometry, x));
        }
    } else {
        table.coordinate_name = "t";
        const SchwingerModel model(*config.qubit);
        for (double t : time_grid(*config.time_scan)) {
            add(t, transition_probability(model, t), transition_probability_oracle(*config.qubit, t));
        }
    }
    return table;
}

}  // namespace

Artifact render(const RunConfig &config, std::ostream &diagnostics) {
    const OutputFormat format = config.output.format;
    switch (config.experiment) {
    case Experiment::fringe:
        return {serialize(run_fringe(config, diagnostics), format)};
    case Experiment::qubit:
        return {serialize(run_qubit(config), format)};
    case Experiment::compare:
        return {serialize(run_compare(config), format)};
    case Experiment::verify: {
        auto checks = run_verification_suite();
        for (const auto &c : checks) {
            if (!c.pass) {
                diagnostics << "check failed: " << c.name << " (deviation " << c.max_deviation << ", tolerance "
                            << c.tolerance << ")\n";
            }
        }
        return {serialize(checks, format), all_passed(checks)};
    }
    }
    throw std::logic_error("unhandled experiment");
}

int run(const RunConfig &config, std::ostream &out, std::ostream &diagnostics) {
    Artifact artifact;
    try {
        artifact = render(config, diagnostics);
    } catch (const ComputationError &e) {
        diagnostics << "computation error: " << e.what() << "\n";
        return kExitComputation;
    }

    if (config.output.path) {
        std::ofstream file(*config.output.path, std::ios::binary | std::ios::trunc);
        if (!file) {
            diagnostics << "I/O error: cannot open '" << *config.output.path << "' for writing\n";
            return kExitIo;
        }
        file << artifact.text;
        file.close();
        if (!file) {
            diagnostics << "I/O error: failed writing '" << *config.output.path << "'\n";
            return kExitIo;
        }
    } else {
        out << artifact.text << std::flush;
        if (!out) {
            diagnostics << "I/O error: failed writing to standard output\n";
            return kExitIo;
        }
    }
    return artifact.all_passed ? kExitOk : kExitChecksFailed;
}

int run_main(int argc, char **argv) {
    CLI::App app{"qfield: operator-picture interference and qubit simulations"};
    std::string config_path;
    std::optional<std::string> output_path;
    std::optional<std::string> format;
    bool far_field = false;
    long long seed = 0;
    app.add_option("--config", config_path, "JSON run configuration")->required();
    app.add_option("--output", output_path, "Output file (overrides output.path)");
    app.add_option("--format", format, "Output format (overrides output.format)")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_flag("--far-field", far_field, "Use the far-field fringe law for fringe runs");
    app.add_option("--seed", seed, "Reserved; accepted and ignored");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitConfig;
    }

    RunConfig config;
    try {
        config = load_config(config_path);
    } catch (const ConfigIoError &e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
    if (output_path) {
        config.output.path = *output_path;
    }
    if (format) {
        config.output.format = *format == "json" ? OutputFormat::json : OutputFormat::csv;
    }
    if (far_field && config.experiment == Experiment::fringe) {
        config.fringe_mode = FringeMode::far_field;
    }
    return run(config, std::cout, std::cerr);
}

}  // namespace qfield::cli
