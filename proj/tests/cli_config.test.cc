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

#include <numbers>

#include "gtest/gtest.h"

using namespace qfield;
using namespace qfield::cli;

namespace {

const char *kMinimalFringe = R"({
  "experiment": "fringe",
  "geometry": {"wavelength": 500e-9, "slits": [[-5e-6, 0], [5e-6, 0]], "screen_z": 1.0},
  "scan": {"x_min": -0.025, "x_max": 0.025, "n_points": 101}
})";

std::string field_of(const std::string &text) {
    try {
        parse_config(text);
    } catch (const ConfigError &e) {
        return e.field();
    }
    return "<accepted>";
}

std::string message_of(const std::string &text) {
    try {
        parse_config(text);
    } catch (const ConfigError &e) {
        return e.what();
    }
    return "<accepted>";
}

}  // namespace

TEST(cli_config, minimal_fringe_round_trip) {
    auto cfg = parse_config(kMinimalFringe);
    EXPECT_EQ(cfg.experiment, Experiment::fringe);
    ASSERT_TRUE(cfg.geometry.has_value());
    EXPECT_DOUBLE_EQ(cfg.geometry->wavenumber(), 2 * std::numbers::pi / 500e-9);
    ASSERT_EQ(cfg.geometry->slits().size(), 2u);
    EXPECT_EQ(cfg.geometry->slits()[1].x, 5e-6);
    EXPECT_EQ(cfg.geometry->screen_z(), 1.0);
    EXPECT_EQ(cfg.geometry->source().z, -1.0);
    EXPECT_EQ(cfg.position_scan->n_points, 101u);
    EXPECT_EQ(cfg.fringe_mode, FringeMode::exact);
    EXPECT_EQ(cfg.output.format, OutputFormat::csv);
    EXPECT_FALSE(cfg.output.path.has_value());
    EXPECT_FALSE(cfg.source_state.has_value());
}

TEST(cli_config, defaults_for_qubit) {
    auto cfg = parse_config(R"({"experiment": "qubit", "scan": {"t_max": 6.28, "n_points": 5}})");
    ASSERT_TRUE(cfg.qubit.has_value());
    EXPECT_EQ(cfg.qubit->cutoff, 16u);
    EXPECT_EQ(cfg.qubit->omega, 1.0);
    EXPECT_EQ(cfg.time_scan->n_points, 5u);
}

TEST(cli_config, n_points_one_names_the_field) {
    EXPECT_EQ(field_of(R"({"experiment": "qubit", "scan": {"t_max": 1.0, "n_points": 1}})"), "scan.n_points");
    std::string bad = kMinimalFringe;
    bad.replace(bad.find("101"), 3, "1");
    EXPECT_EQ(field_of(bad), "scan.n_points");
}

TEST(cli_config, unknown_key_suggests_neighbor) {
    std::string bad = kMinimalFringe;
    bad.replace(bad.find("\"slits\""), 7, "\"slitz\"");
    EXPECT_EQ(field_of(bad), "geometry.slitz");
    EXPECT_NE(message_of(bad).find("did you mean 'slits'"), std::string::npos);

    std::string far = R"({"experiment": "verify", "zzzzzz": 1})";
    EXPECT_EQ(field_of(far), "zzzzzz");
    EXPECT_EQ(message_of(far).find("did you mean"), std::string::npos);
    EXPECT_NE(message_of(R"({"experiment": "verify", "outpt": {}})").find("'output'"), std::string::npos);
}

TEST(cli_config, malformed_json_reports_line_and_column) {
    try {
        parse_config("{\n  \"experiment\": \"verify\",\n  oops\n}");
        FAIL() << "accepted malformed JSON";
    } catch (const ConfigError &e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_EQ(e.column(), 3u);
        EXPECT_NE(std::string(e.what()).find("line 3, column 3"), std::string::npos);
    }
}

TEST(cli_config, named_field_validation) {
    EXPECT_EQ(field_of(R"({"experiment": "maybe"})"), "experiment");
    EXPECT_EQ(field_of(R"({})"), "experiment");
    EXPECT_EQ(field_of("[1, 2]"), "config");

    std::string negative_screen = kMinimalFringe;
    negative_screen.replace(negative_screen.find("1.0}"), 3, "-1.0");
    EXPECT_EQ(field_of(negative_screen), "geometry.screen_z");

    std::string zero_wavelength = kMinimalFringe;
    zero_wavelength.replace(zero_wavelength.find("500e-9"), 6, "0");
    EXPECT_EQ(field_of(zero_wavelength), "geometry.wavelength");

    std::string both = kMinimalFringe;
    both.replace(both.find("\"wavelength\""), 0, "\"k\": 1e7, ");
    EXPECT_EQ(field_of(both), "geometry.wavelength");

    std::string source_behind = kMinimalFringe;
    source_behind.replace(source_behind.find("\"slits\""), 0, "\"source\": [0, 2], ");
    EXPECT_EQ(field_of(source_behind), "geometry.source");

    std::string coincident = kMinimalFringe;
    coincident.replace(coincident.find("-5e-6"), 5, "5e-6");
    EXPECT_EQ(field_of(coincident), "geometry.slits");

    std::string reversed = kMinimalFringe;
    reversed.replace(reversed.find("-0.025"), 6, "0.030");
    EXPECT_EQ(field_of(reversed), "scan.x_max");

    EXPECT_EQ(field_of(R"({"experiment": "qubit", "qubit": {"cutoff": 1}, "scan": {"t_max": 1, "n_points": 3}})"),
              "qubit.cutoff");
    EXPECT_EQ(field_of(R"({"experiment": "qubit", "scan": {"t_max": 0, "n_points": 3}})"), "scan.t_max");
    EXPECT_EQ(field_of(R"({"experiment": "qubit", "scan": {"t_max": 1, "n_points": 2.5}})"), "scan.n_points");
    EXPECT_EQ(field_of(R"({"experiment": "verify", "output": {"format": "xml"}})"), "output.format");
    EXPECT_EQ(field_of(R"({"experiment": "verify", "scan": {}})"), "scan");
}

TEST(cli_config, source_states) {
    auto with_source = [](const std::string &src) {
        std::string text = kMinimalFringe;
        text.replace(text.rfind('}'), 0, ", \"source_state\": " + src);
        return text;
    };
    auto fock = parse_config(with_source(R"({"kind": "fock", "n": 40})"));
    EXPECT_EQ(fock.source_state->kind, SourceKind::fock);
    EXPECT_EQ(fock.source_state->cutoff, 41u);
    EXPECT_NEAR(expectation(fock.source_state->build(), number_op(FockSpace::bosonic(41), 0)).real(), 40.0, 1e-12);

    auto coh = parse_config(with_source(R"({"kind": "coherent", "alpha": [0.6, -0.8]})"));
    EXPECT_EQ(coh.source_state->alpha, Complex(0.6, -0.8));
    EXPECT_EQ(coh.source_state->cutoff, 32u);

    auto th = parse_config(with_source(R"({"kind": "thermal", "mean": 0.25, "cutoff": 64})"));
    EXPECT_EQ(th.source_state->mean, 0.25);
    EXPECT_EQ(th.source_state->cutoff, 64u);

    EXPECT_EQ(field_of(with_source(R"({"kind": "fock", "n": 5, "cutoff": 5})")), "source_state.n");
    EXPECT_EQ(field_of(with_source(R"({"kind": "coherent", "alpha": 1, "mean": 2})")), "source_state.mean");
    EXPECT_EQ(field_of(with_source(R"({"kind": "squeezed"})")), "source_state.kind");
    EXPECT_EQ(field_of(with_source(R"({"kind": "thermal", "mean": -1})")), "source_state.mean");
}

TEST(cli_config, compare_accepts_one_target) {
    auto geo = parse_config(R"({"experiment": "compare",
        "geometry": {"wavelength": 5e-7, "slits": [-5e-6, 5e-6], "screen_z": 1},
        "scan": {"x_min": -0.01, "x_max": 0.01, "n_points": 3}})");
    EXPECT_EQ(geo.fringe_mode, FringeMode::far_field);
    EXPECT_EQ(geo.geometry->slits()[0].z, 0.0);
    auto qb = parse_config(R"({"experiment": "compare", "qubit": {"omega": 2}, "scan": {"t_max": 1, "n_points": 3}})");
    EXPECT_EQ(qb.qubit->omega, 2.0);
    EXPECT_EQ(field_of(R"({"experiment": "compare", "scan": {"t_max": 1, "n_points": 3}})"), "geometry");
}

TEST(cli_config, load_missing_file) { EXPECT_THROW(load_config("/nonexistent/qfield.json"), ConfigIoError); }
