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

#include "qfield/diffraction.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qfield/errors.h"

namespace qfield {

namespace {

void require_two_slits(const SlitGeometry &geom, const char *what) {
    if (geom.slits().size() != 2) {
        throw std::invalid_argument(std::string(what) + " is defined for exactly 2 slits, got " +
                                    std::to_string(geom.slits().size()));
    }
}

// |A - P_j| - |A - P_0| for slit points on z = 0, via
// (|A-P_j|^2 - |A-P_0|^2) / (|A-P_j| + |A-P_0|).
double leg_difference(double ax, double xj, double x0, double dj, double d0) {
    return (x0 - xj) * (2.0 * ax - xj - x0) / (dj + d0);
}

}  // namespace

SlitGeometry::SlitGeometry(Point2 source, std::vector<Point2> slits, double screen_z, double wavenumber)
    : source_(source), slits_(std::move(slits)), screen_z_(screen_z), wavenumber_(wavenumber) {
    if (!std::isfinite(source_.x) || !std::isfinite(source_.z) || !(source_.z < 0.0)) {
        throw std::invalid_argument("source: must be finite with z < 0");
    }
    if (!std::isfinite(screen_z_) || !(screen_z_ > 0.0)) {
        throw std::invalid_argument("screen_z: must be finite and > 0");
    }
    if (!std::isfinite(wavenumber_) || !(wavenumber_ > 0.0)) {
        throw std::invalid_argument("k: wavenumber must be finite and > 0");
    }
    if (slits_.empty()) {
        throw std::invalid_argument("slits: at least one slit is required");
    }
    for (std::size_t i = 0; i < slits_.size(); ++i) {
        if (!std::isfinite(slits_[i].x) || slits_[i].z != 0.0) {
            throw std::invalid_argument("slits: slit " + std::to_string(i) + " must be finite and lie on z = 0");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (slits_[j].x == slits_[i].x) {
                throw std::invalid_argument("slits: slits " + std::to_string(j) + " and " + std::to_string(i) +
                                            " coincide");
            }
        }
    }
}

SlitGeometry SlitGeometry::double_slit(double wavelength, double separation, double source_distance,
                                       double screen_distance) {
    if (!(wavelength > 0.0)) {
        throw std::invalid_argument("wavelength: must be > 0");
    }
    const double h = 0.5 * separation;
    return SlitGeometry({0.0, -source_distance}, {{-h, 0.0}, {h, 0.0}}, screen_distance,
                        2.0 * std::numbers::pi / wavelength);
}

double SlitGeometry::wavelength() const { return 2.0 * std::numbers::pi / wavenumber_; }

PathLengths path_lengths(const SlitGeometry &geom, double x_detector) {
    PathLengths p;
    p.source_to_slit.reserve(geom.slits().size());
    p.slit_to_detector.reserve(geom.slits().size());
    const Point2 src = geom.source();
    for (const Point2 &slit : geom.slits()) {
        p.source_to_slit.push_back(std::hypot(slit.x - src.x, slit.z - src.z));
        p.slit_to_detector.push_back(std::hypot(x_detector - slit.x, geom.screen_z() - slit.z));
    }
    return p;
}

std::vector<double> relative_paths(const SlitGeometry &geom, double x_detector) {
    const PathLengths p = path_lengths(geom, x_detector);
    const auto &slits = geom.slits();
    std::vector<double> rel(slits.size(), 0.0);
    const double x0 = slits[0].x;
    for (std::size_t j = 1; j < slits.size(); ++j) {
        const double xj = slits[j].x;
        rel[j] = leg_difference(geom.source().x, xj, x0, p.source_to_slit[j], p.source_to_slit[0]) +
                 leg_difference(x_detector, xj, x0, p.slit_to_detector[j], p.slit_to_detector[0]);
    }
    return rel;
}

TransferAmplitude transfer_amplitude(const SlitGeometry &geom, double x_detector) {
    if (!std::isfinite(x_detector)) {
        throw DegenerateGeometry("detector position is not finite");
    }
    const PathLengths p = path_lengths(geom, x_detector);
    for (std::size_t j = 0; j < p.source_to_slit.size(); ++j) {
        const double s = p.source_to_slit[j];
        const double r = p.slit_to_detector[j];
        if (!(s > 0.0) || !(r > 0.0) || !std::isfinite(s) || !std::isfinite(r)) {
            throw DegenerateGeometry("slit " + std::to_string(j) + " has a zero or non-finite propagation leg");
        }
    }
    const std::vector<double> rel = relative_paths(geom, x_detector);
    const double k = geom.wavenumber();
    // Common phase of slit 0, factored out so the interfering phases are
    // resolved from the small relative paths.
    const Complex common = std::polar(1.0, k * (p.source_to_slit[0] + p.slit_to_detector[0]));

    TransferAmplitude out{0.0, {}};
    out.per_slit_terms.reserve(rel.size());
    for (std::size_t j = 0; j < rel.size(); ++j) {
        const double weight = 1.0 / (p.source_to_slit[j] * p.slit_to_detector[j]);
        const Complex term = common * std::polar(weight, k * rel[j]);
        out.per_slit_terms.push_back(term);
        out.value += term;
    }
    if (!std::isfinite(out.value.real()) || !std::isfinite(out.value.imag())) {
        throw DegenerateGeometry("transfer amplitude is not finite");
    }
    return out;
}

double intensity_expectation(const QuantumState &source, const SlitGeometry &geom, double x_detector) {
    const auto space = FockSpace::bosonic(source.dimension());
    const double occupation = expectation(source, number_op(space, 0)).real();
    return std::norm(transfer_amplitude(geom, x_detector).value) * occupation;
}

double single_photon_fringe(const SlitGeometry &geom, double x_detector, FringeMode mode,
                            std::span<const double> normalization_grid) {
    require_two_slits(geom, "single_photon_fringe");
    if (mode == FringeMode::far_field) {
        // Evaluated for the degenerate-geometry check only.
        (void)transfer_amplitude(geom, x_detector);
        const double dl = relative_paths(geom, x_detector)[1];
        return 0.5 * (1.0 + std::cos(geom.wavenumber() * dl));
    }
    if (normalization_grid.empty()) {
        throw std::invalid_argument("exact fringe mode needs a normalization grid");
    }
    double peak = 0.0;
    for (double x : normalization_grid) {
        peak = std::max(peak, std::norm(transfer_amplitude(geom, x).value));
    }
    if (!(peak > 0.0)) {
        throw ComputationError("fringe intensity vanishes over the normalization grid");
    }
    return std::norm(transfer_amplitude(geom, x_detector).value) / peak;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t n_points) {
    if (n_points < 2) {
        throw std::invalid_argument("n_points: a scan needs at least 2 points");
    }
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo)) {
        throw std::invalid_argument("scan range must be finite with max > min");
    }
    std::vector<double> grid(n_points);
    const double span = hi - lo;
    const double last = static_cast<double>(n_points - 1);
    for (std::size_t i = 0; i < n_points; ++i) {
        grid[i] = lo + span * (static_cast<double>(i) / last);
    }
    grid.back() = hi;
    return grid;
}

namespace {

FringeTable scan_impl(const SlitGeometry &geom, double x_min, double x_max, std::size_t n_points, FringeMode mode,
                      const QuantumState *source) {
    require_two_slits(geom, "fringe_scan");
    const std::vector<double> grid = uniform_grid(x_min, x_max, n_points);
    FringeTable table;
    table.rows.reserve(grid.size());
    double peak = 0.0;
    for (double x : grid) {
        const double single = std::norm(transfer_amplitude(geom, x).value);
        peak = std::max(peak, single);
        const double raw = source != nullptr ? intensity_expectation(*source, geom, x) : single;
        const double p = mode == FringeMode::far_field ? single_photon_fringe(geom, x, mode) : single;
        table.rows.push_back({x, p, raw});
    }
    if (mode == FringeMode::exact) {
        if (!(peak > 0.0)) {
            throw ComputationError("fringe intensity vanishes over the scan");
        }
        for (auto &row : table.rows) {
            row.probability /= peak;
        }
    }
    return table;
}

}  // namespace

FringeTable fringe_scan(const SlitGeometry &geom, double x_min, double x_max, std::size_t n_points,
                        FringeMode mode) {
    return scan_impl(geom, x_min, x_max, n_points, mode, nullptr);
}

FringeTable fringe_scan(const SlitGeometry &geom, double x_min, double x_max, std::size_t n_points, FringeMode mode,
                        const QuantumState &source) {
    return scan_impl(geom, x_min, x_max, n_points, mode, &source);
}

double fermionic_fringe(const SlitGeometry &geom, double x_detector) {
    require_two_slits(geom, "fermionic_fringe");
    const TransferAmplitude amp = transfer_amplitude(geom, x_detector);
    const Complex t1 = amp.per_slit_terms[0];
    const Complex t2 = amp.per_slit_terms[1];

    const FermionicModes modes = fermionic_mode_ops(2);
    const double norm = std::sqrt(std::norm(t1) + std::norm(t2));
    OperatorMatrix b = (t1 / norm) * modes.annihilators[0] + (t2 / norm) * modes.annihilators[1];

    std::vector<std::size_t> one_in_second{0, 1};
    std::vector<std::size_t> one_in_first{1, 0};
    StateVector psi = StateVector::Zero(4);
    psi(static_cast<Eigen::Index>(modes.space.index_of(one_in_second))) = 1.0 / std::numbers::sqrt2;
    psi(static_cast<Eigen::Index>(modes.space.index_of(one_in_first))) = 1.0 / std::numbers::sqrt2;
    const auto state = QuantumState::pure(std::move(psi));

    return expectation(state, b.adjoint() * b).real();
}

}  // namespace qfield
