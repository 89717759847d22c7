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

#ifndef QFIELD_DIFFRACTION_H
#define QFIELD_DIFFRACTION_H

#include <cstddef>
#include <span>
#include <vector>

#include "qfield/fock.h"

namespace qfield {

/// A point in the (transverse x, optical axis z) plane, in meters.
struct Point2 {
    double x = 0.0;
    double z = 0.0;
};

/// Point source behind an opaque screen at z = 0 pierced by point slits, with
/// a detection line at z = screen_z. All lengths in meters; wavenumber in 1/m.
class SlitGeometry {
   public:
    /// Throws std::invalid_argument naming the offending field.
    SlitGeometry(Point2 source, std::vector<Point2> slits, double screen_z, double wavenumber);

    /// Two slits at x = +-separation/2, source on axis at z = -source_distance.
    static SlitGeometry double_slit(double wavelength, double separation, double source_distance,
                                    double screen_distance);

    const Point2 &source() const { return source_; }
    const std::vector<Point2> &slits() const { return slits_; }
    double screen_z() const { return screen_z_; }
    double wavenumber() const { return wavenumber_; }
    double wavelength() const;

   private:
    Point2 source_;
    std::vector<Point2> slits_;
    double screen_z_;
    double wavenumber_;
};

struct PathLengths {
    std::vector<double> source_to_slit;
    std::vector<double> slit_to_detector;
};

PathLengths path_lengths(const SlitGeometry &geom, double x_detector);

/// Optical path of slit j minus that of slit 0, (s_j + r_j) - (s_0 + r_0),
/// formed from coordinate differences so that it carries no cancellation error.
std::vector<double> relative_paths(const SlitGeometry &geom, double x_detector);

/// Kirchhoff coefficient c(x_D) with Psi(x_D) = c(x_D) Psi(x_S).
struct TransferAmplitude {
    Complex value;
    /// e^{ik s_j}/s_j * e^{ik r_j}/r_j for every slit.
    std::vector<Complex> per_slit_terms;
};

/// Throws DegenerateGeometry when any leg has zero or non-finite length.
TransferAmplitude transfer_amplitude(const SlitGeometry &geom, double x_detector);

/// <Psi^dagger(x_D) Psi(x_D)> = |c(x_D)|^2 <a^dagger a> for a single bosonic
/// source mode in any state.
double intensity_expectation(const QuantumState &source, const SlitGeometry &geom, double x_detector);

enum class FringeMode {
    /// |c(x_D)|^2 on |1>, divided by its maximum over a normalization grid.
    exact,
    /// (1 + cos(k dL))/2, dL the exact optical path difference of the two slits.
    far_field,
};

/// Single-photon detection probability for a two-slit geometry.
///
/// The exact mode needs the grid whose maximum sets the normalization; it
/// throws std::invalid_argument when that grid is empty.
double single_photon_fringe(const SlitGeometry &geom, double x_detector, FringeMode mode,
                            std::span<const double> normalization_grid = {});

struct FringeRow {
    double x_detector;
    double probability;
    double raw_intensity;
};

struct FringeTable {
    std::vector<FringeRow> rows;
};

/// n_points evenly spaced values from lo to hi inclusive.
std::vector<double> uniform_grid(double lo, double hi, std::size_t n_points);

/// Tabulate the single-photon fringe. raw_intensity holds the single-photon
/// |c(x_D)|^2; the overload taking a source state reports that state's
/// intensity instead.
FringeTable fringe_scan(const SlitGeometry &geom, double x_min, double x_max, std::size_t n_points,
                        FringeMode mode);
FringeTable fringe_scan(const SlitGeometry &geom, double x_min, double x_max, std::size_t n_points,
                        FringeMode mode, const QuantumState &source);

/// Detector occupation for two fermionic slit modes sharing one excitation,
/// (|0,1> + |1,0>)/sqrt(2), read out through the normalized detector mode
/// built from the per-slit transfer terms.
double fermionic_fringe(const SlitGeometry &geom, double x_detector);

}  // namespace qfield

#endif
