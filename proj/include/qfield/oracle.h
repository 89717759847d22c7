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

#ifndef QFIELD_ORACLE_H
#define QFIELD_ORACLE_H

#include <string>
#include <string_view>

#include "qfield/diffraction.h"
#include "qfield/fock.h"
#include "qfield/quadrature_polynomial.h"
#include "qfield/schwinger.h"

namespace qfield {

// Schroedinger-picture reference computations. Nothing here calls back into the
// Heisenberg-picture pipelines it is used to check.

/// exp(-i H t) from the eigendecomposition of H. Throws NonHermitianOperator
/// unless H is Hermitian within 1e-12.
OperatorMatrix unitary_propagator(const OperatorMatrix &h, double t);

/// U^dagger A U with U = exp(-i H t).
OperatorMatrix heisenberg_conjugate(const OperatorMatrix &op, const OperatorMatrix &h, double t);

QuantumState schrodinger_evolve(const QuantumState &state, const OperatorMatrix &h, double t);

/// |<psi(t)|A|psi(t)> - <psi|U^dagger A U|psi>|.
double picture_equivalence_check(const OperatorMatrix &op, const QuantumState &state, const OperatorMatrix &h,
                                 double t);

/// Two bosonic slit modes in (|0,1> + |1,0>)/sqrt(2) read out through the
/// normalized detector mode b = (t_1 a_1 + t_2 a_2)/sqrt(|t_1|^2 + |t_2|^2).
/// Path phases are evaluated in extended precision from raw distances.
double slit_mode_oracle(const SlitGeometry &geom, double x_detector);

/// <D^dagger D> for a coherent source split into two coherent slit modes with
/// amplitudes alpha e^{iks_j}/s_j and D = sum_j e^{ikr_j}/r_j a_j, on a
/// truncated two-mode Fock space.
double coherent_slit_oracle(const SlitGeometry &geom, double x_detector, Complex alpha, std::size_t cutoff = 20);

/// |<-| exp(-i H t) |+>|^2 with H = (omega/2) sigma_Z on a bare qubit.
double transition_probability_oracle(const QubitModelParams &params, double t);

/// Closed-form quadrature rotation: x-mode by +omega t/2, y-mode by -omega t/2.
QuadratureSet quadrature_rotation(const QuadratureSet &initial, double omega, double t);

/// Qubit basis vectors ordered (excited, ground): "0", "1", "+", "-", "+i", "-i".
StateVector qubit_basis_state(std::string_view label);

struct AmplitudeRecord {
    std::string bra_label;
    std::string ket_label;
    double t1;
    double t2;
    Complex amplitude;
};

/// <b| exp(-i H (t2 - t1)) |a> for labelled qubit states and a 2x2 H.
AmplitudeRecord transition_amplitude(std::string_view a_label, std::string_view b_label, const OperatorMatrix &h,
                                     double t1, double t2);

/// Residual between the centered difference of <b,t2|a,t1> in t2 and
/// -i <b| H exp(-i H (t2 - t1)) |a>. Scales as eps^2.
double amplitude_variation_check(const StateVector &a, const StateVector &b, const OperatorMatrix &h, double t1,
                                 double t2, double eps);
double amplitude_variation_check(std::string_view a_label, std::string_view b_label, const OperatorMatrix &h,
                                 double t1, double t2, double eps);

}  // namespace qfield

#endif
