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

#include "qfield/oracle.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qfield/errors.h"

namespace qfield {

namespace {

void require_hermitian(const OperatorMatrix &h) {
    if (h.rows() != h.cols() || !is_hermitian(h, 1e-12)) {
        throw NonHermitianOperator("Hamiltonian is not Hermitian within 1e-12");
    }
}

void require_two_slits(const SlitGeometry &geom) {
    if (geom.slits().size() != 2) {
        throw std::invalid_argument("slit-mode oracle is defined for exactly 2 slits");
    }
}

// e^{ik(L_j - L_0)} / (s_j r_j) with every length formed in long double.
std::vector<Complex> slit_weights_extended(const SlitGeometry &geom, double x_detector, bool include_source_leg,
                                           bool include_detector_leg) {
    using ld = long double;
    const ld k = geom.wavenumber();
    std::vector<ld> lengths;
    std::vector<ld> weights;
    for (const Point2 &slit : geom.slits()) {
        const ld sx = static_cast<ld>(slit.x) - geom.source().x;
        const ld sz = static_cast<ld>(slit.z) - geom.source().z;
        const ld dx = static_cast<ld>(x_detector) - slit.x;
        const ld dz = static_cast<ld>(geom.screen_z()) - slit.z;
        const ld s = std::sqrt(sx * sx + sz * sz);
        const ld r = std::sqrt(dx * dx + dz * dz);
        if (!(s > 0) || !(r > 0)) {
            throw DegenerateGeometry("oracle: zero-length propagation leg");
        }
        ld len = 0;
        ld w = 1;
        if (include_source_leg) {
            len += s;
            w /= s;
        }
        if (include_detector_leg) {
            len += r;
            w /= r;
        }
        lengths.push_back(len);
        weights.push_back(w);
    }
    std::vector<Complex> out;
    for (std::size_t j = 0; j < lengths.size(); ++j) {
        const ld phase = k * (lengths[j] - lengths[0]);
        out.emplace_back(static_cast<double>(weights[j] * std::cos(phase)),
                         static_cast<double>(weights[j] * std::sin(phase)));
    }
    return out;
}

}  // namespace

OperatorMatrix unitary_propagator(const OperatorMatrix &h, double t) {
    require_hermitian(h);
    Eigen::SelfAdjointEigenSolver<OperatorMatrix> eig(h);
    const OperatorMatrix &v = eig.eigenvectors();
    Eigen::VectorXcd phases(h.rows());
    for (Eigen::Index i = 0; i < h.rows(); ++i) {
        phases(i) = std::polar(1.0, -eig.eigenvalues()(i) * t);
    }
    return v * phases.asDiagonal() * v.adjoint();
}

OperatorMatrix heisenberg_conjugate(const OperatorMatrix &op, const OperatorMatrix &h, double t) {
    if (op.rows() != h.rows() || op.cols() != h.cols()) {
        throw DimensionMismatch("heisenberg_conjugate: operator and Hamiltonian dimensions differ");
    }
    const OperatorMatrix u = unitary_propagator(h, t);
    return u.adjoint() * op * u;
}

QuantumState schrodinger_evolve(const QuantumState &state, const OperatorMatrix &h, double t) {
    if (static_cast<Eigen::Index>(state.dimension()) != h.rows()) {
        throw DimensionMismatch("schrodinger_evolve: state and Hamiltonian dimensions differ");
    }
    const OperatorMatrix u = unitary_propagator(h, t);
    if (state.kind() == QuantumState::Kind::pure) {
        StateVector v = u * state.vector();
        // Unitary evolution keeps the norm to ~1e-15; strip the residual drift.
        v.normalize();
        return QuantumState::pure(std::move(v), state.truncation_loss());
    }
    OperatorMatrix rho = u * state.density() * u.adjoint();
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return QuantumState::mixed(std::move(rho), state.truncation_loss());
}

double picture_equivalence_check(const OperatorMatrix &op, const QuantumState &state, const OperatorMatrix &h,
                                 double t) {
    const Complex schrodinger = expectation(schrodinger_evolve(state, h, t), op);
    const Complex heisenberg = expectation(state, heisenberg_conjugate(op, h, t));
    return std::abs(schrodinger - heisenberg);
}

double slit_mode_oracle(const SlitGeometry &geom, double x_detector) {
    require_two_slits(geom);
    const std::vector<Complex> t = slit_weights_extended(geom, x_detector, true, true);

    const auto space = FockSpace::bosonic(2, 2);
    const OperatorMatrix a1 = annihilation_op(space, 0);
    const OperatorMatrix a2 = annihilation_op(space, 1);
    const double norm = std::sqrt(std::norm(t[0]) + std::norm(t[1]));
    const OperatorMatrix b = (t[0] / norm) * a1 + (t[1] / norm) * a2;

    const double r = 1.0 / std::numbers::sqrt2;
    StateVector psi = StateVector::Zero(4);
    const std::size_t first[] = {1, 0};
    const std::size_t second[] = {0, 1};
    psi(static_cast<Eigen::Index>(space.index_of(first))) = r;
    psi(static_cast<Eigen::Index>(space.index_of(second))) = r;
    return expectation(QuantumState::pure(std::move(psi)), b.adjoint() * b).real();
}

double coherent_slit_oracle(const SlitGeometry &geom, double x_detector, Complex alpha, std::size_t cutoff) {
    require_two_slits(geom);
    const std::vector<Complex> u = slit_weights_extended(geom, x_detector, true, false);
    const std::vector<Complex> v = slit_weights_extended(geom, x_detector, false, true);

    const auto single = FockSpace::bosonic(cutoff);
    const StateVector psi1 = coherent_state(alpha * u[0], single).vector();
    const StateVector psi2 = coherent_state(alpha * u[1], single).vector();
    StateVector psi = tensor_product(psi1, psi2);
    psi.normalize();

    const auto pair = FockSpace::bosonic(cutoff, 2);
    const OperatorMatrix d = v[0] * annihilation_op(pair, 0) + v[1] * annihilation_op(pair, 1);
    return expectation(QuantumState::pure(std::move(psi)), d.adjoint() * d).real();
}

double transition_probability_oracle(const QubitModelParams &params, double t) {
    Eigen::Matrix2cd h;
    h << 0.5 * params.omega, 0.0, 0.0, -0.5 * params.omega;
    const auto plus = QuantumState::pure(qubit_basis_state("+"));
    const QuantumState evolved = schrodinger_evolve(plus, h, t);
    return std::norm(qubit_basis_state("-").dot(evolved.vector()));
}

QuadratureSet quadrature_rotation(const QuadratureSet &initial, double omega, double t) {
    const double c = std::cos(0.5 * omega * t);
    const double s = std::sin(0.5 * omega * t);
    return {
        c * initial.x + s * initial.p_x,
        c * initial.p_x - s * initial.x,
        c * initial.y - s * initial.p_y,
        c * initial.p_y + s * initial.y,
    };
}

StateVector qubit_basis_state(std::string_view label) {
    const double r = 1.0 / std::numbers::sqrt2;
    const Complex i(0.0, 1.0);
    StateVector v(2);
    if (label == "0") {
        v << 1.0, 0.0;
    } else if (label == "1") {
        v << 0.0, 1.0;
    } else if (label == "+") {
        v << r, r;
    } else if (label == "-") {
        v << r, -r;
    } else if (label == "+i") {
        v << r, i * r;
    } else if (label == "-i") {
        v << r, -i * r;
    } else {
        throw std::invalid_argument("unknown qubit state label '" + std::string(label) + "'");
    }
    return v;
}

AmplitudeRecord transition_amplitude(std::string_view a_label, std::string_view b_label, const OperatorMatrix &h,
                                     double t1, double t2) {
    if (h.rows() != 2 || h.cols() != 2) {
        throw DimensionMismatch("labelled amplitudes need a 2x2 Hamiltonian");
    }
    const StateVector a = qubit_basis_state(a_label);
    const StateVector b = qubit_basis_state(b_label);
    const Complex amp = b.dot(unitary_propagator(h, t2 - t1) * a);
    return {std::string(b_label), std::string(a_label), t1, t2, amp};
}

double amplitude_variation_check(const StateVector &a, const StateVector &b, const OperatorMatrix &h, double t1,
                                 double t2, double eps) {
    require_hermitian(h);
    if (!(eps > 0.0)) {
        throw std::invalid_argument("amplitude_variation_check: eps must be > 0");
    }
    if (a.size() != h.rows() || b.size() != h.rows()) {
        throw DimensionMismatch("amplitude_variation_check: state and Hamiltonian dimensions differ");
    }
    const double dt = t2 - t1;
    const Complex ahead = b.dot(unitary_propagator(h, dt + eps) * a);
    const Complex behind = b.dot(unitary_propagator(h, dt - eps) * a);
    const Complex finite_difference = (ahead - behind) / (2.0 * eps);
    const Complex action = Complex(0.0, -1.0) * b.dot(h * (unitary_propagator(h, dt) * a));
    return std::abs(finite_difference - action);
}

double amplitude_variation_check(std::string_view a_label, std::string_view b_label, const OperatorMatrix &h,
                                 double t1, double t2, double eps) {
    if (h.rows() != 2 || h.cols() != 2) {
        throw DimensionMismatch("labelled amplitudes need a 2x2 Hamiltonian");
    }
    return amplitude_variation_check(qubit_basis_state(a_label), qubit_basis_state(b_label), h, t1, t2, eps);
}

}  // namespace qfield
