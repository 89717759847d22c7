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

#include "qfield/schwinger.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qfield {

void QubitModelParams::validate() const {
    if (!std::isfinite(omega)) {
        throw std::invalid_argument("qubit.omega: must be finite");
    }
    if (cutoff < 2) {
        throw std::invalid_argument("qubit.cutoff: must be at least 2");
    }
}

namespace {

SecondQuantizedPauli build_paulis(const OperatorMatrix &ax, const OperatorMatrix &ay) {
    const OperatorMatrix axd = ax.adjoint();
    const OperatorMatrix ayd = ay.adjoint();
    const OperatorMatrix hop = axd * ay;
    const OperatorMatrix hop_back = ayd * ax;
    return {
        hop + hop_back,
        Complex(0.0, 1.0) * (hop - hop_back),
        axd * ax - ayd * ay,
    };
}

QuadratureSet quadratures_of(const OperatorMatrix &ax, const OperatorMatrix &ay) {
    const double s = 1.0 / std::numbers::sqrt2;
    const Complex minus_i(0.0, -1.0);
    return {
        s * (ax + ax.adjoint()),
        (minus_i * s) * (ax - ax.adjoint()),
        s * (ay + ay.adjoint()),
        (minus_i * s) * (ay - ay.adjoint()),
    };
}

const QubitModelParams &validated(const QubitModelParams &params) {
    params.validate();
    return params;
}

}  // namespace

SchwingerModel::SchwingerModel(QubitModelParams params)
    : params_(validated(params)),
      space_(FockSpace::bosonic(params.cutoff, 2)),
      a_x_(annihilation_op(space_, 0)),
      a_y_(annihilation_op(space_, 1)),
      quadratures_(quadratures_of(a_x_, a_y_)),
      paulis_(build_paulis(a_x_, a_y_)),
      hamiltonian_((0.5 * params.omega) * paulis_.sigma_z) {}

Eigen::Index SchwingerModel::excited_index() const {
    const std::size_t occ[] = {1, 0};
    return static_cast<Eigen::Index>(space_.index_of(occ));
}

Eigen::Index SchwingerModel::ground_index() const {
    const std::size_t occ[] = {0, 1};
    return static_cast<Eigen::Index>(space_.index_of(occ));
}

StateVector SchwingerModel::qubit_state(Complex c_excited, Complex c_ground) const {
    const double norm = std::sqrt(std::norm(c_excited) + std::norm(c_ground));
    if (!(norm > 0.0)) {
        throw std::invalid_argument("qubit_state: amplitudes must not both vanish");
    }
    StateVector v = StateVector::Zero(static_cast<Eigen::Index>(space_.dimension()));
    v(excited_index()) = c_excited / norm;
    v(ground_index()) = c_ground / norm;
    return v;
}

Eigen::Matrix2cd SchwingerModel::single_excitation_block(const OperatorMatrix &op) const {
    const Eigen::Index idx[] = {excited_index(), ground_index()};
    Eigen::Matrix2cd block;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            block(r, c) = op(idx[r], idx[c]);
        }
    }
    return block;
}

OperatorMatrix SchwingerModel::total_number() const {
    return a_x_.adjoint() * a_x_ + a_y_.adjoint() * a_y_;
}

OperatorMatrix schwinger_map(PauliLabel label, const QubitModelParams &params) {
    params.validate();
    const auto space = FockSpace::bosonic(params.cutoff, 2);
    const SecondQuantizedPauli p = build_paulis(annihilation_op(space, 0), annihilation_op(space, 1));
    switch (label) {
        case PauliLabel::X:
            return p.sigma_x;
        case PauliLabel::Y:
            return p.sigma_y;
        case PauliLabel::Z:
            return p.sigma_z;
    }
    throw std::logic_error("bad Pauli label");
}

OperatorMatrix hamiltonian(const QubitModelParams &params) {
    return (0.5 * params.omega) * schwinger_map(PauliLabel::Z, params);
}

QuadraturePolynomial hamiltonian_polynomial(const QubitModelParams &params) {
    params.validate();
    return QuadraturePolynomial::parse("omega/4 * (x^2 + px^2 - y^2 - py^2)", {{"omega", params.omega}});
}

QuadratureSet quadrature_operators(const QubitModelParams &params) {
    params.validate();
    const auto space = FockSpace::bosonic(params.cutoff, 2);
    return quadratures_of(annihilation_op(space, 0), annihilation_op(space, 1));
}

QuadratureSet heisenberg_rhs(const QuadratureSet &q, const QubitModelParams &params) {
    const double half = 0.5 * params.omega;
    return {half * q.p_x, -half * q.x, -half * q.p_y, half * q.y};
}

EvolutionResult integrate_quadratures(const QubitModelParams &params, double t_final, std::size_t n_steps,
                                      std::size_t n_snapshots) {
    params.validate();
    if (n_steps < 1) {
        throw std::invalid_argument("integrate_quadratures: n_steps must be at least 1");
    }
    if (n_snapshots < 2) {
        throw std::invalid_argument("integrate_quadratures: need at least 2 snapshots");
    }
    if (!std::isfinite(t_final)) {
        throw std::invalid_argument("integrate_quadratures: t_final must be finite");
    }
    const SchwingerModel model(params);
    const double h = t_final / static_cast<double>(n_steps);

    std::vector<std::size_t> snap_steps(n_snapshots);
    for (std::size_t i = 0; i < n_snapshots; ++i) {
        snap_steps[i] = static_cast<std::size_t>(
            std::llround(static_cast<double>(i) * static_cast<double>(n_steps) / static_cast<double>(n_snapshots - 1)));
    }

    EvolutionResult result;
    auto record = [&](std::size_t step, const QuadratureSet &q) {
        result.times.push_back(h * static_cast<double>(step));
        result.operators_at_t.push_back(q);
        result.probabilities.push_back(transition_probability(model, paulis_from_quadratures(q)));
    };

    QuadratureSet q = model.quadratures();
    std::size_t next_snap = 0;
    while (next_snap < n_snapshots && snap_steps[next_snap] == 0) {
        record(0, q);
        ++next_snap;
    }
    for (std::size_t step = 1; step <= n_steps; ++step) {
        // Momentum rates depend only on positions and vice versa.
        QuadratureSet rate = heisenberg_rhs(q, params);
        q.p_x += (0.5 * h) * rate.p_x;
        q.p_y += (0.5 * h) * rate.p_y;
        rate = heisenberg_rhs(q, params);
        q.x += h * rate.x;
        q.y += h * rate.y;
        rate = heisenberg_rhs(q, params);
        q.p_x += (0.5 * h) * rate.p_x;
        q.p_y += (0.5 * h) * rate.p_y;
        while (next_snap < n_snapshots && snap_steps[next_snap] == step) {
            record(step, q);
            ++next_snap;
        }
    }
    return result;
}

SecondQuantizedPauli paulis_from_quadratures(const QuadratureSet &q) {
    const double s = 1.0 / std::numbers::sqrt2;
    const Complex i(0.0, 1.0);
    const OperatorMatrix ax = s * (q.x + i * q.p_x);
    const OperatorMatrix ay = s * (q.y + i * q.p_y);
    return build_paulis(ax, ay);
}

SecondQuantizedPauli pauli_evolved(const SchwingerModel &model, double t) {
    const double phase = model.params().omega * t;
    const double c = std::cos(phase);
    const double s = std::sin(phase);
    const SecondQuantizedPauli &p = model.paulis();
    return {c * p.sigma_x + s * p.sigma_y, c * p.sigma_y - s * p.sigma_x, p.sigma_z};
}

SecondQuantizedPauli pauli_evolved(const QubitModelParams &params, double t) {
    return pauli_evolved(SchwingerModel(params), t);
}

double transition_probability(const SchwingerModel &model, const SecondQuantizedPauli &evolved) {
    const StateVector plus = model.qubit_state(1.0, 1.0);
    const double sx = plus.dot(evolved.sigma_x * plus).real();
    return 0.5 * (1.0 - sx);
}

double transition_probability(const SchwingerModel &model, double t) {
    return transition_probability(model, pauli_evolved(model, t));
}

double transition_probability(const QubitModelParams &params, double t) {
    return transition_probability(SchwingerModel(params), t);
}

}  // namespace qfield
