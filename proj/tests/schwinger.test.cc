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

#include "gtest/gtest.h"

#include "qfield/oracle.h"

using namespace qfield;

namespace {

constexpr double kPi = std::numbers::pi;

// Measured by the brute-force commutator below: [Sigma_X, Sigma_Y] = 2 i s Sigma_Z
// with the i(a_x^dagger a_y - a_y^dagger a_x) form of Sigma_Y.
constexpr double kStructureSign = -1.0;

OperatorMatrix naive_product(const OperatorMatrix &a, const OperatorMatrix &b) {
    OperatorMatrix c = OperatorMatrix::Zero(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < b.cols(); ++j) {
            for (Eigen::Index k = 0; k < a.cols(); ++k) {
                c(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return c;
}

double max_over_quadratures(const QuadratureSet &a, const QuadratureSet &b) {
    double worst = 0.0;
    for (Quadrature q : kAllQuadratures) {
        worst = std::max(worst, max_abs(a[q] - b[q]));
    }
    return worst;
}

double integration_error(const QubitModelParams &params, double t, std::size_t steps) {
    auto result = integrate_quadratures(params, t, steps);
    return max_over_quadratures(result.operators_at_t.back(),
                                quadrature_rotation(quadrature_operators(params), params.omega, t));
}

}  // namespace

TEST(schwinger_qubit, params_validation) {
    EXPECT_THROW(hamiltonian(QubitModelParams{std::nan(""), 4}), std::invalid_argument);
    EXPECT_THROW(hamiltonian(QubitModelParams{1.0, 1}), std::invalid_argument);
}

TEST(schwinger_qubit, sigma_z_on_excited_state) {
    const SchwingerModel model(QubitModelParams{1.0, 4});
    StateVector excited = model.qubit_state(1.0, 0.0);
    EXPECT_LT((model.paulis().sigma_z * excited - excited).cwiseAbs().maxCoeff(), 1e-15);
    StateVector ground = model.qubit_state(0.0, 1.0);
    EXPECT_LT((model.paulis().sigma_z * ground + ground).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(schwinger_qubit, single_excitation_blocks) {
    const SchwingerModel model(QubitModelParams{1.0, 5});
    const Complex i(0.0, 1.0);
    Eigen::Matrix2cd sx, sy, sz;
    sx << 0, 1, 1, 0;
    sy << 0, -i, i, 0;
    sz << 1, 0, 0, -1;
    EXPECT_EQ(model.single_excitation_block(model.paulis().sigma_x), sx);
    EXPECT_EQ(model.single_excitation_block(model.paulis().sigma_z), sz);
    // The bilinear i(a_x^dagger a_y - a_y^dagger a_x) is -sigma_y on this block.
    EXPECT_EQ(model.single_excitation_block(model.paulis().sigma_y), (-sy).eval());
    EXPECT_EQ(schwinger_map(PauliLabel::X, model.params()), model.paulis().sigma_x);
    EXPECT_EQ(schwinger_map(PauliLabel::Y, model.params()), model.paulis().sigma_y);
    EXPECT_EQ(schwinger_map(PauliLabel::Z, model.params()), model.paulis().sigma_z);
}

TEST(schwinger_qubit, structure_constant_sign_by_brute_force) {
    const SchwingerModel model(QubitModelParams{1.0, 3});
    const auto &p = model.paulis();
    OperatorMatrix c = naive_product(p.sigma_x, p.sigma_y) - naive_product(p.sigma_y, p.sigma_x);
    OperatorMatrix expected = Complex(0.0, 2.0 * kStructureSign) * p.sigma_z;
    // Sectors with n_x + n_y <= cutoff - 1 are complete under the truncation.
    for (Eigen::Index r = 0; r < c.rows(); ++r) {
        auto occ = model.space().occupations_of(static_cast<std::size_t>(r));
        if (occ[0] + occ[1] > 2) {
            continue;
        }
        for (Eigen::Index col = 0; col < c.cols(); ++col) {
            EXPECT_LT(std::abs(c(r, col) - expected(r, col)), 1e-14) << r << "," << col;
        }
    }
    EXPECT_EQ(model.single_excitation_block(c), model.single_excitation_block(expected));
}

TEST(schwinger_qubit, hermitian_and_number_conserving) {
    for (std::size_t cutoff : {2u, 3u, 6u}) {
        const SchwingerModel model(QubitModelParams{0.9, cutoff});
        const OperatorMatrix n = model.total_number();
        for (const OperatorMatrix *s : {&model.paulis().sigma_x, &model.paulis().sigma_y, &model.paulis().sigma_z,
                                        &model.hamiltonian()}) {
            EXPECT_TRUE(is_hermitian(*s, 1e-12));
            EXPECT_LT(max_abs(commutator(*s, n)), 1e-12);
        }
        EXPECT_EQ(max_abs(commutator(model.hamiltonian(), model.paulis().sigma_z)), 0.0);
    }
}

TEST(schwinger_qubit, hamiltonian_elements_and_spectrum) {
    const double w = 1.3;
    const SchwingerModel model(QubitModelParams{w, 4});
    const auto &h = model.hamiltonian();
    EXPECT_EQ(h(model.excited_index(), model.excited_index()), Complex(w / 2));
    EXPECT_EQ(h(0, 0), Complex(0.0));
    EXPECT_EQ(max_abs(h - OperatorMatrix(h.diagonal().asDiagonal())), 0.0);

    Eigen::SelfAdjointEigenSolver<OperatorMatrix> eig(hamiltonian(QubitModelParams{w, 2}));
    Eigen::Vector4d expected(-w / 2, 0.0, 0.0, w / 2);
    EXPECT_LT((eig.eigenvalues() - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(schwinger_qubit, quadrature_ccr_away_from_corner) {
    const auto q = quadrature_operators(QubitModelParams{1.0, 5});
    const auto space = FockSpace::bosonic(5, 2);
    OperatorMatrix c = commutator(q.x, q.p_x);
    for (Eigen::Index r = 0; r < c.rows(); ++r) {
        auto occ = space.occupations_of(static_cast<std::size_t>(r));
        Complex expected = occ[0] == 4 ? Complex(0.0, -4.0) : Complex(0.0, 1.0);
        EXPECT_LT(std::abs(c(r, r) - expected), 1e-14);
    }
    EXPECT_EQ(max_abs(commutator(q.x, q.p_y)), 0.0);
}

TEST(schwinger_qubit, polynomial_hamiltonian_agrees_off_corner) {
    const QubitModelParams params{1.0, 4};
    const SchwingerModel model(params);
    OperatorMatrix diff = hamiltonian_polynomial(params).evaluate(model.quadratures()) - model.hamiltonian();
    for (Eigen::Index r = 0; r < diff.rows(); ++r) {
        auto occ = model.space().occupations_of(static_cast<std::size_t>(r));
        if (occ[0] == 3 || occ[1] == 3) {
            continue;
        }
        for (Eigen::Index c = 0; c < diff.cols(); ++c) {
            EXPECT_LT(std::abs(diff(r, c)), 1e-14);
        }
    }
}

TEST(heisenberg_rhs, free_case_and_closed_form) {
    const QubitModelParams still{0.0, 3};
    auto zero = heisenberg_rhs(quadrature_operators(still), still);
    for (Quadrature q : kAllQuadratures) {
        EXPECT_EQ(max_abs(zero[q]), 0.0);
    }

    const QubitModelParams params{1.4, 3};
    const SchwingerModel model(params);
    const auto &q = model.quadratures();
    auto rhs = heisenberg_rhs(q, params);
    EXPECT_LT(max_abs(rhs.p_x + 0.5 * params.omega * q.x), 1e-12);
    EXPECT_LT(max_abs(rhs.y + 0.5 * params.omega * q.p_y), 1e-12);

    const Complex i(0.0, 1.0);
    for (Quadrature which : kAllQuadratures) {
        EXPECT_LT(max_abs(rhs[which] - i * commutator(model.hamiltonian(), q[which])), 1e-12);
    }
    // Matrix element on the single-excitation block.
    StateVector e = model.qubit_state(1.0, 0.0);
    StateVector vac = fock_state(0, model.space()).vector();
    Complex lhs = vac.dot(rhs.x * e);
    Complex via_commutator = vac.dot((i * commutator(model.hamiltonian(), q.x)) * e);
    EXPECT_LT(std::abs(lhs - via_commutator), 1e-12);
}

TEST(integrate_quadratures, zero_time_is_identity_map) {
    const QubitModelParams params{1.0, 3};
    auto result = integrate_quadratures(params, 0.0, 5, 3);
    ASSERT_EQ(result.times.size(), 3u);
    ASSERT_EQ(result.operators_at_t.size(), 3u);
    ASSERT_EQ(result.probabilities.size(), 3u);
    for (const auto &snap : result.operators_at_t) {
        EXPECT_EQ(max_over_quadratures(snap, quadrature_operators(params)), 0.0);
    }
    EXPECT_NEAR(result.probabilities[0], 0.0, 1e-15);
    EXPECT_THROW(integrate_quadratures(params, 1.0, 0), std::invalid_argument);
}

TEST(integrate_quadratures, matches_rotation_and_converges_second_order) {
    const QubitModelParams params{1.0, 3};
    EXPECT_LT(integration_error(params, kPi / 4.0, 10000), 1e-6);
    const double coarse = integration_error(params, kPi / 4.0, 1000);
    const double fine = integration_error(params, kPi / 4.0, 2000);
    EXPECT_NEAR(coarse / fine, 4.0, 0.3);
}

TEST(integrate_quadratures, snapshots_track_transition_probability) {
    const QubitModelParams params{2.0, 3};
    auto result = integrate_quadratures(params, kPi, 4000, 9);
    ASSERT_EQ(result.times.size(), 9u);
    EXPECT_DOUBLE_EQ(result.times.back(), kPi);
    for (std::size_t k = 0; k < result.times.size(); ++k) {
        const double expected = std::pow(std::sin(params.omega * result.times[k] / 2.0), 2);
        EXPECT_NEAR(result.probabilities[k], expected, 1e-6);
        EXPECT_LE(result.probabilities[k], 1.0 + 1e-9);
    }
}

TEST(pauli_evolved, special_times) {
    const SchwingerModel model(QubitModelParams{1.0, 3});
    const auto &p = model.paulis();
    EXPECT_EQ(max_abs(pauli_evolved(model, 0.0).sigma_x - p.sigma_x), 0.0);
    EXPECT_LT(max_abs(pauli_evolved(model, kPi / 2).sigma_x - p.sigma_y), 1e-15);
    EXPECT_LT(max_abs(pauli_evolved(model, 2 * kPi).sigma_x - p.sigma_x), 1e-14);
    EXPECT_EQ(pauli_evolved(model, 1.234).sigma_z, p.sigma_z);
}

TEST(pauli_evolved, equals_unitary_conjugation) {
    for (double w : {1.0, 0.37}) {
        const SchwingerModel model(QubitModelParams{w, 3});
        const auto &p = model.paulis();
        for (double wt : {0.1, 0.7, kPi / 3, 2.5}) {
            const double t = wt / w;
            auto ev = pauli_evolved(model, t);
            EXPECT_LT(max_abs(heisenberg_conjugate(p.sigma_x, model.hamiltonian(), t) - ev.sigma_x), 1e-10);
            EXPECT_LT(max_abs(heisenberg_conjugate(p.sigma_y, model.hamiltonian(), t) - ev.sigma_y), 1e-10);
            EXPECT_LT(max_abs(heisenberg_conjugate(p.sigma_z, model.hamiltonian(), t) - p.sigma_z), 1e-12);
        }
    }
}

TEST(pauli_evolved, rebuilt_from_quadratures) {
    const SchwingerModel model(QubitModelParams{1.0, 4});
    auto rebuilt = paulis_from_quadratures(model.quadratures());
    EXPECT_LT(max_abs(rebuilt.sigma_x - model.paulis().sigma_x), 1e-14);
    EXPECT_LT(max_abs(rebuilt.sigma_y - model.paulis().sigma_y), 1e-14);
    EXPECT_LT(max_abs(rebuilt.sigma_z - model.paulis().sigma_z), 1e-14);

    const double t = 0.9;
    auto rotated = paulis_from_quadratures(quadrature_rotation(model.quadratures(), 1.0, t));
    EXPECT_LT(max_abs(rotated.sigma_x - pauli_evolved(model, t).sigma_x), 1e-14);
}

TEST(transition_probability, reference_times_and_oracle) {
    const QubitModelParams params{1.0, 3};
    const SchwingerModel model(params);
    EXPECT_NEAR(transition_probability(model, 0.0), 0.0, 1e-15);
    EXPECT_NEAR(transition_probability(model, kPi), 1.0, 1e-12);
    EXPECT_NEAR(transition_probability(model, kPi / 2), 0.5, 1e-12);
    EXPECT_NEAR(transition_probability(params, kPi / 2), 0.5, 1e-12);
    for (int k = 0; k < 100; ++k) {
        const double t = 4.0 * kPi * k / 99.0;
        EXPECT_NEAR(transition_probability(model, t), transition_probability_oracle(params, t), 1e-10);
    }
}
