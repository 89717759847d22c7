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

#include "qfield/verification.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>

#include "qfield/diffraction.h"
#include "qfield/fock.h"
#include "qfield/oracle.h"
#include "qfield/quadrature_polynomial.h"
#include "qfield/schwinger.h"

namespace qfield {

namespace {

constexpr double kPi = std::numbers::pi;

// 500 nm light, slits 10 um apart, 1 m from both source and screen.
SlitGeometry reference_geometry() { return SlitGeometry::double_slit(500e-9, 10e-6, 1.0, 1.0); }

std::vector<double> reference_scan() { return uniform_grid(-0.025, 0.025, 101); }

OperatorMatrix random_hermitian(std::mt19937 &rng, Eigen::Index dim) {
    std::normal_distribution<double> g;
    OperatorMatrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            m(i, j) = Complex(g(rng), g(rng));
        }
    }
    return 0.5 * (m + m.adjoint());
}

StateVector random_state(std::mt19937 &rng, Eigen::Index dim) {
    std::normal_distribution<double> g;
    StateVector v(dim);
    for (auto &z : v) {
        z = Complex(g(rng), g(rng));
    }
    return v.normalized();
}

double ccr_corner() {
    double worst = 0.0;
    for (std::size_t n = 2; n <= 16; ++n) {
        const auto a = annihilation_op(FockSpace::bosonic(n), 0);
        OperatorMatrix expected = OperatorMatrix::Identity(n, n);
        expected(n - 1, n - 1) = 1.0 - static_cast<double>(n);
        worst = std::max(worst, max_abs(commutator(a, a.adjoint()) - expected));
    }
    return worst;
}

double number_spectrum() {
    double worst = 0.0;
    for (std::size_t n = 2; n <= 16; ++n) {
        Eigen::SelfAdjointEigenSolver<OperatorMatrix> eig(number_op(FockSpace::bosonic(n), 0));
        for (std::size_t k = 0; k < n; ++k) {
            worst = std::max(worst, std::abs(eig.eigenvalues()(k) - static_cast<double>(k)));
        }
    }
    return worst;
}

double distinct_mode_commutation() {
    const auto s = FockSpace::bosonic(4, 3);
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            if (i != j) {
                const auto ai = annihilation_op(s, i);
                const auto aj = annihilation_op(s, j);
                worst = std::max({worst, max_abs(commutator(ai, aj.adjoint())), max_abs(commutator(ai, aj))});
            }
        }
    }
    return worst;
}

double fermionic_car() {
    const auto f = fermionic_mode_ops(3);
    const auto id = identity(f.space);
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            const auto &ci = f.annihilators[i];
            const auto &cj = f.annihilators[j];
            const OperatorMatrix delta = i == j ? id : OperatorMatrix::Zero(id.rows(), id.cols());
            worst = std::max({worst, max_abs(anticommutator(ci, cj.adjoint()) - delta), max_abs(anticommutator(ci, cj))});
        }
    }
    return worst;
}

double coherent_mean() {
    const auto s = FockSpace::bosonic(30);
    double worst = 0.0;
    for (Complex alpha : {Complex(1.0, 0.0), Complex(0.6, -0.8), Complex(0.0, 0.3)}) {
        const double mean = expectation(coherent_state(alpha, s), number_op(s, 0)).real();
        worst = std::max(worst, std::abs(mean - std::norm(alpha)));
    }
    return worst;
}

double fringe_vs_slit_oracle() {
    const auto geom = reference_geometry();
    double worst = 0.0;
    for (double x : reference_scan()) {
        worst = std::max(worst, std::abs(single_photon_fringe(geom, x, FringeMode::far_field) - slit_mode_oracle(geom, x)));
    }
    return worst;
}

double fermionic_vs_bosonic() {
    const auto geom = reference_geometry();
    double worst = 0.0;
    for (double x : reference_scan()) {
        worst = std::max(worst, std::abs(fermionic_fringe(geom, x) - single_photon_fringe(geom, x, FringeMode::far_field)));
    }
    return worst;
}

double exact_vs_far_field() {
    // screen distance / slit separation = 1e5.
    const auto geom = reference_geometry();
    const auto exact = fringe_scan(geom, -0.025, 0.025, 101, FringeMode::exact);
    const auto far = fringe_scan(geom, -0.025, 0.025, 101, FringeMode::far_field);
    double worst = 0.0;
    for (std::size_t i = 0; i < exact.rows.size(); ++i) {
        worst = std::max(worst, std::abs(exact.rows[i].probability - far.rows[i].probability));
    }
    return worst;
}

double exact_scan_vs_pointwise() {
    const auto geom = reference_geometry();
    const auto grid = reference_scan();
    const auto table = fringe_scan(geom, grid.front(), grid.back(), grid.size(), FringeMode::exact);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        worst = std::max(worst, std::abs(table.rows[i].probability - single_photon_fringe(geom, grid[i], FringeMode::exact, grid)));
    }
    return worst;
}

double mixture_linearity() {
    const auto geom = reference_geometry();
    const auto s = FockSpace::bosonic(16);
    const QuantumState coh = coherent_state(Complex(0.7, 0.2), s);
    const QuantumState th = thermal_state(0.4, s);
    const double p = 0.3;
    const QuantumState mix = QuantumState::mixed(p * coh.density_matrix() + (1.0 - p) * th.density_matrix());
    double worst = 0.0;
    for (double x : {0.0, 0.004, 0.0125, 0.02}) {
        const double lhs = intensity_expectation(mix, geom, x);
        const double rhs = p * intensity_expectation(coh, geom, x) + (1.0 - p) * intensity_expectation(th, geom, x);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

double coherent_intensity_vs_oracle() {
    const auto geom = reference_geometry();
    const Complex alpha(0.8, 0.3);
    const auto s = FockSpace::bosonic(30);
    const QuantumState coh = coherent_state(alpha, s);
    double worst = 0.0;
    for (double x : {0.0, 0.003, 0.0125, 0.019}) {
        const double engine = intensity_expectation(coh, geom, x);
        const double oracle = coherent_slit_oracle(geom, x, alpha);
        worst = std::max(worst, std::abs(engine - oracle) / oracle);
    }
    return worst;
}

double transition_vs_schrodinger() {
    const SchwingerModel model(QubitModelParams{1.0, 3});
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double t = 2.0 * kPi * i / 99.0;
        worst = std::max(worst, std::abs(transition_probability(model, t) - transition_probability_oracle(model.params(), t)));
    }
    return worst;
}

double pauli_rotation_vs_conjugation() {
    const SchwingerModel model(QubitModelParams{1.0, 3});
    double worst = 0.0;
    for (double wt : {0.1, 0.7, kPi / 3.0, 2.5}) {
        const auto evolved = pauli_evolved(model, wt);
        const auto &p = model.paulis();
        const auto &h = model.hamiltonian();
        worst = std::max({worst, max_abs(heisenberg_conjugate(p.sigma_x, h, wt) - evolved.sigma_x),
                          max_abs(heisenberg_conjugate(p.sigma_y, h, wt) - evolved.sigma_y)});
    }
    return worst;
}

double sigma_z_conservation() {
    const SchwingerModel model(QubitModelParams{1.0, 3});
    double worst = max_abs(commutator(model.hamiltonian(), model.paulis().sigma_z));
    for (double wt : {0.1, 0.7, kPi / 3.0, 2.5, 10.0}) {
        worst = std::max(worst, max_abs(heisenberg_conjugate(model.paulis().sigma_z, model.hamiltonian(), wt) -
                                        model.paulis().sigma_z));
    }
    return worst;
}

double excitation_number_conservation() {
    const SchwingerModel model(QubitModelParams{1.3, 4});
    const OperatorMatrix n = model.total_number();
    const auto &p = model.paulis();
    return std::max({max_abs(commutator(p.sigma_x, n)), max_abs(commutator(p.sigma_y, n)),
                     max_abs(commutator(p.sigma_z, n)), max_abs(commutator(model.hamiltonian(), n))});
}

double operator_derivative_vs_commutator() {
    const QubitModelParams params{1.0, 4};
    const SchwingerModel model(params);
    const auto poly = hamiltonian_polynomial(params);
    const auto &q = model.quadratures();
    const auto &h = model.hamiltonian();
    const Complex i(0.0, 1.0);
    const OperatorMatrix dx = operator_derivative(poly, Quadrature::p_x, q, kDefaultDerivativeSteps);
    const OperatorMatrix dpx = -operator_derivative(poly, Quadrature::x, q, kDefaultDerivativeSteps);
    const OperatorMatrix dy = operator_derivative(poly, Quadrature::p_y, q, kDefaultDerivativeSteps);
    const OperatorMatrix dpy = -operator_derivative(poly, Quadrature::y, q, kDefaultDerivativeSteps);
    return std::max({max_abs(dx - i * commutator(h, q.x)), max_abs(dpx - i * commutator(h, q.p_x)),
                     max_abs(dy - i * commutator(h, q.y)), max_abs(dpy - i * commutator(h, q.p_y))});
}

double heisenberg_rhs_vs_commutator() {
    const QubitModelParams params{0.8, 4};
    const SchwingerModel model(params);
    const auto &q = model.quadratures();
    const auto &h = model.hamiltonian();
    const Complex i(0.0, 1.0);
    const QuadratureSet rhs = heisenberg_rhs(q, params);
    double worst = 0.0;
    for (Quadrature which : kAllQuadratures) {
        worst = std::max(worst, max_abs(rhs[which] - i * commutator(h, q[which])));
    }
    return worst;
}

double leapfrog_vs_rotation() {
    const QubitModelParams params{1.0, 3};
    const double t = kPi / 4.0;
    const auto result = integrate_quadratures(params, t, 10000);
    const QuadratureSet exact = quadrature_rotation(quadrature_operators(params), params.omega, t);
    const QuadratureSet &got = result.operators_at_t.back();
    double worst = 0.0;
    for (Quadrature which : kAllQuadratures) {
        worst = std::max(worst, max_abs(got[which] - exact[which]));
    }
    return worst;
}

double leapfrog_probability_vs_oracle() {
    const QubitModelParams params{1.0, 3};
    const auto result = integrate_quadratures(params, kPi, 10000, 11);
    double worst = 0.0;
    for (std::size_t k = 0; k < result.times.size(); ++k) {
        worst = std::max(worst, std::abs(result.probabilities[k] - transition_probability_oracle(params, result.times[k])));
    }
    return worst;
}

double oracle_unitarity() {
    std::mt19937 rng(20261014);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const Eigen::Index dim = 2 + trial % 6;
        const OperatorMatrix u = unitary_propagator(random_hermitian(rng, dim), 0.37 * (trial + 1));
        worst = std::max(worst, max_abs(u.adjoint() * u - OperatorMatrix::Identity(dim, dim)));
    }
    return worst;
}

double picture_equivalence() {
    std::mt19937 rng(7);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const OperatorMatrix a = random_hermitian(rng, 4);
        const OperatorMatrix h = random_hermitian(rng, 4);
        const auto psi = QuantumState::pure(random_state(rng, 4));
        worst = std::max(worst, picture_equivalence_check(a, psi, h, 1.3));
    }
    return worst;
}

double amplitude_variation() {
    Eigen::Matrix2cd h;
    h << 0.5, 0.0, 0.0, -0.5;
    return amplitude_variation_check("+", "-", h, 0.0, 0.7, 1e-4);
}

}  // namespace

std::vector<CheckResult> run_verification_suite() {
    struct Entry {
        const char *name;
        double tolerance;
        std::function<double()> run;
    };
    const std::vector<Entry> entries{
        {"fock.ccr_cutoff_corner", 1e-12, ccr_corner},
        {"fock.number_spectrum", 1e-12, number_spectrum},
        {"fock.distinct_mode_commutation", 0.0, distinct_mode_commutation},
        {"fock.fermionic_car", 0.0, fermionic_car},
        {"fock.coherent_mean_occupation", 1e-10, coherent_mean},
        {"diffraction.far_field_vs_slit_mode_oracle", 1e-10, fringe_vs_slit_oracle},
        {"diffraction.fermionic_vs_bosonic", 1e-10, fermionic_vs_bosonic},
        {"diffraction.exact_vs_far_field", 1e-3, exact_vs_far_field},
        {"diffraction.exact_scan_vs_pointwise", 1e-12, exact_scan_vs_pointwise},
        {"diffraction.mixture_linearity", 1e-12, mixture_linearity},
        {"diffraction.coherent_intensity_vs_oracle", 1e-10, coherent_intensity_vs_oracle},
        {"qubit.transition_vs_schrodinger", 1e-10, transition_vs_schrodinger},
        {"qubit.pauli_rotation_vs_conjugation", 1e-10, pauli_rotation_vs_conjugation},
        {"qubit.sigma_z_conservation", 1e-12, sigma_z_conservation},
        {"qubit.excitation_number_conservation", 1e-12, excitation_number_conservation},
        {"qubit.operator_derivative_vs_commutator", 1e-8, operator_derivative_vs_commutator},
        {"qubit.heisenberg_rhs_vs_commutator", 1e-12, heisenberg_rhs_vs_commutator},
        {"qubit.leapfrog_vs_rotation", 1e-6, leapfrog_vs_rotation},
        {"qubit.leapfrog_probability_vs_oracle", 1e-6, leapfrog_probability_vs_oracle},
        {"oracle.unitarity", 1e-12, oracle_unitarity},
        {"oracle.picture_equivalence", 1e-10, picture_equivalence},
        {"oracle.amplitude_variation", 1e-8, amplitude_variation},
    };
    std::vector<CheckResult> out;
    out.reserve(entries.size());
    for (const auto &e : entries) {
        const double dev = e.run();
        out.push_back({e.name, dev, e.tolerance, std::isfinite(dev) && dev <= e.tolerance});
    }
    return out;
}

bool all_passed(const std::vector<CheckResult> &results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult &r) { return r.pass; });
}

}  // namespace qfield
