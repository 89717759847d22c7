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

#ifndef QFIELD_SCHWINGER_H
#define QFIELD_SCHWINGER_H

#include <cstddef>
#include <vector>

#include "qfield/fock.h"
#include "qfield/quadrature_polynomial.h"

namespace qfield {

/// Qubit H = (omega/2) sigma_Z carried by two oscillators, hbar = 1.
struct QubitModelParams {
    double omega = 1.0;
    std::size_t cutoff = 16;

    /// Throws std::invalid_argument on a non-finite omega or cutoff < 2.
    void validate() const;
};

enum class PauliLabel { X, Y, Z };

struct SecondQuantizedPauli {
    OperatorMatrix sigma_x;
    OperatorMatrix sigma_y;
    OperatorMatrix sigma_z;
};

/// Precomputed operators of the two-oscillator embedding. Mode 0 is the x
/// oscillator (its quanta occupy the excited level), mode 1 the y oscillator.
class SchwingerModel {
   public:
    explicit SchwingerModel(QubitModelParams params);

    const QubitModelParams &params() const { return params_; }
    const FockSpace &space() const { return space_; }
    const OperatorMatrix &a_x() const { return a_x_; }
    const OperatorMatrix &a_y() const { return a_y_; }
    const QuadratureSet &quadratures() const { return quadratures_; }
    const SecondQuantizedPauli &paulis() const { return paulis_; }
    const OperatorMatrix &hamiltonian() const { return hamiltonian_; }

    /// Basis index of |1_x, 0_y> (excited) and |0_x, 1_y> (ground).
    Eigen::Index excited_index() const;
    Eigen::Index ground_index() const;

    /// c_excited |1_x,0_y> + c_ground |0_x,1_y>, normalized.
    StateVector qubit_state(Complex c_excited, Complex c_ground) const;

    /// 2x2 restriction to span{|1_x,0_y>, |0_x,1_y>}, in that order.
    Eigen::Matrix2cd single_excitation_block(const OperatorMatrix &op) const;

    OperatorMatrix total_number() const;

   private:
    QubitModelParams params_;
    FockSpace space_;
    OperatorMatrix a_x_;
    OperatorMatrix a_y_;
    QuadratureSet quadratures_;
    SecondQuantizedPauli paulis_;
    OperatorMatrix hamiltonian_;
};

/// a^dagger sigma a for the chosen Pauli matrix, with a = (a_x, a_y):
///   Z -> a_x^dagger a_x - a_y^dagger a_y
///   X -> a_x^dagger a_y + a_y^dagger a_x
///   Y -> i (a_x^dagger a_y - a_y^dagger a_x)
OperatorMatrix schwinger_map(PauliLabel label, const QubitModelParams &params);

/// (omega/2)(n_x - n_y), diagonal in the two-mode Fock basis.
OperatorMatrix hamiltonian(const QubitModelParams &params);

/// The same Hamiltonian in quadratures, (omega/4)(x^2 + p_x^2 - y^2 - p_y^2).
/// Equal to hamiltonian() away from the cutoff corner.
QuadraturePolynomial hamiltonian_polynomial(const QubitModelParams &params);

/// x = (a + a^dagger)/sqrt(2), p = (a - a^dagger)/(i sqrt(2)) for each mode.
QuadratureSet quadrature_operators(const QubitModelParams &params);

/// Hamilton's equations evaluated on the given operators:
/// (x', p_x', y', p_y') = ((w/2) p_x, -(w/2) x, -(w/2) p_y, (w/2) y).
QuadratureSet heisenberg_rhs(const QuadratureSet &q, const QubitModelParams &params);

struct EvolutionResult {
    std::vector<double> times;
    /// Quadrature operators at each time.
    std::vector<QuadratureSet> operators_at_t;
    /// |+> -> |-> transition probability read from those operators.
    std::vector<double> probabilities;
};

/// Kick-drift-kick leapfrog of the operator-valued Hamilton equations from
/// t = 0 to t_final in n_steps steps. Snapshots are taken at n_snapshots
/// evenly spaced step indices including both ends.
EvolutionResult integrate_quadratures(const QubitModelParams &params, double t_final, std::size_t n_steps,
                                      std::size_t n_snapshots = 2);

/// Pauli bilinears rebuilt from evolved quadratures, a(t) = (x(t) + i p(t))/sqrt(2).
SecondQuantizedPauli paulis_from_quadratures(const QuadratureSet &q);

/// Sigma_X(t) = cos(wt) Sigma_X + sin(wt) Sigma_Y,
/// Sigma_Y(t) = cos(wt) Sigma_Y - sin(wt) Sigma_X, Sigma_Z(t) = Sigma_Z.
SecondQuantizedPauli pauli_evolved(const SchwingerModel &model, double t);
SecondQuantizedPauli pauli_evolved(const QubitModelParams &params, double t);

/// <+| (I - Sigma_X(t))/2 |+> on the single-excitation sector.
double transition_probability(const SchwingerModel &model, double t);
double transition_probability(const QubitModelParams &params, double t);
double transition_probability(const SchwingerModel &model, const SecondQuantizedPauli &evolved);

}  // namespace qfield

#endif
