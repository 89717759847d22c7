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

#ifndef QFIELD_FOCK_H
#define QFIELD_FOCK_H

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qfield {

using Complex = std::complex<double>;
using OperatorMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

enum class Statistics { bose, fermi };

/// Truncated occupation-number basis for one or more modes.
///
/// Basis states are ordered with mode 0 as the most significant digit, so the
/// occupation tuple (n_0, ..., n_{M-1}) lives at index sum_m n_m N^(M-1-m).
/// Fermionic spaces always have cutoff 2.
class FockSpace {
   public:
    static FockSpace bosonic(std::size_t cutoff, std::size_t mode_count = 1);
    static FockSpace fermionic(std::size_t mode_count);

    std::size_t cutoff() const { return cutoff_; }
    std::size_t mode_count() const { return mode_count_; }
    Statistics statistics() const { return statistics_; }
    std::size_t dimension() const;

    std::size_t index_of(std::span<const std::size_t> occupations) const;
    std::vector<std::size_t> occupations_of(std::size_t index) const;

    bool operator==(const FockSpace &) const = default;

   private:
    FockSpace(std::size_t cutoff, std::size_t mode_count, Statistics statistics)
        : cutoff_(cutoff), mode_count_(mode_count), statistics_(statistics) {}

    std::size_t cutoff_;
    std::size_t mode_count_;
    Statistics statistics_;
};

OperatorMatrix identity(const FockSpace &space);

/// Lowering operator of `mode`. Bosonic spaces carry sqrt(n) ladder entries
/// with identities on the other factors; fermionic spaces get the
/// Jordan-Wigner string diag(1, -1) on every lower-indexed mode.
OperatorMatrix annihilation_op(const FockSpace &space, std::size_t mode);
OperatorMatrix creation_op(const FockSpace &space, std::size_t mode);
OperatorMatrix number_op(const FockSpace &space, std::size_t mode);

OperatorMatrix dagger(const OperatorMatrix &op);
OperatorMatrix commutator(const OperatorMatrix &a, const OperatorMatrix &b);
OperatorMatrix anticommutator(const OperatorMatrix &a, const OperatorMatrix &b);
OperatorMatrix tensor_product(const OperatorMatrix &a, const OperatorMatrix &b);

bool is_finite(const OperatorMatrix &op);
bool is_hermitian(const OperatorMatrix &op, double tolerance = 1e-12);

/// Largest entry modulus, the norm every tolerance in this library refers to.
double max_abs(const OperatorMatrix &op);

class QuantumState {
   public:
    enum class Kind { pure, mixed };

    /// Throws std::invalid_argument unless the vector has unit norm within 1e-12.
    static QuantumState pure(StateVector vector, double truncation_loss = 0.0);
    /// Throws std::invalid_argument unless rho is Hermitian with unit trace
    /// (both within 1e-12) and has no eigenvalue below -1e-10.
    static QuantumState mixed(OperatorMatrix rho, double truncation_loss = 0.0);

    Kind kind() const { return kind_; }
    std::size_t dimension() const;
    const StateVector &vector() const;
    const OperatorMatrix &density() const;
    OperatorMatrix density_matrix() const;

    /// Probability weight discarded by the Fock cutoff before renormalization.
    double truncation_loss() const { return truncation_loss_; }
    bool truncation_warning() const { return truncation_loss_ > kTruncationWarningThreshold; }

    static constexpr double kTruncationWarningThreshold = 1e-6;

   private:
    QuantumState() = default;

    Kind kind_ = Kind::pure;
    StateVector vector_;
    OperatorMatrix density_;
    double truncation_loss_ = 0.0;
};

/// <psi|A|psi> for pure states, tr(rho A) for mixed ones.
Complex expectation(const QuantumState &state, const OperatorMatrix &op);

QuantumState fock_state(std::size_t n, const FockSpace &space);
QuantumState fock_state(std::span<const std::size_t> occupations, const FockSpace &space);
QuantumState coherent_state(Complex alpha, const FockSpace &space);
QuantumState thermal_state(double mean_occupation, const FockSpace &space);

struct FermionicModes {
    FockSpace space;
    std::vector<OperatorMatrix> annihilators;
};

FermionicModes fermionic_mode_ops(std::size_t mode_count);

}  // namespace qfield

#endif
