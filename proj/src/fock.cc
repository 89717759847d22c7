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

#include "qfield/fock.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "qfield/errors.h"

namespace qfield {

namespace {

void require_mode(const FockSpace &space, std::size_t mode) {
    if (mode >= space.mode_count()) {
        throw std::out_of_range(
            "mode " + std::to_string(mode) + " out of range for " + std::to_string(space.mode_count()) + " modes");
    }
}

void require_same_dim(const OperatorMatrix &a, const OperatorMatrix &b, const char *what) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
        throw DimensionMismatch(std::string(what) + ": operands are " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                                std::to_string(b.cols()));
    }
}

OperatorMatrix lowering_block(std::size_t cutoff) {
    OperatorMatrix a = OperatorMatrix::Zero(cutoff, cutoff);
    for (std::size_t n = 1; n < cutoff; ++n) {
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    return a;
}

// Kronecker chain: left (x) local (x) identity on the remaining factors.
OperatorMatrix place(const OperatorMatrix &left, const OperatorMatrix &local, std::size_t right_dim) {
    OperatorMatrix lhs = Eigen::kroneckerProduct(left, local).eval();
    return Eigen::kroneckerProduct(lhs, OperatorMatrix::Identity(right_dim, right_dim)).eval();
}

std::size_t ipow(std::size_t base, std::size_t exp) {
    std::size_t r = 1;
    while (exp--) {
        r *= base;
    }
    return r;
}

}  // namespace

FockSpace FockSpace::bosonic(std::size_t cutoff, std::size_t mode_count) {
    if (cutoff < 2) {
        throw std::invalid_argument("Fock cutoff must be at least 2");
    }
    if (mode_count < 1) {
        throw std::invalid_argument("a Fock space needs at least one mode");
    }
    return FockSpace(cutoff, mode_count, Statistics::bose);
}

FockSpace FockSpace::fermionic(std::size_t mode_count) {
    if (mode_count < 1) {
        throw std::invalid_argument("a Fock space needs at least one mode");
    }
    return FockSpace(2, mode_count, Statistics::fermi);
}

std::size_t FockSpace::dimension() const { return ipow(cutoff_, mode_count_); }

std::size_t FockSpace::index_of(std::span<const std::size_t> occupations) const {
    if (occupations.size() != mode_count_) {
        throw std::invalid_argument("occupation tuple length does not match the mode count");
    }
    std::size_t index = 0;
    for (std::size_t n : occupations) {
        if (n >= cutoff_) {
            throw std::out_of_range("occupation " + std::to_string(n) + " is at or above the cutoff " +
                                    std::to_string(cutoff_));
        }
        index = index * cutoff_ + n;
    }
    return index;
}

std::vector<std::size_t> FockSpace::occupations_of(std::size_t index) const {
    if (index >= dimension()) {
        throw std::out_of_range("basis index out of range");
    }
    std::vector<std::size_t> occ(mode_count_);
    for (std::size_t m = mode_count_; m-- > 0;) {
        occ[m] = index % cutoff_;
        index /= cutoff_;
    }
    return occ;
}

OperatorMatrix identity(const FockSpace &space) {
    auto d = static_cast<Eigen::Index>(space.dimension());
    return OperatorMatrix::Identity(d, d);
}

OperatorMatrix annihilation_op(const FockSpace &space, std::size_t mode) {
    require_mode(space, mode);
    const std::size_t n = space.cutoff();
    const std::size_t right = ipow(n, space.mode_count() - mode - 1);
    OperatorMatrix left = OperatorMatrix::Identity(1, 1);
    if (space.statistics() == Statistics::fermi) {
        OperatorMatrix parity(2, 2);
        parity << 1.0, 0.0, 0.0, -1.0;
        for (std::size_t m = 0; m < mode; ++m) {
            left = Eigen::kroneckerProduct(left, parity).eval();
        }
    } else {
        auto d = static_cast<Eigen::Index>(ipow(n, mode));
        left = OperatorMatrix::Identity(d, d);
    }
    return place(left, lowering_block(n), right);
}

OperatorMatrix creation_op(const FockSpace &space, std::size_t mode) { return dagger(annihilation_op(space, mode)); }

OperatorMatrix number_op(const FockSpace &space, std::size_t mode) {
    OperatorMatrix a = annihilation_op(space, mode);
    return a.adjoint() * a;
}

OperatorMatrix dagger(const OperatorMatrix &op) { return op.adjoint(); }

OperatorMatrix commutator(const OperatorMatrix &a, const OperatorMatrix &b) {
    require_same_dim(a, b, "commutator");
    return a * b - b * a;
}

OperatorMatrix anticommutator(const OperatorMatrix &a, const OperatorMatrix &b) {
    require_same_dim(a, b, "anticommutator");
    return a * b + b * a;
}

OperatorMatrix tensor_product(const OperatorMatrix &a, const OperatorMatrix &b) {
    return Eigen::kroneckerProduct(a, b).eval();
}

bool is_finite(const OperatorMatrix &op) { return op.allFinite(); }

bool is_hermitian(const OperatorMatrix &op, double tolerance) {
    if (op.rows() != op.cols()) {
        return false;
    }
    return max_abs(op - op.adjoint()) <= tolerance;
}

double max_abs(const OperatorMatrix &op) {
    if (op.size() == 0) {
        return 0.0;
    }
    return op.cwiseAbs().maxCoeff();
}

QuantumState QuantumState::pure(StateVector vector, double truncation_loss) {
    if (vector.size() == 0 || !vector.allFinite()) {
        throw std::invalid_argument("state vector must be non-empty and finite");
    }
    if (std::abs(vector.norm() - 1.0) > 1e-12) {
        throw std::invalid_argument("pure state is not normalized");
    }
    QuantumState s;
    s.kind_ = Kind::pure;
    s.vector_ = std::move(vector);
    s.truncation_loss_ = truncation_loss;
    return s;
}

QuantumState QuantumState::mixed(OperatorMatrix rho, double truncation_loss) {
    if (rho.size() == 0 || !rho.allFinite()) {
        throw std::invalid_argument("density matrix must be non-empty and finite");
    }
    if (!is_hermitian(rho, 1e-12)) {
        throw std::invalid_argument("density matrix is not Hermitian");
    }
    if (std::abs(rho.trace() - Complex(1.0)) > 1e-12) {
        throw std::invalid_argument("density matrix trace differs from 1");
    }
    Eigen::SelfAdjointEigenSolver<OperatorMatrix> eig(rho, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -1e-10) {
        throw std::invalid_argument("density matrix has a negative eigenvalue");
    }
    QuantumState s;
    s.kind_ = Kind::mixed;
    s.density_ = std::move(rho);
    s.truncation_loss_ = truncation_loss;
    return s;
}

std::size_t QuantumState::dimension() const {
    return static_cast<std::size_t>(kind_ == Kind::pure ? vector_.size() : density_.rows());
}

const StateVector &QuantumState::vector() const {
    if (kind_ != Kind::pure) {
        throw std::logic_error("mixed state has no state vector");
    }
    return vector_;
}

const OperatorMatrix &QuantumState::density() const {
    if (kind_ != Kind::mixed) {
        throw std::logic_error("pure state stores no density matrix; use density_matrix()");
    }
    return density_;
}

OperatorMatrix QuantumState::density_matrix() const {
    if (kind_ == Kind::mixed) {
        return density_;
    }
    return vector_ * vector_.adjoint();
}

Complex expectation(const QuantumState &state, const OperatorMatrix &op) {
    const auto d = static_cast<Eigen::Index>(state.dimension());
    if (op.rows() != d || op.cols() != d) {
        throw DimensionMismatch("expectation: state has dimension " + std::to_string(d) + " but operator is " +
                                std::to_string(op.rows()) + "x" + std::to_string(op.cols()));
    }
    if (state.kind() == QuantumState::Kind::pure) {
        const StateVector &psi = state.vector();
        return psi.dot(op * psi);
    }
    return (state.density() * op).trace();
}

QuantumState fock_state(std::size_t n, const FockSpace &space) {
    std::vector<std::size_t> occ(space.mode_count(), 0);
    occ[0] = n;
    return fock_state(occ, space);
}

QuantumState fock_state(std::span<const std::size_t> occupations, const FockSpace &space) {
    StateVector v = StateVector::Zero(static_cast<Eigen::Index>(space.dimension()));
    v(static_cast<Eigen::Index>(space.index_of(occupations))) = 1.0;
    return QuantumState::pure(std::move(v));
}

QuantumState coherent_state(Complex alpha, const FockSpace &space) {
    if (space.mode_count() != 1 || space.statistics() != Statistics::bose) {
        throw std::invalid_argument("coherent states are defined on a single bosonic mode");
    }
    if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag())) {
        throw std::invalid_argument("coherent amplitude must be finite");
    }
    const auto n_max = static_cast<Eigen::Index>(space.cutoff());
    StateVector c(n_max);
    // c_n = e^{-|alpha|^2/2} alpha^n / sqrt(n!), built by the ratio recurrence.
    c(0) = std::exp(-0.5 * std::norm(alpha));
    for (Eigen::Index n = 1; n < n_max; ++n) {
        c(n) = c(n - 1) * alpha / std::sqrt(static_cast<double>(n));
    }
    const double kept = c.squaredNorm();
    if (!(kept > 0.0)) {
        throw ComputationError("coherent amplitude too large for the Fock cutoff");
    }
    c /= std::sqrt(kept);
    return QuantumState::pure(std::move(c), std::max(0.0, 1.0 - kept));
}

QuantumState thermal_state(double mean_occupation, const FockSpace &space) {
    if (space.mode_count() != 1 || space.statistics() != Statistics::bose) {
        throw std::invalid_argument("thermal states are defined on a single bosonic mode");
    }
    if (!(mean_occupation >= 0.0) || !std::isfinite(mean_occupation)) {
        throw std::invalid_argument("thermal mean occupation must be finite and non-negative");
    }
    const auto n_max = static_cast<Eigen::Index>(space.cutoff());
    const double ratio = mean_occupation / (1.0 + mean_occupation);
    Eigen::VectorXd w(n_max);
    w(0) = 1.0 / (1.0 + mean_occupation);
    for (Eigen::Index n = 1; n < n_max; ++n) {
        w(n) = w(n - 1) * ratio;
    }
    const double kept = w.sum();
    w /= kept;
    OperatorMatrix rho = OperatorMatrix::Zero(n_max, n_max);
    rho.diagonal() = w.cast<Complex>();
    return QuantumState::mixed(std::move(rho), std::max(0.0, 1.0 - kept));
}

FermionicModes fermionic_mode_ops(std::size_t mode_count) {
    FermionicModes out{FockSpace::fermionic(mode_count), {}};
    out.annihilators.reserve(mode_count);
    for (std::size_t m = 0; m < mode_count; ++m) {
        out.annihilators.push_back(annihilation_op(out.space, m));
    }
    return out;
}

}  // namespace qfield
